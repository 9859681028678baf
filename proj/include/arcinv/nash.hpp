#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arcinv/arcs.hpp"
#include "arcinv/polynomial.hpp"

namespace arcinv {

/// How to pick the affine chart when several lifted arc components share
/// the minimal t-order.
enum class ChartTieBreak {
    ParameterFirst,  ///< prefer the extra coordinate s, then lowest index
    LowestIndex,     ///< lowest coordinate index (s is last)
};

/// One point of the sequence of blow-ups directed by an arc, on
/// X_0 = X x A^1 with coordinates (x_1, ..., x_n, s).
struct DirectedBlowupState {
    Polynomial F;      ///< strict transform, recentered at the current point
    Arc gamma;         ///< lifted arc, centered at the origin of the chart
    std::size_t step = 0;
    long multiplicity = 0;
    /// Chart used to reach this state (none at step 0).
    std::optional<std::size_t> chart;
    /// Translation applied after the chart substitution.
    std::vector<Rational> center;
};

/// Builds F = f on n+1 coordinates and Gamma = (phi, t).
DirectedBlowupState init_directed(const Hypersurface& X, const Arc& phi);

/// Blows up the current point and moves to the point where the lifted arc
/// meets the exceptional divisor.
DirectedBlowupState blowup_step(const DirectedBlowupState& state, ChartTieBreak tie_break = ChartTieBreak::ParameterFirst,
                                bool check_on_arc = true);

enum class PersistanceStatus { Reached, Infinite, NotReached };

struct NashTraceRecord {
    std::size_t step;
    std::string chart;
    std::vector<Rational> center;
    long multiplicity;
};

struct NashReport {
    std::vector<long> sequence;  ///< m_0, m_1, ...
    PersistanceStatus status = PersistanceStatus::NotReached;
    std::optional<long> rho;     ///< set when status == Reached
    long budget = 0;
    std::vector<NashTraceRecord> trace;
};

struct NashOptions {
    /// Default: 8 * multiplicity * arc order.
    std::optional<long> max_steps;
    ChartTieBreak tie_break = ChartTieBreak::ParameterFirst;
    /// Verify F(Gamma) = 0 after every step.
    bool check_on_arc = true;
    /// Keep blowing up after the first drop, up to max_steps.
    bool continue_after_drop = false;
};

/// Default step budget for a given hypersurface and arc.
long default_budget(const Hypersurface& X, const Arc& phi);

NashReport nash_sequence(const Hypersurface& X, const Arc& phi, const NashOptions& options = {});

/// rho of the arc; infinite when the arc lies in the maximal multiplicity
/// stratum. Throws BudgetExhausted when the budget runs out first.
Order persistance(const Hypersurface& X, const Arc& phi, std::optional<long> budget = std::nullopt);

}  // namespace arcinv

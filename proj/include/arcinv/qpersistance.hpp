#pragma once

#include <optional>
#include <vector>

#include "arcinv/arcs.hpp"
#include "arcinv/rational.hpp"
#include "arcinv/rees.hpp"

namespace arcinv {

enum class Verdict { Pass, Fail, Inconclusive };

const char* to_string(Verdict v);

struct QPersistanceResult {
    ExtRational r;      ///< Q-persistance
    ExtRational r_bar;  ///< r / nu
    long nu = 0;        ///< order of the arc
    std::optional<Integer> floor_r;  ///< predicted persistance, when r is finite
};

/// r = ord_t(phi(G_X)) on the differential presentation of X.
QPersistanceResult q_persistance(const Hypersurface& X, const Arc& phi);

/// Same, on a caller-supplied presentation of the maximal multiplicity
/// algebra (for cross-checks against the differential one).
QPersistanceResult q_persistance(const Hypersurface& X, const Arc& phi, const ReesAlgebra& presentation);

struct FloorIdentityReport {
    Verdict verdict = Verdict::Inconclusive;
    QPersistanceResult q;
    std::optional<Order> rho;  ///< unset when the budget ran out
};

/// Checks rho = floor(r) by running the directed blow-ups.
FloorIdentityReport check_floor_identity(const Hypersurface& X, const Arc& phi, std::optional<long> budget = std::nullopt);

struct LimitRow {
    long n = 0;
    std::optional<long> rho_n;  ///< unset when inconclusive
    Integer expected;           ///< floor(n r)
    Rational deviation;         ///< |rho_n / n - r|
    Verdict verdict = Verdict::Inconclusive;
};

struct LimitIdentityReport {
    Rational r;
    std::vector<LimitRow> rows;
    Verdict verdict = Verdict::Inconclusive;
};

/// For n = 1..n_max checks rho(phi_n) = floor(n r) and |rho(phi_n)/n - r| <= 1/n.
/// Rows are computed concurrently; the report does not depend on scheduling.
LimitIdentityReport check_limit_identity(const Hypersurface& X, const Arc& phi, long n_max,
                                         std::optional<long> budget = std::nullopt);

}  // namespace arcinv

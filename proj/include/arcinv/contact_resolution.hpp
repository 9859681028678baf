#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcinv/rational.hpp"

namespace arcinv {

/// Orders of one Rees generator g W^w along the exceptional divisors.
struct DivisorialGenerator {
    std::vector<long> orders;  ///< d_i = order of g along H_i
    long weight = 1;
    std::string label;
};

/// Divisorial data of a simultaneous log resolution of the maximal
/// multiplicity algebra and the maximal ideal at the point.
struct ResolutionData {
    std::vector<long> c;  ///< orders of m_xi along H_1..H_N
    std::vector<DivisorialGenerator> gens;
    /// coord_val[j][i] = order of coordinate x_j along H_i.
    std::optional<std::vector<std::vector<long>>> coord_val;
    /// Pairs of divisors that do not meet; multi-indices with both in their
    /// support are skipped during component enumeration.
    std::vector<std::pair<std::size_t, std::size_t>> incompatible;
    /// Declares the variety toric, which makes the valuative domination
    /// criterion decide inclusions of multi-contact closures.
    bool toric = false;

    /// Almost-Rees presentation I W^b with orders a_i of I along H_i.
    static ResolutionData almost_rees(std::vector<long> a, std::vector<long> c, long b);

    std::size_t num_divisors() const { return c.size(); }
    /// Lambda: divisors along which some generator vanishes.
    std::vector<std::size_t> support() const;
    /// Throws PreconditionError when the data is inconsistent.
    void validate() const;
};

using MultiIndex = std::vector<long>;

/// min over generators of (l.d / w) / (l.c). Infinite when l.c = 0 while
/// some l.d != 0.
ExtRational rbar_of_multiindex(const ResolutionData& R, const MultiIndex& l);

/// Coordinate valuations of the generic arc of the multi-contact locus.
std::vector<long> valuation_of(const ResolutionData& R, const MultiIndex& l);

/// True iff l.coord_val[j] >= l'.coord_val[j] for every coordinate, i.e.
/// the closure for l sits inside the closure for l'.
bool dominates(const ResolutionData& R, const MultiIndex& l, const MultiIndex& l_prime);

struct FatComponents {
    std::vector<MultiIndex> components;  ///< minimal multi-indices, lexicographic order
    bool boundary_warning = false;       ///< some component touches the enumeration box
    bool empty_warning = false;          ///< no candidate inside the box
};

/// Minimal multi-indices (w.r.t. dominates) among { l : l.c >= m, 0 <= l_i <= bound }.
/// Without coordinate valuations no inclusion can be decided and every
/// componentwise-minimal candidate is returned.
FatComponents fat_components(const ResolutionData& R, long m, long bound);

/// delta_m: least rbar over the fat components of Cont^{>=m}(m_xi).
ExtRational delta(const ResolutionData& R, long m, long bound);

struct DeltaRow {
    long m = 0;
    ExtRational delta;
    ExtRational upper;  ///< ord * (1 + c_max / m)
    bool pass = false;
};

struct DeltaLimitReport {
    ExtRational ord;
    long c_max = 0;
    std::vector<DeltaRow> rows;
    bool pass = false;
};

/// Tabulates delta_m for m = 1..m_max against [ord, ord (1 + c_max/m)].
DeltaLimitReport delta_limit_check(const ResolutionData& R, long m_max, long bound);

/// min over i in Lambda of (min over gens of d_i / w) / c_i.
ExtRational hironaka_order(const ResolutionData& R);

struct ValuesBounds {
    ExtRational lower;
    ExtRational upper;
};

/// Range of rbar over all arcs: (1/b) min a_i/c_i and (1/b) max a_i/c_i for
/// an almost-Rees presentation; for weighted generators lower is the
/// Hironaka order and upper is min over g of max over i of d_i/(w c_i).
ValuesBounds values_bounds(const ResolutionData& R);

struct SampledExtrema {
    ExtRational min_value;
    MultiIndex argmin;
    ExtRational max_value;
    MultiIndex argmax;
    bool min_attains_lower = false;
    bool max_attains_upper = false;
    std::size_t samples = 0;
};

/// rbar over every nonzero multi-index in the box [0, grid]^N.
SampledExtrema sample_rbar_extrema(const ResolutionData& R, long grid);

}  // namespace arcinv

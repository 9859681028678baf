#include "arcinv/contact_resolution.hpp"

#include <algorithm>

#include "arcinv/errors.hpp"
#include "arcinv/parallel.hpp"

namespace arcinv {

namespace {

long dot(const std::vector<long>& a, const std::vector<long>& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// d / (w c) with the convention d/0 = inf for d != 0; nullopt for 0/0.
std::optional<ExtRational> divisor_ratio(long d, long w, long c) {
    if (c == 0) {
        if (d == 0) return std::nullopt;
        return ExtRational::infinity();
    }
    return ExtRational(Rational(Integer(d), Integer(w * c)));
}

void check_multiindex(const ResolutionData& R, const MultiIndex& l) {
    if (l.size() != R.num_divisors()) throw PreconditionError("multi-index length does not match divisor count");
    bool nonzero = false;
    for (long v : l) {
        if (v < 0) throw PreconditionError("multi-index entries must be non-negative");
        nonzero = nonzero || v > 0;
    }
    if (!nonzero) throw PreconditionError("multi-index must be nonzero");
}

bool compatible(const ResolutionData& R, const MultiIndex& l) {
    for (const auto& [i, j] : R.incompatible)
        if (l[i] > 0 && l[j] > 0) return false;
    return true;
}

/// Visits every point of [0, bound]^N in lexicographic order.
template <class Visit>
void for_each_in_box(std::size_t N, long bound, Visit&& visit) {
    MultiIndex l(N, 0);
    while (true) {
        visit(l);
        std::size_t k = N;
        while (k > 0) {
            --k;
            if (l[k] < bound) {
                ++l[k];
                std::fill(l.begin() + static_cast<long>(k) + 1, l.end(), 0);
                break;
            }
            if (k == 0) return;
        }
        if (N == 0) return;
    }
}

}  // namespace

ResolutionData ResolutionData::almost_rees(std::vector<long> a, std::vector<long> c, long b) {
    ResolutionData R;
    R.c = std::move(c);
    R.gens.push_back({std::move(a), b, "I"});
    R.validate();
    return R;
}

std::vector<std::size_t> ResolutionData::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < num_divisors(); ++i)
        for (const auto& g : gens)
            if (g.orders[i] != 0) {
                out.push_back(i);
                break;
            }
    return out;
}

void ResolutionData::validate() const {
    const std::size_t N = num_divisors();
    if (N == 0) throw PreconditionError("resolution data needs at least one divisor");
    if (std::all_of(c.begin(), c.end(), [](long v) { return v == 0; }))
        throw PreconditionError("orders c of the maximal ideal must not all vanish");
    if (std::any_of(c.begin(), c.end(), [](long v) { return v < 0; }))
        throw PreconditionError("orders c must be non-negative");
    if (gens.empty()) throw PreconditionError("resolution data needs at least one generator");
    for (const auto& g : gens) {
        if (g.orders.size() != N) throw PreconditionError("generator order vector has the wrong length");
        if (g.weight < 1) throw PreconditionError("generator weights must be >= 1");
        if (std::any_of(g.orders.begin(), g.orders.end(), [](long v) { return v < 0; }))
            throw PreconditionError("generator orders must be non-negative");
    }
    const auto lambda = support();
    if (lambda.empty()) throw PreconditionError("no generator vanishes along any divisor (Lambda is empty)");
    // The center lies in the zero set of the algebra, so every divisor over
    // the center carries some generator.
    for (std::size_t i = 0; i < N; ++i)
        if (c[i] > 0 && std::find(lambda.begin(), lambda.end(), i) == lambda.end())
            throw PreconditionError("divisor " + std::to_string(i + 1) +
                                    " lies over the center but no generator vanishes along it");
    if (coord_val) {
        if (coord_val->empty()) throw PreconditionError("coordinate valuation matrix is empty");
        for (const auto& row : *coord_val)
            if (row.size() != N) throw PreconditionError("coordinate valuation row has the wrong length");
        for (std::size_t i = 0; i < N; ++i) {
            long m = (*coord_val)[0][i];
            for (const auto& row : *coord_val) m = std::min(m, row[i]);
            if (m != c[i])
                throw PreconditionError("c_" + std::to_string(i + 1) +
                                        " is not the minimum of the coordinate valuations along that divisor");
        }
    }
    for (const auto& [i, j] : incompatible)
        if (i >= N || j >= N || i == j) throw PreconditionError("bad incompatible divisor pair");
}

ExtRational rbar_of_multiindex(const ResolutionData& R, const MultiIndex& l) {
    check_multiindex(R, l);
    const long lc = dot(l, R.c);
    std::optional<ExtRational> best;
    for (const auto& g : R.gens) {
        const long ld = dot(l, g.orders);
        const auto term = divisor_ratio(ld, g.weight, lc);
        if (!term) continue;
        if (!best || *term < *best) best = term;
    }
    if (!best) throw PreconditionError("multi-index misses both the maximal ideal and the algebra");
    return *best;
}

std::vector<long> valuation_of(const ResolutionData& R, const MultiIndex& l) {
    if (!R.coord_val) throw PreconditionError("domination criterion needs coordinate valuations (coord_val)");
    std::vector<long> v;
    for (const auto& row : *R.coord_val) v.push_back(dot(l, row));
    return v;
}

bool dominates(const ResolutionData& R, const MultiIndex& l, const MultiIndex& l_prime) {
    check_multiindex(R, l);
    check_multiindex(R, l_prime);
    const auto v = valuation_of(R, l);
    const auto vp = valuation_of(R, l_prime);
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] < vp[j]) return false;
    return true;
}

FatComponents fat_components(const ResolutionData& R, long m, long bound) {
    if (m < 1) throw PreconditionError("contact order m must be positive");
    if (bound < m) throw PreconditionError("enumeration bound must be >= m");
    const std::size_t N = R.num_divisors();

    // Minimal elements can be sought among the componentwise-minimal
    // candidates: raising any entry only raises every coordinate valuation.
    std::vector<MultiIndex> staircase;
    for_each_in_box(N, bound, [&](const MultiIndex& l) {
        const long lc = dot(l, R.c);
        if (lc < m || !compatible(R, l)) return;
        for (std::size_t i = 0; i < N; ++i)
            if (l[i] > 0 && lc - R.c[i] >= m) return;
        staircase.push_back(l);
    });

    FatComponents out;
    out.empty_warning = staircase.empty();
    auto touches_bound = [bound](const MultiIndex& l) { return std::find(l.begin(), l.end(), bound) != l.end(); };
    if (!R.coord_val) {
        for (const auto& l : staircase) out.boundary_warning = out.boundary_warning || touches_bound(l);
        out.components = std::move(staircase);
        return out;
    }
    std::vector<std::vector<long>> vals;
    for (const auto& l : staircase) vals.push_back(valuation_of(R, l));
    auto geq = [](const std::vector<long>& a, const std::vector<long>& b) {
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[j] < b[j]) return false;
        return true;
    };
    for (std::size_t a = 0; a < staircase.size(); ++a) {
        bool minimal = true;
        for (std::size_t b = 0; b < staircase.size() && minimal; ++b) {
            if (a == b || !geq(vals[a], vals[b])) continue;
            // Strictly below, or an equal valuation reached by an earlier index.
            if (vals[a] != vals[b] || b < a) minimal = false;
        }
        if (minimal) {
            out.components.push_back(staircase[a]);
            if (touches_bound(staircase[a])) out.boundary_warning = true;
        }
    }
    return out;
}

ExtRational delta(const ResolutionData& R, long m, long bound) {
    const FatComponents fc = fat_components(R, m, bound);
    if (fc.components.empty())
        throw PreconditionError("no fat component of Cont^{>=" + std::to_string(m) + "} inside the bound");
    ExtRational best = ExtRational::infinity();
    for (const auto& l : fc.components) best = min(best, rbar_of_multiindex(R, l));
    return best;
}

DeltaLimitReport delta_limit_check(const ResolutionData& R, long m_max, long bound) {
    if (m_max < 1) throw PreconditionError("m_max must be positive");
    DeltaLimitReport report;
    report.ord = hironaka_order(R);
    report.c_max = *std::max_element(R.c.begin(), R.c.end());
    report.rows.resize(static_cast<std::size_t>(m_max));
    parallel_for(report.rows.size(), [&](std::size_t i) {
        DeltaRow& row = report.rows[i];
        row.m = static_cast<long>(i) + 1;
        row.delta = delta(R, row.m, bound);
        if (report.ord.is_finite())
            row.upper = ExtRational(report.ord.value() *
                                    (Rational(1) + Rational(Integer(report.c_max), Integer(row.m))));
        else
            row.upper = ExtRational::infinity();
        row.pass = report.ord <= row.delta && row.delta <= row.upper;
    });
    report.pass = std::all_of(report.rows.begin(), report.rows.end(), [](const DeltaRow& r) { return r.pass; });
    return report;
}

ExtRational hironaka_order(const ResolutionData& R) {
    R.validate();
    std::optional<ExtRational> best;
    for (std::size_t i : R.support())
        for (const auto& g : R.gens) {
            const auto ratio = divisor_ratio(g.orders[i], g.weight, R.c[i]);
            if (ratio && (!best || *ratio < *best)) best = ratio;
        }
    return best.value_or(ExtRational::infinity());
}

ValuesBounds values_bounds(const ResolutionData& R) {
    ValuesBounds out;
    out.lower = hironaka_order(R);
    const auto lambda = R.support();
    std::optional<ExtRational> upper;
    for (const auto& g : R.gens) {
        std::optional<ExtRational> worst;
        for (std::size_t i : lambda) {
            const auto ratio = divisor_ratio(g.orders[i], g.weight, R.c[i]);
            if (ratio && (!worst || *worst < *ratio)) worst = ratio;
        }
        if (worst && (!upper || *worst < *upper)) upper = worst;
    }
    out.upper = upper.value_or(ExtRational::infinity());
    return out;
}

SampledExtrema sample_rbar_extrema(const ResolutionData& R, long grid) {
    if (grid < 1) throw PreconditionError("sampling grid must be positive");
    const ValuesBounds bounds = values_bounds(R);
    SampledExtrema out;
    for_each_in_box(R.num_divisors(), grid, [&](const MultiIndex& l) {
        if (std::all_of(l.begin(), l.end(), [](long v) { return v == 0; })) return;
        ExtRational value;
        try {
            value = rbar_of_multiindex(R, l);
        } catch (const PreconditionError&) {
            return;
        }
        if (out.samples == 0 || value < out.min_value) {
            out.min_value = value;
            out.argmin = l;
        }
        if (out.samples == 0 || out.max_value < value) {
            out.max_value = value;
            out.argmax = l;
        }
        ++out.samples;
    });
    out.min_attains_lower = out.samples > 0 && out.min_value == bounds.lower;
    out.max_attains_upper = out.samples > 0 && out.max_value == bounds.upper;
    return out;
}

}  // namespace arcinv

#include "arcinv/rees.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "arcinv/errors.hpp"

namespace arcinv {

ReesAlgebra::ReesAlgebra(std::vector<WeightedGenerator> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw PreconditionError("a Rees algebra needs at least one generator");
    for (const auto& [g, w] : gens_) {
        if (w < 1) throw PreconditionError("Rees generator weights must be >= 1");
        if (g.is_zero()) throw PreconditionError("Rees generators must be nonzero");
        if (g.variables() != gens_.front().g.variables())
            throw PreconditionError("Rees generators live on different variable lists");
    }
}

DiffPresentation diff_saturate(const Hypersurface& X) {
    const long b = X.multiplicity();
    if (b <= 1) throw PreconditionError("differential saturation needs a singular center (multiplicity >= 2)");
    const std::size_t n = X.ambient_dim();

    // Level k holds D^alpha f for |alpha| = k, keyed by alpha so that
    // commuting paths are computed once.
    std::map<Exponents, Polynomial, std::greater<>> level{{Exponents(n, 0), X.equation()}};
    std::vector<WeightedGenerator> gens;
    std::set<std::pair<long, Polynomial::TermMap>> seen;
    for (long k = 0; k < b; ++k) {
        const long w = b - k;
        for (const auto& [alpha, p] : level) {
            if (p.is_zero()) continue;
            if (seen.insert({w, p.normalized().terms()}).second) gens.push_back({p, w});
        }
        if (k + 1 == b) break;
        std::map<Exponents, Polynomial, std::greater<>> next;
        for (const auto& [alpha, p] : level) {
            if (p.is_zero()) continue;
            for (std::size_t v = 0; v < n; ++v) {
                Exponents beta = alpha;
                beta[v] += 1;
                if (next.contains(beta)) continue;
                Polynomial d = partial_derivative(p, v);
                if (!d.is_zero()) next.emplace(beta, std::move(d));
            }
        }
        level = std::move(next);
    }
    for (const auto& [g, w] : gens)
        if (order_at_origin(g) < Order(w))
            throw InvariantError("derivative of f vanishes to order below its weight at the origin");
    return DiffPresentation{X, ReesAlgebra(std::move(gens))};
}

Rational ord_at_center(const ReesAlgebra& G) {
    std::optional<Rational> best;
    for (const auto& [g, w] : G.generators()) {
        const Order o = order_at_origin(g);
        if (o < Order(w))
            throw NotInSingularLocus("origin is not in Sing(G): generator " + g.to_string() + " of weight " +
                                     std::to_string(w) + " has order " + to_string(o));
        const Rational ratio(Integer(o.value()), Integer(w));
        if (!best || ratio < *best) best = ratio;
    }
    return *best;
}

ExtRational ord_along_arc(const ReesAlgebra& G, const Arc& arc) {
    if (arc.size() != G.variables().size())
        throw PreconditionError("arc has " + std::to_string(arc.size()) + " components but the algebra has " +
                                std::to_string(G.variables().size()) + " variables");
    ExtRational best = ExtRational::infinity();
    for (const auto& [g, w] : G.generators()) {
        const Order o = composition_order(g, arc.components());
        if (o.is_infinite()) continue;
        best = min(best, ExtRational(Rational(Integer(o.value()), Integer(w))));
    }
    return best;
}

}  // namespace arcinv

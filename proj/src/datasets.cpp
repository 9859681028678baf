#include "arcinv/datasets.hpp"

namespace arcinv::datasets {

namespace {

Polynomial poly(std::vector<std::string> vars, const std::vector<std::pair<Exponents, Rational>>& terms) {
    return Polynomial(std::move(vars), terms);
}

}  // namespace

Hypersurface toric_surface() {
    return Hypersurface(poly({"x", "y", "z"}, {{{2, 3, 0}, 1}, {{0, 0, 6}, -1}}));
}

BinomialParametrization toric_parametrization() { return BinomialParametrization(toric_surface(), {{3, 0}, {0, 2}, {1, 1}}); }

ResolutionData toric_resolution() {
    ResolutionData R;
    R.c = {2, 3};
    R.gens = {{{3, 3}, 1, "x"}, {{2, 4}, 1, "y"}, {{12, 18}, 5, "z^6"}};
    R.coord_val = std::vector<std::vector<long>>{{3, 3}, {2, 4}, {2, 3}};
    R.toric = true;
    R.validate();
    return R;
}

ReesAlgebra toric_user_presentation() {
    const std::vector<std::string> v{"x", "y", "z"};
    return ReesAlgebra({{Polynomial::variable(v, 0), 1},
                        {Polynomial::variable(v, 1), 1},
                        {Polynomial::variable(v, 2).pow(6), 5}});
}

MultiIndex toric_multiindex(long p, long q) { return {2 * p - q, q - p}; }

Hypersurface cusp() { return Hypersurface(poly({"x", "y"}, {{{2, 0}, 1}, {{0, 3}, -1}})); }

BinomialParametrization cusp_parametrization() { return BinomialParametrization(cusp(), {{3}, {2}}); }

Hypersurface node() { return Hypersurface(poly({"x", "y"}, {{{1, 1}, 1}})); }

Hypersurface cone() { return Hypersurface(poly({"x", "y", "z"}, {{{0, 0, 2}, 1}, {{1, 1, 0}, -1}})); }

BinomialParametrization cone_parametrization() { return BinomialParametrization(cone(), {{2, 0}, {0, 2}, {1, 1}}); }

std::vector<CorpusCase> persistance_corpus() {
    const std::size_t cusp_arc[] = {3, 2};
    const std::size_t toric_a[] = {3, 2, 2};
    const std::size_t toric_b[] = {6, 6, 5};
    std::vector<CorpusCase> out;
    out.push_back({"cusp x^2-y^3, (t^3, t^2)", cusp(), monomial_arc(cusp_arc)});
    out.push_back({"node xy, (t, 0)", node(), Arc({RationalFunctionT::t_power(1), RationalFunctionT()})});
    out.push_back({"x^2y^3-z^6, (t^3, t^2, t^2)", toric_surface(), monomial_arc(toric_a)});
    out.push_back({"x^2y^3-z^6, (t^6, t^6, t^5)", toric_surface(), monomial_arc(toric_b)});
    return out;
}

}  // namespace arcinv::datasets

#include "arcinv/arcs.hpp"

#include <random>
#include <sstream>

#include "arcinv/errors.hpp"

namespace arcinv {

Hypersurface::Hypersurface(Polynomial f) : f_(std::move(f)) {
    if (f_.is_zero() || f_.is_constant()) throw PreconditionError("hypersurface equation must be non-constant");
    if (!f_.constant_term().is_zero()) throw PreconditionError("the origin does not lie on the hypersurface");
    multiplicity_ = order_at_origin(f_).value();
}

Arc::Arc(std::vector<RationalFunctionT> components) : comps_(std::move(components)) {
    if (comps_.empty()) throw PreconditionError("an arc needs at least one component");
    for (std::size_t i = 0; i < comps_.size(); ++i)
        if (t_order(comps_[i]) < Order(1))
            throw PreconditionError("arc component " + std::to_string(i) + " does not vanish at t = 0");
}

std::string Arc::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < comps_.size(); ++i) os << (i ? ", " : "") << comps_[i].to_string();
    os << ")";
    return os.str();
}

Arc monomial_arc(std::span<const std::size_t> exponents) {
    std::vector<RationalFunctionT> comps;
    for (std::size_t k : exponents) comps.push_back(RationalFunctionT::t_power(k));
    return Arc(std::move(comps));
}

bool lies_on(const Arc& arc, const Hypersurface& X) {
    if (arc.size() != X.ambient_dim()) return false;
    return vanishes_along(X.equation(), arc.components());
}

long arc_order(const Arc& arc) {
    Order best = Order::infinity();
    for (const auto& c : arc.components()) best = min(best, t_order(c));
    if (best.is_infinite()) throw PreconditionError("arc order of the constant arc");
    return best.value();
}

Arc ramify(const Arc& arc, std::size_t n) {
    if (n == 0) throw PreconditionError("ramification index must be positive");
    std::vector<RationalFunctionT> comps;
    comps.reserve(arc.size());
    for (const auto& c : arc.components()) comps.push_back(c.ramify(n));
    return Arc(std::move(comps));
}

Order contact_order(const Arc& arc, std::span<const Polynomial> generators) {
    if (generators.empty()) throw PreconditionError("contact order of an empty generator list");
    Order best = Order::infinity();
    for (const auto& g : generators) best = min(best, composition_order(g, arc.components()));
    return best;
}

std::vector<Polynomial> maximal_ideal_generators(const std::vector<std::string>& variables) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < variables.size(); ++i) gens.push_back(Polynomial::variable(variables, i));
    return gens;
}

BinomialParametrization::BinomialParametrization(const Hypersurface& X,
                                                 std::vector<std::vector<std::uint32_t>> exponents)
    : e_(std::move(exponents)) {
    if (e_.size() != X.ambient_dim())
        throw PreconditionError("parametrization needs one exponent row per ambient coordinate");
    r_ = e_.front().size();
    if (r_ == 0) throw PreconditionError("parametrization needs at least one parameter");
    std::vector<std::string> params;
    for (std::size_t i = 0; i < r_; ++i) params.push_back("u" + std::to_string(i + 1));

    for (const auto& row : e_) {
        if (row.size() != r_) throw PreconditionError("ragged parametrization matrix");
        bool nonconstant = false;
        for (auto v : row) nonconstant = nonconstant || v > 0;
        if (!nonconstant) throw PreconditionError("parametrization coordinate does not vanish at the origin");
    }

    // f(prod u^e) must vanish as a polynomial in u.
    Polynomial image(params);
    for (const auto& [ex, c] : X.equation().terms()) {
        Exponents ue(r_, 0);
        for (std::size_t j = 0; j < ex.size(); ++j)
            for (std::size_t i = 0; i < r_; ++i) ue[i] += ex[j] * e_[j][i];
        image.add_term(ue, c);
    }
    if (!image.is_zero())
        throw PreconditionError("monomial map does not parametrize the hypersurface: f o param = " +
                                image.to_string());
}

Arc BinomialParametrization::compose(std::span<const UPoly> parameters) const {
    if (parameters.size() != r_) throw PreconditionError("wrong number of parameter series");
    std::vector<RationalFunctionT> comps;
    for (const auto& row : e_) {
        UPoly acc(Rational(1));
        for (std::size_t i = 0; i < r_; ++i)
            if (row[i] > 0) acc = acc * parameters[i].pow(row[i]);
        comps.emplace_back(std::move(acc));
    }
    return Arc(std::move(comps));
}

std::vector<long> BinomialParametrization::coordinate_orders(std::span<const long> parameter_orders) const {
    if (parameter_orders.size() != r_) throw PreconditionError("wrong number of parameter orders");
    std::vector<long> out;
    for (const auto& row : e_) {
        long o = 0;
        for (std::size_t i = 0; i < r_; ++i) o += static_cast<long>(row[i]) * parameter_orders[i];
        out.push_back(o);
    }
    return out;
}

Arc sample_binomial_arc(const BinomialParametrization& param, std::span<const long> orders,
                        std::optional<std::uint64_t> seed) {
    if (orders.size() != param.num_parameters()) throw PreconditionError("wrong number of parameter orders");
    for (long o : orders)
        if (o < 1) throw PreconditionError("parameter orders must be positive");

    std::vector<UPoly> params;
    if (!seed) {
        for (long o : orders) params.push_back(UPoly::monomial(Rational(1), static_cast<std::size_t>(o)));
        return param.compose(params);
    }
    // The engine's output sequence is fixed by the standard, so arcs are
    // reproducible across platforms; distributions are avoided for the same
    // reason.
    std::mt19937_64 rng(*seed);
    auto draw = [&rng]() {
        const long magnitude = 1 + static_cast<long>(rng() % 9);
        const long sign = (rng() & 1U) ? -1 : 1;
        const long den = 1 + static_cast<long>(rng() % 4);
        return Rational(Integer(sign * magnitude), Integer(den));
    };
    for (long o : orders) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(o) + 4);
        for (std::size_t k = static_cast<std::size_t>(o); k < coeffs.size(); ++k) coeffs[k] = draw();
        params.emplace_back(std::move(coeffs));
    }
    return param.compose(params);
}

}  // namespace arcinv

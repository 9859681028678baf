#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arcinv/polynomial.hpp"
#include "arcinv/univariate.hpp"

namespace arcinv {

/// Affine hypersurface V(f) through the origin, studied at the origin.
class Hypersurface {
public:
    /// Requires f non-constant with f(0) = 0.
    explicit Hypersurface(Polynomial f);

    const Polynomial& equation() const { return f_; }
    const std::vector<std::string>& variables() const { return f_.variables(); }
    std::size_t ambient_dim() const { return f_.num_vars(); }
    /// Multiplicity at the origin, i.e. the order of f there.
    long multiplicity() const { return multiplicity_; }

private:
    Polynomial f_;
    long multiplicity_ = 0;
};

/// Arc centered at the origin: one power series (as a rational function of
/// t) per ambient coordinate, each vanishing at t = 0.
class Arc {
public:
    Arc() = default;
    explicit Arc(std::vector<RationalFunctionT> components);

    const std::vector<RationalFunctionT>& components() const { return comps_; }
    const RationalFunctionT& operator[](std::size_t i) const { return comps_[i]; }
    std::size_t size() const { return comps_.size(); }

    std::string to_string() const;
    friend bool operator==(const Arc&, const Arc&) = default;

private:
    std::vector<RationalFunctionT> comps_;
};

/// Arc whose components are the monomials t^k.
Arc monomial_arc(std::span<const std::size_t> exponents);

/// Exact check that f vanishes identically along the arc.
bool lies_on(const Arc& arc, const Hypersurface& X);

/// nu_t of the arc: least order among its components. Throws for the
/// constant arc.
long arc_order(const Arc& arc);

/// Arc composed with t -> t^n.
Arc ramify(const Arc& arc, std::size_t n);

/// Least t-order of the images of the generators; the arc lies in the
/// contact locus Cont^{>=m} of the ideal iff the result is >= m.
Order contact_order(const Arc& arc, std::span<const Polynomial> generators);

/// Generators x_1, ..., x_n of the maximal ideal at the origin.
std::vector<Polynomial> maximal_ideal_generators(const std::vector<std::string>& variables);

/// Monomial map (u_1..u_r) -> (prod_i u_i^{e[j][i]})_j onto a binomial
/// hypersurface.
class BinomialParametrization {
public:
    /// `exponents[j]` holds the exponents of u_1..u_r in coordinate j.
    /// Throws PreconditionError unless f composed with the map is the zero
    /// polynomial and every coordinate vanishes at u = 0.
    BinomialParametrization(const Hypersurface& X, std::vector<std::vector<std::uint32_t>> exponents);

    std::size_t num_parameters() const { return r_; }
    const std::vector<std::vector<std::uint32_t>>& exponents() const { return e_; }

    /// Arc obtained by substituting the given series for u_1..u_r.
    Arc compose(std::span<const UPoly> parameters) const;

    /// t-orders of the coordinates of an arc built from parameters of the
    /// given orders with nonzero leading coefficients.
    std::vector<long> coordinate_orders(std::span<const long> parameter_orders) const;

private:
    std::size_t r_ = 0;
    std::vector<std::vector<std::uint32_t>> e_;
};

/// Samples an arc on X through the parametrization. Parameter u_i gets
/// t-order `orders[i]`.  Without a seed u_i = t^{orders[i]}; with a seed
/// u_i is dense of degree orders[i] + 3 with nonzero pseudo-random rational
/// coefficients drawn deterministically from the seed.
Arc sample_binomial_arc(const BinomialParametrization& param, std::span<const long> orders,
                        std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace arcinv

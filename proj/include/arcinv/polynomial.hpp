#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arcinv/rational.hpp"
#include "arcinv/univariate.hpp"

namespace arcinv {

using Exponents = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over the rationals on a named, ordered
/// variable list. Terms are kept in a sorted map with no zero coefficients,
/// so structural equality is mathematical equality.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}
    Polynomial(std::vector<std::string> variables, const std::vector<std::pair<Exponents, Rational>>& terms);

    static Polynomial constant(std::vector<std::string> variables, const Rational& c);
    static Polynomial variable(std::vector<std::string> variables, std::size_t index);

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t num_vars() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    /// Largest total degree; -1 for zero.
    long total_degree() const;
    /// Largest exponent of one variable; 0 for zero.
    std::uint32_t degree_in(std::size_t var) const;
    bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

    /// Adds c * x^e in place.
    void add_term(const Exponents& e, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial pow(unsigned e) const;
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Same polynomial scaled so that its first term has coefficient 1.
    Polynomial normalized() const;

    /// Embeds into a larger variable list; `positions[i]` is the slot of
    /// variable i in `new_variables`.
    Polynomial embedded(std::vector<std::string> new_variables, std::span<const std::size_t> positions) const;

    Rational evaluate(std::span<const Rational> point) const;

    std::string to_string() const;

private:
    void check_compatible(const Polynomial& o) const;
    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Order at the origin: the minimal total degree of a term (infinite for 0).
Order order_at_origin(const Polynomial& p);

/// p(x + point), computed exactly.
Polynomial translate(const Polynomial& p, std::span<const Rational> point);

Polynomial partial_derivative(const Polynomial& p, std::size_t var);

/// p(comps[0], ..., comps[n-1]) as a rational function of t.
RationalFunctionT compose(const Polynomial& p, std::span<const RationalFunctionT> comps);

/// t-order of p(comps) without reducing the quotient to lowest terms.
Order composition_order(const Polynomial& p, std::span<const RationalFunctionT> comps);

/// True iff p(comps) is identically zero.
inline bool vanishes_along(const Polynomial& p, std::span<const RationalFunctionT> comps) {
    return composition_order(p, comps).is_infinite();
}

}  // namespace arcinv

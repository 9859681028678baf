#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "arcinv/rational.hpp"

namespace arcinv {

/// Dense univariate polynomial in t over the rationals. Coefficient i is
/// the coefficient of t^i; no trailing zero coefficients are stored.
class UPoly {
public:
    UPoly() = default;
    UPoly(Rational constant);
    explicit UPoly(std::vector<Rational> coeffs);
    UPoly(std::initializer_list<Rational> coeffs) : UPoly(std::vector<Rational>(coeffs)) {}

    /// c * t^k
    static UPoly monomial(const Rational& c, std::size_t k);

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    /// Lowest exponent with a nonzero coefficient.
    Order order() const;
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
    Rational constant_term() const { return coeff(0); }
    const Rational& leading() const { return c_.back(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// True when exactly one coefficient is nonzero.
    bool is_monomial() const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const Rational& s);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly operator-() const;
    friend bool operator==(const UPoly&, const UPoly&) = default;

    /// Multiplies by t^k.
    UPoly shifted_up(std::size_t k) const;
    /// Divides by t^k; the k lowest coefficients must vanish.
    UPoly shifted_down(std::size_t k) const;
    /// p(t^n)
    UPoly substitute_power(std::size_t n) const;
    UPoly pow(unsigned long e) const;
    Rational evaluate(const Rational& t) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder of Euclidean division; divisor must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic greatest common divisor (zero when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

/// Rational function num/den in t whose denominator does not vanish at 0,
/// i.e. a formal power series with a finite closed form. Stored canonically:
/// gcd(num, den) = 1 and den monic.
class RationalFunctionT {
public:
    RationalFunctionT() : den_(Rational(1)) {}
    RationalFunctionT(UPoly num) : num_(std::move(num)), den_(Rational(1)) {}
    RationalFunctionT(const Rational& c) : RationalFunctionT(UPoly(c)) {}
    RationalFunctionT(UPoly num, UPoly den);

    /// t^k
    static RationalFunctionT t_power(std::size_t k) { return UPoly::monomial(Rational(1), k); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    /// Value of the series at t = 0.
    Rational value_at_zero() const;
    /// p(t^n)
    RationalFunctionT ramify(std::size_t n) const;

    RationalFunctionT& operator+=(const RationalFunctionT& o);
    RationalFunctionT& operator-=(const RationalFunctionT& o);
    RationalFunctionT& operator*=(const RationalFunctionT& o);
    /// Quotient as a power series; throws PreconditionError when the result
    /// would have a pole at t = 0.
    RationalFunctionT& operator/=(const RationalFunctionT& o);
    friend RationalFunctionT operator+(RationalFunctionT a, const RationalFunctionT& b) { return a += b; }
    friend RationalFunctionT operator-(RationalFunctionT a, const RationalFunctionT& b) { return a -= b; }
    friend RationalFunctionT operator*(RationalFunctionT a, const RationalFunctionT& b) { return a *= b; }
    friend RationalFunctionT operator/(RationalFunctionT a, const RationalFunctionT& b) { return a /= b; }
    RationalFunctionT operator-() const;
    friend bool operator==(const RationalFunctionT&, const RationalFunctionT&) = default;

    std::string to_string() const;

private:
    void canonicalize();
    UPoly num_;
    UPoly den_;
};

/// Order in t of the series; infinite for zero.
Order t_order(const RationalFunctionT& r);

}  // namespace arcinv

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace arcinv {

using Integer = mpz_class;

/// Exact rational number in canonical form (positive denominator, reduced).
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(int value) : q_(static_cast<long>(value)) {}
    Rational(const Integer& value) : q_(value) {}
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Largest integer not exceeding the value.
    Integer floor() const;
    Rational abs() const { return Rational(::abs(q_)); }
    Rational reciprocal() const;

    std::string to_string() const { return q_.get_str(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational pow(const Rational& base, unsigned long exponent);

/// A value of T or +infinity; infinity compares above every finite value.
template <class T>
class Extended {
public:
    Extended() : value_(T{}) {}
    Extended(T value) : value_(std::move(value)) {}

    static Extended infinity() {
        Extended e;
        e.value_.reset();
        return e;
    }

    bool is_infinite() const { return !value_.has_value(); }
    bool is_finite() const { return value_.has_value(); }

    const T& value() const {
        if (!value_) throw std::logic_error("value() called on infinite extended number");
        return *value_;
    }

    friend bool operator==(const Extended& a, const Extended& b) { return a.value_ == b.value_; }
    friend auto operator<=>(const Extended& a, const Extended& b) {
        using Cat = std::compare_three_way_result_t<T>;
        if (a.is_infinite() || b.is_infinite()) {
            if (a.is_infinite() && b.is_infinite()) return Cat::equivalent;
            return a.is_infinite() ? Cat::greater : Cat::less;
        }
        return static_cast<Cat>(*a.value_ <=> *b.value_);
    }

private:
    std::optional<T> value_;
};

/// Orders of polynomials and power series: non-negative integers or infinity.
using Order = Extended<long>;
using ExtRational = Extended<Rational>;

template <class T>
Extended<T> min(const Extended<T>& a, const Extended<T>& b) {
    return b < a ? b : a;
}

inline Order operator+(const Order& a, const Order& b) {
    if (a.is_infinite() || b.is_infinite()) return Order::infinity();
    return Order(a.value() + b.value());
}

std::string to_string(const Order& o);
std::string to_string(const ExtRational& r);
std::ostream& operator<<(std::ostream& os, const Order& o);
std::ostream& operator<<(std::ostream& os, const ExtRational& r);

/// Parses "inf" or a rational literal.
ExtRational parse_ext_rational(std::string_view text);

}  // namespace arcinv

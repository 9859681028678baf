#include "arcinv/rational.hpp"

#include "arcinv/errors.hpp"

namespace arcinv {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s, 10));
        return Rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational literal: '" + s + "'");
    }
}

Integer Rational::floor() const {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw PreconditionError("reciprocal of zero");
    return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw PreconditionError("division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(const Rational& base, unsigned long exponent) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(mpq_class(num, den));
}

std::string to_string(const Order& o) {
    return o.is_infinite() ? std::string("inf") : std::to_string(o.value());
}

std::string to_string(const ExtRational& r) {
    return r.is_infinite() ? std::string("inf") : r.value().to_string();
}

std::ostream& operator<<(std::ostream& os, const Order& o) { return os << to_string(o); }
std::ostream& operator<<(std::ostream& os, const ExtRational& r) { return os << to_string(r); }

ExtRational parse_ext_rational(std::string_view text) {
    if (text == "inf" || text == "infinity") return ExtRational::infinity();
    return ExtRational(Rational::parse(text));
}

}  // namespace arcinv

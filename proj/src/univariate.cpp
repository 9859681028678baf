#include "arcinv/univariate.hpp"

#include <sstream>

#include "arcinv/errors.hpp"

namespace arcinv {

UPoly::UPoly(Rational constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rational& c, std::size_t k) {
    UPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(k + 1, Rational());
    p.c_[k] = c;
    return p;
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Order UPoly::order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return Order(static_cast<long>(i));
    return Order::infinity();
}

bool UPoly::is_monomial() const {
    if (c_.empty()) return false;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_monomial()) return (b * a.leading()).shifted_up(a.c_.size() - 1);
    if (b.is_monomial()) return (a * b.leading()).shifted_up(b.c_.size() - 1);
    std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        const mpq_class& ai = a.c_[i].raw();
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            out[i + j] += ai * b.c_[j].raw();
        }
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(out.size());
    for (auto& q : out) coeffs.emplace_back(q);
    return UPoly(std::move(coeffs));
}

UPoly UPoly::operator-() const {
    UPoly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

UPoly UPoly::shifted_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    UPoly p;
    p.c_.assign(k, Rational());
    p.c_.insert(p.c_.end(), c_.begin(), c_.end());
    return p;
}

UPoly UPoly::shifted_down(std::size_t k) const {
    if (k == 0) return *this;
    for (std::size_t i = 0; i < k && i < c_.size(); ++i)
        if (!c_[i].is_zero()) throw InvariantError("UPoly::shifted_down: division by t^k is not exact");
    if (k >= c_.size()) return {};
    UPoly p;
    p.c_.assign(c_.begin() + static_cast<long>(k), c_.end());
    return p;
}

UPoly UPoly::substitute_power(std::size_t n) const {
    if (n == 0) throw PreconditionError("substitute_power: exponent must be positive");
    if (n == 1 || is_zero()) return *this;
    UPoly p;
    p.c_.assign((c_.size() - 1) * n + 1, Rational());
    for (std::size_t i = 0; i < c_.size(); ++i) p.c_[i * n] = c_[i];
    return p;
}

UPoly UPoly::pow(unsigned long e) const {
    UPoly result(Rational(1));
    UPoly base = *this;
    while (e > 0) {
        if (e & 1UL) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

Rational UPoly::evaluate(const Rational& t) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (k == 0) {
            os << mag;
            continue;
        }
        if (!unit) os << mag << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const std::size_t db = b.coeffs().size() - 1;
    if (rem.size() <= db) return {UPoly(), a};
    std::vector<Rational> quo(rem.size() - db);
    const Rational lead_inv = b.leading().reciprocal();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) continue;
        Rational q = rem[k] * lead_inv;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs()[j];
        quo[k - db] = std::move(q);
    }
    rem.resize(db);
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
        if (!y.is_zero()) y *= y.leading().reciprocal();
    }
    if (!x.is_zero()) x *= x.leading().reciprocal();
    return x;
}

RationalFunctionT::RationalFunctionT(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
    canonicalize();
}

void RationalFunctionT::canonicalize() {
    if (num_.is_zero()) {
        den_ = UPoly(Rational(1));
        return;
    }
    const Order on = num_.order();
    const Order od = den_.order();
    const long common = std::min(on.value(), od.value());
    if (common > 0) {
        num_ = num_.shifted_down(static_cast<std::size_t>(common));
        den_ = den_.shifted_down(static_cast<std::size_t>(common));
    }
    if (!den_.is_constant()) {
        UPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
    }
    if (den_.constant_term().is_zero())
        throw PreconditionError("rational function has a pole at t = 0: (" + num_.to_string() + ")/(" +
                                den_.to_string() + ")");
    const Rational lead = den_.leading();
    if (lead != Rational(1)) {
        const Rational inv = lead.reciprocal();
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RationalFunctionT::value_at_zero() const { return num_.constant_term() / den_.constant_term(); }

RationalFunctionT RationalFunctionT::ramify(std::size_t n) const {
    RationalFunctionT r;
    r.num_ = num_.substitute_power(n);
    r.den_ = den_.substitute_power(n);
    return r;
}

RationalFunctionT& RationalFunctionT::operator+=(const RationalFunctionT& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    canonicalize();
    return *this;
}

RationalFunctionT& RationalFunctionT::operator-=(const RationalFunctionT& o) { return *this += -o; }

RationalFunctionT& RationalFunctionT::operator*=(const RationalFunctionT& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RationalFunctionT& RationalFunctionT::operator/=(const RationalFunctionT& o) {
    if (o.is_zero()) throw PreconditionError("division of power series by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    canonicalize();
    return *this;
}

RationalFunctionT RationalFunctionT::operator-() const {
    RationalFunctionT r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string RationalFunctionT::to_string() const {
    if (den_ == UPoly(Rational(1))) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Order t_order(const RationalFunctionT& r) { return r.num().order(); }

}  // namespace arcinv

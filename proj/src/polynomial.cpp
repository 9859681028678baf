#include "arcinv/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "arcinv/errors.hpp"

namespace arcinv {

namespace {

long degree_of(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0L, [](long acc, std::uint32_t v) { return acc + v; });
}

}  // namespace

Polynomial::Polynomial(std::vector<std::string> variables, const std::vector<std::pair<Exponents, Rational>>& terms)
    : vars_(std::move(variables)) {
    for (const auto& [e, c] : terms) add_term(e, c);
}

Polynomial Polynomial::constant(std::vector<std::string> variables, const Rational& c) {
    Polynomial p(std::move(variables));
    p.add_term(Exponents(p.num_vars(), 0), c);
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::size_t index) {
    Polynomial p(std::move(variables));
    if (index >= p.num_vars()) throw PreconditionError("variable index out of range");
    Exponents e(p.num_vars(), 0);
    e[index] = 1;
    p.add_term(e, Rational(1));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find(Exponents(vars_.size(), 0));
    return it == terms_.end() ? Rational() : it->second;
}

long Polynomial::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != vars_.size()) throw PreconditionError("exponent vector length does not match variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (vars_ != o.vars_) throw PreconditionError("polynomials live on different variable lists");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(vars_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::normalized() const {
    if (is_zero()) return *this;
    return *this * terms_.begin()->second.reciprocal();
}

Polynomial Polynomial::embedded(std::vector<std::string> new_variables, std::span<const std::size_t> positions) const {
    if (positions.size() != vars_.size()) throw PreconditionError("embedding needs one position per variable");
    Polynomial out(std::move(new_variables));
    for (std::size_t p : positions)
        if (p >= out.num_vars()) throw PreconditionError("embedding position out of range");
    Exponents ne(out.num_vars(), 0);
    for (const auto& [e, c] : terms_) {
        std::fill(ne.begin(), ne.end(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[positions[i]] = e[i];
        out.add_term(ne, c);
    }
    return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != vars_.size()) throw PreconditionError("evaluation point has the wrong length");
    Rational acc;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term *= arcinv::pow(point[i], e[i]);
        acc += term;
    }
    return acc;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    // Highest total degree first, then reverse lexicographic, which reads
    // like the usual handwritten order.
    std::vector<const TermMap::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
        const long da = degree_of(a->first), db = degree_of(b->first);
        if (da != db) return da > db;
        return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        const Rational mag = c.abs();
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        bool wrote = false;
        if (mag != Rational(1) || degree_of(e) == 0) {
            os << mag;
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

Order order_at_origin(const Polynomial& p) {
    if (p.is_zero()) return Order::infinity();
    long best = -1;
    for (const auto& [e, c] : p.terms()) {
        const long d = degree_of(e);
        if (best < 0 || d < best) best = d;
    }
    return Order(best);
}

Polynomial translate(const Polynomial& p, std::span<const Rational> point) {
    if (point.size() != p.num_vars()) throw PreconditionError("translation vector has the wrong length");
    Polynomial current = p;
    for (std::size_t var = 0; var < point.size(); ++var) {
        const Rational& a = point[var];
        if (a.is_zero() || !current.depends_on(var)) continue;
        const std::uint32_t deg = current.degree_in(var);
        std::vector<Rational> apow(deg + 1);
        apow[0] = Rational(1);
        for (std::uint32_t k = 1; k <= deg; ++k) apow[k] = apow[k - 1] * a;
        Polynomial next(current.variables());
        Exponents e2;
        Integer binom;
        for (const auto& [e, c] : current.terms()) {
            const std::uint32_t k = e[var];
            e2 = e;
            // (x + a)^k = sum_i C(k, i) a^(k-i) x^i
            for (std::uint32_t i = 0; i <= k; ++i) {
                mpz_bin_uiui(binom.get_mpz_t(), k, i);
                e2[var] = i;
                next.add_term(e2, c * Rational(binom) * apow[k - i]);
            }
        }
        current = std::move(next);
    }
    return current;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
    if (var >= p.num_vars()) throw PreconditionError("derivative variable index out of range");
    Polynomial out(p.variables());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] == 0) continue;
        Exponents e2 = e;
        e2[var] -= 1;
        out.add_term(e2, c * Rational(static_cast<long>(e[var])));
    }
    return out;
}

namespace {

/// Lazily filled table base^0, base^1, ...
class PowerCache {
public:
    explicit PowerCache(UPoly base) { pows_.push_back(UPoly(Rational(1))); base_ = std::move(base); }
    const UPoly& get(std::uint32_t k) {
        while (pows_.size() <= k) pows_.push_back(pows_.back() * base_);
        return pows_[k];
    }

private:
    UPoly base_;
    std::vector<UPoly> pows_;
};

/// Multiplies `acc` by a cached power, using shifts when the base is a
/// monomial (the common case for the arc parameter).
void multiply_power(UPoly& acc, PowerCache& cache, const UPoly& base, std::uint32_t k) {
    if (k == 0) return;
    if (base.is_monomial()) {
        acc = acc.shifted_up(static_cast<std::size_t>(base.degree()) * k);
        if (base.leading() != Rational(1)) acc *= arcinv::pow(base.leading(), k);
        return;
    }
    acc = acc * cache.get(k);
}

}  // namespace

namespace {

/// Numerator N and denominator D with p(comps) = N / D; D(0) != 0 because
/// every component denominator is a unit at t = 0.
std::pair<UPoly, UPoly> compose_unreduced(const Polynomial& p, std::span<const RationalFunctionT> comps) {
    if (comps.size() != p.num_vars()) throw PreconditionError("composition needs one component per variable");
    const std::size_t n = comps.size();
    const bool all_polynomial =
        std::all_of(comps.begin(), comps.end(), [](const RationalFunctionT& r) { return r.is_polynomial(); });

    std::vector<PowerCache> num_cache, den_cache;
    std::vector<std::uint32_t> max_deg(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        num_cache.emplace_back(comps[j].num());
        den_cache.emplace_back(comps[j].den());
        max_deg[j] = p.degree_in(j);
    }

    UPoly total;
    for (const auto& [e, c] : p.terms()) {
        UPoly acc(c);
        bool vanished = false;
        for (std::size_t j = 0; j < n && !vanished; ++j) {
            if (e[j] > 0 && comps[j].is_zero()) {
                vanished = true;
                break;
            }
            multiply_power(acc, num_cache[j], comps[j].num(), e[j]);
            if (!all_polynomial) multiply_power(acc, den_cache[j], comps[j].den(), max_deg[j] - e[j]);
        }
        if (!vanished) total += acc;
    }
    UPoly den(Rational(1));
    if (!all_polynomial)
        for (std::size_t j = 0; j < n; ++j) multiply_power(den, den_cache[j], comps[j].den(), max_deg[j]);
    return {std::move(total), std::move(den)};
}

}  // namespace

RationalFunctionT compose(const Polynomial& p, std::span<const RationalFunctionT> comps) {
    auto [num, den] = compose_unreduced(p, comps);
    return RationalFunctionT(std::move(num), std::move(den));
}

Order composition_order(const Polynomial& p, std::span<const RationalFunctionT> comps) {
    return compose_unreduced(p, comps).first.order();
}

}  // namespace arcinv

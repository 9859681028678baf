#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "arcinv/arcs.hpp"
#include "arcinv/polynomial.hpp"

namespace testing {

using arcinv::Exponents;
using arcinv::Polynomial;
using arcinv::Rational;

inline Polynomial poly(std::vector<std::string> vars, std::initializer_list<std::pair<Exponents, Rational>> terms) {
    return Polynomial(std::move(vars), std::vector<std::pair<Exponents, Rational>>(terms));
}

inline arcinv::Arc arc_from(std::initializer_list<arcinv::UPoly> comps) {
    std::vector<arcinv::RationalFunctionT> out;
    for (const auto& c : comps) out.emplace_back(c);
    return arcinv::Arc(std::move(out));
}

inline arcinv::UPoly tpow(long k, Rational c = Rational(1)) { return arcinv::UPoly::monomial(c, static_cast<std::size_t>(k)); }

inline arcinv::ExtRational q(long num, long den = 1) { return arcinv::ExtRational(Rational(num, den)); }

}  // namespace testing

#include "arcinv/io.hpp"

#include <fstream>
#include <sstream>

#include "arcinv/errors.hpp"

namespace arcinv::io {

namespace {

Integer integer_from_json(const Json& v, const char* what) {
    if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()), 10);
    if (v.is_string()) {
        try {
            return Integer(v.get<std::string>(), 10);
        } catch (const std::invalid_argument&) {
        }
    }
    throw ParseError(std::string(what) + " must be an integer or a decimal integer string");
}

long small_integer(const Json& v, const char* what) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return v.get<long>();
}

const Json& required(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    return doc.at(key);
}

std::vector<long> integer_list(const Json& v, const char* what) {
    if (!v.is_array()) throw ParseError(std::string(what) + " must be a list of integers");
    std::vector<long> out;
    for (const auto& x : v) out.push_back(small_integer(x, what));
    return out;
}

Rational term_coefficient(const Json& term) {
    return rational_from_json(required(term, "coeff_num"), term.contains("coeff_den") ? term.at("coeff_den") : Json(1));
}

std::vector<std::string> variable_list(const Json& doc) {
    const Json& v = required(doc, "variables");
    if (!v.is_array() || v.empty()) throw ParseError("'variables' must be a nonempty list of names");
    std::vector<std::string> out;
    for (const auto& name : v) {
        if (!name.is_string()) throw ParseError("variable names must be strings");
        out.push_back(name.get<std::string>());
    }
    return out;
}

Polynomial terms_on(std::vector<std::string> vars, const Json& terms) {
    if (!terms.is_array()) throw ParseError("'terms' must be a list");
    Polynomial p(std::move(vars));
    for (const auto& term : terms) {
        const auto e = integer_list(required(term, "exponents"), "exponents");
        if (e.size() != p.num_vars()) throw ParseError("term exponent vector has the wrong length");
        Exponents ex;
        for (long v : e) {
            if (v < 0) throw ParseError("exponents must be non-negative");
            ex.push_back(static_cast<std::uint32_t>(v));
        }
        p.add_term(ex, term_coefficient(term));
    }
    return p;
}

Json term_json(const Rational& c, const Exponents& e) {
    Json t;
    const auto num = c.numerator();
    const auto den = c.denominator();
    t["coeff_num"] = num.fits_slong_p() ? Json(num.get_si()) : Json(num.get_str());
    t["coeff_den"] = den.fits_slong_p() ? Json(den.get_si()) : Json(den.get_str());
    t["exponents"] = e;
    return t;
}

}  // namespace

Json load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("'" + path.string() + "': " + e.what());
    }
}

Rational rational_from_json(const Json& num, const Json& den) {
    const Integer d = integer_from_json(den, "coeff_den");
    if (d == 0) throw ParseError("zero denominator");
    return Rational(integer_from_json(num, "coeff_num"), d);
}

Polynomial polynomial_from_json(const Json& doc) { return terms_on(variable_list(doc), required(doc, "terms")); }

UPoly upoly_from_json(const Json& terms) {
    const Polynomial p = terms_on({"t"}, terms);
    std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(0L, p.total_degree() + 1)));
    for (const auto& [e, c] : p.terms()) coeffs[e[0]] = c;
    return UPoly(std::move(coeffs));
}

Arc arc_from_json(const Json& doc) {
    const Json& comps = required(doc, "components");
    if (!comps.is_array()) throw ParseError("'components' must be a list");
    std::vector<RationalFunctionT> out;
    try {
        for (const auto& c : comps) {
            UPoly num = upoly_from_json(required(c, "num"));
            UPoly den = c.contains("den") ? upoly_from_json(c.at("den")) : UPoly(Rational(1));
            out.emplace_back(std::move(num), std::move(den));
        }
        return Arc(std::move(out));
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("invalid arc: ") + e.what());
    }
}

ReesAlgebra presentation_from_json(const Json& doc) {
    const auto vars = variable_list(doc);
    const Json& gens = required(doc, "generators");
    if (!gens.is_array()) throw ParseError("'generators' must be a list");
    std::vector<WeightedGenerator> out;
    for (const auto& g : gens) out.push_back({terms_on(vars, required(g, "terms")), small_integer(required(g, "weight"), "weight")});
    try {
        return ReesAlgebra(std::move(out));
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("invalid presentation: ") + e.what());
    }
}

ResolutionData resolution_from_json(const Json& doc) {
    ResolutionData R;
    R.c = integer_list(required(doc, "c"), "c");
    if (doc.contains("gens")) {
        for (const auto& g : doc.at("gens")) {
            DivisorialGenerator gen;
            gen.orders = integer_list(required(g, "d"), "d");
            gen.weight = g.contains("w") ? small_integer(g.at("w"), "w") : 1;
            if (g.contains("label")) gen.label = g.at("label").get<std::string>();
            R.gens.push_back(std::move(gen));
        }
    } else if (doc.contains("a")) {
        const long b = doc.contains("b") ? small_integer(doc.at("b"), "b") : 1;
        R.gens.push_back({integer_list(doc.at("a"), "a"), b, "I"});
    } else {
        throw ParseError("resolution data needs 'gens' or 'a'");
    }
    if (doc.contains("coord_val")) {
        std::vector<std::vector<long>> m;
        for (const auto& row : doc.at("coord_val")) m.push_back(integer_list(row, "coord_val"));
        R.coord_val = std::move(m);
    }
    if (doc.contains("incompatible")) {
        for (const auto& pair : doc.at("incompatible")) {
            const auto p = integer_list(pair, "incompatible");
            if (p.size() != 2 || p[0] < 1 || p[1] < 1) throw ParseError("incompatible entries are 1-based pairs");
            R.incompatible.emplace_back(static_cast<std::size_t>(p[0] - 1), static_cast<std::size_t>(p[1] - 1));
        }
    }
    if (doc.contains("toric")) R.toric = doc.at("toric").get<bool>();
    try {
        R.validate();
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("invalid resolution data: ") + e.what());
    }
    return R;
}

Json to_json(const Polynomial& p) {
    Json doc;
    doc["variables"] = p.variables();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(term_json(c, e));
    doc["terms"] = terms;
    return doc;
}

Json to_json(const UPoly& p) {
    Json terms = Json::array();
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        if (!p.coeffs()[k].is_zero()) terms.push_back(term_json(p.coeffs()[k], Exponents{static_cast<std::uint32_t>(k)}));
    return terms;
}

Json to_json(const Arc& arc) {
    Json comps = Json::array();
    for (const auto& c : arc.components()) comps.push_back(Json{{"num", to_json(c.num())}, {"den", to_json(c.den())}});
    return Json{{"components", comps}};
}

Json to_json(const ResolutionData& R) {
    Json doc;
    doc["c"] = R.c;
    Json gens = Json::array();
    for (const auto& g : R.gens) gens.push_back(Json{{"d", g.orders}, {"w", g.weight}, {"label", g.label}});
    doc["gens"] = gens;
    if (R.coord_val) doc["coord_val"] = *R.coord_val;
    if (!R.incompatible.empty()) {
        Json pairs = Json::array();
        for (const auto& [i, j] : R.incompatible) pairs.push_back(Json::array({i + 1, j + 1}));
        doc["incompatible"] = pairs;
    }
    doc["toric"] = R.toric;
    return doc;
}

std::string render(const Rational& r) { return r.to_string(); }
std::string render(const ExtRational& r) { return to_string(r); }
std::string render(const Order& o) { return to_string(o); }

std::string render(const MultiIndex& l) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
    os << ")";
    return os.str();
}

}  // namespace arcinv::io

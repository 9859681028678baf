#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arcinv/contact_resolution.hpp"
#include "arcinv/errors.hpp"
#include "arcinv/io.hpp"
#include "arcinv/nash.hpp"
#include "arcinv/qpersistance.hpp"
#include "arcinv/verify.hpp"

namespace {

using arcinv::io::Json;
using arcinv::io::render;

enum Exit { kOk = 0, kInternal = 1, kParse = 2, kPrecondition = 3, kInconclusive = 4, kFailed = 5 };

/// Report under construction: a machine document plus the same content as
/// aligned text lines.
class Report {
public:
    explicit Report(std::string command) { doc_["command"] = command; text_ << command << "\n"; }

    void field(const std::string& key, const std::string& value) {
        doc_[key] = value;
        text_ << "  " << pad(key, 16) << value << "\n";
    }
    void field(const std::string& key, long value) {
        doc_[key] = value;
        text_ << "  " << pad(key, 16) << value << "\n";
    }
    void field(const std::string& key, bool value) {
        doc_[key] = value;
        text_ << "  " << pad(key, 16) << (value ? "yes" : "no") << "\n";
    }
    void line(const std::string& s) { text_ << "  " << s << "\n"; }
    void warn(const std::string& s) {
        doc_["warnings"].push_back(s);
        text_ << "  warning: " << s << "\n";
    }
    Json& doc() { return doc_; }

    void print(bool machine) const {
        if (machine)
            std::cout << doc_.dump(2) << "\n";
        else
            std::cout << text_.str();
    }

    static std::string pad(const std::string& s, std::size_t width) {
        return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
    }

private:
    Json doc_;
    std::ostringstream text_;
};

std::string join(const std::vector<long>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

std::string render_point(const std::vector<arcinv::Rational>& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? ", " : "") + render(p[i]);
    return out + ")";
}

void require_positive(const char* name, std::optional<long> v) {
    if (v && *v < 1) throw arcinv::PreconditionError(std::string("--") + name + " must be positive");
}

arcinv::Hypersurface load_surface(const std::string& path) {
    return arcinv::Hypersurface(arcinv::io::polynomial_from_json(arcinv::io::load_file(path)));
}

arcinv::Arc load_arc(const std::string& path) { return arcinv::io::arc_from_json(arcinv::io::load_file(path)); }

arcinv::ResolutionData load_resolution(const std::string& path) {
    return arcinv::io::resolution_from_json(arcinv::io::load_file(path));
}

struct Args {
    std::string surface, arc, presentation, resolution, suite = "example72";
    std::optional<long> budget, n_max, m, m_max, bound;
    std::uint64_t seed = arcinv::VerifyOptions{}.seed;
    bool trace = false;
    std::string format = "text";
};

int run_qpers(const Args& a) {
    require_positive("budget", a.budget);
    require_positive("n-max", a.n_max);
    const auto X = load_surface(a.surface);
    const auto phi = load_arc(a.arc);
    const auto q = a.presentation.empty()
                       ? arcinv::q_persistance(X, phi)
                       : arcinv::q_persistance(X, phi,
                                               arcinv::io::presentation_from_json(arcinv::io::load_file(a.presentation)));
    Report rep("qpers");
    rep.field("surface", X.equation().to_string());
    rep.field("arc", phi.to_string());
    rep.field("presentation", a.presentation.empty() ? std::string("diff") : a.presentation);
    rep.field("r", render(q.r));
    rep.field("nu", q.nu);
    rep.field("r_bar", render(q.r_bar));
    rep.field("floor_r", q.floor_r ? q.floor_r->get_str() : std::string("inf"));

    int code = kOk;
    if (a.n_max) {
        if (!q.r.is_finite()) throw arcinv::PreconditionError("limit check needs a finite Q-persistance");
        const auto lim = arcinv::check_limit_identity(X, phi, *a.n_max, a.budget);
        rep.line("check: rho(phi_n) = floor(n r), |rho(phi_n)/n - r| <= 1/n");
        rep.line(Report::pad("n", 6) + Report::pad("rho_n", 8) + Report::pad("floor(nr)", 11) +
                 Report::pad("deviation", 12) + "verdict");
        Json rows = Json::array();
        for (const auto& row : lim.rows) {
            const std::string rho = row.rho_n ? std::to_string(*row.rho_n) : std::string("?");
            rep.line(Report::pad(std::to_string(row.n), 6) + Report::pad(rho, 8) + Report::pad(row.expected.get_str(), 11) +
                     Report::pad(render(row.deviation), 12) + arcinv::to_string(row.verdict));
            rows.push_back({{"n", row.n},
                            {"rho_n", row.rho_n ? Json(*row.rho_n) : Json(nullptr)},
                            {"floor_nr", row.expected.get_str()},
                            {"deviation", render(row.deviation)},
                            {"verdict", arcinv::to_string(row.verdict)}});
        }
        rep.doc()["limit_check"] = {{"check", "rho(phi_n) = floor(n r)"}, {"rows", rows}};
        rep.field("verdict", std::string(arcinv::to_string(lim.verdict)));
        if (lim.verdict == arcinv::Verdict::Fail) code = kFailed;
        if (lim.verdict == arcinv::Verdict::Inconclusive) code = kInconclusive;
    }
    rep.print(a.format == "machine");
    return code;
}

int run_nash(const Args& a) {
    require_positive("budget", a.budget);
    const auto X = load_surface(a.surface);
    const auto phi = load_arc(a.arc);
    arcinv::NashOptions opt;
    opt.max_steps = a.budget;
    const auto report = arcinv::nash_sequence(X, phi, opt);

    Report rep("nash");
    rep.field("surface", X.equation().to_string());
    rep.field("arc", phi.to_string());
    rep.field("budget", report.budget);
    rep.field("sequence", join(report.sequence, " "));
    rep.doc()["sequence"] = report.sequence;
    switch (report.status) {
        case arcinv::PersistanceStatus::Reached:
            rep.field("status", std::string("reached"));
            rep.field("rho", *report.rho);
            break;
        case arcinv::PersistanceStatus::Infinite:
            rep.field("status", std::string("infinite"));
            rep.field("rho", std::string("inf"));
            break;
        case arcinv::PersistanceStatus::NotReached:
            rep.field("status", std::string("budget exhausted"));
            break;
    }
    if (a.trace) {
        Json records = Json::array();
        rep.line(Report::pad("step", 6) + Report::pad("chart", 7) + Report::pad("mult", 6) + "center");
        for (const auto& t : report.trace) {
            rep.line(Report::pad(std::to_string(t.step), 6) + Report::pad(t.chart, 7) +
                     Report::pad(std::to_string(t.multiplicity), 6) + render_point(t.center));
            Json center = Json::array();
            for (const auto& c : t.center) center.push_back(render(c));
            records.push_back({{"step", t.step}, {"chart", t.chart}, {"multiplicity", t.multiplicity}, {"center", center}});
        }
        rep.doc()["trace"] = records;
    }
    rep.print(a.format == "machine");
    return report.status == arcinv::PersistanceStatus::NotReached ? kInconclusive : kOk;
}

int run_contact(const Args& a) {
    require_positive("m", a.m);
    require_positive("m-max", a.m_max);
    require_positive("bound", a.bound);
    if (!a.m && !a.m_max) throw arcinv::PreconditionError("contact needs --m or --m-max");
    const auto R = load_resolution(a.resolution);
    const long bound = a.bound.value_or(std::max(a.m.value_or(0), a.m_max.value_or(0)) + 5);
    const char* label = R.toric ? "components" : "candidates";

    Report rep("contact");
    rep.field("resolution", a.resolution);
    rep.field("bound", bound);
    int code = kOk;
    if (a.m) {
        const auto fc = arcinv::fat_components(R, *a.m, bound);
        rep.field("m", *a.m);
        Json list = Json::array();
        std::string listing;
        for (const auto& l : fc.components) {
            const auto v = arcinv::rbar_of_multiindex(R, l);
            listing += (listing.empty() ? "" : " ") + render(l);
            list.push_back({{"index", l}, {"rbar", render(v)}});
            rep.line("  " + Report::pad(render(l), 10) + "rbar " + render(v));
        }
        rep.field(label, listing.empty() ? std::string("none") : listing);
        rep.doc()[label] = list;
        rep.field("delta", render(arcinv::delta(R, *a.m, bound)));
        if (fc.boundary_warning) {
            rep.warn("a minimal multi-index touches the enumeration bound; raise --bound");
            code = kInconclusive;
        }
        if (fc.empty_warning) {
            rep.warn("no multi-index inside the enumeration box");
            code = kInconclusive;
        }
    }
    if (a.m_max) {
        const auto report = arcinv::delta_limit_check(R, *a.m_max, bound);
        rep.field("ord", render(report.ord));
        rep.field("c_max", report.c_max);
        rep.line("check: ord <= delta_m <= ord (1 + c_max/m)");
        rep.line(Report::pad("m", 6) + Report::pad("delta_m", 10) + Report::pad("upper", 10) + "verdict");
        Json rows = Json::array();
        for (const auto& row : report.rows) {
            const char* verdict = row.pass ? "pass" : "fail";
            rep.line(Report::pad(std::to_string(row.m), 6) + Report::pad(render(row.delta), 10) +
                     Report::pad(render(row.upper), 10) + verdict);
            rows.push_back({{"m", row.m}, {"delta", render(row.delta)}, {"upper", render(row.upper)}, {"verdict", verdict}});
        }
        rep.doc()["delta_table"] = {{"check", "ord <= delta_m <= ord (1 + c_max/m)"}, {"rows", rows}};
        rep.field("verdict", std::string(report.pass ? "pass" : "fail"));
        if (!report.pass) code = kFailed;
    }
    rep.print(a.format == "machine");
    return code;
}

int run_bounds(const Args& a) {
    require_positive("bound", a.bound);
    const auto R = load_resolution(a.resolution);
    const auto vb = arcinv::values_bounds(R);
    const auto ex = arcinv::sample_rbar_extrema(R, a.bound.value_or(8));
    Report rep("bounds");
    rep.field("resolution", a.resolution);
    rep.field("hironaka_order", render(arcinv::hironaka_order(R)));
    rep.field("lower", render(vb.lower));
    rep.field("upper", render(vb.upper));
    rep.field("grid", a.bound.value_or(8));
    rep.field("samples", static_cast<long>(ex.samples));
    rep.field("sampled_min", render(ex.min_value) + " at " + render(ex.argmin) +
                                 (ex.min_attains_lower ? " (attained)" : " (limit)"));
    rep.field("sampled_max", render(ex.max_value) + " at " + render(ex.argmax) +
                                 (ex.max_attains_upper ? " (attained)" : " (limit)"));
    rep.doc()["sampled_min"] = {{"value", render(ex.min_value)}, {"at", ex.argmin}, {"attained", ex.min_attains_lower}};
    rep.doc()["sampled_max"] = {{"value", render(ex.max_value)}, {"at", ex.argmax}, {"attained", ex.max_attains_upper}};
    rep.print(a.format == "machine");
    return kOk;
}

int run_verify(const Args& a) {
    if (a.suite != "example72") throw arcinv::PreconditionError("unknown suite '" + a.suite + "'");
    const auto results = arcinv::run_acceptance_suite({a.seed});
    Report rep("verify");
    rep.field("suite", a.suite);
    rep.field("seed", std::to_string(a.seed));
    Json rows = Json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        rep.line(std::string(r.passed ? "PASS " : "FAIL ") + std::to_string(r.id) + " " + r.title);
        for (const auto& d : r.details) rep.line("    " + d);
        rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"details", r.details}});
    }
    rep.doc()["criteria"] = rows;
    rep.field("result", std::string(all ? "all criteria pass" : "some criteria fail"));
    rep.print(a.format == "machine");
    return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arc invariants of hypersurface singularities: Q-persistance, Nash multiplicity sequences, "
                 "contact loci and value bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    Args a;
    app.add_option("--format", a.format, "Output format")->check(CLI::IsMember({"text", "machine"}));

    auto* qpers = app.add_subcommand("qpers", "Q-persistance r, arc order and r/nu");
    qpers->add_option("--surface", a.surface, "Hypersurface document")->required();
    qpers->add_option("--arc", a.arc, "Arc document")->required();
    qpers->add_option("--presentation", a.presentation, "Weighted generators replacing the differential presentation");
    qpers->add_option("--n-max", a.n_max, "Tabulate rho(phi_n) for n = 1..N");
    qpers->add_option("--budget", a.budget, "Blow-up budget per row");

    auto* nash = app.add_subcommand("nash", "Nash multiplicity sequence along an arc");
    nash->add_option("--surface", a.surface, "Hypersurface document")->required();
    nash->add_option("--arc", a.arc, "Arc document")->required();
    nash->add_option("--budget", a.budget, "Maximal number of blow-ups");
    nash->add_flag("--trace", a.trace, "Emit chart, center and multiplicity per step");

    auto* contact = app.add_subcommand("contact", "Fat components of contact loci of the maximal ideal");
    contact->add_option("--resolution", a.resolution, "Resolution data document")->required();
    contact->add_option("--m", a.m, "Contact order");
    contact->add_option("--m-max", a.m_max, "Tabulate delta_m for m = 1..M");
    contact->add_option("--bound", a.bound, "Enumeration bound per multi-index entry");

    auto* bounds = app.add_subcommand("bounds", "Range of r-bar over all arcs");
    bounds->add_option("--resolution", a.resolution, "Resolution data document")->required();
    bounds->add_option("--bound", a.bound, "Sampling grid for the extrema (default 8)");

    auto* verify = app.add_subcommand("verify", "Run the bundled acceptance suite");
    verify->add_option("suite", a.suite, "Suite name")->capture_default_str();
    verify->add_option("--seed", a.seed, "Seed for sampled cases")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (*qpers) return run_qpers(a);
        if (*nash) return run_nash(a);
        if (*contact) return run_contact(a);
        if (*bounds) return run_bounds(a);
        return run_verify(a);
    } catch (const arcinv::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const arcinv::PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kPrecondition;
    } catch (const arcinv::BudgetExhausted& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

#include "arcinv/qpersistance.hpp"

#include "arcinv/errors.hpp"
#include "arcinv/nash.hpp"
#include "arcinv/parallel.hpp"

namespace arcinv {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass:
            return "pass";
        case Verdict::Fail:
            return "fail";
        case Verdict::Inconclusive:
            return "inconclusive";
    }
    return "?";
}

QPersistanceResult q_persistance(const Hypersurface& X, const Arc& phi, const ReesAlgebra& presentation) {
    if (X.multiplicity() < 2) throw PreconditionError("Q-persistance needs a singular center (multiplicity >= 2)");
    if (!lies_on(phi, X)) throw PreconditionError("arc does not lie on the hypersurface");
    QPersistanceResult out;
    out.nu = arc_order(phi);
    out.r = ord_along_arc(presentation, phi);
    if (out.r.is_finite()) {
        out.r_bar = ExtRational(out.r.value() / Rational(out.nu));
        out.floor_r = out.r.value().floor();
    } else {
        out.r_bar = ExtRational::infinity();
    }
    return out;
}

QPersistanceResult q_persistance(const Hypersurface& X, const Arc& phi) {
    return q_persistance(X, phi, diff_saturate(X).algebra);
}

FloorIdentityReport check_floor_identity(const Hypersurface& X, const Arc& phi, std::optional<long> budget) {
    FloorIdentityReport report;
    report.q = q_persistance(X, phi);
    if (!report.q.floor_r) throw PreconditionError("floor identity needs a finite Q-persistance");
    try {
        report.rho = persistance(X, phi, budget);
    } catch (const BudgetExhausted&) {
        report.verdict = Verdict::Inconclusive;
        return report;
    }
    const bool equal = report.rho->is_finite() && Integer(report.rho->value()) == *report.q.floor_r;
    report.verdict = equal ? Verdict::Pass : Verdict::Fail;
    return report;
}

LimitIdentityReport check_limit_identity(const Hypersurface& X, const Arc& phi, long n_max,
                                         std::optional<long> budget) {
    if (n_max < 1) throw PreconditionError("n_max must be positive");
    const QPersistanceResult q = q_persistance(X, phi);
    if (q.r.is_infinite()) throw PreconditionError("limit identity needs a finite Q-persistance");

    LimitIdentityReport report;
    report.r = q.r.value();
    report.rows.resize(static_cast<std::size_t>(n_max));
    parallel_for(report.rows.size(), [&](std::size_t i) {
        LimitRow& row = report.rows[i];
        row.n = static_cast<long>(i) + 1;
        row.expected = (Rational(row.n) * report.r).floor();
        const Arc phi_n = ramify(phi, static_cast<std::size_t>(row.n));
        try {
            const Order rho = persistance(X, phi_n, budget);
            if (rho.is_infinite()) throw InvariantError("ramified arc has infinite persistance but finite r");
            row.rho_n = rho.value();
        } catch (const BudgetExhausted&) {
            row.verdict = Verdict::Inconclusive;
            return;
        }
        row.deviation = (Rational(*row.rho_n) / Rational(row.n) - report.r).abs();
        const bool ok = Integer(*row.rho_n) == row.expected && row.deviation <= Rational(1) / Rational(row.n);
        row.verdict = ok ? Verdict::Pass : Verdict::Fail;
    });

    report.verdict = Verdict::Pass;
    for (const auto& row : report.rows) {
        if (row.verdict == Verdict::Fail) {
            report.verdict = Verdict::Fail;
            break;
        }
        if (row.verdict == Verdict::Inconclusive) report.verdict = Verdict::Inconclusive;
    }
    return report;
}

}  // namespace arcinv

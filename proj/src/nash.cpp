#include "arcinv/nash.hpp"

#include <algorithm>
#include <numeric>

#include "arcinv/errors.hpp"
#include "arcinv/rees.hpp"

namespace arcinv {

DirectedBlowupState init_directed(const Hypersurface& X, const Arc& phi) {
    if (phi.size() != X.ambient_dim()) throw PreconditionError("arc and hypersurface dimensions differ");
    if (X.multiplicity() < 2) throw PreconditionError("directed blow-ups need a singular center (multiplicity >= 2)");
    arc_order(phi);  // rejects the constant arc
    if (!lies_on(phi, X)) throw PreconditionError("arc does not lie on the hypersurface");

    std::vector<std::string> vars = X.variables();
    std::string s = "s";
    while (std::find(vars.begin(), vars.end(), s) != vars.end()) s += "'";
    vars.push_back(s);
    std::vector<std::size_t> positions(X.ambient_dim());
    std::iota(positions.begin(), positions.end(), 0);

    std::vector<RationalFunctionT> comps = phi.components();
    comps.push_back(RationalFunctionT::t_power(1));

    DirectedBlowupState state;
    state.F = X.equation().embedded(vars, positions);
    state.gamma = Arc(std::move(comps));
    state.multiplicity = X.multiplicity();
    return state;
}

namespace {

std::size_t choose_chart(const Arc& gamma, ChartTieBreak tie_break) {
    const std::size_t n1 = gamma.size();
    std::vector<Order> orders;
    for (const auto& c : gamma.components()) orders.push_back(t_order(c));
    const Order best = *std::min_element(orders.begin(), orders.end());
    if (best.is_infinite()) throw PreconditionError("lifted arc is constant; no chart contains its center");
    if (tie_break == ChartTieBreak::ParameterFirst && orders[n1 - 1] == best) return n1 - 1;
    for (std::size_t j = 0; j < n1; ++j)
        if (orders[j] == best) return j;
    throw InvariantError("no chart of minimal order");
}

}  // namespace

DirectedBlowupState blowup_step(const DirectedBlowupState& state, ChartTieBreak tie_break, bool check_on_arc) {
    const long m = state.multiplicity;
    if (m < 1) throw PreconditionError("blow-up step needs multiplicity >= 1");
    if (order_at_origin(state.F) != Order(m))
        throw InvariantError("stored multiplicity disagrees with the order of the strict transform");
    const std::size_t n1 = state.F.num_vars();
    const std::size_t u = choose_chart(state.gamma, tie_break);

    // Chart u: x_j = x_j' * u for j != u, then divide by u^m. Every term
    // has degree >= m, so the division is exact.
    Polynomial strict(state.F.variables());
    for (const auto& [e, c] : state.F.terms()) {
        const long deg = std::accumulate(e.begin(), e.end(), 0L);
        Exponents e2 = e;
        e2[u] = static_cast<std::uint32_t>(deg - m);
        strict.add_term(e2, c);
    }

    const RationalFunctionT& gu = state.gamma[u];
    std::vector<RationalFunctionT> lifted(n1);
    std::vector<Rational> center(n1);
    for (std::size_t j = 0; j < n1; ++j) {
        if (j == u) {
            lifted[j] = gu;
            continue;
        }
        RationalFunctionT q = state.gamma[j] / gu;
        center[j] = q.value_at_zero();
        if (!center[j].is_zero()) q -= RationalFunctionT(center[j]);
        lifted[j] = std::move(q);
    }

    DirectedBlowupState next;
    next.F = translate(strict, center);
    next.gamma = Arc(std::move(lifted));
    next.step = state.step + 1;
    next.chart = u;
    next.center = std::move(center);
    const Order mult = order_at_origin(next.F);
    if (mult.is_infinite() || mult.value() < 1)
        throw InvariantError("strict transform does not pass through the lifted center");
    next.multiplicity = mult.value();
    if (check_on_arc && !vanishes_along(next.F, next.gamma.components()))
        throw InvariantError("lifted arc left the strict transform at step " + std::to_string(next.step));
    return next;
}

long default_budget(const Hypersurface& X, const Arc& phi) { return 8 * X.multiplicity() * arc_order(phi); }

NashReport nash_sequence(const Hypersurface& X, const Arc& phi, const NashOptions& options) {
    DirectedBlowupState state = init_directed(X, phi);
    NashReport report;
    report.budget = options.max_steps.value_or(default_budget(X, phi));
    if (report.budget < 1) throw PreconditionError("step budget must be positive");
    report.sequence.push_back(state.multiplicity);

    const long m0 = state.multiplicity;
    const auto presentation = diff_saturate(X);
    if (ord_along_arc(presentation.algebra, phi).is_infinite()) {
        report.status = PersistanceStatus::Infinite;
        return report;
    }

    for (long i = 1; i <= report.budget; ++i) {
        state = blowup_step(state, options.tie_break, options.check_on_arc);
        report.sequence.push_back(state.multiplicity);
        report.trace.push_back({state.step, state.F.variables()[*state.chart], state.center, state.multiplicity});
        if (state.multiplicity < m0 && !report.rho) {
            report.rho = i;
            report.status = PersistanceStatus::Reached;
            if (!options.continue_after_drop) break;
        }
    }
    return report;
}

Order persistance(const Hypersurface& X, const Arc& phi, std::optional<long> budget) {
    NashOptions options;
    options.max_steps = budget;
    const NashReport report = nash_sequence(X, phi, options);
    switch (report.status) {
        case PersistanceStatus::Reached:
            return Order(*report.rho);
        case PersistanceStatus::Infinite:
            return Order::infinity();
        case PersistanceStatus::NotReached:
            break;
    }
    throw BudgetExhausted("multiplicity did not drop within " + std::to_string(report.budget) + " blow-ups");
}

}  // namespace arcinv

#include <doctest.h>

#include <algorithm>

#include "arcinv/datasets.hpp"
#include "arcinv/errors.hpp"
#include "arcinv/nash.hpp"
#include "arcinv/qpersistance.hpp"
#include "helpers.hpp"

using namespace arcinv;
using testing::arc_from;
using testing::poly;
using testing::q;
using testing::tpow;

TEST_SUITE("nash") {

TEST_CASE("cusp along its parametrization") {
    const NashReport r = nash_sequence(datasets::cusp(), arc_from({tpow(3), tpow(2)}));
    CHECK(r.sequence == std::vector<long>{2, 2, 2, 1});
    CHECK(r.status == PersistanceStatus::Reached);
    CHECK(r.rho == 3);
    REQUIRE(r.trace.size() == 3);
    for (const auto& t : r.trace) CHECK(t.chart == "s");
    CHECK(r.trace[1].center == std::vector<Rational>{Rational(0), Rational(1), Rational(0)});
}

TEST_CASE("node along a branch") {
    CHECK(persistance(datasets::node(), Arc({RationalFunctionT::t_power(1), RationalFunctionT()})) == Order(1));
}

TEST_CASE("toric surface corpus arcs") {
    CHECK(persistance(datasets::toric_surface(), arc_from({tpow(3), tpow(2), tpow(2)})) == Order(2));
    CHECK(persistance(datasets::toric_surface(), arc_from({tpow(6), tpow(6), tpow(5)})) == Order(6));
}

TEST_CASE("arcs inside the maximal multiplicity locus") {
    const Hypersurface W(poly({"x", "y", "z"}, {{{2, 0, 0}, Rational(1)}, {{0, 2, 1}, Rational(-1)}}));
    const Arc axis({RationalFunctionT(), RationalFunctionT(), RationalFunctionT::t_power(1)});
    CHECK(persistance(W, axis).is_infinite());
    CHECK(nash_sequence(W, axis).status == PersistanceStatus::Infinite);
}

TEST_CASE("budget exhaustion is reported, not guessed") {
    const Arc a = arc_from({tpow(6), tpow(6), tpow(5)});
    CHECK_THROWS_AS(persistance(datasets::toric_surface(), a, 3), BudgetExhausted);
    NashOptions o;
    o.max_steps = 3;
    const auto r = nash_sequence(datasets::toric_surface(), a, o);
    CHECK(r.status == PersistanceStatus::NotReached);
    CHECK(r.sequence.size() == 4);
    CHECK(default_budget(datasets::toric_surface(), a) == 8 * 5 * 5);
}

TEST_CASE("preconditions") {
    const Hypersurface smooth(poly({"x", "y"}, {{{1, 0}, Rational(1)}, {{0, 2}, Rational(1)}}));
    CHECK_THROWS_AS(init_directed(smooth, arc_from({tpow(2) * Rational(-1), tpow(1)})), PreconditionError);
    CHECK_THROWS_AS(init_directed(datasets::cusp(), arc_from({tpow(1), tpow(1)})), PreconditionError);
    CHECK_THROWS_AS(init_directed(datasets::cusp(), arc_from({tpow(1)})), PreconditionError);
    NashOptions o;
    o.max_steps = 0;
    CHECK_THROWS_AS(nash_sequence(datasets::cusp(), arc_from({tpow(3), tpow(2)}), o), PreconditionError);
}

TEST_CASE("the extra coordinate gets a fresh name") {
    const Hypersurface X(poly({"s", "y"}, {{{2, 0}, Rational(1)}, {{0, 3}, Rational(-1)}}));
    const auto st = init_directed(X, arc_from({tpow(3), tpow(2)}));
    CHECK(st.F.variables() == std::vector<std::string>{"s", "y", "s'"});
    CHECK(persistance(X, arc_from({tpow(3), tpow(2)})) == Order(3));
}

TEST_CASE("both tie-breaks give the same sequence") {
    const auto param = datasets::cusp_parametrization();
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const long orders[] = {2};
        const Arc a = sample_binomial_arc(param, orders, seed);
        NashOptions first, lowest;
        lowest.tie_break = ChartTieBreak::LowestIndex;
        lowest.check_on_arc = false;
        CHECK(nash_sequence(datasets::cusp(), a, first).sequence == nash_sequence(datasets::cusp(), a, lowest).sequence);
    }
    // The lowest-index rule leaves the s chart and still stays on the arc.
    NashOptions lowest;
    lowest.tie_break = ChartTieBreak::LowestIndex;
    const auto r = nash_sequence(datasets::cusp(), arc_from({tpow(3), tpow(2)}), lowest);
    CHECK(r.rho == 3);
    CHECK(std::any_of(r.trace.begin(), r.trace.end(), [](const NashTraceRecord& t) { return t.chart != "s"; }));
}

TEST_CASE("every step keeps the lifted arc on the strict transform") {
    auto st = init_directed(datasets::toric_surface(), arc_from({tpow(6), tpow(6), tpow(5)}));
    for (int i = 0; i < 8; ++i) {
        const long before = st.multiplicity;
        st = blowup_step(st);
        CHECK(compose(st.F, st.gamma.components()).is_zero());
        CHECK(st.multiplicity <= before);
        CHECK(order_at_origin(st.F) == Order(st.multiplicity));
    }
}

}

TEST_SUITE("qpersistance") {

TEST_CASE("divisorial arcs on the toric surface") {
    const auto X = datasets::toric_surface();
    const auto r10 = q_persistance(X, arc_from({tpow(3), tpow(2), tpow(2)}));
    CHECK(r10.r == q(2));
    CHECK(r10.nu == 2);
    CHECK(r10.r_bar == q(1));
    CHECK(r10.floor_r == Integer(2));
    const auto r11 = q_persistance(X, arc_from({tpow(6), tpow(6), tpow(5)}));
    CHECK(r11.r == q(6));
    CHECK(r11.nu == 5);
    CHECK(r11.r_bar == q(6, 5));
    CHECK(q_persistance(X, arc_from({tpow(6), tpow(6), tpow(5)}), datasets::toric_user_presentation()).r == q(6));
}

TEST_CASE("normalized values need not be integers") {
    // Cone with parameter orders (1, 2): x = t^2, y = t^4, z = t^3.
    const auto r = q_persistance(datasets::cone(), arc_from({tpow(2), tpow(4), tpow(3)}));
    CHECK(r.r == q(2));
    CHECK(r.r_bar == q(1));
    const auto cusp = q_persistance(datasets::cusp(), arc_from({tpow(9), tpow(6)}));
    CHECK(cusp.r == q(9));
    CHECK(cusp.r_bar == q(3, 2));
}

TEST_CASE("floor identity") {
    for (const auto& c : datasets::persistance_corpus()) {
        const auto rep = check_floor_identity(c.surface, c.arc);
        CHECK_MESSAGE(rep.verdict == Verdict::Pass, c.name);
    }
    const auto rep = check_floor_identity(datasets::toric_surface(), arc_from({tpow(6), tpow(6), tpow(5)}), 2);
    CHECK(rep.verdict == Verdict::Inconclusive);
    CHECK(!rep.rho);
}

TEST_CASE("limit identity rows") {
    const auto rep = check_limit_identity(datasets::cusp(), arc_from({tpow(3), tpow(2)}), 6);
    CHECK(rep.verdict == Verdict::Pass);
    REQUIRE(rep.rows.size() == 6);
    for (const auto& row : rep.rows) {
        CHECK(row.rho_n == 3 * row.n);
        CHECK(row.deviation == Rational(0));
    }
    CHECK_THROWS_AS(check_limit_identity(datasets::cusp(), arc_from({tpow(3), tpow(2)}), 0), PreconditionError);
    CHECK(std::string(to_string(Verdict::Inconclusive)) == "inconclusive");
}

}

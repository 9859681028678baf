#include <doctest.h>

#include <algorithm>
#include <random>

#include "arcinv/contact_resolution.hpp"
#include "arcinv/datasets.hpp"
#include "arcinv/errors.hpp"
#include "helpers.hpp"

using namespace arcinv;
using testing::q;

namespace {

/// Closed form for the toric surface: coordinate valuations 3a+3b, 2a+4b,
/// 2a+3b and presentation {x, y, z^6/5}.
Rational toric_rbar(long a, long b) {
    const long X = 3 * a + 3 * b, Y = 2 * a + 4 * b, Z = 2 * a + 3 * b;
    return std::min({Rational(X), Rational(Y), Rational(Integer(6 * Z), Integer(5))}) / Rational(Z);
}

/// Minimal valuation vectors over the full box, no staircase shortcut.
std::vector<MultiIndex> brute_components(const ResolutionData& R, long m, long bound) {
    std::vector<MultiIndex> all;
    for (long a = 0; a <= bound; ++a)
        for (long b = 0; b <= bound; ++b)
            if (2 * a + 3 * b >= m) all.push_back({a, b});
    std::vector<MultiIndex> out;
    for (const auto& l : all) {
        const auto v = valuation_of(R, l);
        bool minimal = true;
        for (const auto& o : all) {
            if (o == l) continue;
            const auto w = valuation_of(R, o);
            bool below = true;
            for (std::size_t j = 0; j < v.size(); ++j) below = below && w[j] <= v[j];
            if (below && (w != v || o < l)) minimal = false;
        }
        if (minimal) out.push_back(l);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("contact_resolution") {

TEST_CASE("toric data") {
    const ResolutionData R = datasets::toric_resolution();
    CHECK(hironaka_order(R) == q(1));
    const auto vb = values_bounds(R);
    CHECK(vb.lower == q(1));
    CHECK(vb.upper == q(6, 5));
    CHECK(R.support() == std::vector<std::size_t>{0, 1});
    CHECK(valuation_of(R, {1, 1}) == std::vector<long>{6, 6, 5});
}

TEST_CASE("rbar closed form") {
    const ResolutionData R = datasets::toric_resolution();
    for (long a = 0; a <= 12; ++a)
        for (long b = 0; b <= 12; ++b)
            if (a + b > 0) CHECK(rbar_of_multiindex(R, {a, b}) == ExtRational(toric_rbar(a, b)));
    CHECK(rbar_of_multiindex(R, {1, 1}) == q(6, 5));
    CHECK(rbar_of_multiindex(R, {1, 0}) == q(1));
    CHECK_THROWS_AS(rbar_of_multiindex(R, {0, 0}), PreconditionError);
    CHECK_THROWS_AS(rbar_of_multiindex(R, {1, 0, 0}), PreconditionError);
    CHECK_THROWS_AS(rbar_of_multiindex(R, {-1, 2}), PreconditionError);
}

TEST_CASE("fat components match the brute-force enumeration") {
    const ResolutionData R = datasets::toric_resolution();
    for (long m = 1; m <= 40; ++m) {
        const auto fc = fat_components(R, m, m + 1);
        CHECK_MESSAGE(fc.components == brute_components(R, m, m + 1), "m = " << m);
        CHECK(!fc.boundary_warning);
    }
}

TEST_CASE("known component lists") {
    const ResolutionData R = datasets::toric_resolution();
    CHECK(fat_components(R, 13, 40).components == std::vector<MultiIndex>{{2, 3}, {5, 1}});
    CHECK(delta(R, 13, 40) == q(14, 13));
    CHECK(fat_components(R, 11, 20).components == std::vector<MultiIndex>{{1, 3}, {4, 1}});
    CHECK(delta(R, 11, 20) == q(12, 11));
    CHECK(fat_components(R, 5, 5).components == std::vector<MultiIndex>{{1, 1}});
    CHECK(delta(R, 5, 5) == q(6, 5));
    CHECK(fat_components(R, 1, 1).components == std::vector<MultiIndex>{{1, 0}});
    for (long n = 1; n <= 10; ++n) {
        CHECK(delta(R, 2 * n, 2 * n) == q(1));
        CHECK(delta(R, 3 * n, 3 * n) == q(1));
    }
}

TEST_CASE("enumeration warnings and preconditions") {
    const ResolutionData R = datasets::toric_resolution();
    CHECK_THROWS_AS(fat_components(R, 10, 9), PreconditionError);
    CHECK_THROWS_AS(fat_components(R, 0, 5), PreconditionError);
    // (m, 0)-type candidates sit on the boundary when the bound is tight.
    ResolutionData line = ResolutionData::almost_rees({1}, {1}, 1);
    CHECK(fat_components(line, 4, 4).boundary_warning);
    const auto fc = fat_components(ResolutionData::almost_rees({1, 3}, {1, 1}, 1), 2, 6);
    CHECK(fc.components == std::vector<MultiIndex>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("incompatible divisors are skipped") {
    ResolutionData R = ResolutionData::almost_rees({1, 2}, {1, 1}, 1);
    R.incompatible.push_back({0, 1});
    R.validate();
    const auto fc = fat_components(R, 3, 6);
    CHECK(fc.components == std::vector<MultiIndex>{{0, 3}, {3, 0}});
}

TEST_CASE("validation") {
    ResolutionData R = datasets::toric_resolution();
    R.c = {2};
    CHECK_THROWS_AS(R.validate(), PreconditionError);
    R = datasets::toric_resolution();
    R.gens[0].weight = 0;
    CHECK_THROWS_AS(R.validate(), PreconditionError);
    R = datasets::toric_resolution();
    R.c = {-1, 3};
    CHECK_THROWS_AS(R.validate(), PreconditionError);
    // Every divisor over the point must carry some generator.
    CHECK_THROWS_AS(ResolutionData::almost_rees({0, 1}, {1, 1}, 1).validate(), PreconditionError);
    CHECK_THROWS_AS(ResolutionData::almost_rees({1}, {1}, 0), PreconditionError);
}

TEST_CASE("almost-Rees bounds are the extreme ratios") {
    const auto R = ResolutionData::almost_rees({1, 3}, {1, 1}, 1);
    const auto vb = values_bounds(R);
    CHECK(vb.lower == q(1));
    CHECK(vb.upper == q(3));
    const auto R2 = ResolutionData::almost_rees({4, 9}, {2, 3}, 2);
    CHECK(values_bounds(R2).lower == q(1));
    CHECK(values_bounds(R2).upper == q(3, 2));
    CHECK(hironaka_order(R2) == q(1));
}

TEST_CASE("random multi-indices stay in range") {
    std::mt19937_64 rng(5);
    const auto R = datasets::toric_resolution();
    const auto vb = values_bounds(R);
    for (int i = 0; i < 300; ++i) {
        const MultiIndex l{static_cast<long>(rng() % 40), 1 + static_cast<long>(rng() % 40)};
        const auto v = rbar_of_multiindex(R, l);
        CHECK(vb.lower <= v);
        CHECK(v <= vb.upper);
    }
}

TEST_CASE("sampled extrema") {
    const auto ex = sample_rbar_extrema(datasets::toric_resolution(), 8);
    CHECK(ex.max_value == q(6, 5));
    CHECK(ex.argmax == MultiIndex{1, 1});
    CHECK(ex.min_value == q(1));
    CHECK(ex.min_attains_lower);
    CHECK(ex.max_attains_upper);
    CHECK(ex.samples == 80);
}

TEST_CASE("delta stays in its band") {
    const auto rep = delta_limit_check(datasets::toric_resolution(), 30, 34);
    CHECK(rep.pass);
    CHECK(rep.c_max == 3);
    for (const auto& row : rep.rows) {
        CHECK(rep.ord <= row.delta);
        CHECK(row.delta <= row.upper);
    }
    CHECK(rep.rows[12].delta == q(14, 13));
}

TEST_CASE("domination") {
    const auto R = datasets::toric_resolution();
    CHECK(dominates(R, {2, 2}, {1, 1}));
    CHECK(!dominates(R, {1, 1}, {2, 2}));
    CHECK(dominates(R, {1, 1}, {1, 1}));
    CHECK(!dominates(R, {5, 1}, {2, 3}));
    CHECK(!dominates(R, {2, 3}, {5, 1}));
    ResolutionData no_val = R;
    no_val.coord_val.reset();
    CHECK_THROWS_AS(dominates(no_val, {1, 1}, {1, 1}), PreconditionError);
}

}

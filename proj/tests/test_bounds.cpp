#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mono/bounds.hpp"

using namespace mono;

namespace {

MultidegreeVector dvec(std::initializer_list<long> vals) {
    MultidegreeVector v;
    for (long x : vals) v.values.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("check_log_concavity") {
    CHECK(check_log_concavity(dvec({1, 2, 3, 1})));
    CHECK(check_log_concavity(dvec({1, 2, 1})));
    CHECK(check_log_concavity(dvec({1, 3, 9})));
    CHECK(!check_log_concavity(dvec({1, 1, 5, 1})));
}

TEST_CASE("check_prop3") {
    // n = 3, d = 2, deg = 1: c = 2, instances i = 2, 3
    Prop3Result r = check_prop3(dvec({1, 2, 3, 1}), 2, 1);
    CHECK(r.applicable);
    CHECK(r.holds);
    REQUIRE(r.details.size() == 2);
    CHECK(r.details[0].lhs == "12");
    CHECK(r.details[0].rhs == "12");  // equality at i = 2
    CHECK(r.details[1].lhs == "16");
    CHECK(r.details[1].rhs == "72");

    CHECK(!check_prop3(dvec({1, 2, 4}), 2, 4).applicable);  // d divides deg
    CHECK(!check_prop3(dvec({1, 1, 1}), 1, 1).applicable);  // d = 1
}

TEST_CASE("check_segre_relations") {
    MonomialMap cremona = test::map({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    SegreResult r = check_segre_relations(multidegree(cremona),
                                          indeterminacy(cremona), 2);
    CHECK(r.segreExact);    // d_0 = 1, d_1 = 2
    CHECK(r.segreTopBound); // d_2 = 1 <= 2^2 - 3

    MonomialMap powers = test::map({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}});
    SegreResult m = check_segre_relations(multidegree(powers),
                                          indeterminacy(powers), 3);
    CHECK(m.segreExact);    // morphism: d_i = d^i throughout
    CHECK(m.segreTopBound); // vacuous
}

TEST_CASE("check_birational_bounds") {
    BirationalBounds f32 = check_birational_bounds(dvec({1, 2, 3, 1}), 2);
    CHECK(f32.withinGeneralBound);  // 3 <= 4
    CHECK(f32.bound4Applicable);
    CHECK(f32.withinBound4);  // equality: 12 <= 12
    CHECK(f32.details[1].lhs == f32.details[1].rhs);

    BirationalBounds f43 = check_birational_bounds(multidegree(gen_fnd(4, 3)), 3);
    CHECK(f43.withinGeneralBound);  // 15 <= 27
    CHECK(f43.withinBound4);

    CHECK_THROWS_AS(check_birational_bounds(dvec({1, 3, 9}), 3), DomainError);
}

TEST_CASE("bounds_report on known maps") {
    BoundsReport r = bounds_report(gen_fnd(3, 2));
    CHECK(r.n == 3);
    CHECK(r.d == 2);
    CHECK(r.deg == 1);
    CHECK(r.c == 2);
    CHECK(r.codim == 2);
    CHECK(r.multidegrees.values == std::vector<Int>{1, 2, 3, 1});
    CHECK(r.logConcave);
    CHECK(r.segreExact);
    CHECK(r.segreTopBound);
    CHECK(r.prop3Applicable);
    CHECK(r.prop3Holds);
    CHECK(r.birational);
    CHECK(r.withinGeneralBound);
    CHECK(r.withinBound4);

    BoundsReport id = bounds_report(validate(IntMatrix::identity(4)));
    CHECK(id.codim == -1);
    CHECK(id.logConcave);
    CHECK(id.segreExact);
    CHECK(!id.prop3Applicable);  // d = 1
    CHECK(id.birational);

    BoundsReport pw = bounds_report(test::map({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
    CHECK(!pw.prop3Applicable);  // 2 divides 4
    CHECK(pw.segreExact);
    CHECK(!pw.birational);
}

TEST_CASE("bounds_report rejects bad input") {
    CHECK_THROWS_AS(bounds_report(test::map({{2, 0}, {1, 1}})), DomainError);
    MonomialMap nondominant = test::map({{1, 0, 0}, {0, 1, 0}, {1, 0, 0}});
    CHECK_THROWS_AS(bounds_report(nondominant), DomainError);
}

TEST_CASE("every inequality holds on random maps") {
    std::mt19937 rng(301);
    int tested = 0;
    for (int trial = 0; trial < 1500 && tested < 150; ++trial) {
        MonomialMap raw = test::random_map(rng, 2 + trial % 2, 1 + trial % 3, 3);
        if (map_degree(raw) == 0) continue;
        ++tested;
        BoundsReport r = bounds_report(normalize(raw));
        CHECK(r.logConcave);
        CHECK(r.segreExact);
        CHECK(r.segreTopBound);
        if (r.prop3Applicable) CHECK(r.prop3Holds);
        if (r.birational) {
            CHECK(r.withinGeneralBound);
            if (r.bound4Applicable) CHECK(r.withinBound4);
        }
        for (const CheckDetail& d : r.details) CHECK(d.holds);
    }
    CHECK(tested == 150);
}

TEST_CASE("bounds hold across the birational families") {
    for (std::size_t n = 2; n <= 4; ++n)
        for (long d = 2; d <= 3; ++d) {
            BoundsReport r = bounds_report(normalize(gen_fnd(n, d)));
            CHECK(r.birational);
            CHECK(r.logConcave);
            CHECK(r.withinGeneralBound);
            if (r.bound4Applicable) CHECK(r.withinBound4);
        }
    BoundsReport r = bounds_report(gen_family_one(4, 3));
    CHECK(r.birational);
    CHECK(r.withinGeneralBound);
    CHECK(r.withinBound4);
}

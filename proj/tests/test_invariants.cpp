#include "critmon/invariants.hpp"
#include "critmon/numsgp.hpp"
#include "critmon/random_instance.hpp"

#include <catch2/catch_amalgamated.hpp>

using critmon::Int;
using critmon::NorthcottExponents;

namespace {

NorthcottExponents make(int n, std::vector<long> diag, std::vector<long> xn,
                        std::vector<long> mvec) {
    NorthcottExponents e;
    e.n = n;
    e.diag = std::move(diag);
    e.xn = std::move(xn);
    e.mvec = std::move(mvec);
    return e;
}

const NorthcottExponents kSmall3 = make(3, {1, 1}, {2, 1}, {1, 1});
const NorthcottExponents kBig5 = make(5, {1, 2, 3, 4}, {5, 2, 3, 4}, {1, 1, 1, 1});
const NorthcottExponents kMixed4 = make(4, {2, 2, 4}, {1, 2, 1}, {1, 2, 1});
const NorthcottExponents kOnes3 = make(3, {1, 1}, {1, 1}, {1, 1});

std::vector<long> to_longs(const std::vector<Int>& v) {
    std::vector<long> r;
    for (const Int& x : v) r.push_back(x.get_si());
    return r;
}

}  // namespace

TEST_CASE("Apery set of the smallest instance") {
    const critmon::MonoidPresentation p = monoid_presentation(kSmall3);
    REQUIRE(apery_closed(kSmall3, p) == std::vector<Int>{0, 4, 5});
}

TEST_CASE("full invariant report of the smallest instance") {
    const critmon::MonoidPresentation p = monoid_presentation(kSmall3);
    const critmon::InvariantReport r = invariant_report(kSmall3, p);
    REQUIRE(r.relation_constant == 9);
    REQUIRE(r.pseudo_frobenius == std::vector<Int>{1, 2});
    REQUIRE(r.frobenius == 2);
    REQUIRE(r.type == 2);
    REQUIRE(r.genus == 2);
    REQUIRE(r.delta_min);
    REQUIRE(*r.delta_min == 1);
    REQUIRE(*r.delta_max == 1);
    REQUIRE(r.catenary == 3);
    REQUIRE(r.wilf_margin == 0);
}

TEST_CASE("full invariant report of the 5-variable instance") {
    const critmon::MonoidPresentation p = monoid_presentation(kBig5);
    const critmon::InvariantReport r = invariant_report(kBig5, p);
    REQUIRE(r.apery.size() == 119);
    REQUIRE(r.apery.front() == 0);
    REQUIRE(r.apery.back() == 1543);
    REQUIRE(r.relation_constant == 1666);
    REQUIRE(r.pseudo_frobenius == std::vector<Int>{1188, 1348, 1408, 1424});
    REQUIRE(r.frobenius == 1424);
    REQUIRE(r.type == 4);
    REQUIRE(r.genus == 767);
    REQUIRE(*r.delta_min == 4);
    REQUIRE(*r.delta_max == 4);
    REQUIRE(r.catenary == 14);
    REQUIRE(r.wilf_margin == 1865);
}

TEST_CASE("closed invariants reject non-numerical instances") {
    const critmon::MonoidPresentation p = monoid_presentation(kMixed4);
    REQUIRE_THROWS_AS(apery_closed(kMixed4, p), std::invalid_argument);
    REQUIRE_THROWS_AS(invariants_closed(kMixed4, p), std::invalid_argument);
}

TEST_CASE("factorization data applies to any instance") {
    const critmon::FactorizationClosed fc = factorization_closed(kMixed4);
    REQUIRE(fc.gaps == std::vector<long>{1, 1, 2, 4});
    REQUIRE(*fc.delta_min == 1);
    REQUIRE(*fc.delta_max == 4);
    REQUIRE(fc.catenary == 8);
}

TEST_CASE("half-factorial instance has no length gaps") {
    const critmon::FactorizationClosed fc = factorization_closed(kOnes3);
    REQUIRE(fc.gaps == std::vector<long>{0, 0, 0});
    REQUIRE_FALSE(fc.delta_min);
    REQUIRE_FALSE(fc.delta_max);
    REQUIRE(fc.catenary == 2);
}

TEST_CASE("closed invariants match the enumeration oracle") {
    critmon::InstanceSampler sampler(43);
    for (int t = 0; t < 25; ++t) {
        const NorthcottExponents e =
            sampler.sample_numerical(3 + t % 4, 3, /*all_ones_mvec=*/false, /*max_an=*/800);
        const critmon::MonoidPresentation p = monoid_presentation(e);
        const critmon::InvariantReport r = invariant_report(e, p);
        const critmon::numsgp::NumericalSemigroup s(to_longs(p.weight));
        const critmon::numsgp::Invariants oracle = critmon::numsgp::basic_invariants(s);
        REQUIRE(to_longs(r.apery) == s.apery(p.weight.back().get_si()));
        REQUIRE(r.frobenius == oracle.frobenius);
        REQUIRE(to_longs(r.pseudo_frobenius) == oracle.pseudo_frobenius);
        REQUIRE(r.type == oracle.type);
        REQUIRE(r.genus == oracle.genus);
        REQUIRE(r.genus == s.genus());
    }
}

TEST_CASE("factorization data matches the factorization oracle") {
    critmon::InstanceSampler sampler(47);
    for (int t = 0; t < 15; ++t) {
        const NorthcottExponents e =
            sampler.sample_numerical(3 + t % 3, 3, /*all_ones_mvec=*/false, /*max_an=*/400);
        const critmon::MonoidPresentation p = monoid_presentation(e);
        const critmon::FactorizationClosed fc = factorization_closed(e);
        const critmon::numsgp::NumericalSemigroup s(to_longs(p.weight));
        const critmon::numsgp::DeltaCatenary dc = critmon::numsgp::delta_and_catenary(s);
        REQUIRE(fc.delta_min == dc.delta_min);
        REQUIRE(fc.delta_max == dc.delta_max);
        REQUIRE(fc.catenary == dc.catenary);
    }
}

TEST_CASE("wilf margin is nonnegative for all-ones instances") {
    critmon::InstanceSampler sampler(53);
    for (int t = 0; t < 30; ++t) {
        const NorthcottExponents e = sampler.sample_numerical(4 + t % 3, 4, /*all_ones_mvec=*/true);
        const critmon::MonoidPresentation p = monoid_presentation(e);
        REQUIRE(wilf_margin(e, p) >= 0);
    }
}

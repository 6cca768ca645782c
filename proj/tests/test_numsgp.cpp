#include "critmon/numsgp.hpp"
#include "critmon/random_instance.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

namespace ns = critmon::numsgp;
using ns::NumericalSemigroup;

TEST_CASE("construction validates the generator list") {
    REQUIRE_THROWS_AS(NumericalSemigroup({}), std::invalid_argument);
    REQUIRE_THROWS_AS(NumericalSemigroup({0, 3}), std::invalid_argument);
    REQUIRE_THROWS_AS(NumericalSemigroup({4, 6}), std::invalid_argument);
    REQUIRE_NOTHROW(NumericalSemigroup({4, 6, 9}));
}

TEST_CASE("membership and frobenius of <3,5,7>") {
    const NumericalSemigroup s({3, 5, 7});
    REQUIRE(s.frobenius() == 4);
    REQUIRE(s.contains(0));
    REQUIRE_FALSE(s.contains(1));
    REQUIRE_FALSE(s.contains(2));
    REQUIRE(s.contains(3));
    REQUIRE_FALSE(s.contains(4));
    for (long v = 5; v < 100; ++v) REQUIRE(s.contains(v));
    REQUIRE_FALSE(s.contains(-3));
}

TEST_CASE("membership agrees with direct bounded search") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        std::set<long> gset;
        while (gset.size() < 3) gset.insert(2 + static_cast<long>(rng() % 30));
        std::vector<long> gens(gset.begin(), gset.end());
        long g = 0;
        for (long v : gens) g = std::gcd(g, v);
        if (g != 1) continue;
        const NumericalSemigroup s(gens);
        // direct: all sums c1 g1 + c2 g2 + c3 g3 up to the bound
        const long bound = s.frobenius() + 2 * gens.back() + 5;
        std::vector<bool> direct(static_cast<std::size_t>(bound + 1), false);
        for (long c1 = 0; c1 * gens[0] <= bound; ++c1)
            for (long c2 = 0; c1 * gens[0] + c2 * gens[1] <= bound; ++c2)
                for (long c3 = 0; c1 * gens[0] + c2 * gens[1] + c3 * gens[2] <= bound; ++c3)
                    direct[static_cast<std::size_t>(c1 * gens[0] + c2 * gens[1] + c3 * gens[2])] =
                        true;
        for (long v = 0; v <= bound; ++v) REQUIRE(s.contains(v) == direct[static_cast<std::size_t>(v)]);
    }
}

TEST_CASE("minimal generators are extracted") {
    REQUIRE(NumericalSemigroup({3, 4, 5, 7, 8}).minimal_generators() ==
            std::vector<long>{3, 4, 5});
    REQUIRE(NumericalSemigroup({6, 10, 14, 21}).minimal_generators() ==
            std::vector<long>{6, 10, 14, 21});
    REQUIRE(NumericalSemigroup({1, 5}).minimal_generators() == std::vector<long>{1});
}

TEST_CASE("apery sets") {
    const NumericalSemigroup s({3, 4, 5});
    REQUIRE(s.apery(3) == std::vector<long>{0, 4, 5});
    REQUIRE(s.apery(4) == std::vector<long>{0, 3, 5, 6});
    // non-member argument falls back to the literal definition
    REQUIRE(s.apery(1) == std::vector<long>{0, 3});
    REQUIRE(s.apery(2) == std::vector<long>{0, 3, 4});
    REQUIRE_THROWS_AS(s.apery(0), std::invalid_argument);
}

TEST_CASE("basic invariants of small fixtures") {
    const ns::Invariants i345 = ns::basic_invariants(NumericalSemigroup({3, 4, 5}));
    REQUIRE(i345.frobenius == 2);
    REQUIRE(i345.genus == 2);
    REQUIRE(i345.pseudo_frobenius == std::vector<long>{1, 2});
    REQUIRE(i345.type == 2);

    const ns::Invariants i23 = ns::basic_invariants(NumericalSemigroup({2, 3}));
    REQUIRE(i23.frobenius == 1);
    REQUIRE(i23.genus == 1);
    REQUIRE(i23.pseudo_frobenius == std::vector<long>{1});

    const ns::Invariants itriv = ns::basic_invariants(NumericalSemigroup({1}));
    REQUIRE(itriv.frobenius == -1);
    REQUIRE(itriv.genus == 0);
    REQUIRE(itriv.pseudo_frobenius == std::vector<long>{-1});
}

TEST_CASE("genus equals the direct gap count") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        std::set<long> gset;
        while (gset.size() < 3) gset.insert(2 + static_cast<long>(rng() % 40));
        std::vector<long> gens(gset.begin(), gset.end());
        long g = 0;
        for (long v : gens) g = std::gcd(g, v);
        if (g != 1) continue;
        const NumericalSemigroup s(gens);
        REQUIRE(ns::basic_invariants(s).genus == s.genus());
    }
}

TEST_CASE("factorizations of 21 in <3,5,7>") {
    const NumericalSemigroup s({3, 5, 7});
    const ns::FactorizationSet fs = ns::factorizations(s, 21);
    const std::vector<ns::Factorization> expected = {
        {0, 0, 3}, {2, 3, 0}, {3, 1, 1}, {7, 0, 0}};
    REQUIRE(fs.factorizations == expected);
    REQUIRE_THROWS_AS(ns::factorizations(s, 4), std::invalid_argument);
}

TEST_CASE("betti elements and presentation of <3,4,5>") {
    const ns::Presentation p = ns::betti_and_presentation(NumericalSemigroup({3, 4, 5}));
    REQUIRE(p.betti_elements == std::vector<long>{8, 9, 10});
    REQUIRE(p.relations.size() == 3);
    REQUIRE(p.uniquely_presented);  // every Betti element has exactly two factorizations
}

TEST_CASE("betti elements and presentation of <2,3>") {
    const ns::Presentation p = ns::betti_and_presentation(NumericalSemigroup({2, 3}));
    REQUIRE(p.betti_elements == std::vector<long>{6});
    REQUIRE(p.relations.size() == 1);
    REQUIRE(p.uniquely_presented);
    const auto& [deg, pair] = p.relations.front();
    REQUIRE(deg == 6);
    REQUIRE(pair.first == ns::Factorization{0, 2});
    REQUIRE(pair.second == ns::Factorization{3, 0});
}

TEST_CASE("minimal presentation of <11,13,14,15,19>") {
    const NumericalSemigroup s({11, 13, 14, 15, 19});
    const ns::Presentation p = ns::betti_and_presentation(s);
    REQUIRE(p.betti_elements == std::vector<long>{26, 28, 30, 33, 38});
    REQUIRE(p.relations.size() == 5);
    REQUIRE(p.uniquely_presented);
    for (long b : p.betti_elements)
        REQUIRE(ns::factorizations(s, b).factorizations.size() == 2);
}

TEST_CASE("relations vanish on the generator weights") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 15; ++t) {
        std::set<long> gset;
        while (gset.size() < 4) gset.insert(2 + static_cast<long>(rng() % 35));
        std::vector<long> gens(gset.begin(), gset.end());
        long g = 0;
        for (long v : gens) g = std::gcd(g, v);
        if (g != 1) continue;
        const NumericalSemigroup s(gens);
        const auto& mg = s.minimal_generators();
        for (const auto& [deg, pair] : ns::betti_and_presentation(s).relations) {
            long lhs = 0, rhs = 0;
            for (std::size_t i = 0; i < mg.size(); ++i) {
                lhs += pair.first[i] * mg[i];
                rhs += pair.second[i] * mg[i];
            }
            REQUIRE(lhs == deg);
            REQUIRE(rhs == deg);
        }
    }
}

TEST_CASE("delta and catenary fixtures") {
    const ns::DeltaCatenary d23 = ns::delta_and_catenary(NumericalSemigroup({2, 3}));
    REQUIRE(*d23.delta_min == 1);
    REQUIRE(*d23.delta_max == 1);
    REQUIRE(d23.catenary == 3);

    const ns::DeltaCatenary d345 = ns::delta_and_catenary(NumericalSemigroup({3, 4, 5}));
    REQUIRE(d345.catenary == 3);

    // arithmetic sequence <4,6,9>: half-factorial? no, but gaps of 1 appear
    const ns::DeltaCatenary d469 = ns::delta_and_catenary(NumericalSemigroup({4, 6, 9}));
    REQUIRE(*d469.delta_min == 1);
}

TEST_CASE("gluing of <3,5,7> and N at 2 and 21") {
    const ns::GluingResult g =
        ns::glue(NumericalSemigroup({3, 5, 7}), NumericalSemigroup({1}), 2, 21);
    REQUIRE(g.semigroup.minimal_generators() == std::vector<long>{6, 10, 14, 21});
    REQUIRE(g.degree == 42);
    const ns::Presentation p = ns::betti_and_presentation(g.semigroup);
    REQUIRE_FALSE(p.uniquely_presented);

    const auto decs = ns::detect_gluing(g.semigroup);
    bool found = false;
    for (const auto& d : decs)
        if (d.part1 == std::vector<long>{6, 10, 14} && d.part2 == std::vector<long>{21})
            found = true;
    REQUIRE(found);
}

TEST_CASE("gluing rejects bad parameters") {
    const NumericalSemigroup s1({3, 5, 7}), s2({2, 3});
    // lambda must be a non-generator member of S2
    REQUIRE_THROWS_AS(ns::glue(s1, s2, 1, 8), std::invalid_argument);
    REQUIRE_THROWS_AS(ns::glue(s1, s2, 2, 8), std::invalid_argument);
    // mu must be a non-generator member of S1
    REQUIRE_THROWS_AS(ns::glue(s1, s2, 4, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(ns::glue(s1, s2, 4, 4), std::invalid_argument);
    // coprimality
    REQUIRE_THROWS_AS(ns::glue(s1, s2, 4, 8), std::invalid_argument);
    REQUIRE_NOTHROW(ns::glue(s1, s2, 5, 8));
}

TEST_CASE("gluing detection on <2,3>") {
    const auto decs = ns::detect_gluing(NumericalSemigroup({2, 3}));
    REQUIRE(decs.size() == 1);
    REQUIRE(decs.front().part1 == std::vector<long>{2});
    REQUIRE(decs.front().part2 == std::vector<long>{3});
}

TEST_CASE("critical exponents") {
    REQUIRE(ns::critical_exponents(NumericalSemigroup({3, 4, 5})) ==
            std::vector<long>{3, 2, 2});
    REQUIRE(ns::critical_exponents(NumericalSemigroup({2, 3})) == std::vector<long>{3, 2});
    REQUIRE(ns::critical_exponents(NumericalSemigroup({11, 13, 14, 15, 19})) ==
            std::vector<long>{3, 2, 2, 2, 2});
    REQUIRE_THROWS_AS(ns::critical_exponents(NumericalSemigroup({1})), std::invalid_argument);
}

TEST_CASE("criticality fixtures") {
    REQUIRE(ns::is_critical(NumericalSemigroup({3, 4, 5})) == ns::Criticality::Yes);
    REQUIRE(ns::is_critical(NumericalSemigroup({2, 3})) == ns::Criticality::Yes);
    REQUIRE(ns::is_critical(NumericalSemigroup({1})) == ns::Criticality::Yes);
    // complete intersection built by gluing: generated by critical binomials
    REQUIRE(ns::is_critical(NumericalSemigroup({6, 10, 14, 21})) == ns::Criticality::Yes);
    REQUIRE(ns::is_critical(NumericalSemigroup({11, 13, 14, 15, 19})) == ns::Criticality::Yes);
}

TEST_CASE("glued semigroups of complete intersections stay critical") {
    // iterated gluings of copies of N produce complete intersections, whose
    // defining ideals are generated by critical binomials
    const ns::GluingResult g1 =
        ns::glue(NumericalSemigroup({2, 3}), NumericalSemigroup({1}), 2, 5);
    REQUIRE(ns::is_critical(g1.semigroup) == ns::Criticality::Yes);
}

#include <catch_amalgamated.hpp>

#include <random>

#include "test_util.hpp"

using namespace evb;
using namespace evbtest;

TEST_CASE("closure of the S3 generators") {
    auto G = group_from_generators(3, {Permutation({1, 2, 0}), Permutation({1, 0, 2})});
    REQUIRE(G->order() == 6);
    REQUIRE(G->class_count() == 3);
    REQUIRE(sorted_class_sizes(*G) == std::vector<int>{1, 2, 3});
    REQUIRE(G->exponent() == 6);
}

TEST_CASE("trivial group from an empty generator list") {
    auto G = group_from_generators(1, {});
    REQUIRE(G->order() == 1);
    REQUIRE(G->class_count() == 1);
    REQUIRE(G->element_order(0) == 1);
}

TEST_CASE("the quaternion group via its regular representation") {
    auto G = quaternion_group(2);
    REQUIRE(G->degree() == 8);
    REQUIRE(G->order() == 8);
    REQUIRE(sorted_class_sizes(*G) == std::vector<int>{1, 1, 2, 2, 2});
    REQUIRE(G->exponent() == 4);
}

TEST_CASE("invalid generators are rejected with their position") {
    REQUIRE_THROWS_WITH(group_from_generators(3, {Permutation({0, 0, 2})}),
                        Catch::Matchers::ContainsSubstring("generator 1"));
    REQUIRE_THROWS_WITH(
        group_from_generators(3, {Permutation({1, 0, 2}), Permutation({2, 2, 1})}),
        Catch::Matchers::ContainsSubstring("generator 2"));
}

TEST_CASE("closure cap rejects groups above 4096 elements") {
    // S7 has order 5040
    Permutation cyc({1, 2, 3, 4, 5, 6, 0});
    Permutation swap({1, 0, 2, 3, 4, 5, 6});
    REQUIRE_THROWS_AS(group_from_generators(7, {cyc, swap}), input_error);
}

TEST_CASE("identity sits at index zero and tables are consistent") {
    for (auto G : {dihedral_group(4), quaternion_group(2), alternating_4()}) {
        REQUIRE(G->element(0) == Permutation::identity(G->degree()));
        for (int i = 0; i < G->order(); ++i) {
            REQUIRE(G->mul(i, G->inv(i)) == 0);
            REQUIRE(G->mul(0, i) == i);
            REQUIRE(G->mul(i, 0) == i);
        }
        // associativity spot check on random triples
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> pick(0, G->order() - 1);
        for (int t = 0; t < 64; ++t) {
            const int a = pick(rng), b = pick(rng), c = pick(rng);
            REQUIRE(G->mul(G->mul(a, b), c) == G->mul(a, G->mul(b, c)));
        }
    }
}

TEST_CASE("class partition invariants on the built-in suite") {
    for (const auto& ng : builtin_groups(false)) {
        const auto& G = *ng.group;
        int total = 0;
        for (int c = 0; c < G.class_count(); ++c) {
            total += G.class_size(c);
            for (int x : G.class_members(c)) REQUIRE(G.class_of(x) == c);
        }
        REQUIRE(total == G.order());
        REQUIRE(G.order() % G.exponent() == 0);
        // representatives pairwise non-conjugate, by brute conjugation
        for (int c = 0; c < G.class_count(); ++c) {
            for (int d = c + 1; d < G.class_count(); ++d) {
                bool conjugate = false;
                for (int g = 0; g < G.order(); ++g)
                    if (G.conjugate(g, G.class_rep(c)) == G.class_rep(d)) conjugate = true;
                REQUIRE_FALSE(conjugate);
            }
        }
    }
}

TEST_CASE("subgroup generated by a three-cycle in S3") {
    auto G = group_from_generators(3, {Permutation({1, 2, 0}), Permutation({1, 0, 2})});
    int three_cycle = -1;
    for (int i = 0; i < 6; ++i)
        if (G->element_order(i) == 3) { three_cycle = i; break; }
    auto S = subgroup_generated(G, {three_cycle});
    REQUIRE(S.order() == 3);
    const auto props = subgroup_props(*G, S);
    REQUIRE(props.normal);
    REQUIRE(props.index == 2);

    auto T = subgroup_generated(G, {});
    REQUIRE(T.order() == 1);

    int transposition = -1;
    for (int i = 0; i < 6; ++i)
        if (G->element_order(i) == 2) { transposition = i; break; }
    auto U = subgroup_generated(G, {transposition});
    const auto uprops = subgroup_props(*G, U);
    REQUIRE_FALSE(uprops.normal);
    REQUIRE(uprops.index == 3);
    REQUIRE(uprops.coset_reps.size() == 3);
    REQUIRE(uprops.coset_reps[0] == 0);
}

TEST_CASE("cyclic subgroup of the quaternion group") {
    auto G = quaternion_group(2);
    int j = -1;
    for (int i = 0; i < 8; ++i)
        if (G->element_order(i) == 4) { j = i; break; }
    auto S = subgroup_generated(G, {j});
    REQUIRE(S.order() == 4);
    REQUIRE(subgroup_props(*G, S).normal);
}

TEST_CASE("whole group as its own subgroup") {
    auto G = dihedral_group(3);
    auto S = whole_group(G);
    const auto props = subgroup_props(*G, S);
    REQUIRE(props.normal);
    REQUIRE(props.index == 1);
}

TEST_CASE("subgroup generation is idempotent") {
    for (const auto& ng : builtin_groups(false)) {
        if (ng.group->order() > 24) continue;
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> pick(0, ng.group->order() - 1);
        for (int t = 0; t < 4; ++t) {
            auto S = subgroup_generated(ng.group, {pick(rng), pick(rng)});
            auto S2 = subgroup_generated(ng.group, S.members);
            REQUIRE(S.members == S2.members);
        }
    }
}

TEST_CASE("power map on classes") {
    auto G = group_from_generators(3, {Permutation({1, 2, 0}), Permutation({1, 0, 2})});
    const auto id_map = G->power_class_map(1);
    for (int c = 0; c < G->class_count(); ++c) REQUIRE(id_map[c] == c);

    const auto sq = G->power_class_map(2);
    const int transp = class_with(*G, 2);
    const int threec = class_with(*G, 3);
    REQUIRE(sq[transp] == class_with(*G, 1));
    REQUIRE(sq[threec] == threec);

    auto Q = quaternion_group(2);
    const auto qsq = Q->power_class_map(2);
    const int center = class_with(*Q, 2); // the class of -1
    for (int c = 0; c < Q->class_count(); ++c)
        if (Q->element_order(Q->class_rep(c)) == 4) REQUIRE(qsq[c] == center);
}

TEST_CASE("power map composes on random samples") {
    std::mt19937 rng(23);
    for (auto G : {dihedral_group(6), quaternion_group(2), symmetric_4()}) {
        std::uniform_int_distribution<int> pick(0, G->order() - 1);
        std::uniform_int_distribution<int> tpick(-5, 9);
        for (int trial = 0; trial < 32; ++trial) {
            const int g = pick(rng);
            const int s = tpick(rng), t = tpick(rng);
            const int c = G->class_of(g);
            const auto ms = G->power_class_map(s);
            const auto mt = G->power_class_map(t);
            REQUIRE(mt[ms[c]] == G->class_of(G->power(g, static_cast<i64>(s) * t)));
        }
    }
}

TEST_CASE("subgroup element ordering is stable across incarnations") {
    auto G = quaternion_group(2);
    auto S = subgroup_generated(G, {G->generators()[1]}); // <j>, order 4
    // same subset reached through a different parent: the whole group
    auto W = whole_group(G);
    std::vector<int> members_in_w;
    for (int m : S.members) members_in_w.push_back(W.from_parent[m]);
    auto S2 = subgroup_from_members(W.own, members_in_w);
    REQUIRE(same_group(S.own, S2.own));
    REQUIRE(S.own->class_count() == S2.own->class_count());
    for (int c = 0; c < S.own->class_count(); ++c)
        REQUIRE(S.own->class_members(c) == S2.own->class_members(c));
}

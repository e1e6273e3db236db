#include <catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace evb;
using namespace evbtest;

namespace {

GroupPtr make_s3() {
    return group_from_generators(3, {Permutation({1, 2, 0}), Permutation({1, 0, 2})});
}

std::vector<int> degrees(const CharacterTable& T) {
    std::vector<int> d;
    for (const auto& ch : T.chars) d.push_back(ch.degree);
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

TEST_CASE("trivial group has one character of degree one") {
    const auto T = character_table(cyclic_group(1));
    REQUIRE(T.chars.size() == 1);
    REQUIRE(T.chars[0].degree == 1);
    REQUIRE(T.chars[0].fs == 1);
}

TEST_CASE("S3 character table") {
    auto G = make_s3();
    const auto T = character_table(G);
    REQUIRE(degrees(T) == std::vector<int>{1, 1, 2});
    // the 2-dimensional character takes values 2, 0, -1 on e, transpositions,
    // 3-cycles (hand computation)
    const auto& two = T.chars.back();
    REQUIRE(two.degree == 2);
    REQUIRE(T.F.lift(two.values[class_with(*G, 1)]) == 2);
    REQUIRE(T.F.lift(two.values[class_with(*G, 2)]) == 0);
    REQUIRE(T.F.lift(two.values[class_with(*G, 3)]) == -1);
}

TEST_CASE("Q8 character table and indicators") {
    auto G = quaternion_group(2);
    const auto T = character_table(G);
    REQUIRE(degrees(T) == std::vector<int>{1, 1, 1, 1, 2});
    for (const auto& ch : T.chars) {
        if (ch.degree == 2) REQUIRE(ch.fs == -1);
        else REQUIRE(ch.fs == 1);
    }
}

TEST_CASE("frobenius_schur recomputation matches stored indicators") {
    for (auto G : {make_s3(), quaternion_group(2), cyclic_group(4), alternating_4()}) {
        const auto T = character_table(G);
        for (std::size_t i = 0; i < T.chars.size(); ++i)
            REQUIRE(frobenius_schur(T, static_cast<int>(i)) == T.chars[i].fs);
    }
}

TEST_CASE("the faithful character of Z4 has indicator zero") {
    const auto T = character_table(cyclic_group(4));
    int zeros = 0;
    for (const auto& ch : T.chars) {
        REQUIRE(ch.degree == 1);
        if (ch.fs == 0) ++zeros;
    }
    REQUIRE(zeros == 2); // the two faithful characters form a conjugate pair
    REQUIRE(T.chars[0].fs == 1);
}

TEST_CASE("real irreducibles of Z3") {
    const auto t = build_real_table(cyclic_group(3));
    REQUIRE(t.real_count() == 2);
    REQUIRE(t.reals[0].type == SchurType::Real);
    REQUIRE(t.reals[0].real_degree == 1);
    REQUIRE(t.reals[1].type == SchurType::Complex);
    REQUIRE(t.reals[1].real_degree == 2);
    REQUIRE(t.reals[1].schur_dim == 2);
    // values 2, -1, -1
    REQUIRE(value_at_order(t, 1, 1) == 2);
    for (int c = 0; c < 3; ++c)
        if (c != t.ct.group->class_of(0)) REQUIRE(t.ct.F.lift(t.reals[1].values[c]) == -1);
}

TEST_CASE("real irreducibles of Q8") {
    const auto t = build_real_table(quaternion_group(2));
    REQUIRE(t.real_count() == 5);
    int real1 = 0, quat = 0;
    for (const auto& u : t.reals) {
        if (u.type == SchurType::Real && u.real_degree == 1) ++real1;
        if (u.type == SchurType::Quaternionic) {
            ++quat;
            REQUIRE(u.real_degree == 4);
            REQUIRE(u.schur_dim == 4);
        }
    }
    REQUIRE(real1 == 4);
    REQUIRE(quat == 1);
    const int q = unique_real_irr(t, SchurType::Quaternionic, 4);
    REQUIRE(value_at_order(t, q, 1) == 4);
    REQUIRE(value_at_order(t, q, 2) == -4); // at -1
    REQUIRE(value_at_order(t, q, 4) == 0);
}

TEST_CASE("real irreducibles of S3 are all of real type") {
    const auto t = build_real_table(make_s3());
    REQUIRE(t.real_count() == 3);
    std::vector<int> dims;
    for (const auto& u : t.reals) {
        REQUIRE(u.type == SchurType::Real);
        dims.push_back(u.real_degree);
    }
    std::sort(dims.begin(), dims.end());
    REQUIRE(dims == std::vector<int>{1, 1, 2});
}

TEST_CASE("restriction of class functions") {
    auto G = make_s3();
    TableCache cache;
    cache.p = find_character_prime(G->exponent(), 2 * G->order());
    const auto& tG = cache.get(G);

    int three_cycle = -1;
    for (int i = 0; i < 6; ++i)
        if (G->element_order(i) == 3) { three_cycle = i; break; }
    auto A3 = subgroup_generated(G, {three_cycle});
    const auto& tH = cache.get(A3.own);

    // trivial restricts to trivial
    const auto triv = restrict_cf(tG.real_char(tG.trivial_index()), A3);
    for (i64 v : triv.v) REQUIRE(v == 1);

    // the 2-dim character restricts to (2, -1, -1)
    const int two = unique_real_irr(tG, SchurType::Real, 2);
    const auto res = restrict_cf(tG.real_char(two), A3);
    REQUIRE(res.F.lift(res.v[A3.own->class_of(0)]) == 2);
    int minus_ones = 0;
    for (int c = 0; c < A3.own->class_count(); ++c)
        if (res.F.lift(res.v[c]) == -1) ++minus_ones;
    REQUIRE(minus_ones == 2);

    // Q8's quaternionic character restricts to (4, -4) on the center
    auto Q = quaternion_group(2);
    TableCache qc;
    qc.p = find_character_prime(Q->exponent(), 2 * Q->order());
    const auto& tQ = qc.get(Q);
    int minus_one = -1;
    for (int i = 0; i < 8; ++i)
        if (Q->element_order(i) == 2) { minus_one = i; break; }
    auto Z = subgroup_generated(Q, {minus_one});
    const int q = unique_real_irr(tQ, SchurType::Quaternionic, 4);
    const auto qres = restrict_cf(tQ.real_char(q), Z);
    REQUIRE(qres.F.lift(qres.v[Z.own->class_of(0)]) == 4);
    REQUIRE(qres.F.lift(qres.v[Z.own->class_of(Z.from_parent[minus_one])]) == -4);
}

TEST_CASE("induction from the rotation subgroup of S3") {
    auto G = make_s3();
    TableCache cache;
    cache.p = find_character_prime(G->exponent(), 2 * G->order());
    const auto& tG = cache.get(G);
    int three_cycle = -1;
    for (int i = 0; i < 6; ++i)
        if (G->element_order(i) == 3) { three_cycle = i; break; }
    auto A3 = subgroup_generated(G, {three_cycle});
    const auto& tH = cache.get(A3.own);

    const auto ind = induce_cf(tH.real_char(tH.trivial_index()), A3);
    // the permutation character on cosets: 2 on e, 2 on 3-cycles, 0 on transpositions
    REQUIRE(ind.F.lift(ind.v[class_with(*G, 1)]) == 2);
    REQUIRE(ind.F.lift(ind.v[class_with(*G, 3)]) == 2);
    REQUIRE(ind.F.lift(ind.v[class_with(*G, 2)]) == 0);
    // decomposes as trivial + sign
    const auto mult = decompose(ind, tG.ct);
    i64 total = 0;
    for (std::size_t i = 0; i < mult.size(); ++i) {
        if (mult[i] > 0) REQUIRE(tG.ct.chars[i].degree == 1);
        total += mult[i];
    }
    REQUIRE(total == 2);
    REQUIRE(inner_product(ind, class_function_of_char(tG.ct, 0)) == 1); // reciprocity example
}

TEST_CASE("induction along the whole group is the identity") {
    auto G = make_s3();
    const auto T = character_table(G);
    auto W = whole_group(G);
    TableCache cache;
    cache.p = T.F.p;
    const auto& tw = cache.get(W.own);
    for (int i = 0; i < tw.real_count(); ++i) {
        const auto ind = induce_cf(tw.real_char(i), W);
        REQUIRE(ind.v == tw.reals[i].values);
    }
}

TEST_CASE("induction of the center sign character inside Q8") {
    auto Q = quaternion_group(2);
    TableCache cache;
    cache.p = find_character_prime(Q->exponent(), 2 * Q->order());
    int minus_one = -1, j = -1;
    for (int i = 0; i < 8; ++i) {
        if (Q->element_order(i) == 2) minus_one = i;
    }
    j = Q->generators()[1];
    auto J = subgroup_generated(Q, {j}); // <j> of order 4
    auto Z = subgroup_from_members(J.own, {0, J.from_parent[minus_one]});
    const auto& tJ = cache.get(J.own);
    const auto& tZ = cache.get(Z.own);
    const int sign = 1 - tZ.trivial_index();
    REQUIRE(tZ.real_count() == 2);

    const auto ind = induce_cf(tZ.real_char(sign), Z);
    // equals the complex-type real irreducible of Z/4: values 2, -2, 0, 0
    const int cplx = unique_real_irr(tJ, SchurType::Complex, 2);
    REQUIRE(ind.v == tJ.reals[cplx].values);
}

TEST_CASE("conjugation of characters of a normal subgroup of Q8") {
    auto Q = quaternion_group(2);
    TableCache cache;
    cache.p = find_character_prime(Q->exponent(), 2 * Q->order());
    const int i_gen = Q->generators()[0], j_gen = Q->generators()[1];
    auto I = subgroup_generated(Q, {i_gen}); // <i> = Z4
    const auto& tI = cache.get(I.own);

    // inside the subgroup: conjugation by members fixes every class function
    for (int u = 0; u < tI.real_count(); ++u)
        for (int m : I.members)
            REQUIRE(conjugate_cf(tI.real_char(u), I, m) == tI.real_char(u));

    // the faithful complex character i -> zeta_4 is sent to its conjugate by j
    int faithful = -1;
    for (std::size_t c = 0; c < tI.ct.chars.size(); ++c)
        if (tI.ct.chars[c].degree == 1 && tI.ct.chars[c].fs == 0) { faithful = static_cast<int>(c); break; }
    REQUIRE(faithful >= 0);
    const auto chi = class_function_of_char(tI.ct, faithful);
    const auto conj = conjugate_cf(chi, I, j_gen);
    const auto& expected = tI.ct.chars[tI.ct.chars[faithful].conj_index];
    REQUIRE(conj.v == expected.values);
    REQUIRE_FALSE(conj.v == chi.v);

    // the real 2-dimensional character is fixed
    const int cplx = unique_real_irr(tI, SchurType::Complex, 2);
    REQUIRE(conjugate_cf(tI.real_char(cplx), I, j_gen) == tI.real_char(cplx));
}

TEST_CASE("inner products recover multiplicities and schur dimensions") {
    auto G = make_s3();
    const auto T = character_table(G);
    for (std::size_t i = 0; i < T.chars.size(); ++i)
        for (std::size_t k = 0; k < T.chars.size(); ++k)
            REQUIRE(inner_product(class_function_of_char(T, static_cast<int>(i)),
                                  class_function_of_char(T, static_cast<int>(k))) ==
                    (i == k ? 1 : 0));

    const auto t3 = build_real_table(cyclic_group(3));
    REQUIRE(inner_product(t3.real_char(1), t3.real_char(1)) == 2); // complex type

    const auto tq = build_real_table(quaternion_group(2));
    const int q = unique_real_irr(tq, SchurType::Quaternionic, 4);
    REQUIRE(inner_product(tq.real_char(q), tq.real_char(q)) == 4);
}

TEST_CASE("decomposition of the regular character") {
    auto G = make_s3();
    const auto T = character_table(G);
    ClassFunction reg{G, T.F, std::vector<i64>(G->class_count(), 0)};
    reg.v[G->class_of(0)] = T.F.norm(G->order());
    const auto mult = decompose(reg, T);
    for (std::size_t i = 0; i < T.chars.size(); ++i) REQUIRE(mult[i] == T.chars[i].degree);

    // a genuine non-character input is rejected
    ClassFunction bogus{G, T.F, std::vector<i64>(G->class_count(), 0)};
    bogus.v[class_with(*G, 2)] = 1;
    REQUIRE_THROWS_AS(decompose(bogus, T), input_error);
}

TEST_CASE("cyclotomic lifts round-trip and sum to the degree") {
    for (const auto& ng : builtin_groups(false)) {
        const auto T = character_table(ng.group);
        for (const auto& ch : T.chars) {
            for (int k = 0; k < T.class_count(); ++k) {
                int total = 0;
                for (auto [j, m] : ch.lift[k]) {
                    REQUIRE(m > 0);
                    total += m;
                }
                REQUIRE(total == ch.degree);
                REQUIRE(T.eval_lift(ch.lift[k]) == ch.values[k]);
            }
        }
    }
}

TEST_CASE("table construction satisfies the consistency checker on the suite") {
    for (const auto& ng : builtin_groups(false)) {
        const auto T = character_table(ng.group);
        REQUIRE(table_consistency_failures(T).empty());
    }
}

TEST_CASE("subgroup tables reuse the parent prime") {
    auto G = symmetric_4();
    TableCache cache;
    cache.p = find_character_prime(G->exponent(), 2 * G->order());
    const auto& tG = cache.get(G);
    for (const auto& H : index_two_subgroups(G)) {
        const auto& tH = cache.get(H.own);
        REQUIRE(tH.ct.F.p == tG.ct.F.p);
        REQUIRE((tH.ct.F.p - 1) % tH.ct.exponent == 0);
        REQUIRE(tH.ct.F.p > 2 * H.order());
    }
}

#pragma once

#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "evb/classifier.hpp"
#include "evb/subgroup_scan.hpp"

namespace evb {

// ---------------------------------------------------------------------------
// built-in groups

struct NamedGroup {
    std::string name;
    GroupPtr group;
};

inline GroupPtr cyclic_group(int n) {
    if (n == 1) return group_from_generators(1, {});
    Permutation c;
    c.img.resize(n);
    for (int i = 0; i < n; ++i) c.img[i] = (i + 1) % n;
    return group_from_generators(n, {c});
}

inline GroupPtr dihedral_group(int n) {
    if (n == 1) return group_from_generators(2, {Permutation({1, 0})});
    if (n == 2)
        return group_from_generators(4, {Permutation({1, 0, 3, 2}), Permutation({2, 3, 0, 1})});
    Permutation r, s;
    r.img.resize(n);
    s.img.resize(n);
    for (int i = 0; i < n; ++i) {
        r.img[i] = (i + 1) % n;
        s.img[i] = (n - i) % n;
    }
    return group_from_generators(n, {r, s});
}

/// Generalized quaternion group of order 4m (m = 2 gives the quaternion
/// group), via its left-regular permutation representation.
inline GroupPtr quaternion_group(int m) {
    const int two_m = 2 * m, order = 4 * m;
    auto idx = [&](int i, int e) { return ((i % two_m + two_m) % two_m) + two_m * e; };
    auto mult = [&](int x, int y) {
        const int xi = x % two_m, xe = x / two_m, yi = y % two_m, ye = y / two_m;
        if (xe == 0) return idx(xi + yi, ye);
        if (ye == 0) return idx(xi - yi, 1);
        return idx(xi - yi + m, 0);
    };
    auto left_mult_perm = [&](int g) {
        Permutation p;
        p.img.resize(order);
        for (int x = 0; x < order; ++x) p.img[x] = mult(g, x);
        return p;
    };
    return group_from_generators(order, {left_mult_perm(idx(1, 0)), left_mult_perm(idx(0, 1))});
}

inline GroupPtr alternating_4() {
    return group_from_generators(4, {Permutation({1, 2, 0, 3}), Permutation({1, 0, 3, 2})});
}

inline GroupPtr symmetric_4() {
    return group_from_generators(4, {Permutation({1, 2, 3, 0}), Permutation({1, 0, 2, 3})});
}

/// Direct product acting on the disjoint union of the factors' points.
inline GroupPtr direct_product(GroupPtr a, GroupPtr b) {
    const int da = a->degree(), db = b->degree();
    std::vector<Permutation> gens;
    for (int g : a->generators()) {
        Permutation p = Permutation::identity(da + db);
        for (int i = 0; i < da; ++i) p.img[i] = a->element(g).img[i];
        gens.push_back(std::move(p));
    }
    for (int g : b->generators()) {
        Permutation p = Permutation::identity(da + db);
        for (int i = 0; i < db; ++i) p.img[da + i] = da + b->element(g).img[i];
        gens.push_back(std::move(p));
    }
    return group_from_generators(da + db, gens);
}

inline std::vector<NamedGroup> builtin_groups(bool full) {
    std::vector<NamedGroup> out;
    for (int n = 1; n <= 12; ++n) out.push_back({"Z/" + std::to_string(n), cyclic_group(n)});
    for (int n = 1; n <= 6; ++n) out.push_back({"D_" + std::to_string(n), dihedral_group(n)});
    out.push_back({"Q8", quaternion_group(2)});
    out.push_back({"A4", alternating_4()});
    out.push_back({"S4", symmetric_4()});
    out.push_back({"Z/4xZ/2", direct_product(cyclic_group(4), cyclic_group(2))});
    if (full) {
        out.push_back({"Z/16", cyclic_group(16)});
        out.push_back({"Z/24", cyclic_group(24)});
        out.push_back({"Z/32", cyclic_group(32)});
        out.push_back({"D_8", dihedral_group(8)});
        out.push_back({"D_10", dihedral_group(10)});
        out.push_back({"D_12", dihedral_group(12)});
        out.push_back({"D_16", dihedral_group(16)});
        out.push_back({"Q16", quaternion_group(4)});
        out.push_back({"Z/4xZ/4", direct_product(cyclic_group(4), cyclic_group(4))});
        out.push_back({"Z/8xZ/2", direct_product(cyclic_group(8), cyclic_group(2))});
        out.push_back({"Z/2^3",
                       direct_product(cyclic_group(2),
                                      direct_product(cyclic_group(2), cyclic_group(2)))});
        out.push_back({"A4xZ/2", direct_product(alternating_4(), cyclic_group(2))});
        out.push_back({"S3xS3", direct_product(dihedral_group(3), dihedral_group(3))});
    }
    return out;
}

// ---------------------------------------------------------------------------
// built-in actions

struct NamedAction {
    std::string name;
    GroupPtr group;
    std::vector<OrthogonalElement> images;
};

inline std::vector<NamedAction> builtin_actions(bool full) {
    auto rot = [](long long p, long long q) { return OrthogonalElement::rotation({p, q}); };
    auto refl = [](long long p, long long q) { return OrthogonalElement::reflection({p, q}); };
    std::vector<NamedAction> out;
    out.push_back({"trivial", cyclic_group(1), {}});
    out.push_back({"z2_rot", cyclic_group(2), {rot(1, 2)}});
    out.push_back({"z2_refl", cyclic_group(2), {refl(0, 1)}});
    out.push_back({"z2_refl_off_axis", cyclic_group(2), {refl(1, 2)}});
    out.push_back({"z3_rot", cyclic_group(3), {rot(1, 3)}});
    out.push_back({"z4_rot_quarter", cyclic_group(4), {rot(1, 4)}});
    out.push_back({"z4_rot_half", cyclic_group(4), {rot(1, 2)}});
    out.push_back({"z6_rot_third", cyclic_group(6), {rot(1, 3)}});
    out.push_back({"d3_standard", dihedral_group(3), {rot(1, 3), refl(0, 1)}});
    out.push_back({"d3_to_c2", dihedral_group(3), {rot(0, 1), rot(1, 2)}});
    out.push_back({"d3_to_d1", dihedral_group(3), {rot(0, 1), refl(0, 1)}});
    out.push_back({"d4_standard", dihedral_group(4), {rot(1, 4), refl(0, 1)}});
    out.push_back({"d4_to_d2", dihedral_group(4), {rot(1, 2), refl(0, 1)}});
    out.push_back({"d5_standard", dihedral_group(5), {rot(1, 5), refl(0, 1)}});
    out.push_back({"d6_standard", dihedral_group(6), {rot(1, 6), refl(0, 1)}});
    out.push_back({"d6_to_d3", dihedral_group(6), {rot(1, 3), refl(0, 1)}});
    out.push_back({"q8_to_d2", quaternion_group(2), {rot(1, 2), refl(0, 1)}});
    out.push_back({"q8_rot", quaternion_group(2), {rot(1, 2), rot(1, 2)}});
    out.push_back({"q8_to_d1", quaternion_group(2), {rot(0, 1), refl(0, 1)}});
    out.push_back({"a4_to_z3", alternating_4(), {rot(1, 3), rot(0, 1)}});
    out.push_back({"s4_sign_rot", symmetric_4(), {rot(1, 2), rot(1, 2)}});
    out.push_back({"s4_sign_refl", symmetric_4(), {refl(0, 1), refl(0, 1)}});
    out.push_back({"z4xz2_to_c4",
                   direct_product(cyclic_group(4), cyclic_group(2)),
                   {rot(1, 4), rot(1, 2)}});
    out.push_back({"z4xz2_to_d2",
                   direct_product(cyclic_group(4), cyclic_group(2)),
                   {rot(1, 2), refl(0, 1)}});
    out.push_back({"q8xz2_to_d1",
                   direct_product(quaternion_group(2), cyclic_group(2)),
                   {rot(0, 1), rot(0, 1), refl(0, 1)}});
    if (full) {
        out.push_back({"d8_standard", dihedral_group(8), {rot(1, 8), refl(0, 1)}});
        out.push_back({"d10_standard", dihedral_group(10), {rot(1, 10), refl(0, 1)}});
        out.push_back({"d12_standard", dihedral_group(12), {rot(1, 12), refl(0, 1)}});
        out.push_back({"d12_to_d3", dihedral_group(12), {rot(1, 3), refl(0, 1)}});
        out.push_back({"d16_standard", dihedral_group(16), {rot(1, 16), refl(0, 1)}});
        out.push_back({"q16_to_d4", quaternion_group(4), {rot(1, 4), refl(0, 1)}});
        out.push_back({"z16_rot", cyclic_group(16), {rot(1, 16)}});
        out.push_back({"z4xz4_diag",
                       direct_product(cyclic_group(4), cyclic_group(4)),
                       {rot(1, 4), rot(1, 4)}});
        out.push_back({"z2cube_to_d1",
                       direct_product(cyclic_group(2),
                                      direct_product(cyclic_group(2), cyclic_group(2))),
                       {refl(0, 1), rot(0, 1), rot(0, 1)}});
        out.push_back({"a4xz2_to_d3",
                       direct_product(alternating_4(), cyclic_group(2)),
                       {rot(1, 3), rot(0, 1), refl(0, 1)}});
        out.push_back({"s3xs3_to_d1",
                       direct_product(dihedral_group(3), dihedral_group(3)),
                       {rot(0, 1), refl(0, 1), rot(0, 1), refl(0, 1)}});
    }
    return out;
}

// ---------------------------------------------------------------------------
// checkers usable with corrupted data (negative controls in the tests)

/// Row and column orthogonality, degree sums, indicator range, lift round
/// trips.  Returns human-readable failure descriptions.
inline std::vector<std::string> table_consistency_failures(const CharacterTable& T) {
    std::vector<std::string> fails;
    const auto& G = *T.group;
    const Fp& F = T.F;
    const int r = G.class_count();
    i64 degsum = 0;
    for (const auto& ch : T.chars) degsum += static_cast<i64>(ch.degree) * ch.degree;
    if (degsum != G.order()) fails.push_back("sum of squared degrees != |G|");
    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            i64 acc = 0;
            for (int k = 0; k < r; ++k)
                acc = F.add(acc, F.mul(F.norm(G.class_size(k)),
                                       F.mul(T.chars[a].values[k],
                                             T.chars[b].values[T.inv_class[k]])));
            if (F.mul(acc, F.inv(F.norm(G.order()))) != (a == b ? 1 : 0))
                fails.push_back("row orthogonality fails at pair (" + std::to_string(a) + "," +
                                std::to_string(b) + ")");
        }
    }
    for (int k = 0; k < r; ++k) {
        for (int l = 0; l < r; ++l) {
            i64 acc = 0;
            for (std::size_t i = 0; i < T.chars.size(); ++i)
                acc = F.add(acc, F.mul(T.chars[i].values[k],
                                       T.chars[i].values[T.inv_class[l]]));
            const i64 expect =
                k == l ? F.mul(F.norm(G.order()), F.inv(F.norm(G.class_size(k)))) : 0;
            if (acc != expect)
                fails.push_back("column orthogonality fails at pair (" + std::to_string(k) + "," +
                                std::to_string(l) + ")");
        }
    }
    for (std::size_t i = 0; i < T.chars.size(); ++i) {
        const auto& ch = T.chars[i];
        if (ch.fs < -1 || ch.fs > 1)
            fails.push_back("indicator out of range at character " + std::to_string(i));
        for (int k = 0; k < r; ++k) {
            int total = 0;
            for (auto [j, m] : ch.lift[k]) total += m;
            if (total != ch.degree)
                fails.push_back("lift multiplicities of character " + std::to_string(i) +
                                " do not sum to its degree");
            if (T.eval_lift(ch.lift[k]) != ch.values[k])
                fails.push_back("lift of character " + std::to_string(i) +
                                " does not reproduce its value at class " + std::to_string(k));
        }
    }
    return fails;
}

/// Frobenius reciprocity <ind f, g>_K = <f, res g>_H on random genuine
/// characters; returns the first counterexample found, if any.
inline std::optional<std::string> reciprocity_failure(const CharacterTable& tK,
                                                      const Subgroup& H,
                                                      const CharacterTable& tH, int trials,
                                                      unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(0, 3);
    for (int t = 0; t < trials; ++t) {
        ClassFunction f{tH.group, tH.F, std::vector<i64>(tH.class_count(), 0)};
        for (const auto& ch : tH.chars) {
            const int c = coeff(rng);
            for (int k = 0; k < tH.class_count(); ++k)
                f.v[k] = f.F.add(f.v[k], f.F.mul(f.F.norm(c), ch.values[k]));
        }
        ClassFunction g{tK.group, tK.F, std::vector<i64>(tK.class_count(), 0)};
        for (const auto& ch : tK.chars) {
            const int c = coeff(rng);
            for (int k = 0; k < tK.class_count(); ++k)
                g.v[k] = g.F.add(g.v[k], g.F.mul(g.F.norm(c), ch.values[k]));
        }
        const i64 lhs = inner_product(induce_cf(f, H), g);
        const i64 rhs = inner_product(f, restrict_cf(g, H));
        if (lhs != rhs) {
            std::ostringstream os;
            os << "reciprocity violated on trial " << t << ": <ind f, g> = " << lhs
               << " but <f, res g> = " << rhs;
            return os.str();
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// suites

struct SuiteResult {
    std::string name;
    long long checks = 0;
    std::vector<std::string> failures;
};

struct SelfCheck {
    std::vector<SuiteResult> suites;
    bool ok() const {
        for (const auto& s : suites)
            if (!s.failures.empty()) return false;
        return true;
    }
};

namespace detail {

inline std::vector<int> invariant_real_irrs(const RealTable& ht, const Subgroup& h_in_g) {
    std::vector<int> out;
    for (int u = 0; u < ht.real_count(); ++u)
        if (is_invariant_under(ht, u, h_in_g)) out.push_back(u);
    return out;
}

} // namespace detail

inline SuiteResult suite_tables(const std::vector<NamedGroup>& groups) {
    SuiteResult r{"character-tables", 0, {}};
    for (const auto& ng : groups) {
        try {
            const auto T = character_table(ng.group);
            for (auto& f : table_consistency_failures(T)) r.failures.push_back(ng.name + ": " + f);
            r.checks += 3 + 2LL * T.class_count() * T.class_count();
            const auto reals = real_irreducibles(T);
            int consumed = 0;
            for (const auto& u : reals) consumed += static_cast<int>(u.constituents.size());
            if (consumed != T.class_count())
                r.failures.push_back(ng.name + ": real irreducibles do not consume every character");
            ++r.checks;
        } catch (const std::exception& e) {
            r.failures.push_back(ng.name + ": " + e.what());
        }
    }
    return r;
}

inline SuiteResult suite_reciprocity(const std::vector<NamedGroup>& groups) {
    SuiteResult r{"frobenius-reciprocity", 0, {}};
    for (const auto& ng : groups) {
        try {
            TableCache cache;
            cache.p = find_character_prime(ng.group->exponent(), 2 * ng.group->order());
            const RealTable& tG = cache.get(ng.group);
            for (const auto& H : index_two_subgroups(ng.group)) {
                const RealTable& tH = cache.get(H.own);
                if (auto fail = reciprocity_failure(tG.ct, H, tH.ct, 8, 12345))
                    r.failures.push_back(ng.name + ": " + *fail);
                r.checks += 8;
            }
        } catch (const std::exception& e) {
            r.failures.push_back(ng.name + ": " + e.what());
        }
    }
    return r;
}

inline SuiteResult suite_extension_trichotomy(const std::vector<NamedGroup>& groups) {
    SuiteResult r{"extension-trichotomy", 0, {}};
    for (const auto& ng : groups) {
        try {
            TableCache cache;
            cache.p = find_character_prime(ng.group->exponent(), 2 * ng.group->order());
            const RealTable& tG = cache.get(ng.group);
            for (const auto& H : index_two_subgroups(ng.group)) {
                const RealTable& tH = cache.get(H.own);
                for (int u : detail::invariant_real_irrs(tH, H)) {
                    // count_extensions runs the full set of structural
                    // assertions internally
                    const auto ext = count_extensions(tG, H, tH, u);
                    const auto res2 =
                        decompose_real(restrict_cf(induce_cf(tH.real_char(u), H), H), tH);
                    std::vector<i64> expect(tH.real_count(), 0);
                    expect[u] = 2;
                    if (res2 != expect)
                        r.failures.push_back(ng.name + ": res(ind) != 2u for irr " +
                                             std::to_string(u));
                    if (ext.e == 2 && tH.reals[u].type == SchurType::Real) {
                        for (int i : ext.extensions)
                            if (tG.reals[i].type != SchurType::Real)
                                r.failures.push_back(ng.name +
                                                     ": real-type extensions changed type");
                    }
                    r.checks += 2;
                }
            }
        } catch (const std::exception& e) {
            r.failures.push_back(ng.name + ": " + e.what());
        }
    }
    return r;
}

inline SuiteResult suite_odd_extension(const std::vector<NamedGroup>& groups) {
    SuiteResult r{"odd-quotient-extensions", 0, {}};
    for (const auto& ng : groups) {
        try {
            TableCache cache;
            cache.p = find_character_prime(ng.group->exponent(), 2 * ng.group->order());
            const RealTable& tG = cache.get(ng.group);
            for (const auto& N : normal_subgroups(ng.group)) {
                const auto Q = quotient_group(ng.group, N);
                const RealTable& tN = cache.get(N.own);
                const bool odd_cyclic = Q->order() % 2 == 1 && is_cyclic(*Q);
                const int dn = dihedral_parameter(*Q);
                const bool odd_dihedral = dn > 0 && dn % 2 == 1;
                if (!odd_cyclic && !odd_dihedral) continue;
                for (int u : detail::invariant_real_irrs(tN, N)) {
                    if (odd_cyclic) {
                        const auto sols = solve_restriction_system(
                            tG, {{&N, tN.real_char(u)}}, cache);
                        if (sols.empty())
                            r.failures.push_back(ng.name + ": no extension over odd cyclic quotient");
                        if (tN.reals[u].type == SchurType::Real && sols.size() != 1)
                            r.failures.push_back(ng.name +
                                                 ": real-type extension not unique over odd "
                                                 "cyclic quotient");
                        r.checks += 2;
                    } else {
                        const auto sols = solve_restriction_system(
                            tG, {{&N, scale_cf(tN.real_char(u), 2)}}, cache);
                        if (sols.empty())
                            r.failures.push_back(
                                ng.name + ": doubled module has no extension over odd dihedral "
                                          "quotient");
                        ++r.checks;
                    }
                }
            }
        } catch (const std::exception& e) {
            r.failures.push_back(ng.name + ": " + e.what());
        }
    }
    return r;
}

inline SuiteResult suite_classification(const std::vector<NamedAction>& actions) {
    SuiteResult r{"classification-conformance", 0, {}};
    for (const auto& na : actions) {
        try {
            const Report rep = classify(na.group, na.images, 6);
            for (const auto& cls : rep.classes) {
                const SchurType type = rep.h_table->reals[cls.chi_index].type;
                if (!feasibility_check(cls.restricted.kind, type, cls.e_one, cls.e_mu))
                    r.failures.push_back(na.name + ": infeasible cell");
                ++r.checks;
                const bool dihedral = cls.restricted.kind == ImageKind::Dihedral;
                const int size_one = dihedral
                                         ? rep.cache->get(cls.restricted.stab_one->own).real_count()
                                         : rep.h_table->real_count();
                const int size_mu =
                    dihedral ? rep.cache->get(cls.restricted.stab_mu->own).real_count() : 0;
                for (i64 m = 1; m <= 10; ++m) {
                    const i64 formula = count_classes(cls.kind, cls.e_one, cls.e_mu, m);
                    const i64 brute = enumerate_count(cls.presentation, m);
                    if (formula != brute)
                        r.failures.push_back(na.name + ": count formula " + std::to_string(formula) +
                                             " != enumeration " + std::to_string(brute) +
                                             " at m=" + std::to_string(m));
                    ++r.checks;
                    const i64 distinct = distinct_fiber_data(cls, m, size_one, size_mu);
                    const i64 expect = cls.kind == CaseKind::Generic
                                           ? formula
                                           : formula / cls.fiber_data_multiplicity;
                    if (distinct != expect)
                        r.failures.push_back(na.name + ": fiber-data image size " +
                                             std::to_string(distinct) + " != expected " +
                                             std::to_string(expect) + " at m=" + std::to_string(m));
                    ++r.checks;
                }
                // tensor action on the generators, on the fiber level
                auto sorted_comps = [](std::vector<FiberComponent> v) {
                    std::sort(v.begin(), v.end(), [](const FiberComponent& a,
                                                     const FiberComponent& b) {
                        return std::pair(a.irr_index, a.mult) < std::pair(b.irr_index, b.mult);
                    });
                    return v;
                };
                const auto& g = cls.presentation.generators;
                if (cls.e_one == 2 && cls.e_mu == 2 && cls.kind == CaseKind::Generic) {
                    const bool ok = g[0].at_one == g[1].at_one && g[2].at_one == g[3].at_one &&
                                    !(g[0].at_one == g[2].at_one) &&
                                    g[0].at_mu == g[2].at_mu && g[1].at_mu == g[3].at_mu &&
                                    !(g[0].at_mu == g[1].at_mu);
                    if (!ok) r.failures.push_back(na.name + ": (2,2) tensor orbit structure broken");
                    ++r.checks;
                }
                if ((cls.e_one == 2 && cls.e_mu == 0) || (cls.e_one == 0 && cls.e_mu == 2)) {
                    const bool swap_side = cls.e_one == 2;
                    const auto f0 = sorted_comps(swap_side ? g[0].at_one : g[0].at_mu);
                    const auto fp = sorted_comps(swap_side ? g[1].at_one : g[1].at_mu);
                    const auto fm = sorted_comps(swap_side ? g[2].at_one : g[2].at_mu);
                    const bool ok = !(fp == fm) && f0.size() == 2 && fp.size() == 1 &&
                                    fm.size() == 1;
                    if (!ok)
                        r.failures.push_back(na.name + ": (2,0) tensor orbit structure broken");
                    ++r.checks;
                }
            }
        } catch (const std::exception& e) {
            r.failures.push_back(na.name + ": " + e.what());
        }
    }
    return r;
}

inline SelfCheck run_selfcheck(bool full) {
    SelfCheck sc;
    const auto groups = builtin_groups(full);
    const auto actions = builtin_actions(full);
    sc.suites.push_back(suite_tables(groups));
    sc.suites.push_back(suite_reciprocity(groups));
    sc.suites.push_back(suite_extension_trichotomy(groups));
    sc.suites.push_back(suite_odd_extension(groups));
    sc.suites.push_back(suite_classification(actions));
    return sc;
}

} // namespace evb

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "evb/real_irreducible.hpp"

namespace evb {

/// Real tables for the subgroups met during one classification run, all over
/// the same prime so restrictions compare directly.  Keyed by the set of root
/// elements, so two incarnations of the same subset share one table.
struct TableCache {
    i64 p = 0;
    std::map<std::vector<int>, std::shared_ptr<const RealTable>> by_roots;

    const RealTable& get(GroupPtr g) {
        auto key = g->root_indices();
        auto it = by_roots.find(key);
        if (it == by_roots.end()) {
            auto t = std::make_shared<RealTable>(build_real_table(g, p));
            it = by_roots.emplace(std::move(key), std::move(t)).first;
        }
        return *it->second;
    }
};

struct ExtensionCount {
    int e = 0;                          // number of K-extensions, in {0,1,2}
    std::vector<int> extensions;        // indices into the K table's reals
    std::optional<int> induced_class;   // the induced irreducible when e == 0
};

namespace detail {

inline std::vector<i64> unit_vector(int n, int i) {
    std::vector<i64> v(n, 0);
    v[i] = 1;
    return v;
}

/// Character of the sign of K/H: +1 on H, -1 outside.
inline ClassFunction quotient_sign(const RealTable& K, const Subgroup& H) {
    ClassFunction s{K.ct.group, K.ct.F, {}};
    s.v.resize(K.ct.class_count());
    for (int c = 0; c < K.ct.class_count(); ++c)
        s.v[c] = H.contains(K.ct.group->class_rep(c)) ? 1 : K.ct.F.norm(-1);
    return s;
}

} // namespace detail

/// Is the real character of u fixed by conjugation by every element of K?
inline bool is_invariant_under(const RealTable& H, int u, const Subgroup& H_in_K) {
    const auto props = subgroup_props(*H_in_K.parent, H_in_K);
    const auto chi = H.real_char(u);
    for (int rep : props.coset_reps) {
        if (rep == 0) continue;
        if (!(conjugate_cf(chi, H_in_K, rep) == chi)) return false;
    }
    return true;
}

/// Count the K-extensions of the real irreducible u of an index-two subgroup,
/// verifying every structural constraint of the extension trichotomy:
/// e in {0,1,2}; e = 0 only for non-quaternionic u, with the induction
/// irreducible of complex (u real) or quaternionic (u complex) type; two
/// extensions differ by the sign character of K/H.
inline ExtensionCount count_extensions(const RealTable& K, const Subgroup& H_in_K,
                                       const RealTable& H, int u) {
    check_internal(same_group(H_in_K.parent, K.ct.group) && same_group(H.ct.group, H_in_K.own),
                   "count_extensions: table/subgroup mismatch");
    check_input(K.ct.group->order() == 2 * H_in_K.order(),
                "count_extensions: subgroup does not have index two");
    check_input(subgroup_props(*K.ct.group, H_in_K).normal,
                "count_extensions: subgroup not normal");
    check_input(is_invariant_under(H, u, H_in_K),
                "count_extensions: character is not invariant");

    const std::vector<i64> target = detail::unit_vector(H.real_count(), u);
    ExtensionCount out;
    for (int i = 0; i < K.real_count(); ++i) {
        if (K.reals[i].real_degree != H.reals[u].real_degree) continue;
        const auto res = decompose_real(restrict_cf(K.real_char(i), H_in_K), H);
        if (res == target) out.extensions.push_back(i);
    }
    out.e = static_cast<int>(out.extensions.size());
    check_internal(out.e <= 2, "more than two extensions of an irreducible");

    const SchurType ut = H.reals[u].type;
    if (out.e == 0) {
        check_internal(ut != SchurType::Quaternionic,
                       "quaternionic irreducible without an extension");
        const auto ind = induce_cf(H.real_char(u), H_in_K);
        const auto mult = decompose_real(ind, K);
        int idx = -1;
        for (int i = 0; i < K.real_count(); ++i) {
            if (mult[i] == 0) continue;
            check_internal(idx < 0 && mult[i] == 1, "induction of extension-free module reducible");
            idx = i;
        }
        check_internal(idx >= 0, "induced character decomposed to nothing");
        const SchurType expect = ut == SchurType::Real ? SchurType::Complex
                                                       : SchurType::Quaternionic;
        check_internal(K.reals[idx].type == expect,
                       "induced irreducible has unexpected type");
        out.induced_class = idx;
    } else if (out.e == 1) {
        check_internal(ut != SchurType::Real, "real-type irreducible with a unique extension");
        const SchurType expect = ut == SchurType::Complex ? SchurType::Real
                                                          : SchurType::Complex;
        check_internal(K.reals[out.extensions[0]].type == expect,
                       "unique extension has unexpected type");
    } else {
        for (int i : out.extensions)
            check_internal(K.reals[i].type == ut, "paired extensions change type");
        const auto sign = detail::quotient_sign(K, H_in_K);
        const auto a = K.real_char(out.extensions[0]);
        const auto b = K.real_char(out.extensions[1]);
        bool swap_ok = true;
        for (int c = 0; c < K.ct.class_count(); ++c)
            if (K.ct.F.mul(a.v[c], sign.v[c]) != b.v[c]) { swap_ok = false; break; }
        check_internal(swap_ok, "paired extensions do not differ by the sign character");
    }
    return out;
}

/// Generator of Rep(K, chi) as a multiple of one K-irreducible.
struct RepGenerator {
    std::string name;
    int dim = 0;
    int irr_index = -1; // into the K table's reals
    int irr_mult = 1;   // character = irr_mult * reals[irr_index]
};

/// Generators of the semigroup of K-modules restricting to multiples of u:
/// the induced module (e = 0), the unique extension (e = 1), or the two
/// extensions swapped by the sign character (e = 2).
inline std::vector<RepGenerator> rep_semigroup_generators(const RealTable& K,
                                                          const Subgroup& H_in_K,
                                                          const RealTable& H, int u) {
    const auto ext = count_extensions(K, H_in_K, H, u);
    const int d = H.reals[u].real_degree;
    std::vector<RepGenerator> gens;
    if (ext.e == 0) {
        gens.push_back({"R~", 2 * d, *ext.induced_class, 1});
    } else if (ext.e == 1) {
        gens.push_back({"R", d, ext.extensions[0], 1});
    } else {
        gens.push_back({"R+", d, ext.extensions[0], 1});
        gens.push_back({"R-", d, ext.extensions[1], 1});
    }
    return gens;
}

struct RestrictionConstraint {
    const Subgroup* sub = nullptr; // subgroup of the solver's group
    ClassFunction target;          // genuine real character on sub->own
};

/// All nonnegative multiplicity vectors m over the real irreducibles of Gx
/// with sum m_i * res(chi_i, S_j) = target_j for every constraint, found by
/// exhaustive search bounded by the target dimension.  Comparisons run on
/// exact integer decompositions, never on raw field values.
inline std::vector<std::vector<i64>> solve_restriction_system(
    const RealTable& gx, const std::vector<RestrictionConstraint>& constraints,
    TableCache& cache) {
    const int n = gx.real_count();
    if (constraints.empty()) return {std::vector<i64>(n, 0)};

    std::vector<const RealTable*> subtables;
    std::vector<std::vector<i64>> targets;
    i64 dim = -1;
    for (const auto& c : constraints) {
        check_internal(same_group(c.sub->parent, gx.ct.group), "constraint subgroup not in solver group");
        const RealTable& st = cache.get(c.sub->own);
        subtables.push_back(&st);
        targets.push_back(decompose_real(c.target, st));
        const i64 d = c.target.dim();
        if (dim < 0) dim = d;
        else if (dim != d) return {};
    }
    // Integer restriction data per irreducible of Gx.
    std::vector<std::vector<std::vector<i64>>> res(n);
    for (int i = 0; i < n; ++i) {
        res[i].reserve(constraints.size());
        for (std::size_t j = 0; j < constraints.size(); ++j)
            res[i].push_back(decompose_real(
                restrict_cf(gx.real_char(i), *constraints[j].sub), *subtables[j]));
    }

    std::vector<std::vector<i64>> solutions;
    std::vector<i64> m(n, 0);
    std::vector<std::vector<i64>> acc(constraints.size());
    for (std::size_t j = 0; j < constraints.size(); ++j)
        acc[j].assign(targets[j].size(), 0);

    auto fits = [&]() {
        for (std::size_t j = 0; j < constraints.size(); ++j)
            for (std::size_t k = 0; k < acc[j].size(); ++k)
                if (acc[j][k] > targets[j][k]) return false;
        return true;
    };
    auto complete = [&]() {
        for (std::size_t j = 0; j < constraints.size(); ++j)
            if (acc[j] != targets[j]) return false;
        return true;
    };

    // Depth-first over multiplicities; the identity value bounds everything,
    // and acc only grows with the count, so an overshoot prunes the branch.
    auto rec = [&](auto&& self, int i, i64 remaining) -> void {
        if (i == n) {
            if (remaining == 0 && complete()) solutions.push_back(m);
            return;
        }
        const int deg = gx.reals[i].real_degree;
        i64 used = 0;
        while (true) {
            m[i] = used;
            if (!fits()) break;
            self(self, i + 1, remaining - used * deg);
            if ((used + 1) * deg > remaining) break;
            ++used;
            for (std::size_t j = 0; j < constraints.size(); ++j)
                for (std::size_t k = 0; k < acc[j].size(); ++k)
                    acc[j][k] += res[i][j][k];
        }
        for (; used > 0; --used)
            for (std::size_t j = 0; j < constraints.size(); ++j)
                for (std::size_t k = 0; k < acc[j].size(); ++k)
                    acc[j][k] -= res[i][j][k];
        m[i] = 0;
    };
    rec(rec, 0, dim);
    return solutions;
}

} // namespace evb

#pragma once

#include <set>
#include <vector>

#include "evb/group.hpp"

namespace evb {

/// All subgroups of index two (kernels of surjections onto Z/2): hyperplanes
/// of G modulo the subgroup generated by squares and commutators.
inline std::vector<Subgroup> index_two_subgroups(GroupPtr G) {
    std::vector<int> seeds;
    for (int g = 0; g < G->order(); ++g) {
        seeds.push_back(G->mul(g, g));
        for (int h : G->generators())
            seeds.push_back(G->mul(G->mul(G->inv(g), G->inv(h)), G->mul(g, h)));
    }
    const Subgroup N = subgroup_generated(G, seeds);
    const int q = G->order() / N.order();
    if (q == 1) return {};

    // coset space is an elementary abelian 2-group
    const auto props = subgroup_props(*G, N);
    std::vector<int> coset_of(G->order(), -1);
    for (std::size_t c = 0; c < props.coset_reps.size(); ++c)
        for (int s : N.members) coset_of[G->mul(props.coset_reps[c], s)] = static_cast<int>(c);
    auto cmul = [&](int a, int b) {
        return coset_of[G->mul(props.coset_reps[a], props.coset_reps[b])];
    };

    // greedy basis with F_2 coordinates per coset
    std::vector<std::vector<int>> coords(q);
    std::vector<char> known(q, 0);
    known[0] = 1;
    int rank = 0;
    for (int c = 1; c < q; ++c) {
        if (known[c]) continue;
        ++rank;
        std::vector<int> old_known;
        for (int s = 0; s < q; ++s)
            if (known[s]) old_known.push_back(s);
        for (int s : old_known) {
            const int t = cmul(s, c);
            check_internal(!known[t], "coset space is not elementary abelian");
            known[t] = 1;
            coords[t] = coords[s];
            coords[t].push_back(1);
        }
        for (int s : old_known) coords[s].push_back(0);
    }
    check_internal((1 << rank) == q, "coset space is not elementary abelian of expected rank");

    std::vector<Subgroup> out;
    for (int lam = 1; lam < (1 << rank); ++lam) {
        std::vector<int> members;
        for (int g = 0; g < G->order(); ++g) {
            int dot = 0;
            for (int b = 0; b < rank; ++b)
                if ((lam >> b) & 1) dot ^= coords[coset_of[g]][b];
            if (dot == 0) members.push_back(g);
        }
        out.push_back(subgroup_from_members(G, members));
    }
    return out;
}

/// All normal subgroups, as the lattice generated by closures of conjugacy
/// classes (every normal subgroup is a union of classes and is reached by
/// adding one class at a time).
inline std::vector<Subgroup> normal_subgroups(GroupPtr G) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> work;
    const std::vector<int> trivial{0};
    seen.insert(trivial);
    work.push_back(trivial);
    for (std::size_t head = 0; head < work.size(); ++head) {
        const auto current = work[head];
        for (int c = 0; c < G->class_count(); ++c) {
            std::vector<int> seeds = current;
            for (int x : G->class_members(c)) seeds.push_back(x);
            auto s = subgroup_generated(G, seeds);
            if (seen.insert(s.members).second) work.push_back(s.members);
        }
    }
    std::vector<Subgroup> out;
    for (const auto& mem : seen) out.push_back(subgroup_from_members(G, mem));
    return out;
}

/// Quotient by a normal subgroup, realized by the action on left cosets.
inline GroupPtr quotient_group(GroupPtr G, const Subgroup& N) {
    const auto props = subgroup_props(*G, N);
    check_input(props.normal, "quotient by a non-normal subgroup");
    const int q = props.index;
    std::vector<int> coset_of(G->order(), -1);
    for (int c = 0; c < q; ++c)
        for (int s : N.members) coset_of[G->mul(props.coset_reps[c], s)] = c;
    std::vector<Permutation> gens;
    for (int g : G->generators()) {
        Permutation p;
        p.img.resize(q);
        for (int c = 0; c < q; ++c) p.img[c] = coset_of[G->mul(g, props.coset_reps[c])];
        gens.push_back(std::move(p));
    }
    return FiniteGroup::generate(q, gens);
}

inline bool is_cyclic(const FiniteGroup& G) {
    for (int i = 0; i < G.order(); ++i)
        if (G.element_order(i) == G.order()) return true;
    return false;
}

/// If the group is dihedral of order 2n (n >= 1; Z/2 counts as n = 1),
/// returns n, otherwise 0.
inline int dihedral_parameter(const FiniteGroup& G) {
    if (G.order() % 2 != 0) return 0;
    const int n = G.order() / 2;
    if (n == 1) return 1; // Z/2 = D_1
    for (int r = 0; r < G.order(); ++r) {
        if (G.element_order(r) != n) continue;
        // the cyclic subgroup <r>
        std::vector<char> in_r(G.order(), 0);
        int acc = 0;
        for (int k = 0; k < n; ++k) { in_r[acc] = 1; acc = G.mul(acc, r); }
        for (int t = 0; t < G.order(); ++t) {
            if (in_r[t] || G.element_order(t) != 2) continue;
            if (G.mul(G.mul(t, r), G.inv(t)) == G.inv(r)) return n;
        }
    }
    return 0;
}

} // namespace evb

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "evb/errors.hpp"
#include "evb/permutation.hpp"

namespace evb {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Explicit finite permutation group: every element listed, full Cayley table,
/// conjugacy classes, element orders.  Element 0 is always the identity.
///
/// Two construction paths:
///   - generate(): breadth-first closure of generator words (generator order
///     gives the lexicographic tie-break), used for user input.  Closure is
///     capped at 4096 elements.
///   - subgroup_of(): a subset of an existing group, elements ordered by
///     ascending parent index.  This ordering is stable under nesting, so two
///     incarnations of the same subset always agree element-for-element.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
public:
    static constexpr int kOrderCap = 4096;

    static GroupPtr generate(int degree, const std::vector<Permutation>& gens) {
        check_input(degree >= 1 && degree <= kOrderCap, "degree out of range");
        for (std::size_t i = 0; i < gens.size(); ++i) {
            check_input(gens[i].degree() == degree,
                        "generator " + std::to_string(i + 1) + " has wrong degree");
            check_input(gens[i].is_bijection(),
                        "generator " + std::to_string(i + 1) + " is not a bijection");
        }
        auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
        g->degree_ = degree;
        g->build_closure(gens);
        g->build_tables();
        g->root_of_.resize(g->order());
        std::iota(g->root_of_.begin(), g->root_of_.end(), 0);
        return g;
    }

    /// Group structure on a subset of `parent` (must be closed; the caller
    /// guarantees this).  Ordering: ascending parent index (identity first).
    static GroupPtr subgroup_of(const FiniteGroup& parent, const std::vector<int>& members) {
        auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
        g->degree_ = parent.degree_;
        std::vector<int> mem = members;
        std::sort(mem.begin(), mem.end());
        check_internal(!mem.empty() && mem[0] == 0, "subgroup must contain the identity");
        const int n = static_cast<int>(mem.size());
        std::vector<int> from_parent(parent.order(), -1);
        for (int i = 0; i < n; ++i) from_parent[mem[i]] = i;
        g->elems_.reserve(n);
        g->root_of_.resize(n);
        for (int i = 0; i < n; ++i) {
            g->elems_.push_back(parent.elems_[mem[i]]);
            g->root_of_[i] = parent.root_of_[mem[i]];
        }
        g->mul_.assign(static_cast<std::size_t>(n) * n, 0);
        g->inv_.resize(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                int k = from_parent[parent.mul(mem[i], mem[j])];
                check_internal(k >= 0, "subset not closed under multiplication");
                g->mul_[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint16_t>(k);
            }
            g->inv_[i] = from_parent[parent.inv(mem[i])];
            check_internal(g->inv_[i] >= 0, "subset not closed under inversion");
        }
        g->pick_generators();
        g->build_class_data();
        return g;
    }

    int degree() const { return degree_; }
    int order() const { return static_cast<int>(elems_.size()); }
    const Permutation& element(int i) const { return elems_[i]; }
    int mul(int i, int j) const { return mul_[static_cast<std::size_t>(i) * order() + j]; }
    int inv(int i) const { return inv_[i]; }
    const std::vector<int>& generators() const { return generators_; }
    bool has_bfs_words() const { return !bfs_edge_.empty(); }
    std::pair<int, int> bfs_edge(int i) const { return bfs_edge_[i]; }

    int class_count() const { return static_cast<int>(classes_.size()); }
    int class_of(int elem) const { return class_of_[elem]; }
    const std::vector<int>& class_members(int c) const { return classes_[c]; }
    int class_rep(int c) const { return classes_[c][0]; }
    int class_size(int c) const { return static_cast<int>(classes_[c].size()); }
    int element_order(int i) const { return order_[i]; }
    std::int64_t exponent() const { return exponent_; }

    /// Index of this element in the pipeline's root group (identity map for
    /// generated groups).
    int root_of(int i) const { return root_of_[i]; }
    const std::vector<int>& root_indices() const { return root_of_; }

    int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }

    int power(int g, std::int64_t t) const {
        const int ord = order_[g];
        std::int64_t e = t % ord;
        if (e < 0) e += ord;
        int acc = 0;
        for (std::int64_t k = 0; k < e; ++k) acc = mul(acc, g);
        return acc;
    }

    /// Least element index generating each conjugacy class of t-th powers:
    /// class of g maps to class of g^t.
    std::vector<int> power_class_map(std::int64_t t) const {
        std::vector<int> m(class_count());
        for (int c = 0; c < class_count(); ++c) m[c] = class_of_[power(class_rep(c), t)];
        return m;
    }

private:
    FiniteGroup() = default;

    void build_closure(const std::vector<Permutation>& gens) {
        std::map<Permutation, int> index;
        elems_.push_back(Permutation::identity(degree_));
        index.emplace(elems_[0], 0);
        bfs_edge_.push_back({-1, -1});
        for (std::size_t head = 0; head < elems_.size(); ++head) {
            for (std::size_t s = 0; s < gens.size(); ++s) {
                Permutation next = elems_[head] * gens[s];
                auto [it, inserted] = index.emplace(next, static_cast<int>(elems_.size()));
                if (inserted) {
                    check_input(static_cast<int>(elems_.size()) < kOrderCap,
                                "group order exceeds cap 4096");
                    elems_.push_back(std::move(next));
                    bfs_edge_.push_back({static_cast<int>(head), static_cast<int>(s)});
                }
            }
        }
        generators_.clear();
        for (const auto& p : gens) generators_.push_back(index.at(p));
        // Cayley table by lookup.
        const int n = order();
        mul_.assign(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                mul_[static_cast<std::size_t>(i) * n + j] =
                    static_cast<std::uint16_t>(index.at(elems_[i] * elems_[j]));
        inv_.resize(n);
        for (int i = 0; i < n; ++i) inv_[i] = index.at(elems_[i].inverse());
    }

    void build_tables() { build_class_data(); }

    void build_class_data() {
        const int n = order();
        class_of_.assign(n, -1);
        classes_.clear();
        for (int x = 0; x < n; ++x) {
            if (class_of_[x] >= 0) continue;
            std::vector<int> orbit;
            const int c = static_cast<int>(classes_.size());
            // brute conjugation orbit
            std::vector<char> in(n, 0);
            std::vector<int> stack{x};
            in[x] = 1;
            while (!stack.empty()) {
                int y = stack.back();
                stack.pop_back();
                orbit.push_back(y);
                for (int g = 0; g < n; ++g) {
                    int z = conjugate(g, y);
                    if (!in[z]) { in[z] = 1; stack.push_back(z); }
                }
            }
            std::sort(orbit.begin(), orbit.end());
            for (int y : orbit) class_of_[y] = c;
            classes_.push_back(std::move(orbit));
        }
        order_.resize(n);
        exponent_ = 1;
        for (int i = 0; i < n; ++i) {
            int k = 1, acc = i;
            while (acc != 0) { acc = mul(acc, i); ++k; }
            order_[i] = k;
            exponent_ = std::lcm(exponent_, static_cast<std::int64_t>(k));
        }
    }

    void pick_generators() {
        generators_.clear();
        std::vector<char> closed(order(), 0);
        closed[0] = 1;
        int count = 1;
        auto close_with = [&](int seed) {
            std::vector<int> stack{seed};
            if (!closed[seed]) { closed[seed] = 1; ++count; }
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int i = 0; i < order(); ++i) {
                    if (!closed[i]) continue;
                    for (int z : {mul(i, x), mul(x, i)}) {
                        if (!closed[z]) { closed[z] = 1; ++count; stack.push_back(z); }
                    }
                }
            }
        };
        for (int i = 1; i < order() && count < order(); ++i) {
            if (closed[i]) continue;
            generators_.push_back(i);
            close_with(i);
        }
    }

    int degree_ = 1;
    std::vector<Permutation> elems_;
    std::vector<std::uint16_t> mul_;
    std::vector<int> inv_;
    std::vector<int> generators_;
    std::vector<std::pair<int, int>> bfs_edge_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
    std::vector<int> order_;
    std::int64_t exponent_ = 1;
    std::vector<int> root_of_;
};

inline GroupPtr group_from_generators(int degree, const std::vector<Permutation>& gens) {
    return FiniteGroup::generate(degree, gens);
}

/// Two group objects are interchangeable when they carry the same element set
/// of the same root group in the same canonical order.  Subgroups of one
/// pipeline are always built with the canonical ordering (ascending parent
/// index), so structural equality of the root index lists decides this.
inline bool same_group(const GroupPtr& a, const GroupPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->degree() == b->degree() && a->root_indices() == b->root_indices() &&
           a->element(a->order() - 1) == b->element(b->order() - 1);
}

/// A subgroup together with its own group structure and the embedding back
/// into the parent.
struct Subgroup {
    GroupPtr parent;
    std::vector<int> members;     // sorted parent indices
    GroupPtr own;                 // element i of own = parent element to_parent[i]
    std::vector<int> to_parent;
    std::vector<int> from_parent; // -1 for non-members

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int parent_idx) const { return from_parent[parent_idx] >= 0; }
};

inline Subgroup subgroup_from_members(GroupPtr G, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() || members[0] != 0) members.insert(members.begin(), 0);
    Subgroup s;
    s.parent = G;
    s.members = members;
    s.own = FiniteGroup::subgroup_of(*G, members);
    s.to_parent = members;
    s.from_parent.assign(G->order(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) s.from_parent[members[i]] = static_cast<int>(i);
    return s;
}

/// Smallest subgroup containing the seed elements.
inline Subgroup subgroup_generated(GroupPtr G, const std::vector<int>& seeds) {
    for (int x : seeds) check_input(x >= 0 && x < G->order(), "seed element out of range");
    std::vector<char> in(G->order(), 0);
    in[0] = 1;
    std::vector<int> work{0}, mem{0};
    auto add = [&](int x) {
        if (!in[x]) { in[x] = 1; work.push_back(x); mem.push_back(x); }
    };
    for (int x : seeds) add(x);
    for (std::size_t head = 0; head < work.size(); ++head) {
        int x = work[head];
        add(G->inv(x));
        for (std::size_t j = 0; j < mem.size(); ++j) {
            add(G->mul(x, mem[j]));
            add(G->mul(mem[j], x));
        }
    }
    return subgroup_from_members(G, mem);
}

inline Subgroup whole_group(GroupPtr G) {
    std::vector<int> all(G->order());
    std::iota(all.begin(), all.end(), 0);
    return subgroup_from_members(G, all);
}

struct SubgroupProps {
    bool normal = false;
    int index = 0;
    std::vector<int> coset_reps; // identity first, one per left coset
};

inline SubgroupProps subgroup_props(const FiniteGroup& G, const Subgroup& S) {
    SubgroupProps r;
    r.normal = true;
    for (int g : G.generators()) {
        for (int s : S.members) {
            if (!S.contains(G.conjugate(g, s))) { r.normal = false; break; }
        }
        if (!r.normal) break;
    }
    r.index = G.order() / S.order();
    std::vector<char> covered(G.order(), 0);
    for (int g = 0; g < G.order(); ++g) {
        if (covered[g]) continue;
        r.coset_reps.push_back(g);
        for (int s : S.members) covered[G.mul(g, s)] = 1;
    }
    return r;
}

} // namespace evb

#pragma once

#include <vector>

#include "evb/character_table.hpp"
#include "evb/group.hpp"
#include "evb/modp.hpp"

namespace evb {

/// A class function with values in the field of p elements.  Functions on
/// different groups interoperate only when computed over the same prime.
struct ClassFunction {
    GroupPtr group;
    Fp F;
    std::vector<i64> v;

    i64 at_class(int c) const { return v[c]; }
    i64 at_element(int e) const { return v[group->class_of(e)]; }
    i64 dim() const { return F.lift(v[group->class_of(0)]); }

    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return same_group(a.group, b.group) && a.F.p == b.F.p && a.v == b.v;
    }
};

inline ClassFunction class_function_of_char(const CharacterTable& T, int chr) {
    return ClassFunction{T.group, T.F, T.chars[chr].values};
}

/// Restriction along S ≤ G: the value on an S-class is the value on the
/// containing G-class.
inline ClassFunction restrict_cf(const ClassFunction& f, const Subgroup& S) {
    check_internal(same_group(f.group, S.parent), "restrict: class function not on the parent group");
    ClassFunction r{S.own, f.F, {}};
    r.v.resize(S.own->class_count());
    for (int c = 0; c < S.own->class_count(); ++c)
        r.v[c] = f.v[S.parent->class_of(S.to_parent[S.own->class_rep(c)])];
    return r;
}

/// Induction along S ≤ G by the standard formula
///   (ind f)(g) = (1/|S|) * sum over x in G with x^-1 g x in S of f(x^-1 g x).
inline ClassFunction induce_cf(const ClassFunction& f, const Subgroup& S) {
    check_internal(same_group(f.group, S.own), "induce: class function not on the subgroup");
    const FiniteGroup& G = *S.parent;
    ClassFunction r{S.parent, f.F, {}};
    r.v.resize(G.class_count());
    const i64 sinv = f.F.inv(f.F.norm(S.order()));
    for (int c = 0; c < G.class_count(); ++c) {
        const int g = G.class_rep(c);
        i64 acc = 0;
        for (int x = 0; x < G.order(); ++x) {
            const int y = G.mul(G.mul(G.inv(x), g), x);
            const int idx = S.from_parent[y];
            if (idx >= 0) acc = f.F.add(acc, f.v[S.own->class_of(idx)]);
        }
        r.v[c] = f.F.mul(acc, sinv);
    }
    return r;
}

/// Conjugate of a class function on a normal subgroup:
/// (g.f)(h) = f(g^-1 h g).
inline ClassFunction conjugate_cf(const ClassFunction& f, const Subgroup& S, int g_parent) {
    check_internal(same_group(f.group, S.own), "conjugate: class function not on the subgroup");
    const FiniteGroup& G = *S.parent;
    check_input(g_parent >= 0 && g_parent < G.order(), "conjugating element not in the group");
    ClassFunction r{S.own, f.F, {}};
    r.v.resize(S.own->class_count());
    for (int c = 0; c < S.own->class_count(); ++c) {
        const int h = S.to_parent[S.own->class_rep(c)];
        const int y = G.mul(G.mul(G.inv(g_parent), h), g_parent);
        const int idx = S.from_parent[y];
        check_internal(idx >= 0, "conjugation left the normal subgroup");
        r.v[c] = f.v[S.own->class_of(idx)];
    }
    return r;
}

/// (1/|G|) * sum over classes of |C| * a(g) * b(g^-1), symmetric-lifted.
/// Exact for genuine characters since p > 2|G|.
inline i64 inner_product(const ClassFunction& a, const ClassFunction& b) {
    check_internal(same_group(a.group, b.group) && a.F.p == b.F.p,
                   "inner product of class functions on different tables");
    const FiniteGroup& G = *a.group;
    i64 acc = 0;
    for (int c = 0; c < G.class_count(); ++c) {
        const int ic = G.class_of(G.inv(G.class_rep(c)));
        acc = a.F.add(acc, a.F.mul(a.F.norm(G.class_size(c)), a.F.mul(a.v[c], b.v[ic])));
    }
    return a.F.lift(a.F.mul(acc, a.F.inv(a.F.norm(G.order()))));
}

/// Decompose a genuine character into irreducible multiplicities; rejects
/// anything with a negative multiplicity or an inexact reconstruction.
inline std::vector<i64> decompose(const ClassFunction& f, const CharacterTable& T) {
    check_internal(same_group(f.group, T.group) && f.F.p == T.F.p, "decompose: table mismatch");
    const int r = T.class_count();
    std::vector<i64> mult(r);
    for (int i = 0; i < r; ++i) {
        const i64 m = inner_product(f, class_function_of_char(T, i));
        check_input(m >= 0, "decompose: negative multiplicity, input is not a character");
        mult[i] = m;
    }
    for (int k = 0; k < r; ++k) {
        i64 acc = 0;
        for (int i = 0; i < r; ++i)
            acc = f.F.add(acc, f.F.mul(f.F.norm(mult[i]), T.chars[i].values[k]));
        check_input(acc == f.F.norm(f.v[k]), "decompose: reconstruction mismatch");
    }
    return mult;
}

inline ClassFunction scale_cf(const ClassFunction& f, i64 c) {
    ClassFunction r = f;
    for (auto& x : r.v) x = f.F.mul(x, f.F.norm(c));
    return r;
}

inline ClassFunction add_cf(const ClassFunction& a, const ClassFunction& b) {
    check_internal(same_group(a.group, b.group) && a.F.p == b.F.p, "adding incompatible class functions");
    ClassFunction r = a;
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = a.F.add(r.v[i], b.v[i]);
    return r;
}

} // namespace evb

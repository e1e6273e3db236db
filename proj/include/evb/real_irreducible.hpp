#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "evb/class_function.hpp"

namespace evb {

/// Endomorphism type of a real irreducible module, detected by the
/// Frobenius–Schur indicator of its complex constituent.
enum class SchurType { Real, Complex, Quaternionic };

inline const char* schur_type_name(SchurType t) {
    switch (t) {
        case SchurType::Real: return "real";
        case SchurType::Complex: return "complex";
        case SchurType::Quaternionic: return "quaternionic";
    }
    return "?";
}

inline int schur_type_rank(SchurType t) { return static_cast<int>(t); }

/// Character of an irreducible real module: a single indicator-(+1) complex
/// irreducible, a conjugate pair summed, or a doubled indicator-(-1)
/// irreducible.
struct RealIrreducible {
    std::vector<i64> values;          // per-class field values of the real character
    std::vector<CycloSum> lift;       // per-class cyclotomic lift
    SchurType type = SchurType::Real;
    int schur_dim = 1;                // 1, 2, 4
    int real_degree = 0;
    std::vector<int> constituents;    // indices into the complex table (1 or 2)
};

namespace detail {

inline CycloSum merge_lift(const CycloSum& a, const CycloSum& b) {
    CycloSum out = a;
    for (auto [j, m] : b) {
        bool found = false;
        for (auto& [jj, mm] : out)
            if (jj == j) { mm += m; found = true; break; }
        if (!found) out.push_back({j, m});
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline CycloSum conj_lift(const CycloSum& a, i64 exponent) {
    CycloSum out;
    for (auto [j, m] : a) out.push_back({static_cast<int>((exponent - j) % exponent), m});
    std::sort(out.begin(), out.end());
    return out;
}

inline CycloSum scale_lift(const CycloSum& a, int c) {
    CycloSum out = a;
    for (auto& [j, m] : out) m *= c;
    return out;
}

} // namespace detail

/// The real irreducible characters derived from a complex table, canonically
/// ordered by real degree, then type (R < C < H), then lift.
inline std::vector<RealIrreducible> real_irreducibles(const CharacterTable& T) {
    const int r = T.class_count();
    std::vector<RealIrreducible> out;
    std::vector<char> used(r, 0);
    for (int i = 0; i < r; ++i) {
        if (used[i]) continue;
        const auto& ch = T.chars[i];
        RealIrreducible u;
        if (ch.fs == 1) {
            used[i] = 1;
            u.type = SchurType::Real;
            u.schur_dim = 1;
            u.real_degree = ch.degree;
            u.values = ch.values;
            u.lift = ch.lift;
            u.constituents = {i};
        } else if (ch.fs == 0) {
            const int j = ch.conj_index;
            check_internal(j != i && !used[j], "conjugate pairing failure for complex type");
            used[i] = used[j] = 1;
            u.type = SchurType::Complex;
            u.schur_dim = 2;
            u.real_degree = 2 * ch.degree;
            u.values.resize(r);
            u.lift.resize(r);
            for (int k = 0; k < r; ++k) {
                u.values[k] = T.F.add(ch.values[k], T.chars[j].values[k]);
                u.lift[k] = detail::merge_lift(ch.lift[k], T.chars[j].lift[k]);
            }
            u.constituents = {std::min(i, j), std::max(i, j)};
        } else {
            used[i] = 1;
            u.type = SchurType::Quaternionic;
            u.schur_dim = 4;
            u.real_degree = 2 * ch.degree;
            u.values.resize(r);
            u.lift.resize(r);
            for (int k = 0; k < r; ++k) {
                u.values[k] = T.F.add(ch.values[k], ch.values[k]);
                u.lift[k] = detail::scale_lift(ch.lift[k], 2);
            }
            u.constituents = {i};
        }
        for (int k = 0; k < r; ++k)
            check_internal(u.lift[k] == detail::conj_lift(u.lift[k], T.exponent),
                           "real character lift not conjugation-invariant");
        out.push_back(std::move(u));
    }
    std::sort(out.begin(), out.end(), [](const RealIrreducible& a, const RealIrreducible& b) {
        if (a.real_degree != b.real_degree) return a.real_degree < b.real_degree;
        if (a.type != b.type) return schur_type_rank(a.type) < schur_type_rank(b.type);
        return a.lift < b.lift;
    });
    return out;
}

/// Complex table plus its real irreducibles; the unit every higher layer works
/// with.
struct RealTable {
    CharacterTable ct;
    std::vector<RealIrreducible> reals;

    GroupPtr group() const { return ct.group; }
    int real_count() const { return static_cast<int>(reals.size()); }

    ClassFunction real_char(int i) const { return ClassFunction{ct.group, ct.F, reals[i].values}; }

    /// Index of the trivial character (always real type, degree 1, all ones).
    int trivial_index() const {
        for (int i = 0; i < real_count(); ++i) {
            if (reals[i].real_degree != 1) continue;
            bool ones = true;
            for (i64 v : reals[i].values)
                if (v != 1) { ones = false; break; }
            if (ones) return i;
        }
        throw internal_error("trivial character missing");
    }
};

inline RealTable build_real_table(GroupPtr G, std::optional<i64> use_prime = std::nullopt) {
    RealTable t;
    t.ct = character_table(G, use_prime);
    t.reals = real_irreducibles(t.ct);
    return t;
}

/// Integer multiplicities of a genuine real character over the real
/// irreducibles: m_i = <f, chi_i> / schur_dim_i, with exactness verified.
inline std::vector<i64> decompose_real(const ClassFunction& f, const RealTable& T) {
    check_internal(same_group(f.group, T.ct.group) && f.F.p == T.ct.F.p, "decompose_real: table mismatch");
    std::vector<i64> mult(T.real_count());
    for (int i = 0; i < T.real_count(); ++i) {
        const i64 ip = inner_product(f, T.real_char(i));
        check_input(ip % T.reals[i].schur_dim == 0 && ip >= 0,
                    "decompose_real: input is not a real character");
        mult[i] = ip / T.reals[i].schur_dim;
    }
    for (int k = 0; k < T.ct.class_count(); ++k) {
        i64 acc = 0;
        for (int i = 0; i < T.real_count(); ++i)
            acc = f.F.add(acc, f.F.mul(f.F.norm(mult[i]), T.reals[i].values[k]));
        check_input(acc == f.F.norm(f.v[k]), "decompose_real: reconstruction mismatch");
    }
    return mult;
}

/// Index of the real irreducible with exactly these field values, if any.
inline std::optional<int> match_real(const RealTable& T, const std::vector<i64>& values) {
    for (int i = 0; i < T.real_count(); ++i)
        if (T.reals[i].values == values) return i;
    return std::nullopt;
}

} // namespace evb

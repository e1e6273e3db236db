#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "evb/group.hpp"
#include "evb/modp.hpp"

namespace evb {

/// Value of a character at one class, written over a fixed primitive
/// exponent-th root of unity z: sorted list of (exponent j, multiplicity m_j)
/// with m_j > 0 and sum of m_j equal to the degree.
using CycloSum = std::vector<std::pair<int, int>>;

struct ComplexCharacter {
    std::vector<i64> values;      // per class, in F_p
    int degree = 0;
    int fs = 0;                   // Frobenius–Schur indicator in {-1, 0, +1}
    std::vector<CycloSum> lift;   // per class
    int conj_index = -1;          // index of the complex-conjugate character
};

/// Exact complex character table of a finite group, computed as the common
/// eigenvectors of the class-sum matrices over the field of p elements
/// (Dixon–Schneider).  The prime satisfies p ≡ 1 (mod exponent) and p > 2|G|,
/// so degrees, multiplicities and indicators lift to unambiguous integers and
/// character values lift to exact cyclotomic expressions.
struct CharacterTable {
    GroupPtr group;
    Fp F;
    i64 exponent = 1;
    i64 theta = 1; // fixed primitive exponent-th root of unity in F_p
    std::vector<ComplexCharacter> chars;
    std::vector<int> inv_class;           // class -> class of inverses
    std::vector<std::vector<int>> pow_class; // [class][t] -> class of rep^t, t < exponent

    int class_count() const { return group->class_count(); }

    i64 value(int chr, int cls) const { return chars[chr].values[cls]; }

    /// Evaluate a cyclotomic sum at theta.
    i64 eval_lift(const CycloSum& s) const {
        i64 acc = 0;
        for (auto [j, m] : s) acc = F.add(acc, F.mul(F.norm(m), F.pow(theta, j)));
        return acc;
    }
};

namespace detail {

inline std::vector<FpMatrix> class_sum_matrices(const FiniteGroup& G, const Fp& F) {
    const int r = G.class_count();
    std::vector<FpMatrix> ms(r, FpMatrix(r, std::vector<i64>(r, 0)));
    for (int i = 0; i < r; ++i) {
        for (int k = 0; k < r; ++k) {
            const int zk = G.class_rep(k);
            for (int x : G.class_members(i)) {
                const int j = G.class_of(G.mul(G.inv(x), zk));
                ms[i][j][k] = F.add(ms[i][j][k], 1);
            }
        }
    }
    return ms;
}

inline std::vector<i64> mat_apply(const Fp& F, const FpMatrix& m, const std::vector<i64>& v) {
    const int n = static_cast<int>(m.size());
    std::vector<i64> w(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m[i][j] != 0 && v[j] != 0) w[i] = F.add(w[i], F.mul(m[i][j], v[j]));
    return w;
}

/// Split each current subspace into eigenspaces of m; returns the refined list.
inline std::vector<std::vector<std::vector<i64>>> split_by(
    const Fp& F, const FpMatrix& m,
    const std::vector<std::vector<std::vector<i64>>>& spaces) {
    std::vector<std::vector<std::vector<i64>>> out;
    for (const auto& basis : spaces) {
        const int s = static_cast<int>(basis.size());
        if (s == 1) { out.push_back(basis); continue; }
        const int r = static_cast<int>(basis[0].size());
        // coordinates of m restricted to the subspace
        FpMatrix bmat(r, std::vector<i64>(s));
        for (int row = 0; row < r; ++row)
            for (int col = 0; col < s; ++col) bmat[row][col] = basis[col][row];
        FpMatrix c(s, std::vector<i64>(s));
        for (int t = 0; t < s; ++t) {
            const auto w = mat_apply(F, m, basis[t]);
            const auto coords = fp_solve(F, bmat, w);
            for (int row = 0; row < s; ++row) c[row][t] = coords[row];
        }
        // characteristic polynomial via interpolation of det(xI - c)
        std::vector<i64> xs(s + 1), ys(s + 1);
        for (int t = 0; t <= s; ++t) {
            xs[t] = t;
            FpMatrix a = c;
            for (int d = 0; d < s; ++d) a[d][d] = F.sub(F.norm(t), c[d][d]);
            for (int row = 0; row < s; ++row)
                for (int col = 0; col < s; ++col)
                    if (row != col) a[row][col] = F.sub(0, c[row][col]);
            ys[t] = fp_det(F, a);
        }
        const auto poly = fp_interpolate(F, xs, ys);
        int found_dim = 0;
        for (i64 lam = 0; lam < F.p; ++lam) {
            i64 acc = 0;
            for (int d = static_cast<int>(poly.size()) - 1; d >= 0; --d)
                acc = F.add(F.mul(acc, lam), poly[d]);
            if (acc != 0) continue;
            FpMatrix shifted = c;
            for (int d = 0; d < s; ++d) shifted[d][d] = F.sub(shifted[d][d], lam);
            const auto ker = fp_kernel(F, shifted);
            check_internal(!ker.empty(), "charpoly root with empty eigenspace");
            std::vector<std::vector<i64>> sub;
            for (const auto& y : ker) {
                std::vector<i64> v(r, 0);
                for (int t = 0; t < s; ++t)
                    if (y[t] != 0)
                        for (int row = 0; row < r; ++row)
                            v[row] = F.add(v[row], F.mul(y[t], basis[t][row]));
                sub.push_back(std::move(v));
            }
            found_dim += static_cast<int>(sub.size());
            out.push_back(std::move(sub));
        }
        check_internal(found_dim == s, "class-sum matrix not diagonalizable");
    }
    return out;
}

inline i64 isqrt(i64 n) {
    i64 r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace detail

inline CharacterTable character_table(GroupPtr G, std::optional<i64> use_prime = std::nullopt) {
    CharacterTable T;
    T.group = G;
    T.exponent = G->exponent();
    const i64 n = G->order();
    check_input(n <= FiniteGroup::kOrderCap, "group too large for character table");
    if (use_prime) {
        T.F.p = *use_prime;
        check_internal(is_prime(T.F.p) && (T.F.p - 1) % T.exponent == 0 && T.F.p > 2 * n,
                       "forced prime unsuitable for this group");
    } else {
        T.F.p = find_character_prime(T.exponent, 2 * n);
    }
    const Fp& F = T.F;
    T.theta = F.pow(primitive_root(F), (F.p - 1) / T.exponent);

    const int r = G->class_count();
    T.inv_class.resize(r);
    for (int c = 0; c < r; ++c) T.inv_class[c] = G->class_of(G->inv(G->class_rep(c)));
    T.pow_class.assign(r, std::vector<int>(T.exponent));
    for (int c = 0; c < r; ++c) {
        int acc = 0;
        const int rep = G->class_rep(c);
        for (i64 t = 0; t < T.exponent; ++t) {
            T.pow_class[c][t] = G->class_of(acc);
            acc = G->mul(acc, rep);
        }
    }

    // Common eigenvectors of the class-sum matrices.
    const auto mats = detail::class_sum_matrices(*G, F);
    std::vector<std::vector<std::vector<i64>>> spaces;
    {
        std::vector<std::vector<i64>> full;
        for (int i = 0; i < r; ++i) {
            std::vector<i64> e(r, 0);
            e[i] = 1;
            full.push_back(std::move(e));
        }
        spaces.push_back(std::move(full));
    }
    for (int i = 1; i < r; ++i) {
        bool all_one = true;
        for (const auto& s : spaces)
            if (s.size() > 1) { all_one = false; break; }
        if (all_one) break;
        spaces = detail::split_by(F, mats[i], spaces);
    }
    check_internal(static_cast<int>(spaces.size()) == r,
                   "eigen-splitting did not separate all characters");

    const auto pcm2 = G->power_class_map(2);
    for (const auto& basis : spaces) {
        const auto& raw = basis[0];
        check_internal(raw[0] != 0, "central character vanishes at the identity class");
        const i64 scale = F.inv(raw[0]);
        std::vector<i64> omega(r);
        for (int k = 0; k < r; ++k) omega[k] = F.mul(raw[k], scale);

        i64 s = 0;
        for (int k = 0; k < r; ++k)
            s = F.add(s, F.mul(F.mul(omega[k], omega[T.inv_class[k]]),
                               F.inv(G->class_size(k))));
        const i64 d2 = F.lift(F.mul(F.norm(n), F.inv(s)));
        check_internal(d2 >= 1 && d2 <= n, "degree square out of range");
        const i64 d = detail::isqrt(d2);
        check_internal(d * d == d2, "degree square is not a perfect square");

        ComplexCharacter ch;
        ch.degree = static_cast<int>(d);
        ch.values.resize(r);
        for (int k = 0; k < r; ++k)
            ch.values[k] = F.mul(F.mul(F.norm(d), omega[k]), F.inv(G->class_size(k)));

        // Cyclotomic lift by discrete Fourier inversion over the power map.
        ch.lift.resize(r);
        const i64 e = T.exponent;
        const i64 einv = F.inv(F.norm(e));
        for (int k = 0; k < r; ++k) {
            int total = 0;
            for (i64 j = 0; j < e; ++j) {
                i64 acc = 0;
                for (i64 t = 0; t < e; ++t) {
                    const i64 neg = (e - (j * t) % e) % e;
                    acc = F.add(acc, F.mul(ch.values[T.pow_class[k][t]], F.pow(T.theta, neg)));
                }
                const i64 m = F.mul(acc, einv);
                check_internal(m <= d, "cyclotomic multiplicity exceeds degree");
                if (m > 0) ch.lift[k].push_back({static_cast<int>(j), static_cast<int>(m)});
                total += static_cast<int>(m);
            }
            check_internal(total == ch.degree, "cyclotomic multiplicities do not sum to degree");
            check_internal(T.eval_lift(ch.lift[k]) == ch.values[k],
                           "cyclotomic lift does not reproduce the field value");
        }

        // Frobenius–Schur indicator.
        i64 fs = 0;
        for (int k = 0; k < r; ++k)
            fs = F.add(fs, F.mul(F.norm(G->class_size(k)), ch.values[pcm2[k]]));
        const i64 ind = F.lift(F.mul(fs, F.inv(F.norm(n))));
        check_internal(ind >= -1 && ind <= 1, "Frobenius–Schur indicator outside {-1,0,1}");
        ch.fs = static_cast<int>(ind);

        T.chars.push_back(std::move(ch));
    }

    std::sort(T.chars.begin(), T.chars.end(), [](const ComplexCharacter& a,
                                                 const ComplexCharacter& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.lift < b.lift;
    });

    // Conjugate pairing and exactness checks.
    i64 degsum = 0;
    for (auto& ch : T.chars) degsum += static_cast<i64>(ch.degree) * ch.degree;
    check_internal(degsum == n, "sum of squared degrees differs from group order");
    for (int a = 0; a < r; ++a) {
        bool found = false;
        for (int b = 0; b < r; ++b) {
            bool eq = true;
            for (int k = 0; k < r; ++k)
                if (T.chars[b].values[k] != T.chars[a].values[T.inv_class[k]]) { eq = false; break; }
            if (eq) {
                T.chars[a].conj_index = b;
                found = true;
                break;
            }
        }
        check_internal(found, "complex conjugate character missing from table");
    }
    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            i64 acc = 0;
            for (int k = 0; k < r; ++k)
                acc = F.add(acc, F.mul(F.norm(G->class_size(k)),
                                       F.mul(T.chars[a].values[k],
                                             T.chars[b].values[T.inv_class[k]])));
            const i64 ip = F.mul(acc, F.inv(F.norm(n)));
            check_internal(ip == (a == b ? 1 : 0), "row orthogonality failure");
        }
    }
    return T;
}

/// The indicator is stored on the table; this recomputes it from scratch.
inline int frobenius_schur(const CharacterTable& T, int chr) {
    const auto& G = *T.group;
    const auto pcm2 = G.power_class_map(2);
    i64 acc = 0;
    for (int k = 0; k < G.class_count(); ++k)
        acc = T.F.add(acc, T.F.mul(T.F.norm(G.class_size(k)), T.chars[chr].values[pcm2[k]]));
    const i64 ind = T.F.lift(T.F.mul(acc, T.F.inv(T.F.norm(G.order()))));
    check_internal(ind >= -1 && ind <= 1, "Frobenius–Schur indicator outside {-1,0,1}");
    return static_cast<int>(ind);
}

} // namespace evb

#pragma once

#include <cstdint>
#include <vector>

#include "evb/errors.hpp"

namespace evb {

using i64 = std::int64_t;

/// Arithmetic in the field of p elements.  All character computations run
/// here; integers are recovered afterwards by symmetric lift, which is
/// unambiguous because every prime in use satisfies p > 2|G|.
struct Fp {
    i64 p = 2;

    i64 norm(i64 x) const { x %= p; return x < 0 ? x + p : x; }
    i64 add(i64 a, i64 b) const { a += b; return a >= p ? a - p : a; }
    i64 sub(i64 a, i64 b) const { a -= b; return a < 0 ? a + p : a; }
    i64 mul(i64 a, i64 b) const { return (a * b) % p; }
    i64 pow(i64 a, i64 e) const {
        a = norm(a);
        if (e < 0) { a = inv(a); e = -e; }
        i64 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    i64 inv(i64 a) const {
        a = norm(a);
        check_internal(a != 0, "inverse of zero in F_p");
        return pow(a, p - 2);
    }

    /// Symmetric lift into (-p/2, p/2).
    i64 lift(i64 x) const {
        x = norm(x);
        return x > p / 2 ? x - p : x;
    }
};

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Smallest prime p with p ≡ 1 (mod modulus) and p > floor.  The search bound
/// is generous; by Dirichlet such primes are plentiful, and for |G| ≤ 4096 the
/// bound is never approached.
inline i64 find_character_prime(i64 modulus, i64 floor) {
    constexpr i64 kSearchBound = 1'000'000'000;
    i64 p = (floor / modulus + 1) * modulus + 1;
    for (; p < kSearchBound; p += modulus)
        if (p > floor && is_prime(p)) return p;
    throw internal_error("no suitable character-table prime below search bound");
}

inline std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> fs;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

/// Smallest generator of the multiplicative group of F_p.
inline i64 primitive_root(const Fp& F) {
    const auto fs = prime_factors(F.p - 1);
    for (i64 g = 2; g < F.p; ++g) {
        bool ok = true;
        for (i64 q : fs)
            if (F.pow(g, (F.p - 1) / q) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw internal_error("no primitive root found");
}

using FpMatrix = std::vector<std::vector<i64>>; // row-major

inline FpMatrix fp_identity(int n) {
    FpMatrix m(n, std::vector<i64>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

/// Row echelon form in place; returns rank.  Column order is left-to-right.
inline int fp_row_reduce(const Fp& F, FpMatrix& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const i64 s = F.inv(m[rank][c]);
        for (int cc = c; cc < cols; ++cc) m[rank][cc] = F.mul(m[rank][cc], s);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const i64 f = m[r][c];
            for (int cc = c; cc < cols; ++cc)
                m[r][cc] = F.sub(m[r][cc], F.mul(f, m[rank][cc]));
        }
        ++rank;
    }
    return rank;
}

/// Basis of the null space of m (as column vectors of length cols).
inline std::vector<std::vector<i64>> fp_kernel(const Fp& F, FpMatrix m) {
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    fp_row_reduce(F, m);
    std::vector<int> pivot_col_of_row;
    std::vector<char> is_pivot(cols, 0);
    for (const auto& row : m) {
        int c = 0;
        while (c < cols && row[c] == 0) ++c;
        if (c < cols) { pivot_col_of_row.push_back(c); is_pivot[c] = 1; }
    }
    std::vector<std::vector<i64>> basis;
    for (int freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<i64> v(cols, 0);
        v[freec] = 1;
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v[pivot_col_of_row[r]] = F.sub(0, m[r][freec]);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline i64 fp_det(const Fp& F, FpMatrix m) {
    const int n = static_cast<int>(m.size());
    i64 det = 1;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != c) { std::swap(m[c], m[pivot]); det = F.sub(0, det); }
        det = F.mul(det, m[c][c]);
        const i64 s = F.inv(m[c][c]);
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const i64 f = F.mul(m[r][c], s);
            for (int cc = c; cc < n; ++cc) m[r][cc] = F.sub(m[r][cc], F.mul(f, m[c][cc]));
        }
    }
    return det;
}

/// Solve A x = b for a unique solution (A square or overdetermined with full
/// column rank).  Throws internal_error when the system is inconsistent or
/// underdetermined.
inline std::vector<i64> fp_solve(const Fp& F, FpMatrix a, std::vector<i64> b) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int r = 0; r < rows; ++r) a[r].push_back(F.norm(b[r]));
    fp_row_reduce(F, a);
    std::vector<i64> x(cols, 0);
    int seen = 0;
    for (int r = 0; r < rows; ++r) {
        int c = 0;
        while (c < cols && a[r][c] == 0) ++c;
        if (c == cols) {
            check_internal(a[r][cols] == 0, "inconsistent linear system");
            continue;
        }
        x[c] = a[r][cols];
        ++seen;
    }
    check_internal(seen == cols, "underdetermined linear system");
    return x;
}

/// Coefficients (low to high) of the monic polynomial of degree n through the
/// points (xs[i], ys[i]), n+1 points, via Newton's divided differences.
inline std::vector<i64> fp_interpolate(const Fp& F, const std::vector<i64>& xs,
                                       const std::vector<i64>& ys) {
    const int n = static_cast<int>(xs.size());
    std::vector<i64> coef = ys; // divided differences in place
    for (int level = 1; level < n; ++level)
        for (int i = n - 1; i >= level; --i)
            coef[i] = F.mul(F.sub(coef[i], coef[i - 1]),
                            F.inv(F.sub(xs[i], xs[i - level])));
    // Horner expansion of the Newton form.
    std::vector<i64> poly{coef[n - 1]};
    for (int i = n - 2; i >= 0; --i) {
        poly.insert(poly.begin(), 0);
        for (std::size_t k = 0; k + 1 < poly.size(); ++k)
            poly[k] = F.sub(poly[k], F.mul(xs[i], poly[k + 1]));
        poly[0] = F.add(poly[0], coef[i]);
    }
    return poly;
}

} // namespace evb

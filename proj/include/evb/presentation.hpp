#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "evb/errors.hpp"
#include "evb/modp.hpp"

namespace evb {

/// One summand of a fiber module, as a multiple of an irreducible of the
/// relevant stabilizer (indices refer to that group's real table).
struct FiberComponent {
    int irr_index = -1;
    int mult = 1;

    friend bool operator==(const FiberComponent& a, const FiberComponent& b) {
        return a.irr_index == b.irr_index && a.mult == b.mult;
    }
};

struct BundleGenerator {
    std::string name;
    int fiber_mult = 1;                   // multiple of chi in the fiber H-module
    std::vector<FiberComponent> at_one;   // fiber module at z = 1 (at H when cyclic)
    std::vector<FiberComponent> at_mu;    // fiber module at z = mu (dihedral only)
    bool trivial = false;
};

/// Formal additive relation sum(lhs_i * g_i) = sum(rhs_i * g_i).
struct Relation {
    std::vector<i64> lhs, rhs;
};

struct SemigroupPresentation {
    std::vector<BundleGenerator> generators;
    std::vector<Relation> relations;
};

/// The five structure shapes, keyed by the pair of extension counts.  The
/// exceptional two-generator shape (2X+ = 2X-) is requested with e = (-1,-1).
inline SemigroupPresentation presentation_shape(int e_one, int e_mu,
                                                const std::string& base = "R") {
    SemigroupPresentation p;
    auto gen = [&](const std::string& suffix, int fm) {
        BundleGenerator g;
        g.name = base + suffix;
        g.fiber_mult = fm;
        p.generators.push_back(std::move(g));
    };
    if (e_one == -1 && e_mu == -1) {
        gen("+", 1);
        gen("-", 1);
        p.relations.push_back({{2, 0}, {0, 2}});
        return p;
    }
    const std::pair<int, int> e{e_one, e_mu};
    if (e == std::pair{1, 1} || e == std::pair{0, 0} || e == std::pair{1, 0} ||
        e == std::pair{0, 1}) {
        gen("", e == std::pair{1, 1} ? 1 : 2);
    } else if (e == std::pair{2, 1} || e == std::pair{1, 2}) {
        gen("+", 1);
        gen("-", 1);
    } else if (e == std::pair{2, 0} || e == std::pair{0, 2}) {
        gen("~0", 2);
        gen("~+", 2);
        gen("~-", 2);
        p.relations.push_back({{2, 0, 0}, {0, 1, 1}});
    } else if (e == std::pair{2, 2}) {
        gen("++", 1);
        gen("+-", 1);
        gen("-+", 1);
        gen("--", 1);
        p.relations.push_back({{1, 0, 0, 1}, {0, 1, 1, 0}});
    } else {
        throw input_error("no presentation for extension counts (" +
                          std::to_string(e_one) + "," + std::to_string(e_mu) + ")");
    }
    return p;
}

/// Brute-force enumeration of the semigroup elements with total fiber
/// multiplicity m: all generator multisets of that weight, merged under the
/// relation moves in both directions.
struct EnumeratedElement {
    std::vector<i64> representative;     // lexicographically least member state
    std::size_t orbit_size = 0;
};

inline std::vector<EnumeratedElement> enumerate_presentation(
    const SemigroupPresentation& p, i64 m) {
    const int g = static_cast<int>(p.generators.size());
    std::vector<std::vector<i64>> states;
    std::vector<i64> cur(g, 0);
    auto emit = [&](auto&& self, int i, i64 remaining) -> void {
        if (i == g) {
            if (remaining == 0) states.push_back(cur);
            return;
        }
        const i64 w = p.generators[i].fiber_mult;
        for (i64 c = 0; c * w <= remaining; ++c) {
            cur[i] = c;
            self(self, i + 1, remaining - c * w);
        }
        cur[i] = 0;
    };
    emit(emit, 0, m);
    std::sort(states.begin(), states.end());

    std::map<std::vector<i64>, int> index;
    for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = static_cast<int>(i);
    std::vector<int> parent(states.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    auto apply = [&](const std::vector<i64>& s, const std::vector<i64>& from,
                     const std::vector<i64>& to) -> std::optional<std::vector<i64>> {
        std::vector<i64> t = s;
        for (int i = 0; i < g; ++i) {
            t[i] -= from[i];
            if (t[i] < 0) return std::nullopt;
            t[i] += to[i];
        }
        return t;
    };
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (const auto& rel : p.relations) {
            if (auto t = apply(states[i], rel.lhs, rel.rhs)) unite(static_cast<int>(i), index.at(*t));
            if (auto t = apply(states[i], rel.rhs, rel.lhs)) unite(static_cast<int>(i), index.at(*t));
        }
    }
    std::map<int, EnumeratedElement> comps;
    for (std::size_t i = 0; i < states.size(); ++i) {
        auto& c = comps[find(static_cast<int>(i))];
        if (c.orbit_size == 0 || states[i] < c.representative) c.representative = states[i];
        ++c.orbit_size;
    }
    std::vector<EnumeratedElement> out;
    for (auto& [root, el] : comps) out.push_back(std::move(el));
    std::sort(out.begin(), out.end(), [](const EnumeratedElement& a, const EnumeratedElement& b) {
        return a.representative < b.representative;
    });
    return out;
}

inline i64 enumerate_count(const SemigroupPresentation& p, i64 m) {
    return static_cast<i64>(enumerate_presentation(p, m).size());
}

/// Display form "L++ + L-- = L+- + L-+".
inline std::string relation_string(const SemigroupPresentation& p, const Relation& r) {
    auto side = [&](const std::vector<i64>& coef) {
        std::string s;
        for (std::size_t i = 0; i < coef.size(); ++i) {
            if (coef[i] == 0) continue;
            if (!s.empty()) s += " + ";
            if (coef[i] != 1) s += std::to_string(coef[i]) + "*";
            s += p.generators[i].name;
        }
        return s.empty() ? std::string("0") : s;
    };
    return side(r.lhs) + " = " + side(r.rhs);
}

} // namespace evb

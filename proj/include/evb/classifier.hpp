#pragma once

#include <memory>
#include <string>
#include <vector>

#include "evb/circle_action.hpp"
#include "evb/extensions.hpp"
#include "evb/presentation.hpp"

namespace evb {

/// The two regimes in which fiber data fails to separate bundle classes:
/// CaseA: image inside SO(2) with a real-type fiber character;
/// CaseB: dihedral image, real-type character with no extension at either
/// marked point.  Everywhere else the fiber-restriction map is injective.
enum class CaseKind { Generic, CaseA, CaseB };

inline const char* case_kind_name(CaseKind k) {
    switch (k) {
        case CaseKind::Generic: return "generic";
        case CaseKind::CaseA: return "case_a";
        case CaseKind::CaseB: return "case_b";
    }
    return "?";
}

/// Classification record for one orbit of irreducible fiber characters.
struct IsotypicalClass {
    int chi_index = -1;                  // representative, canonical least
    std::vector<int> orbit;              // orbit of chi in Irr(H)
    Subgroup isotropy;                   // G_chi inside the acting group
    CircleAction restricted;             // canonical action of the isotropy group
    Subgroup h_in_one, h_in_mu;          // H inside K_1 / K_mu (dihedral only)
    int e_one = 1, e_mu = 1;
    CaseKind kind = CaseKind::Generic;
    SemigroupPresentation presentation;
    int fiber_data_multiplicity = 1;     // bundle classes sharing one fiber datum
    std::vector<i64> counts;             // counts[m-1] = N(m), m = 1..m_bound
    std::vector<std::string> warnings;
};

struct Report {
    GroupPtr group;
    CircleAction action;                 // canonical form of the input action
    std::shared_ptr<TableCache> cache;   // keeps every table alive
    const RealTable* h_table = nullptr;  // real irreducibles of the kernel H
    std::vector<IsotypicalClass> classes;
    int line_bundle_class = -1;          // index of the trivial-fiber orbit
    int m_bound = 6;
};

// ---------------------------------------------------------------------------
// orbits of Irr(H)

struct OrbitData {
    int rep = -1;
    std::vector<int> orbit;
    Subgroup isotropy;
};

/// Orbits of the conjugation action on the real irreducible characters of the
/// kernel, each with its isotropy subgroup (always containing H).
inline std::vector<OrbitData> real_irr_orbits(const CircleAction& action,
                                              const RealTable& h_table) {
    check_input(action.canonical, "orbit decomposition requires a canonical action");
    const GroupPtr G = action.group;
    const Subgroup& H = action.kernel;
    const auto props = subgroup_props(*G, H);

    const int nreal = h_table.real_count();
    // conj_to[u][r]: the irreducible u is sent to by conjugation with coset rep r
    std::vector<std::vector<int>> conj_to(nreal);
    for (int u = 0; u < nreal; ++u) {
        conj_to[u].reserve(props.coset_reps.size());
        for (int r : props.coset_reps) {
            const auto cf = conjugate_cf(h_table.real_char(u), H, r);
            const auto idx = match_real(h_table, cf.v);
            check_internal(idx.has_value(), "conjugation left the set of irreducibles");
            conj_to[u].push_back(*idx);
        }
    }
    std::vector<char> seen(nreal, 0);
    std::vector<OrbitData> orbits;
    for (int u = 0; u < nreal; ++u) {
        if (seen[u]) continue;
        OrbitData od;
        for (int v : conj_to[u])
            if (!seen[v]) { seen[v] = 1; od.orbit.push_back(v); }
        std::sort(od.orbit.begin(), od.orbit.end());
        od.rep = od.orbit.front();
        std::vector<int> members;
        for (std::size_t ri = 0; ri < props.coset_reps.size(); ++ri) {
            if (conj_to[od.rep][ri] != od.rep) continue;
            for (int h : H.members) members.push_back(G->mul(props.coset_reps[ri], h));
        }
        od.isotropy = subgroup_from_members(G, members);
        check_internal(od.isotropy.order() * static_cast<int>(od.orbit.size()) == G->order(),
                       "orbit-stabilizer mismatch");
        orbits.push_back(std::move(od));
    }
    return orbits;
}

// ---------------------------------------------------------------------------
// feasibility (the possible extension-count pairs)

/// The admissible (e_one, e_mu) cells: a cyclic image forces (1,1) (the second
/// count is 1 by convention); over a dihedral image the character's type rules
/// cells out — real type admits (0,0),(2,0),(0,2),(2,2); complex type admits
/// all nine; quaternionic type admits (1,1),(2,1),(1,2),(2,2).
inline bool feasibility_check(ImageKind image, SchurType type, int e_one, int e_mu) {
    if (e_one < 0 || e_one > 2 || e_mu < 0 || e_mu > 2) return false;
    if (image == ImageKind::Cyclic) return e_one == 1 && e_mu == 1;
    switch (type) {
        case SchurType::Real:
            return (e_one == 0 || e_one == 2) && (e_mu == 0 || e_mu == 2);
        case SchurType::Complex:
            return true;
        case SchurType::Quaternionic:
            return e_one >= 1 && e_mu >= 1;
    }
    return false;
}

// ---------------------------------------------------------------------------
// presentations

namespace detail {

inline std::vector<FiberComponent> doubled(int irr) { return {{irr, 2}}; }
inline std::vector<FiberComponent> single(int irr) { return {{irr, 1}}; }
inline std::vector<FiberComponent> pair_sum(int a, int b) { return {{a, 1}, {b, 1}}; }

} // namespace detail

/// Generators and relations of the pair semigroup Rep(K_1, K_mu, chi),
/// with fiber modules filled in from the extension data at each point.
inline SemigroupPresentation pair_presentation(const ExtensionCount& at_one,
                                               const ExtensionCount& at_mu,
                                               const std::string& base = "R") {
    using detail::doubled;
    using detail::pair_sum;
    using detail::single;
    const int e1 = at_one.e, e2 = at_mu.e;
    SemigroupPresentation p = presentation_shape(e1, e2, base);
    auto& g = p.generators;
    if (e1 == 0 && e2 == 0) {
        g[0].at_one = single(*at_one.induced_class);
        g[0].at_mu = single(*at_mu.induced_class);
    } else if (e1 == 1 && e2 == 0) {
        g[0].at_one = doubled(at_one.extensions[0]);
        g[0].at_mu = single(*at_mu.induced_class);
    } else if (e1 == 0 && e2 == 1) {
        g[0].at_one = single(*at_one.induced_class);
        g[0].at_mu = doubled(at_mu.extensions[0]);
    } else if (e1 == 1 && e2 == 1) {
        g[0].at_one = single(at_one.extensions[0]);
        g[0].at_mu = single(at_mu.extensions[0]);
    } else if (e1 == 2 && e2 == 1) {
        for (int s = 0; s < 2; ++s) {
            g[s].at_one = single(at_one.extensions[s]);
            g[s].at_mu = single(at_mu.extensions[0]);
        }
    } else if (e1 == 1 && e2 == 2) {
        for (int s = 0; s < 2; ++s) {
            g[s].at_one = single(at_one.extensions[0]);
            g[s].at_mu = single(at_mu.extensions[s]);
        }
    } else if (e1 == 2 && e2 == 0) {
        g[0].at_one = pair_sum(at_one.extensions[0], at_one.extensions[1]);
        g[1].at_one = doubled(at_one.extensions[0]);
        g[2].at_one = doubled(at_one.extensions[1]);
        for (int i = 0; i < 3; ++i) g[i].at_mu = single(*at_mu.induced_class);
    } else if (e1 == 0 && e2 == 2) {
        g[0].at_mu = pair_sum(at_mu.extensions[0], at_mu.extensions[1]);
        g[1].at_mu = doubled(at_mu.extensions[0]);
        g[2].at_mu = doubled(at_mu.extensions[1]);
        for (int i = 0; i < 3; ++i) g[i].at_one = single(*at_one.induced_class);
    } else if (e1 == 2 && e2 == 2) {
        // order ++, +-, -+, --
        const int order[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
        for (int i = 0; i < 4; ++i) {
            g[i].at_one = single(at_one.extensions[order[i][0]]);
            g[i].at_mu = single(at_mu.extensions[order[i][1]]);
        }
    } else {
        throw input_error("infeasible extension pair for a presentation");
    }
    return p;
}

/// Total fiber module of a formal combination, per marked point.
inline std::vector<i64> fiber_vector(const SemigroupPresentation& p,
                                     const std::vector<i64>& coeffs, bool at_mu,
                                     int table_size) {
    std::vector<i64> acc(table_size, 0);
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        const auto& comps = at_mu ? p.generators[i].at_mu : p.generators[i].at_one;
        for (const auto& c : comps) acc[c.irr_index] += coeffs[i] * c.mult;
    }
    return acc;
}

/// Both sides of every relation must carry the same fiber module at each
/// marked point and the same total multiple of chi.
inline void check_relation_balance(const SemigroupPresentation& p, int size_one, int size_mu) {
    for (const auto& rel : p.relations) {
        i64 lm = 0, rm = 0;
        for (std::size_t i = 0; i < p.generators.size(); ++i) {
            lm += rel.lhs[i] * p.generators[i].fiber_mult;
            rm += rel.rhs[i] * p.generators[i].fiber_mult;
        }
        check_internal(lm == rm, "relation changes the fiber multiplicity");
        check_internal(fiber_vector(p, rel.lhs, false, size_one) ==
                           fiber_vector(p, rel.rhs, false, size_one),
                       "relation unbalanced at z = 1");
        if (size_mu > 0)
            check_internal(fiber_vector(p, rel.lhs, true, size_mu) ==
                               fiber_vector(p, rel.rhs, true, size_mu),
                           "relation unbalanced at z = mu");
    }
}

// ---------------------------------------------------------------------------
// counting

/// Closed-form number of isomorphism classes with fiber character m*chi.
inline i64 count_classes(CaseKind kind, int e_one, int e_mu, i64 m) {
    check_input(m >= 1, "count_classes requires m >= 1");
    if (kind == CaseKind::CaseA) return 2;
    if (kind == CaseKind::CaseB) return m % 2 == 0 ? 2 : 0;
    if (m % 2 == 1 && (e_one == 0 || e_mu == 0)) return 0;
    if (e_one == 2 && e_mu == 2) return (m + 1) * (m + 1);
    if (e_one == 2 || e_mu == 2) return m + 1;
    return 1;
}

// ---------------------------------------------------------------------------
// triviality

namespace detail {

inline ClassFunction fiber_class_function(const std::vector<FiberComponent>& comps,
                                          const RealTable& table) {
    ClassFunction f{table.ct.group, table.ct.F, std::vector<i64>(table.ct.class_count(), 0)};
    for (const auto& c : comps)
        f = add_cf(f, scale_cf(table.real_char(c.irr_index), c.mult));
    return f;
}

inline bool is_tilde_zero(const std::string& name) {
    return name.size() >= 2 && name.substr(name.size() - 2) == "~0";
}

} // namespace detail

/// Decide triviality of every generator: a generator is trivial exactly when
/// some module of the isotropy group restricts to its fiber data at the marked
/// points.  The structure theorems for the odd/even image order are enforced
/// as assertions on the outcome.
inline void generator_triviality(IsotypicalClass& cls, const RealTable& gx_table,
                                 const RealTable& h_table, TableCache& cache) {
    auto matching_module_exists = [&](const BundleGenerator& gen) {
        std::vector<RestrictionConstraint> constraints;
        if (cls.restricted.kind == ImageKind::Cyclic) {
            constraints.push_back({&cls.restricted.kernel,
                                   detail::fiber_class_function(gen.at_one, h_table)});
        } else {
            constraints.push_back(
                {&*cls.restricted.stab_one,
                 detail::fiber_class_function(gen.at_one, cache.get(cls.restricted.stab_one->own))});
            constraints.push_back(
                {&*cls.restricted.stab_mu,
                 detail::fiber_class_function(gen.at_mu, cache.get(cls.restricted.stab_mu->own))});
        }
        return !solve_restriction_system(gx_table, constraints, cache).empty();
    };

    auto& gens = cls.presentation.generators;
    const bool n_odd = cls.restricted.n % 2 == 1;

    if (cls.kind == CaseKind::Generic) {
        for (auto& g : gens) g.trivial = matching_module_exists(g);
        if (n_odd) {
            if (gens.size() <= 3) {
                for (const auto& g : gens)
                    check_internal(g.trivial,
                                   "odd image order: every generator of this shape must be trivial");
            } else {
                const bool diag = gens[0].trivial && gens[3].trivial && !gens[1].trivial &&
                                  !gens[2].trivial;
                const bool anti = gens[1].trivial && gens[2].trivial && !gens[0].trivial &&
                                  !gens[3].trivial;
                check_internal(diag || anti,
                               "odd image order: exactly one diagonal pair must be trivial");
            }
        } else {
            int seen = -1;
            for (const auto& g : gens) {
                if (detail::is_tilde_zero(g.name)) continue;
                const int t = g.trivial ? 1 : 0;
                if (seen < 0) seen = t;
                check_internal(seen == t,
                               "even image order: generators must be uniformly trivial or not");
            }
        }
    } else {
        // Both exceptional generators carry identical fiber data; the solver
        // answers for the pair.  With odd n the matching module is forced to
        // exist and only the canonical '+' generator is trivial; with even n
        // the two generators are uniform.
        const bool exists = matching_module_exists(gens[0]);
        if (n_odd) {
            check_internal(exists,
                           "exceptional class with odd image order must admit a matching module");
            gens[0].trivial = true;
            gens[1].trivial = false;
        } else {
            gens[0].trivial = gens[1].trivial = exists;
        }
    }
}

// ---------------------------------------------------------------------------
// the per-orbit pipeline

inline IsotypicalClass classify_class(const CircleAction& action, const RealTable& h_table,
                                      const OrbitData& orbit, int m_bound, TableCache& cache) {
    IsotypicalClass cls;
    cls.chi_index = orbit.rep;
    cls.orbit = orbit.orbit;
    cls.isotropy = orbit.isotropy;
    cls.restricted = restrict_action(action, cls.isotropy);
    check_internal(cls.restricted.kernel.own->root_indices() ==
                       action.kernel.own->root_indices(),
                   "restricted action changed the kernel");

    const RealTable& gx_table = cache.get(cls.isotropy.own);
    const SchurType type = h_table.reals[cls.chi_index].type;

    if (cls.restricted.kind == ImageKind::Cyclic) {
        cls.e_one = cls.e_mu = 1; // convention for images inside SO(2)
        cls.kind = type == SchurType::Real ? CaseKind::CaseA : CaseKind::Generic;
        if (cls.kind == CaseKind::CaseA) {
            cls.presentation = presentation_shape(-1, -1, "N");
            for (auto& g : cls.presentation.generators)
                g.at_one = detail::single(cls.chi_index);
        } else {
            cls.presentation = presentation_shape(1, 1, "L");
            cls.presentation.generators[0].at_one = detail::single(cls.chi_index);
        }
        check_relation_balance(cls.presentation, h_table.real_count(), 0);
    } else {
        const Subgroup& k_one = *cls.restricted.stab_one;
        const Subgroup& k_mu = *cls.restricted.stab_mu;
        auto embed_kernel = [&](const Subgroup& k) {
            std::vector<int> members;
            for (int h : cls.restricted.kernel.members) {
                const int idx = k.from_parent[h];
                check_internal(idx >= 0, "kernel not contained in a marked-point stabilizer");
                members.push_back(idx);
            }
            return subgroup_from_members(k.own, members);
        };
        cls.h_in_one = embed_kernel(k_one);
        cls.h_in_mu = embed_kernel(k_mu);
        const ExtensionCount x1 =
            count_extensions(cache.get(k_one.own), cls.h_in_one, h_table, cls.chi_index);
        const ExtensionCount xmu =
            count_extensions(cache.get(k_mu.own), cls.h_in_mu, h_table, cls.chi_index);
        cls.e_one = x1.e;
        cls.e_mu = xmu.e;
        cls.kind = (type == SchurType::Real && x1.e == 0 && xmu.e == 0) ? CaseKind::CaseB
                                                                        : CaseKind::Generic;
        if (cls.kind == CaseKind::CaseB) {
            cls.presentation = presentation_shape(-1, -1, "M");
            for (auto& g : cls.presentation.generators) {
                g.fiber_mult = 2;
                g.at_one = detail::single(*x1.induced_class);
                g.at_mu = detail::single(*xmu.induced_class);
            }
            cls.warnings.push_back(
                "case B: every bundle in this class has an even multiple of the fiber "
                "character; odd m admits no bundle");
        } else {
            cls.presentation = pair_presentation(x1, xmu, "L");
        }
        check_relation_balance(cls.presentation, cache.get(k_one.own).real_count(),
                               cache.get(k_mu.own).real_count());
    }

    check_internal(feasibility_check(cls.restricted.kind, type, cls.e_one, cls.e_mu),
                   "classification produced an infeasible extension tuple");

    cls.fiber_data_multiplicity = cls.kind == CaseKind::Generic ? 1 : 2;
    cls.counts.clear();
    for (int m = 1; m <= m_bound; ++m)
        cls.counts.push_back(count_classes(cls.kind, cls.e_one, cls.e_mu, m));

    generator_triviality(cls, gx_table, h_table, cache);
    return cls;
}

// ---------------------------------------------------------------------------
// line bundles and whole-report assembly

/// The trivial-fiber orbit's triviality pattern, with the closed-form
/// statements for line bundles enforced: over Z_n both line bundles are
/// trivial for even n and exactly one for odd n; over D_n all four are
/// trivial for even n and exactly the two label-diagonal ones for odd n.
inline const IsotypicalClass& line_bundle_table(const Report& rep) {
    check_internal(rep.line_bundle_class >= 0, "missing trivial-fiber class");
    const IsotypicalClass& cls = rep.classes[rep.line_bundle_class];
    check_internal(cls.isotropy.order() == rep.group->order(),
                   "trivial character must be invariant under the whole group");
    const bool n_odd = cls.restricted.n % 2 == 1;
    const auto& g = cls.presentation.generators;
    if (cls.restricted.kind == ImageKind::Cyclic) {
        check_internal(cls.kind == CaseKind::CaseA, "trivial-fiber cyclic class must be CaseA");
        if (n_odd)
            check_internal(g[0].trivial && !g[1].trivial,
                           "odd n: exactly one trivial line bundle expected");
        else
            check_internal(g[0].trivial && g[1].trivial,
                           "even n: both line bundles must be trivial");
    } else {
        check_internal(cls.e_one == 2 && cls.e_mu == 2 && g.size() == 4,
                       "trivial-fiber dihedral class must sit in the (2,2) cell");
        if (n_odd)
            check_internal(g[0].trivial && g[3].trivial && !g[1].trivial && !g[2].trivial,
                           "odd n: exactly the label-diagonal line bundles are trivial");
        else
            check_internal(g[0].trivial && g[1].trivial && g[2].trivial && g[3].trivial,
                           "even n: all four line bundles must be trivial");
    }
    return cls;
}

inline Report classify(GroupPtr G, const std::vector<OrthogonalElement>& gen_images,
                       int m_bound) {
    check_input(m_bound >= 1, "m bound must be positive");
    Report rep;
    rep.group = G;
    rep.m_bound = m_bound;
    rep.action = canonical_form(build_action(G, gen_images));
    rep.cache = std::make_shared<TableCache>();
    rep.cache->p = find_character_prime(G->exponent(), 2 * G->order());
    rep.h_table = &rep.cache->get(rep.action.kernel.own);

    const auto orbits = real_irr_orbits(rep.action, *rep.h_table);
    std::size_t covered = 0;
    for (const auto& od : orbits) {
        rep.classes.push_back(classify_class(rep.action, *rep.h_table, od, m_bound, *rep.cache));
        covered += od.orbit.size();
    }
    check_internal(covered == static_cast<std::size_t>(rep.h_table->real_count()),
                   "orbits do not cover Irr(H) exactly once");

    const int triv = rep.h_table->trivial_index();
    for (std::size_t i = 0; i < rep.classes.size(); ++i)
        if (rep.classes[i].chi_index == triv) rep.line_bundle_class = static_cast<int>(i);
    line_bundle_table(rep); // runs the line-bundle assertions
    return rep;
}

// ---------------------------------------------------------------------------
// complex structures on an exceptional bundle (pure formulas)

/// Connected-component counts for complex structures compatible with k copies
/// of the exceptional fiber: the complex-structure space on the complex side
/// has k+1 components against 2 on the real side; their distribution over the
/// two real components and the resulting count of inequivalent invariant
/// complex structures depend only on the parity of k.  For even k both
/// admissible counts are returned; the data does not select one.
struct ComplexStructureCounts {
    i64 cplx_components = 0;
    int real_components = 2;
    std::pair<i64, i64> distribution;
    std::vector<i64> cs_values;
};

inline ComplexStructureCounts complex_structure_counts(i64 k) {
    check_input(k >= 1, "complex_structure_counts requires k >= 1");
    ComplexStructureCounts c;
    c.cplx_components = k + 1;
    if (k % 2 == 1) {
        c.distribution = {(k + 1) / 2, (k + 1) / 2};
        c.cs_values = {(k + 1) * (k + 1) / 2};
    } else {
        c.distribution = {k / 2, k / 2 + 1};
        c.cs_values = {k * (k / 2 + 1), k * (k / 2 + 1) + 1};
    }
    return c;
}

/// Number of distinct fiber-data vectors among the semigroup elements of total
/// multiplicity m (the image size of the fiber-restriction map there).
inline i64 distinct_fiber_data(const IsotypicalClass& cls, i64 m, int size_one, int size_mu) {
    const auto elements = enumerate_presentation(cls.presentation, m);
    std::vector<std::vector<i64>> data;
    for (const auto& el : elements) {
        auto v = fiber_vector(cls.presentation, el.representative, false, size_one);
        if (size_mu > 0) {
            const auto w = fiber_vector(cls.presentation, el.representative, true, size_mu);
            v.insert(v.end(), w.begin(), w.end());
        }
        data.push_back(std::move(v));
    }
    std::sort(data.begin(), data.end());
    data.erase(std::unique(data.begin(), data.end()), data.end());
    return static_cast<i64>(data.size());
}

} // namespace evb

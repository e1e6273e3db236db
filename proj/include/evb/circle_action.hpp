#pragma once

#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "evb/group.hpp"
#include "evb/orthogonal.hpp"

namespace evb {

enum class ImageKind { Cyclic, Dihedral };

inline const char* image_kind_name(ImageKind k) {
    return k == ImageKind::Cyclic ? "cyclic" : "dihedral";
}

/// A homomorphism rho: G -> O(2) together with the data the classification
/// needs: the kernel H, the image type (Z_n inside SO(2) or the dihedral group
/// D_n), and — once in canonical position — the stabilizers of the two marked
/// points z = 1 and z = e^{i*pi/n}.
///
/// Canonical position means the image is the standard Z_n or D_n: it contains
/// Rot(1/n), and Refl(0) when dihedral.  For a dihedral image with n = 1 both
/// marked points lie on the axis of the unique reflection, so the two
/// stabilizers coincide.
struct CircleAction {
    GroupPtr group;
    std::vector<OrthogonalElement> rho; // per element
    Subgroup kernel;                    // H
    ImageKind kind = ImageKind::Cyclic;
    int n = 1;
    Rational offset{0, 1};              // rotation applied during canonicalization
    bool canonical = false;
    std::optional<Subgroup> stab_one;   // K_1 (canonical actions only)
    std::optional<Subgroup> stab_mu;    // K_mu (canonical dihedral actions only)
};

enum class MarkedPoint { One, Mu };

namespace detail {

inline void finish_action(CircleAction& a) {
    const FiniteGroup& G = *a.group;
    // homomorphism property over the whole Cayley table
    for (int i = 0; i < G.order(); ++i) {
        for (int j = 0; j < G.order(); ++j) {
            if (!(a.rho[G.mul(i, j)] == o2_compose(a.rho[i], a.rho[j]))) {
                throw input_error("assignment is not a homomorphism (inconsistent at element " +
                                  std::to_string(G.mul(i, j)) + ")");
            }
        }
    }
    std::vector<int> kernel_members;
    std::set<OrthogonalElement> image;
    for (int i = 0; i < G.order(); ++i) {
        if (a.rho[i].is_identity()) kernel_members.push_back(i);
        image.insert(a.rho[i]);
    }
    a.kernel = subgroup_from_members(a.group, kernel_members);

    bool has_reflection = false;
    std::int64_t lcm_den = 1;
    int rotations = 0;
    for (const auto& o : image) {
        if (o.is_rotation()) {
            ++rotations;
            lcm_den = std::lcm(lcm_den, o.q.den);
        } else {
            has_reflection = true;
        }
    }
    a.kind = has_reflection ? ImageKind::Dihedral : ImageKind::Cyclic;
    a.n = static_cast<int>(lcm_den);
    check_internal(rotations == a.n, "image rotations do not form a cyclic group");
    check_internal(static_cast<int>(image.size()) == (has_reflection ? 2 * a.n : a.n),
                   "image size mismatch");
}

inline Subgroup preimage_stabilizer(const CircleAction& a, const OrthogonalElement& refl) {
    std::vector<int> members;
    for (int i = 0; i < a.group->order(); ++i)
        if (a.rho[i].is_identity() || a.rho[i] == refl) members.push_back(i);
    return subgroup_from_members(a.group, members);
}

inline void compute_stabilizers(CircleAction& a) {
    if (a.kind == ImageKind::Cyclic) {
        // only the identity fixes z = 1 inside SO(2)
        a.stab_one = a.kernel;
        a.stab_mu.reset();
        return;
    }
    a.stab_one = preimage_stabilizer(a, OrthogonalElement::reflection(Rational(0, 1)));
    a.stab_mu = preimage_stabilizer(a, OrthogonalElement::reflection(Rational(1, a.n)));
    check_internal(a.stab_one->order() == 2 * a.kernel.order() &&
                       a.stab_mu->order() == 2 * a.kernel.order(),
                   "marked-point stabilizers must contain H with index two");
}

} // namespace detail

/// Extend a generator assignment along the closure words and validate it.
inline CircleAction build_action(GroupPtr G,
                                 const std::vector<OrthogonalElement>& gen_images) {
    check_input(G->has_bfs_words(), "build_action requires a generated group");
    check_input(gen_images.size() == G->generators().size(),
                "one orthogonal image per generator required");
    CircleAction a;
    a.group = G;
    a.rho.resize(G->order());
    a.rho[0] = OrthogonalElement::identity();
    for (int i = 1; i < G->order(); ++i) {
        auto [parent, slot] = G->bfs_edge(i);
        a.rho[i] = o2_compose(a.rho[parent], gen_images[slot]);
    }
    detail::finish_action(a);
    return a;
}

/// Internal entry point for restricted actions: rho given on every element.
inline CircleAction action_from_map(GroupPtr G, std::vector<OrthogonalElement> rho) {
    CircleAction a;
    a.group = G;
    a.rho = std::move(rho);
    detail::finish_action(a);
    return a;
}

/// Rotate coordinates so the image becomes the standard Z_n or D_n, and
/// compute the marked-point stabilizers there.  For a dihedral image the
/// conjugating rotation sends the reflection of least parameter to Refl(0).
inline CircleAction canonical_form(const CircleAction& action) {
    CircleAction a = action;
    if (a.kind == ImageKind::Dihedral) {
        std::optional<Rational> least;
        for (const auto& o : a.rho)
            if (!o.is_rotation() && (!least || o.q < *least)) least = o.q;
        const Rational shift = (-least->half()).mod1();
        if (!shift.is_zero()) {
            const auto c = OrthogonalElement::rotation(shift);
            const auto cinv = o2_inverse(c);
            for (auto& o : a.rho) o = o2_compose(o2_compose(c, o), cinv);
        }
        a.offset = shift;
    } else {
        a.offset = Rational(0, 1);
    }
    a.canonical = true;
    detail::compute_stabilizers(a);
    if (a.kind == ImageKind::Dihedral) {
        bool has_zero_refl = false, has_unit_rot = false;
        const auto r0 = OrthogonalElement::reflection(Rational(0, 1));
        const auto r1 = OrthogonalElement::rotation(Rational(1, a.n));
        for (const auto& o : a.rho) {
            if (o == r0) has_zero_refl = true;
            if (o == r1) has_unit_rot = true;
        }
        check_internal(has_zero_refl && has_unit_rot, "canonical image is not standard D_n");
    }
    return a;
}

inline const Subgroup& point_stabilizer(const CircleAction& a, MarkedPoint which) {
    check_input(a.canonical, "point stabilizers require a canonical action");
    if (which == MarkedPoint::One) return *a.stab_one;
    check_input(a.kind == ImageKind::Dihedral,
                "the second marked point exists only for dihedral images");
    return *a.stab_mu;
}

/// The action of a subgroup on the same circle, re-canonicalized (its image
/// may be a smaller cyclic or dihedral group in non-standard position).
inline CircleAction restrict_action(const CircleAction& a, const Subgroup& S) {
    check_internal(same_group(S.parent, a.group), "restrict_action: subgroup of a different group");
    std::vector<OrthogonalElement> rho(S.own->order());
    for (int i = 0; i < S.own->order(); ++i) rho[i] = a.rho[S.to_parent[i]];
    return canonical_form(action_from_map(S.own, std::move(rho)));
}

} // namespace evb

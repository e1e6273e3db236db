#pragma once

#include <string>

#include "evb/rational.hpp"

namespace evb {

/// Element of O(2) with rational angle parameter q in [0,1):
///   Rotation(q)   = rotation through 2*pi*q,
///   Reflection(q) = [[cos 2πq, sin 2πq], [sin 2πq, -cos 2πq]],
/// i.e. the reflection across the line at angle pi*q.  Reflection(0) is the
/// x-axis reflection fixing the point z = 1.
struct OrthogonalElement {
    enum class Kind { Rotation, Reflection };
    Kind kind = Kind::Rotation;
    Rational q{0, 1};

    static OrthogonalElement rotation(Rational q) {
        return {Kind::Rotation, q.mod1()};
    }
    static OrthogonalElement reflection(Rational q) {
        return {Kind::Reflection, q.mod1()};
    }
    static OrthogonalElement identity() { return rotation(Rational(0, 1)); }

    bool is_rotation() const { return kind == Kind::Rotation; }
    bool is_identity() const { return is_rotation() && q.is_zero(); }

    friend bool operator==(const OrthogonalElement& a, const OrthogonalElement& b) {
        return a.kind == b.kind && a.q == b.q;
    }
    friend bool operator<(const OrthogonalElement& a, const OrthogonalElement& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.q < b.q;
    }

    std::string str() const {
        return (is_rotation() ? "rot(" : "refl(") + q.str() + ")";
    }
};

/// Group law of O(2) on rational angles:
///   Rot(a)Rot(b) = Rot(a+b)        Rot(a)Refl(s)  = Refl(a+s)
///   Refl(s)Rot(a) = Refl(s-a)      Refl(s)Refl(t) = Rot(s-t)
inline OrthogonalElement o2_compose(const OrthogonalElement& a, const OrthogonalElement& b) {
    using K = OrthogonalElement::Kind;
    if (a.kind == K::Rotation && b.kind == K::Rotation)
        return OrthogonalElement::rotation(a.q + b.q);
    if (a.kind == K::Rotation && b.kind == K::Reflection)
        return OrthogonalElement::reflection(a.q + b.q);
    if (a.kind == K::Reflection && b.kind == K::Rotation)
        return OrthogonalElement::reflection(a.q - b.q);
    return OrthogonalElement::rotation(a.q - b.q);
}

inline OrthogonalElement o2_inverse(const OrthogonalElement& a) {
    if (a.is_rotation()) return OrthogonalElement::rotation(-a.q);
    return a; // reflections are involutions
}

} // namespace evb

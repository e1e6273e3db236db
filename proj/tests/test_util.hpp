#pragma once

#include <algorithm>
#include <vector>

#include "evb/evb.hpp"

namespace evbtest {

using namespace evb;

// class index of the first class whose representative has the given order
// (and, optionally, the given class size)
inline int class_with(const FiniteGroup& G, int element_order, int size = -1) {
    for (int c = 0; c < G.class_count(); ++c) {
        if (G.element_order(G.class_rep(c)) != element_order) continue;
        if (size >= 0 && G.class_size(c) != size) continue;
        return c;
    }
    return -1;
}

inline std::vector<int> sorted_class_sizes(const FiniteGroup& G) {
    std::vector<int> s;
    for (int c = 0; c < G.class_count(); ++c) s.push_back(G.class_size(c));
    std::sort(s.begin(), s.end());
    return s;
}

// the real irreducible of the table with the given type and real degree;
// requires uniqueness
inline int unique_real_irr(const RealTable& t, SchurType type, int real_degree) {
    int found = -1;
    for (int i = 0; i < t.real_count(); ++i) {
        if (t.reals[i].type == type && t.reals[i].real_degree == real_degree) {
            if (found >= 0) return -2;
            found = i;
        }
    }
    return found;
}

// symmetric-lifted value of a real irreducible at the class of the given order
inline i64 value_at_order(const RealTable& t, int irr, int element_order, int size = -1) {
    const int c = class_with(*t.ct.group, element_order, size);
    return t.ct.F.lift(t.reals[irr].values[c]);
}

} // namespace evbtest

#pragma once

#include <string>
#include <vector>

#include "evb/errors.hpp"

namespace evb {

// Permutation of {0, ..., degree-1} stored as the image sequence.
// External documents use 1-based images; conversion happens at the parsing
// boundary.
struct Permutation {
    std::vector<int> img;

    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img(std::move(images)) {}

    static Permutation identity(int degree) {
        Permutation p;
        p.img.resize(degree);
        for (int i = 0; i < degree; ++i) p.img[i] = i;
        return p;
    }

    int degree() const { return static_cast<int>(img.size()); }

    bool is_bijection() const {
        std::vector<char> seen(img.size(), 0);
        for (int v : img) {
            if (v < 0 || v >= degree() || seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    }

    // (a * b)(x) = a(b(x)): b acts first.  This matches matrix composition
    // for the orthogonal image of an action.
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        Permutation c;
        c.img.resize(a.img.size());
        for (int i = 0; i < a.degree(); ++i) c.img[i] = a.img[b.img[i]];
        return c;
    }

    Permutation inverse() const {
        Permutation c;
        c.img.resize(img.size());
        for (int i = 0; i < degree(); ++i) c.img[img[i]] = i;
        return c;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img == b.img; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img < b.img; }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < img.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(img[i] + 1);
        }
        return s + "]";
    }
};

} // namespace evb

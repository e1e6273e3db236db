#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "evb/errors.hpp"

namespace evb {

// Reduced fraction with positive denominator.  Angles live in [0,1) via mod1().
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

    void reduce() {
        check_input(den != 0, "rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    Rational mod1() const {
        std::int64_t n = num % den;
        if (n < 0) n += den;
        return Rational(n, den);
    }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    Rational operator-() const { return Rational(-num, den); }
    Rational half() const { return Rational(num, 2 * den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }

    bool is_zero() const { return num == 0; }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

} // namespace evb

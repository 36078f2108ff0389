#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "gsp/errors.hpp"

namespace gsp {

using int128 = __int128;

// Exact nonnegative rational with a positive denominator, always reduced.
// All guarantee checks in this library compare rationals by cross
// multiplication in 128-bit integers; no floating point is involved.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw InvalidParams("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    explicit Rat(long long n) : num(n), den(1) {}

    bool positive() const { return num > 0; }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }

    std::string str() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }
    double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
};

inline int cmp(const Rat& a, const Rat& b) {
    int128 lhs = static_cast<int128>(a.num) * b.den;
    int128 rhs = static_cast<int128>(b.num) * a.den;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}
inline bool operator<(const Rat& a, const Rat& b) { return cmp(a, b) < 0; }
inline bool operator<=(const Rat& a, const Rat& b) { return cmp(a, b) <= 0; }

// a <= b * c with everything exact.
inline bool leq_product(long long a, const Rat& b, long long c) {
    return static_cast<int128>(a) * b.den <= static_cast<int128>(b.num) * c;
}

// Parses a nonnegative decimal string ("2", "0.5", ".25") into an exact
// rational. Rejects anything else; exponents are deliberately unsupported.
Rat parse_decimal(const std::string& text);

}  // namespace gsp

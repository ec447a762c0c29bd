#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace pk {

// Bi-degree (parity, weight) on Z x Z.  The sign rule for swapping two
// homogeneous factors a, b is (-1)^{p(a)p(b) + w(a)w(b)}, so only the
// parities of the components matter for signs.
struct BiDegree {
    int p = 0;
    int w = 0;

    friend constexpr BiDegree operator+(BiDegree a, BiDegree b) { return {a.p + b.p, a.w + b.w}; }
    friend constexpr BiDegree operator-(BiDegree a, BiDegree b) { return {a.p - b.p, a.w - b.w}; }
    constexpr BiDegree operator-() const { return {-p, -w}; }
    constexpr BiDegree& operator+=(BiDegree o) { p += o.p; w += o.w; return *this; }
    friend constexpr bool operator==(BiDegree a, BiDegree b) = default;
    friend constexpr auto operator<=>(BiDegree a, BiDegree b) = default;

    std::string str() const { return "(" + std::to_string(p) + "," + std::to_string(w) + ")"; }
};

// Symmetric bilinear form <a,b> = p(a)p(b) + w(a)w(b) mod 2.
constexpr bool cross_odd(BiDegree a, BiDegree b) {
    return (((a.p & 1) && (b.p & 1)) != ((a.w & 1) && (b.w & 1)));
}

// +1 or -1 picked up when a moves past b.
constexpr int cross_sign(BiDegree a, BiDegree b) { return cross_odd(a, b) ? -1 : 1; }

// Generators g with p(g)+w(g) odd square to zero; the rest admit all powers.
constexpr bool self_annihilating(BiDegree d) { return ((d.p + d.w) & 1) != 0; }

} // namespace pk

#pragma once

#include <compare>
#include <string>

#include "pk/degree.hpp"

namespace pk {

// Role of a symbol in the graded alphabet.
//   Var     z        a coordinate generator of the algebra
//   Partial Dz       the (graded) partial derivative dual to z
//   Form    dz       the de Rham one-form on z
//   Star    zs       the linear-dual generator z^* (only for the
//                    exterior coordinates: y on the x|y side, xi on
//                    the xi|eta side)
enum class Role : unsigned char { Var = 0, Partial = 1, Form = 2, Star = 3 };

// Which coordinate family the symbol belongs to.
//   X, Y    live on k^{m||n}:  x_1..x_m polynomial, y_1..y_n exterior
//   Xi, Eta live on the dual:  xi_1..xi_m exterior, eta_1..eta_n polynomial
enum class Kind : unsigned char { X = 0, Y = 1, Xi = 2, Eta = 3 };

// Bi-degree of the coordinate itself.
constexpr BiDegree base_degree(Kind k) {
    switch (k) {
        case Kind::X: return {0, 0};
        case Kind::Y: return {1, 0};
        case Kind::Xi: return {0, -1};
        case Kind::Eta: return {-1, -1};
    }
    return {0, 0};
}

struct Gen {
    Role role;
    Kind kind;
    int index; // 1-based

    friend constexpr bool operator==(const Gen&, const Gen&) = default;
    friend constexpr auto operator<=>(const Gen&, const Gen&) = default;
};

// Degree rules: |Dz| = (-p, -w-1), |dz| = (p, w+1), |z^*| = (-p, -w)
// where (p, w) = |z|.
constexpr BiDegree degree(Gen g) {
    BiDegree b = base_degree(g.kind);
    switch (g.role) {
        case Role::Var: return b;
        case Role::Partial: return {-b.p, -b.w - 1};
        case Role::Form: return {b.p, b.w + 1};
        case Role::Star: return {-b.p, -b.w};
    }
    return b;
}

constexpr bool is_odd(Gen g) { return self_annihilating(degree(g)); }

inline std::string kind_name(Kind k) {
    switch (k) {
        case Kind::X: return "x";
        case Kind::Y: return "y";
        case Kind::Xi: return "xi";
        case Kind::Eta: return "eta";
    }
    return "?";
}

// ASCII names: x1, Dx1, dx1, ys2, xis1, Deta3, ...
inline std::string name(Gen g) {
    std::string base = kind_name(g.kind);
    std::string s;
    switch (g.role) {
        case Role::Var: s = base; break;
        case Role::Partial: s = "D" + base; break;
        case Role::Form: s = "d" + base; break;
        case Role::Star: s = base + "s"; break;
    }
    return s + std::to_string(g.index);
}

} // namespace pk

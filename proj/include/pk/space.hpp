#pragma once

#include <array>
#include <string>
#include <vector>

#include "pk/errors.hpp"
#include "pk/generators.hpp"

namespace pk {

// Which of the two Koszul-dual coordinate algebras we are working on.
//   MN: A   = k[x_1..x_m] (x) Lambda[y_1..y_n]      on k^{m||n}
//   NM: A^! = Lambda[xi_1..xi_m] (x) k[eta_1..eta_n] on k^{n^m}
enum class Side : unsigned char { MN = 0, NM = 1 };

inline Side other(Side s) { return s == Side::MN ? Side::NM : Side::MN; }

inline std::string side_name(Side s) { return s == Side::MN ? "MN" : "NM"; }

struct Space {
    int m = 0;
    int n = 0;
    Side side = Side::MN;

    friend bool operator==(const Space&, const Space&) = default;

    // The dual space keeps (m, n) and flips the side.
    Space dual() const { return {m, n, other(side)}; }

    std::string str() const {
        return side_name(side) + "(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")";
    }
};

// Polynomial (even) coordinate kind of a side: x on MN, eta on NM.
inline Kind even_kind(Side s) { return s == Side::MN ? Kind::X : Kind::Eta; }

// Exterior (odd) coordinate kind of a side: y on MN, xi on NM.
inline Kind odd_kind(Side s) { return s == Side::MN ? Kind::Y : Kind::Xi; }

inline int count_of(const Space& sp, Kind k) {
    switch (k) {
        case Kind::X: case Kind::Xi: return sp.m;
        case Kind::Y: case Kind::Eta: return sp.n;
    }
    return 0;
}

inline bool kind_on_side(Side s, Kind k) {
    if (s == Side::MN) return k == Kind::X || k == Kind::Y;
    return k == Kind::Xi || k == Kind::Eta;
}

// Star generators exist only for the exterior coordinates of a side.
inline bool valid_gen(const Space& sp, Gen g) {
    if (!kind_on_side(sp.side, g.kind)) return false;
    if (g.index < 1 || g.index > count_of(sp, g.kind)) return false;
    if (g.role == Role::Star && g.kind != odd_kind(sp.side)) return false;
    return true;
}

inline void require_gen(const Space& sp, Gen g) {
    if (!valid_gen(sp, g))
        throw UnsupportedSpace("generator " + name(g) + " is not defined on " + sp.str());
}

// Coordinate generators z_1..z_m, z'_1..z'_n of the side, even kind first.
inline std::vector<Gen> coordinates(const Space& sp) {
    std::vector<Gen> out;
    Kind ev = even_kind(sp.side), od = odd_kind(sp.side);
    for (int i = 1; i <= count_of(sp, ev); ++i) out.push_back({Role::Var, ev, i});
    for (int j = 1; j <= count_of(sp, od); ++j) out.push_back({Role::Var, od, j});
    return out;
}

inline std::vector<Gen> with_role(const std::vector<Gen>& gens, Role r) {
    std::vector<Gen> out;
    for (Gen g : gens) out.push_back({r, g.kind, g.index});
    return out;
}

// Alphabet of the polyvector algebra: coordinates plus their partials.
inline std::vector<Gen> polyvector_alphabet(const Space& sp) {
    std::vector<Gen> out = coordinates(sp);
    for (Gen g : coordinates(sp)) out.push_back({Role::Partial, g.kind, g.index});
    return out;
}

// Mixed splitting of the polyvector alphabet.  On MN the even symbols
// {x_i, Dy_j} act as coefficients and the odd symbols {Dx_i, y_j} as
// vector directions; on NM the split is {eta_j, Dxi_i} / {Deta_j, xi_i}.
inline std::vector<Gen> mixed_coeff_gens(const Space& sp) {
    std::vector<Gen> out;
    if (sp.side == Side::MN) {
        for (int i = 1; i <= sp.m; ++i) out.push_back({Role::Var, Kind::X, i});
        for (int j = 1; j <= sp.n; ++j) out.push_back({Role::Partial, Kind::Y, j});
    } else {
        for (int j = 1; j <= sp.n; ++j) out.push_back({Role::Var, Kind::Eta, j});
        for (int i = 1; i <= sp.m; ++i) out.push_back({Role::Partial, Kind::Xi, i});
    }
    return out;
}

inline std::vector<Gen> mixed_vector_gens(const Space& sp) {
    std::vector<Gen> out;
    if (sp.side == Side::MN) {
        for (int i = 1; i <= sp.m; ++i) out.push_back({Role::Partial, Kind::X, i});
        for (int j = 1; j <= sp.n; ++j) out.push_back({Role::Var, Kind::Y, j});
    } else {
        for (int j = 1; j <= sp.n; ++j) out.push_back({Role::Partial, Kind::Eta, j});
        for (int i = 1; i <= sp.m; ++i) out.push_back({Role::Var, Kind::Xi, i});
    }
    return out;
}

// Mixed de Rham generators: {dx_i, y_j^*} on MN, {deta_j, xi_i^*} on NM.
inline std::vector<Gen> mixed_form_gens(const Space& sp) {
    std::vector<Gen> out;
    if (sp.side == Side::MN) {
        for (int i = 1; i <= sp.m; ++i) out.push_back({Role::Form, Kind::X, i});
        for (int j = 1; j <= sp.n; ++j) out.push_back({Role::Star, Kind::Y, j});
    } else {
        for (int j = 1; j <= sp.n; ++j) out.push_back({Role::Form, Kind::Eta, j});
        for (int i = 1; i <= sp.m; ++i) out.push_back({Role::Star, Kind::Xi, i});
    }
    return out;
}

} // namespace pk

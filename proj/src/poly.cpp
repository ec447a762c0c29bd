#include "pk/poly.hpp"

namespace pk {

Poly Poly::var(Gen g, int exp) {
    Poly p;
    if (exp == 0) return one();
    if (exp < 0) throw Error("negative exponent on " + name(g));
    if (is_odd(g) && exp >= 2) return p; // squares to zero
    p.terms_[Monomial{{{g, exp}}}] = 1;
    return p;
}

Poly Poly::term(const Monomial& m, const mpq_class& c) {
    Poly p;
    p.add_term(m, c);
    return p;
}

void Poly::add_term(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const mpq_class& c) {
    if (c == 0) { terms_.clear(); return *this; }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    Monomial prod;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            const int s = mul(ma, mb, prod);
            if (s == 0) continue;
            mpq_class c = ca * cb;
            if (s < 0) c = -c;
            out.add_term(prod, c);
        }
    }
    return out;
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw Error("negative power of a polynomial");
    Poly acc = one();
    for (int t = 0; t < k; ++t) acc = acc * *this;
    return acc;
}

mpq_class Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

std::map<BiDegree, Poly> Poly::grade_decompose() const {
    std::map<BiDegree, Poly> out;
    for (const auto& [m, c] : terms_) out[m.degree()].add_term(m, c);
    return out;
}

std::optional<BiDegree> Poly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    BiDegree d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        mpq_class a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (a != 1 || m.is_one()) {
            s += a.get_str();
            if (!m.is_one()) s += "*";
        }
        if (!m.is_one()) s += m.str();
    }
    return s;
}

} // namespace pk

#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pk/errors.hpp"
#include "pk/monomial.hpp"

namespace pk {

// Exact polynomial over Q in the bi-graded super-commutative alphabet.
// Invariant: no zero coefficients are stored.
class Poly {
public:
    using Terms = std::map<Monomial, mpq_class>;

    Poly() = default;
    explicit Poly(const mpq_class& c) { add_term(Monomial{}, c); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(mpq_class(1)); }
    static Poly var(Gen g, int exp = 1);
    static Poly term(const Monomial& m, const mpq_class& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Monomial& m, const mpq_class& c);

    friend bool operator==(const Poly&, const Poly&) = default;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const mpq_class& c);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const mpq_class& c) { a *= c; return a; }
    friend Poly operator*(const mpq_class& c, Poly a) { a *= c; return a; }
    Poly operator-() const;

    Poly pow(int k) const;

    // Coefficient of a canonical monomial (0 if absent).
    mpq_class coeff(const Monomial& m) const;

    // Split into bi-homogeneous components, keyed by bi-degree.
    std::map<BiDegree, Poly> grade_decompose() const;

    // Bi-degree if every term shares one; nullopt otherwise.  Zero has
    // every degree and reports nullopt too, so check is_zero first when
    // that distinction matters.
    std::optional<BiDegree> homogeneous_degree() const;

    std::string str() const;

private:
    Terms terms_;
};

} // namespace pk

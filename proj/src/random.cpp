#include "pk/random.hpp"

#include "pk/errors.hpp"

namespace pk {
namespace {

// Random word with `count` letters from `alpha`, canonicalized.
// Rejection-sampled because odd letters may not repeat.
bool random_word(Rng& rng, const std::vector<Gen>& alpha, int count, std::vector<Gen>& out) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        out.clear();
        for (int i = 0; i < count; ++i)
            out.push_back(alpha[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(alpha.size()) - 1))]);
        Monomial probe;
        if (sort_word(out, probe) != 0) return true;
    }
    return false;
}

Monomial random_two_block(Rng& rng, const std::vector<Gen>& a1, int c1,
                          const std::vector<Gen>& a2, int c2) {
    if ((c1 > 0 && a1.empty()) || (c2 > 0 && a2.empty()))
        throw RankError("random monomial: empty alphabet with positive count");
    std::vector<Gen> w1, w2;
    if (!random_word(rng, a1, c1, w1) || !random_word(rng, a2, c2, w2))
        throw RankError("random monomial: no square-free word exists for these counts");
    w1.insert(w1.end(), w2.begin(), w2.end());
    Monomial m;
    sort_word(w1, m);
    return m;
}

} // namespace

Monomial random_cochain_monomial(Rng& rng, const Space& sp, int v, int k) {
    return random_two_block(rng, coordinates(sp), v, with_role(coordinates(sp), Role::Partial), k);
}

Monomial random_chain_monomial(Rng& rng, const Space& sp, int v, int k) {
    return random_two_block(rng, mixed_coeff_gens(sp), v, mixed_form_gens(sp), k);
}

Poly random_polyvector(Rng& rng, const Space& sp, int v, int k, int terms) {
    Poly out;
    for (int t = 0; t < terms; ++t)
        out += Poly::term(random_cochain_monomial(rng, sp, v, k), rng.coeff());
    return out;
}

Poly random_homogeneous_polyvector(Rng& rng, const Space& sp, int v, int k, int terms) {
    Poly out;
    std::optional<BiDegree> want;
    for (int t = 0; t < 8 * terms && terms > 0; ++t) {
        const Monomial m = random_cochain_monomial(rng, sp, v, k);
        if (!want) want = m.degree();
        if (m.degree() != *want) continue;
        out += Poly::term(m, rng.coeff());
        if (--terms == 0) break;
    }
    return out;
}

Poly random_mixed_chain(Rng& rng, const Space& sp, int v, int k, int terms) {
    Poly out;
    for (int t = 0; t < terms; ++t)
        out += Poly::term(random_chain_monomial(rng, sp, v, k), rng.coeff());
    return out;
}

Poly random_quadratic_bivector(Rng& rng, const Space& sp, int terms, bool restricted) {
    const auto zs = coordinates(sp);
    const auto ds = with_role(zs, Role::Partial);
    Poly out;
    int made = 0;
    for (int attempt = 0; attempt < 256 && made < terms; ++attempt) {
        std::vector<Gen> word{
            zs[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(zs.size()) - 1))],
            zs[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(zs.size()) - 1))],
            ds[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(ds.size()) - 1))],
            ds[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(ds.size()) - 1))]};
        Monomial m;
        if (sort_word(word, m) == 0) continue;
        if (restricted && m.degree() != BiDegree{0, -2}) continue;
        out += Poly::term(m, rng.coeff());
        ++made;
    }
    return out;
}

} // namespace pk

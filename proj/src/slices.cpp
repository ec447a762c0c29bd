#include "pk/slices.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

#include "pk/errors.hpp"

namespace pk {
namespace {

// Multisets of size `count` over `gens`, odd letters at most once;
// appends each choice to `prefix` and emits through `sink`.
void enum_words(const std::vector<Gen>& gens, std::size_t pos, int count,
                std::vector<std::pair<Gen, int>>& prefix,
                const std::function<void(const std::vector<std::pair<Gen, int>>&)>& sink) {
    if (count == 0) {
        sink(prefix);
        return;
    }
    if (pos == gens.size()) return;
    const Gen g = gens[pos];
    const int top = is_odd(g) ? 1 : count;
    for (int e = top; e >= 1; --e) {
        prefix.push_back({g, e});
        enum_words(gens, pos + 1, count - e, prefix, sink);
        prefix.pop_back();
    }
    enum_words(gens, pos + 1, count, prefix, sink);
}

} // namespace

std::vector<Monomial> monomials_two_alphabets(std::vector<Gen> alpha1, int c1,
                                              std::vector<Gen> alpha2, int c2,
                                              std::size_t cap) {
    if (c1 < 0 || c2 < 0) return {};
    std::sort(alpha1.begin(), alpha1.end());
    std::sort(alpha2.begin(), alpha2.end());

    std::vector<Monomial> out;
    std::vector<std::pair<Gen, int>> left, right;
    enum_words(alpha1, 0, c1, left, [&](const auto& lw) {
        enum_words(alpha2, 0, c2, right, [&](const auto& rw) {
            std::vector<Gen> word;
            for (const auto& [g, e] : lw) for (int t = 0; t < e; ++t) word.push_back(g);
            for (const auto& [g, e] : rw) for (int t = 0; t < e; ++t) word.push_back(g);
            Monomial m;
            if (sort_word(word, m) == 0) return;
            out.push_back(std::move(m));
            if (out.size() > cap)
                throw SliceTooLarge("slice (" + std::to_string(c1) + "," + std::to_string(c2) +
                                    ") exceeds cap " + std::to_string(cap));
        });
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> slice_basis(const Space& sp, ComplexKind kind, int v, int k,
                                  std::optional<BiDegree> deg, std::size_t cap) {
    if (v < 0 || k < 0) return {};
    std::vector<Gen> first_alpha, second_alpha;
    if (kind == ComplexKind::Cochain) {
        first_alpha = coordinates(sp);
        second_alpha = with_role(coordinates(sp), Role::Partial);
    } else {
        first_alpha = mixed_coeff_gens(sp);
        second_alpha = mixed_form_gens(sp);
    }
    auto out = monomials_two_alphabets(std::move(first_alpha), v, std::move(second_alpha), k, cap);
    if (deg) {
        std::erase_if(out, [&](const Monomial& m) { return m.degree() != *deg; });
    }
    return out;
}

std::vector<BiDegree> slice_degrees(const Space& sp, ComplexKind kind, int v, int k) {
    std::set<BiDegree> degs;
    for (const auto& m : slice_basis(sp, kind, v, k, std::nullopt,
                                     std::numeric_limits<std::size_t>::max()))
        degs.insert(m.degree());
    return {degs.begin(), degs.end()};
}

mpz_class binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class multichoose(int n, int k) {
    if (k == 0) return 1;
    if (n == 0) return 0;
    return binom(n + k - 1, k);
}

mpz_class chain_slice_count(const Space& sp, int v, int k) {
    return multichoose(sp.m + sp.n, v) * binom(sp.m + sp.n, k);
}

} // namespace pk

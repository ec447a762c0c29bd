#include "pk/monomial.hpp"

#include <algorithm>

namespace pk {

std::string Monomial::str() const {
    if (factors.empty()) return "1";
    std::string s;
    for (const auto& [g, e] : factors) {
        if (!s.empty()) s += "*";
        s += name(g);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

int mul(const Monomial& a, const Monomial& b, Monomial& out) {
    out.factors.clear();
    if (a.factors.empty()) { out = b; return 1; }
    if (b.factors.empty()) { out = a; return 1; }

    // suf[i] = degree of a's factor suffix starting at i.
    const auto& A = a.factors;
    const auto& B = b.factors;
    std::vector<BiDegree> suf(A.size() + 1, BiDegree{0, 0});
    for (int i = static_cast<int>(A.size()) - 1; i >= 0; --i) {
        BiDegree d = degree(A[i].first);
        suf[i] = suf[i + 1];
        for (int t = 0; t < A[i].second; ++t) suf[i] += d;
    }

    bool odd_sign = false;
    std::size_t i = 0, j = 0;
    out.factors.reserve(A.size() + B.size());
    while (i < A.size() || j < B.size()) {
        if (j == B.size() || (i < A.size() && A[i].first < B[j].first)) {
            out.factors.push_back(A[i]);
            ++i;
        } else if (i == A.size() || B[j].first < A[i].first) {
            // b_j^e moves left past the remaining a-suffix.
            if ((B[j].second & 1) && cross_odd(degree(B[j].first), suf[i])) odd_sign = !odd_sign;
            out.factors.push_back(B[j]);
            ++j;
        } else {
            Gen g = A[i].first;
            int e = A[i].second + B[j].second;
            if (is_odd(g) && e >= 2) { out.factors.clear(); return 0; }
            if ((B[j].second & 1) && cross_odd(degree(g), suf[i + 1])) odd_sign = !odd_sign;
            out.factors.push_back({g, e});
            ++i; ++j;
        }
    }
    return odd_sign ? -1 : 1;
}

int sort_word(const std::vector<Gen>& word, Monomial& out) {
    out.factors.clear();
    int sign = 1;
    for (Gen g : word) {
        Monomial single{{{g, 1}}};
        Monomial next;
        sign *= mul(out, single, next);
        if (sign == 0) { out.factors.clear(); return 0; }
        out = std::move(next);
    }
    return sign;
}

} // namespace pk

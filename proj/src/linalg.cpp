#include "pk/linalg.hpp"

#include "pk/errors.hpp"

namespace pk {
namespace {

void check_rect(const QMatrix& a) {
    for (const auto& r : a)
        if (r.size() != a.front().size())
            throw DimensionMismatch("ragged matrix");
}

} // namespace

std::vector<std::size_t> rref(QMatrix& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    check_rect(a);
    const std::size_t rows = a.size(), cols = a.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        const mpq_class inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const mpq_class f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank_rref(QMatrix a) { return rref(a).size(); }

std::size_t rank_bareiss(const QMatrix& a) {
    if (a.empty() || a.front().empty()) return 0;
    check_rect(a);
    const std::size_t rows = a.size(), cols = a.front().size();

    // Clear denominators row by row; row scaling keeps the rank.
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class lcm = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_class den = a[i][j].get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        for (std::size_t j = 0; j < cols; ++j) {
            mpq_class v = a[i][j] * mpq_class(lcm);
            v.canonicalize();
            m[i][j] = v.get_num();
        }
    }

    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

std::optional<QVec> solve(QMatrix a, QVec b) {
    if (a.size() != b.size()) throw DimensionMismatch("solve: row count mismatch");
    if (a.empty()) return QVec{};
    const std::size_t cols = a.front().size();
    for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
    const auto pivots = rref(a);
    QVec x(cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt; // pivot in the rhs column
        x[pivots[r]] = a[r][cols];
    }
    return x;
}

std::vector<QVec> nullspace(QMatrix a) {
    if (a.empty() || a.front().empty()) return {};
    const std::size_t cols = a.front().size();
    const auto pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVec v(cols, 0);
        v[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace pk

#include "persalg/linalg.hpp"

namespace persalg {

mpz_class det_bareiss(Mat<mpz_class> m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_bareiss: not square");
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t sel = k + 1;
            while (sel < n && m[sel][k] == 0) ++sel;
            if (sel == n) return 0;
            std::swap(m[sel], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num / prev;  // exact by Bareiss
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

std::size_t rank_integer(const Mat<mpz_class>& m) {
    if (m.empty() || m[0].empty()) return 0;
    Mat<mpq_class> q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        q[i].reserve(m[i].size());
        for (const auto& v : m[i]) q[i].emplace_back(v);
    }
    return rank(FieldQ{}, std::move(q));
}

std::vector<mpz_class> smith_invariants(Mat<mpz_class> m) {
    std::vector<mpz_class> out;
    if (m.empty() || m[0].empty()) return out;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Find a nonzero pivot with minimal absolute value.
        std::size_t pi = t, pj = t;
        bool found = false;
        mpz_class best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (!found || abs(m[i][j]) < best)) {
                    best = abs(m[i][j]);
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        std::swap(m[pi], m[t]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][pj], m[i][t]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                mpz_class q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {  // remainder smaller than pivot: swap up and redo
                    std::swap(m[i], m[t]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                mpz_class q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][j], m[i][t]);
                    clean = false;
                }
            }
        }
        ++t;
    }
    // Fix divisibility chain.
    for (std::size_t i = 0; i + 1 < t; ++i) {
        for (std::size_t j = i + 1; j < t; ++j) {
            if (m[j][j] % m[i][i] != 0) {
                mpz_class g, a = m[i][i], b = m[j][j];
                mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                m[j][j] = a / g * b;
                m[i][i] = g;
            }
        }
    }
    for (std::size_t i = 0; i < t; ++i) out.push_back(abs(m[i][i]));
    return out;
}

}  // namespace persalg

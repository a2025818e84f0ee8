#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "mono/monomap.hpp"

namespace mono::test {

inline IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

inline MonomialMap map(std::initializer_list<std::initializer_list<long>> rows) {
    return validate(mat(rows));
}

// Independent determinant oracle: cofactor expansion along the first row.
inline Int det_cofactor(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    Int det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMatrix sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t c = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                sub.at(i - 1, c++) = m.at(i, k);
            }
        }
        Int term = m.at(0, j) * det_cofactor(sub);
        if (j % 2 == 1) term = -term;
        det += term;
    }
    return det;
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t n, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = dist(rng);
    return m;
}

// Random monomial map: each row an independent random composition of d.
inline MonomialMap random_map(std::mt19937& rng, std::size_t n, long d, long cap) {
    for (;;) {
        IntMatrix a(n + 1, n + 1);
        bool ok = true;
        for (std::size_t i = 0; i <= n && ok; ++i) {
            long rest = d;
            for (std::size_t j = 0; j + 1 <= n && rest > 0; ++j) {
                std::uniform_int_distribution<long> dist(0, std::min(rest, cap));
                long v = dist(rng);
                a.at(i, j) = v;
                rest -= v;
            }
            if (rest > cap) ok = false;
            else a.at(i, n) = rest;
        }
        if (!ok) continue;
        // all-equal rows normalize to the degenerate constant map; redraw
        bool allEqual = true;
        for (std::size_t i = 1; i <= n && allEqual; ++i)
            for (std::size_t j = 0; j <= n; ++j)
                if (a.at(i, j) != a.at(0, j)) { allEqual = false; break; }
        if (!allEqual) return validate(a);
    }
}

}  // namespace mono::test

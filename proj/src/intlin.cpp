#include "mono/intlin.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <utility>

namespace mono {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw ValidationError("matrix product: inner dimensions differ");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    for (std::size_t k = 0; k < a.e_.size(); ++k) {
        int c = cmp(a.e_[k], b.e_[k]);
        if (c != 0) return c < 0;
    }
    return false;
}

Int det_exact(const IntMatrix& m) {
    if (!m.square()) throw ValidationError("det_exact: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a.at(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                // Bareiss: division by the previous pivot is exact.
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    Int det = a.at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

namespace {

// Signed cofactor expansion minor: determinant of m with row i and column j removed.
Int minor_det(const IntMatrix& m, std::size_t di, std::size_t dj) {
    const std::size_t n = m.rows();
    IntMatrix sub(n - 1, n - 1);
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == di) continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == dj) continue;
            sub.at(r, c) = m.at(i, j);
            ++c;
        }
        ++r;
    }
    return det_exact(sub);
}

}  // namespace

IntMatrix inverse_unimodular(const IntMatrix& m) {
    if (!m.square()) throw ValidationError("inverse_unimodular: matrix is not square");
    Int det = det_exact(m);
    if (det != 1 && det != -1)
        throw DomainError("inverse_unimodular: determinant is " + det.get_str() +
                          ", not +-1");
    const std::size_t n = m.rows();
    // adj(m) = det * m^{-1}; with det = +-1 the inverse is det * adj(m).
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int c = minor_det(m, j, i);
            if ((i + j) % 2 == 1) c = -c;
            inv.at(i, j) = det < 0 ? Int(-c) : c;
        }
    return inv;
}

SnfResult smith_normal_form(const IntMatrix& m) {
    if (!m.square()) throw ValidationError("smith_normal_form: matrix is not square");
    if (det_exact(m) == 0)
        throw DomainError("smith_normal_form: matrix is singular");
    const std::size_t n = m.rows();
    IntMatrix a = m;
    IntMatrix left = IntMatrix::identity(n);
    IntMatrix right = IntMatrix::identity(n);

    auto swap_rows = [&](std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(a.at(r1, j), a.at(r2, j));
        for (std::size_t j = 0; j < n; ++j) std::swap(left.at(r1, j), left.at(r2, j));
    };
    auto swap_cols = [&](std::size_t c1, std::size_t c2) {
        if (c1 == c2) return;
        for (std::size_t i = 0; i < n; ++i) std::swap(a.at(i, c1), a.at(i, c2));
        for (std::size_t i = 0; i < n; ++i) std::swap(right.at(i, c1), right.at(i, c2));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& q) {
        // row dst += q * row src
        for (std::size_t j = 0; j < n; ++j) a.at(dst, j) += q * a.at(src, j);
        for (std::size_t j = 0; j < n; ++j) left.at(dst, j) += q * left.at(src, j);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t i = 0; i < n; ++i) a.at(i, dst) += q * a.at(i, src);
        for (std::size_t i = 0; i < n; ++i) right.at(i, dst) += q * right.at(i, src);
    };
    auto negate_row = [&](std::size_t r) {
        for (std::size_t j = 0; j < n; ++j) a.at(r, j) = -a.at(r, j);
        for (std::size_t j = 0; j < n; ++j) left.at(r, j) = -left.at(r, j);
    };

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing submatrix becomes the pivot.
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (a.at(i, j) == 0) continue;
                    if (!found || mpz_cmpabs(a.at(i, j).get_mpz_t(),
                                             a.at(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            assert(found);  // nonsingular input
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(),
                           a.at(t, t).get_mpz_t());
                add_row(i, t, Int(-q));
                if (a.at(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(),
                           a.at(t, t).get_mpz_t());
                add_col(j, t, Int(-q));
                if (a.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;  // remainders left; pivot shrinks next round

            // Divisibility: the pivot must divide the whole trailing block.
            bool fixed = false;
            for (std::size_t i = t + 1; i < n && !fixed; ++i)
                for (std::size_t j = t + 1; j < n && !fixed; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        add_row(t, i, Int(1));
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (a.at(t, t) < 0) negate_row(t);
    }

    SnfResult out;
    out.invariantFactors.reserve(n);
    for (std::size_t t = 0; t < n; ++t) out.invariantFactors.push_back(a.at(t, t));
    out.leftTransform = std::move(left);
    out.rightTransform = std::move(right);
    return out;
}

std::vector<std::size_t> nonzero_diagonal_permutation(const IntMatrix& m) {
    if (!m.square())
        throw ValidationError("nonzero_diagonal_permutation: matrix is not square");
    const std::size_t n = m.rows();
    std::vector<std::size_t> colOfRow(n, n);  // matching: row -> column
    std::vector<std::size_t> rowOfCol(n, n);

    std::vector<char> seen;
    auto augment = [&](auto&& self, std::size_t row) -> bool {
        for (std::size_t j = 0; j < n; ++j) {
            if (m.at(row, j) == 0 || seen[j]) continue;
            seen[j] = 1;
            if (rowOfCol[j] == n || self(self, rowOfCol[j])) {
                rowOfCol[j] = row;
                colOfRow[row] = j;
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < n; ++i) {
        seen.assign(n, 0);
        if (!augment(augment, i))
            throw std::logic_error(
                "nonzero_diagonal_permutation: no perfect matching; "
                "input must have nonzero determinant");
    }
    return colOfRow;
}

}  // namespace mono

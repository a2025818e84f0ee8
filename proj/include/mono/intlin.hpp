#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mono {

using Int = mpz_class;
using Rat = mpq_class;

/// Bad input data (malformed matrix, constraint violation). CLI exit 1.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A precondition of an operation does not hold (e.g. map not birational).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Search refused because the space is too large. CLI exit 2.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& rhs) const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }
    // Row-major lexicographic order (shape first); used for canonical forms.
    friend bool operator<(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> e_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Int det_exact(const IntMatrix& m);

/// Integer inverse of a matrix with |det| = 1. Throws DomainError otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

struct SnfResult {
    std::vector<Int> invariantFactors;  // s_1 | s_2 | ... | s_n, all positive
    IntMatrix leftTransform;            // unimodular
    IntMatrix rightTransform;           // unimodular
};

/// Smith normal form of a nonsingular square matrix:
/// leftTransform * m * rightTransform = diag(invariantFactors).
SnfResult smith_normal_form(const IntMatrix& m);

/// A column permutation sigma with m[i][sigma(i)] != 0 for every row i.
/// Exists whenever det(m) != 0; found by augmenting-path bipartite matching.
std::vector<std::size_t> nonzero_diagonal_permutation(const IntMatrix& m);

}  // namespace mono

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mono/intlin.hpp"

namespace mono {

/// A monomial transformation of P^n, represented by its (n+1)x(n+1)
/// exponent matrix: row i lists the exponents of component f_i.
/// All rows sum to the common degree d.
struct MonomialMap {
    std::size_t n = 0;  // projective dimension
    IntMatrix A;        // (n+1)x(n+1), nonnegative entries
    Int d;              // common row sum, >= 1
    bool normalized = false;  // every column of A contains a zero

    friend bool operator==(const MonomialMap& a, const MonomialMap& b) {
        return a.A == b.A;
    }
};

/// Checks shape, nonnegativity and constant positive row sum; derives d and
/// the normalized flag. Throws ValidationError naming the offending row/entry.
MonomialMap validate(const IntMatrix& matrix);

/// Subtracts each column's minimum; the result has a zero in every column
/// and represents the same rational map.
MonomialMap normalize(const MonomialMap& f);

/// The n x n reduced matrix M with m_ij = a_ij - a_0j. Satisfies
/// det(A) = d * det(M), which the implementation asserts.
IntMatrix torus_map(const MonomialMap& f);

/// Topological degree |det(A)| / d = |det(M)|; 0 for non-dominant maps.
Int map_degree(const MonomialMap& f);

/// True iff |det(M)| = 1 (equivalently |det(A)| = d after normalization).
bool is_birational(const MonomialMap& f);

/// f o g, i.e. the map with exponent matrix A_f * A_g, normalized.
MonomialMap compose(const MonomialMap& f, const MonomialMap& g);

/// The monomial map whose torus endomorphism is the given n x n integer
/// matrix: shift columns to be nonnegative, pad with the x_0 column,
/// normalize.
MonomialMap projectivize(const IntMatrix& torusMatrix);

/// Inverse of a birational map, via the integer inverse of M.
/// Throws DomainError (carrying |det(M)|) when the map is not birational.
MonomialMap inverse(const MonomialMap& f);

/// Degree of the normalized inverse.
Int inverse_degree(const MonomialMap& f);

/// Lexicographically least exponent matrix over all simultaneous row and
/// column permutations. Two maps are equivalent iff canonical forms agree.
IntMatrix canonical_form(const MonomialMap& f);

/// The birational automorphism
/// (x_0,...,x_n) -> (x_0^d, x_0^{d-1}x_1, x_1^{d-1}x_2, ..., x_{n-1}^{d-1}x_n).
MonomialMap gen_fnd(std::size_t n, const Int& d);

/// First parameterized family: lower-triangular with d on row 0, rows at
/// even index i >= 2 fixed to (d-1) e_{i-1} + e_i, rows at odd index i free
/// subject to a_{i0} != 0, sum_{j<i} a_{ij} = d-1, a_{ii} = 1.
/// `oddRows[k]` supplies the first i entries of the (2k+1)-th row; pass an
/// empty vector for the default choice a_{i0} = d-1.
MonomialMap gen_family_one(std::size_t n, const Int& d,
                           const std::vector<std::vector<Int>>& oddRows = {});

/// Second parameterized family (d >= 3, n >= 4): fixed top 3x3 block,
/// row 3 = (a30, a31, 0, a33, 0...) with a30+a31+a33 = d and a31*a33 != 0,
/// rows at odd index i >= 5 fixed to (d-1) e_{i-1} + e_i, rows at even
/// index i >= 4 free subject to a_{i0} a_{i2} != 0, sum_{j<i} a_{ij} = d-1,
/// a_{ii} = 1. `rowThree` supplies (a30, a31, a33); `evenRows[k]` the first
/// i entries of row i = 4 + 2k. Empty arguments select defaults.
MonomialMap gen_family_two(std::size_t n, const Int& d,
                           const std::vector<Int>& rowThree = {},
                           const std::vector<std::vector<Int>>& evenRows = {});

/// Strict parser for the matrix text format: optional '#' comment lines,
/// then n+1 lines of n+1 space-separated nonnegative decimal integers.
IntMatrix parse_matrix(std::istream& in);
IntMatrix parse_matrix_file(const std::string& path);  // "-" reads stdin
std::string format_matrix(const IntMatrix& m);

}  // namespace mono

#pragma once

#include <vector>

#include "mono/monomap.hpp"

namespace mono {

/// Convex hull of finitely many integer points (generators).
struct LatticePolytope {
    std::size_t dim = 0;
    std::vector<std::vector<Int>> points;  // deduplicated on construction

    LatticePolytope() = default;
    LatticePolytope(std::size_t dim, std::vector<std::vector<Int>> pts);
};

/// The standard simplex conv(0, e_1, ..., e_n).
LatticePolytope standard_simplex(std::size_t n);

/// Convex hull of the rows of A with column 0 dropped.
LatticePolytope newton_simplex(const MonomialMap& f);

/// Generators {s*p + t*q} of the scaled Minkowski sum sP + tQ.
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q,
                              const Int& s, const Int& t);

/// Exact Euclidean volume of the hull; 0 when the hull is lower-dimensional.
/// Brute-force facet enumeration plus pyramid decomposition from a vertex,
/// recursing into facets through a coordinate projection.
Rat volume_exact(const LatticePolytope& p);

/// V(t) = vol(Delta + t*Delta_f) = sum c_i t^i, exact rational coefficients.
struct VolumePolynomial {
    std::vector<Rat> coefficients;  // c_0 .. c_n
};

VolumePolynomial volume_polynomial(const MonomialMap& f);

/// Projective degrees d_0..d_n, with d_i = (n-i)! i! c_i. The conversion
/// must come out integral; a failure indicates a computation bug.
struct MultidegreeVector {
    std::vector<Int> values;  // d_0 .. d_n

    friend bool operator==(const MultidegreeVector& a, const MultidegreeVector& b) {
        return a.values == b.values;
    }
};

MultidegreeVector multidegree(const MonomialMap& f);

}  // namespace mono

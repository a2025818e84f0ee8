#pragma once

#include <vector>

#include "mono/monomap.hpp"

namespace mono {

/// Reduced structure of the indeterminacy locus: the inclusion-minimal
/// column subsets J such that the submatrix A_J has no zero row. Each J
/// contributes the coordinate linear space {x_j = 0 : j in J}.
struct IndeterminacyLocus {
    std::vector<std::vector<std::size_t>> components;  // sorted, lex order
    int codim = -1;     // min |J|; -1 when empty
    int dim = -1;       // n - codim; -1 sentinel for the empty locus
    int topCount = 0;   // number of components of size codim

    bool empty() const { return components.empty(); }
};

struct DimensionTheoremResult {
    bool applicable = false;  // d does not divide deg(f)
    bool holds = false;       // dim >= ceil((n-2)/2)
    int dim = -1;
    int bound = 0;            // ceil((n-2)/2)
};

/// Proof artifacts of the constructive dimension-bound witness.
/// Vertex labels in classes/phi/coloring refer to the permuted matrix
/// B[i][j] = A[relabel(i)][sigma(relabel(j))] with nonzero diagonal.
struct WitnessCover {
    std::vector<std::size_t> selected;             // original column indices, sorted
    std::vector<std::size_t> diagonalPermutation;  // sigma from the matching step
    std::vector<std::vector<std::size_t>> classes; // strongly-connected classes
    std::vector<std::size_t> minimalClass;         // the unique minimal class
    std::vector<std::size_t> phi;                  // phi[x], x = 1..n; phi[0] = 0
    std::vector<int> coloring;                     // 0/1 per vertex, by tree depth
};

IndeterminacyLocus indeterminacy(const MonomialMap& f);

DimensionTheoremResult check_dimension_theorem(const MonomialMap& f);

/// Runs the constructive proof of the dimension bound: diagonal
/// permutation, reachability classes, acyclic parent function, two-coloring,
/// minority selection. The returned column set S has |S| <= (n+2)/2 and
/// hits a nonzero entry in every row of A.
/// Requires a dominant normalized map with d^2 not dividing det(A).
WitnessCover witness_cover(const MonomialMap& f);

}  // namespace mono

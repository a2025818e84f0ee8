#include "mono/indet.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace mono {

namespace {

bool subset_valid(const IntMatrix& a, unsigned mask) {
    const std::size_t size = a.rows();
    for (std::size_t i = 0; i < size; ++i) {
        bool hit = false;
        for (std::size_t j = 0; j < size; ++j)
            if ((mask >> j & 1u) && a.at(i, j) != 0) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

}  // namespace

IndeterminacyLocus indeterminacy(const MonomialMap& f) {
    if (!f.normalized)
        throw DomainError("indeterminacy: map must be normalized");
    const std::size_t size = f.n + 1;
    const unsigned full = (1u << size) - 1u;

    std::vector<unsigned> minimal;
    for (unsigned mask = 1; mask < full; ++mask) {
        if (!subset_valid(f.A, mask)) continue;
        bool isMinimal = true;
        // Dropping any single element must break validity.
        for (std::size_t j = 0; j < size && isMinimal; ++j)
            if ((mask >> j & 1u) && (mask & ~(1u << j)) != 0 &&
                subset_valid(f.A, mask & ~(1u << j)))
                isMinimal = false;
        if (isMinimal) minimal.push_back(mask);
    }

    IndeterminacyLocus out;
    for (unsigned mask : minimal) {
        std::vector<std::size_t> j;
        for (std::size_t c = 0; c < size; ++c)
            if (mask >> c & 1u) j.push_back(c);
        out.components.push_back(std::move(j));
    }
    std::sort(out.components.begin(), out.components.end());
    if (!out.components.empty()) {
        std::size_t c = size;
        for (const auto& j : out.components) c = std::min(c, j.size());
        out.codim = static_cast<int>(c);
        out.dim = static_cast<int>(f.n) - out.codim;
        for (const auto& j : out.components)
            if (j.size() == c) ++out.topCount;
    }
    return out;
}

DimensionTheoremResult check_dimension_theorem(const MonomialMap& f) {
    if (!f.normalized)
        throw DomainError("check_dimension_theorem: map must be normalized");
    Int deg = map_degree(f);
    if (deg == 0)
        throw DomainError("check_dimension_theorem: map is not dominant");
    DimensionTheoremResult r;
    r.applicable = (deg % f.d != 0);
    r.dim = indeterminacy(f).dim;
    r.bound = (static_cast<int>(f.n) - 1) / 2;  // ceil((n-2)/2)
    if (r.applicable) r.holds = (r.dim >= r.bound);
    return r;
}

WitnessCover witness_cover(const MonomialMap& f) {
    if (!f.normalized)
        throw DomainError("witness_cover: map must be normalized");
    Int detA = det_exact(f.A);
    if (detA == 0)
        throw DomainError("witness_cover: map is not dominant");
    if (detA % (f.d * f.d) == 0)
        throw DomainError("witness_cover: hypothesis violated, d^2 divides det(A) "
                          "(d divides deg(f))");
    const std::size_t size = f.n + 1;

    // Step 1: permute columns so the diagonal is nonzero.
    std::vector<std::size_t> sigma = nonzero_diagonal_permutation(f.A);
    auto entry = [&](std::size_t i, std::size_t j) -> const Int& {
        return f.A.at(i, sigma[j]);
    };

    // Step 2: oriented graph, edge i -> j iff the permuted entry is nonzero.
    std::vector<std::vector<bool>> reach(size, std::vector<bool>(size, false));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            if (entry(i, j) != 0) reach[i][j] = true;
    for (std::size_t k = 0; k < size; ++k)  // transitive closure
        for (std::size_t i = 0; i < size; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < size; ++j)
                    if (reach[k][j]) reach[i][j] = true;

    // Step 3: equivalence classes (mutual reachability; the diagonal gives
    // reflexivity) and the sink classes of the induced order.
    std::vector<int> classOf(size, -1);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t v = 0; v < size; ++v) {
        if (classOf[v] >= 0) continue;
        std::vector<std::size_t> cls;
        for (std::size_t w = v; w < size; ++w)
            if (classOf[w] < 0 && reach[v][w] && reach[w][v]) {
                classOf[w] = static_cast<int>(classes.size());
                cls.push_back(w);
            }
        classes.push_back(std::move(cls));
    }
    std::vector<std::size_t> sinks;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        bool minimal = true;
        for (std::size_t v : classes[c])
            for (std::size_t w = 0; w < size && minimal; ++w)
                if (reach[v][w] && classOf[w] != static_cast<int>(c)) minimal = false;
        if (minimal) sinks.push_back(c);
    }
    // Step 4: with d^2 not dividing det(A), the minimal class is unique.
    if (sinks.size() != 1)
        throw std::logic_error("witness_cover: minimal class is not unique despite "
                               "d^2 not dividing det(A)");
    const std::vector<std::size_t>& minClass = classes[sinks[0]];

    // Relabel so vertex 0 lies in the minimal class (simultaneous row and
    // column swap preserves the nonzero diagonal).
    std::vector<std::size_t> relabel(size);
    for (std::size_t v = 0; v < size; ++v) relabel[v] = v;
    if (classOf[0] != static_cast<int>(sinks[0]))
        std::swap(relabel[0], relabel[minClass.front()]);
    auto rentry = [&](std::size_t i, std::size_t j) -> const Int& {
        return entry(relabel[i], relabel[j]);
    };

    // Step 5: acyclic parent function via breadth-first shortest paths to 0,
    // ties to the smallest vertex index.
    std::vector<int> dist(size, -1);
    dist[0] = 0;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t w = queue.front();
        queue.pop_front();
        for (std::size_t v = 0; v < size; ++v)
            if (dist[v] < 0 && rentry(v, w) != 0) {
                dist[v] = dist[w] + 1;
                queue.push_back(v);
            }
    }
    std::vector<std::size_t> phi(size, 0);
    for (std::size_t v = 1; v < size; ++v) {
        assert(dist[v] > 0);  // every vertex reaches 0 (unique minimal class)
        for (std::size_t w = 0; w < size; ++w)
            if (dist[w] == dist[v] - 1 && rentry(v, w) != 0) {
                phi[v] = w;
                break;
            }
    }

    // Step 6: two-color by tree depth parity; phi-adjacent vertices differ.
    std::vector<int> color(size);
    for (std::size_t v = 0; v < size; ++v) color[v] = dist[v] % 2;

    // Step 7: select the minority color (tie: the color of vertex 0), then
    // force 0 into the selection.
    std::size_t black = 0;
    for (std::size_t v = 0; v < size; ++v)
        if (color[v] == 0) ++black;
    int pick;
    if (2 * black < size) pick = 0;
    else if (2 * black > size) pick = 1;
    else pick = color[0];
    std::vector<bool> sel(size, false);
    for (std::size_t v = 0; v < size; ++v)
        if (color[v] == pick) sel[v] = true;
    sel[0] = true;

    WitnessCover out;
    out.diagonalPermutation = sigma;
    out.classes = classes;
    out.minimalClass = minClass;
    out.phi.assign(phi.begin() + 1, phi.end());
    out.coloring = color;
    for (std::size_t v = 0; v < size; ++v)
        if (sel[v]) out.selected.push_back(sigma[relabel[v]]);
    std::sort(out.selected.begin(), out.selected.end());

    // Postconditions: the bound on |S| and validity of the column set.
    if (2 * out.selected.size() > size + 1)
        throw std::logic_error("witness_cover: selection exceeds (n+2)/2");
    for (std::size_t i = 0; i < size; ++i) {
        bool hit = false;
        for (std::size_t j : out.selected)
            if (f.A.at(i, j) != 0) { hit = true; break; }
        if (!hit)
            throw std::logic_error("witness_cover: selected columns miss row " +
                                   std::to_string(i));
    }
    return out;
}

}  // namespace mono

#include "mono/mixedvol.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <utility>

namespace mono {

LatticePolytope::LatticePolytope(std::size_t d, std::vector<std::vector<Int>> pts)
    : dim(d), points(std::move(pts)) {
    for (const auto& p : points)
        if (p.size() != dim)
            throw ValidationError("LatticePolytope: point dimension mismatch");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

LatticePolytope standard_simplex(std::size_t n) {
    std::vector<std::vector<Int>> pts;
    pts.emplace_back(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> e(n, Int(0));
        e[i] = 1;
        pts.push_back(std::move(e));
    }
    return LatticePolytope(n, std::move(pts));
}

LatticePolytope newton_simplex(const MonomialMap& f) {
    std::vector<std::vector<Int>> pts;
    for (std::size_t i = 0; i <= f.n; ++i) {
        std::vector<Int> p(f.n);
        for (std::size_t j = 0; j < f.n; ++j) p[j] = f.A.at(i, j + 1);
        pts.push_back(std::move(p));
    }
    return LatticePolytope(f.n, std::move(pts));
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q,
                              const Int& s, const Int& t) {
    if (p.dim != q.dim)
        throw ValidationError("minkowski_sum: ambient dimension mismatch");
    if (s < 0 || t < 0)
        throw ValidationError("minkowski_sum: scale factors must be nonnegative");
    std::vector<std::vector<Int>> pts;
    pts.reserve(p.points.size() * q.points.size());
    for (const auto& a : p.points)
        for (const auto& b : q.points) {
            std::vector<Int> v(p.dim);
            for (std::size_t k = 0; k < p.dim; ++k) v[k] = s * a[k] + t * b[k];
            pts.push_back(std::move(v));
        }
    return LatticePolytope(p.dim, std::move(pts));
}

namespace {

// Rank of a set of integer vectors, by fraction-free elimination.
std::size_t int_rank(std::vector<std::vector<Int>> rows, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            for (std::size_t j = c + 1; j < cols; ++j)
                rows[i][j] = rows[i][j] * rows[rank][c] - rows[rank][j] * rows[i][c];
            rows[i][c] = 0;
        }
        ++rank;
    }
    return rank;
}

// Generalized cross product: integer normal of the hyperplane spanned by
// m-1 difference vectors in dimension m. Zero vector iff dependent.
std::vector<Int> hyperplane_normal(const std::vector<std::vector<Int>>& v,
                                   std::size_t m) {
    std::vector<Int> a(m);
    IntMatrix sub(m - 1, m - 1);
    for (std::size_t drop = 0; drop < m; ++drop) {
        for (std::size_t i = 0; i + 1 < m; ++i) {
            std::size_t c = 0;
            for (std::size_t j = 0; j < m; ++j) {
                if (j == drop) continue;
                sub.at(i, c++) = v[i][j];
            }
        }
        Int d = (m == 1) ? Int(1) : det_exact(sub);
        a[drop] = (drop % 2 == 0) ? d : Int(-d);
    }
    return a;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat hull_volume(const std::vector<std::vector<Int>>& pts, std::size_t m) {
    if (m == 0) return Rat(0);
    if (m == 1) {
        Int lo = pts[0][0], hi = pts[0][0];
        for (const auto& p : pts) {
            if (p[0] < lo) lo = p[0];
            if (p[0] > hi) hi = p[0];
        }
        return Rat(hi - lo);
    }
    if (pts.size() < m + 1) return 0;
    {
        std::vector<std::vector<Int>> diffs;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            std::vector<Int> d(m);
            for (std::size_t j = 0; j < m; ++j) d[j] = pts[i][j] - pts[0][j];
            diffs.push_back(std::move(d));
        }
        if (int_rank(std::move(diffs), m) < m) return 0;
    }

    const std::vector<Int>& apex = pts[0];
    std::set<std::pair<std::vector<Int>, Int>> seen;
    Rat vol = 0;

    // Every facet hyperplane is spanned by some m of the generators.
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    const std::size_t np = pts.size();
    for (;;) {
        std::vector<std::vector<Int>> v;
        for (std::size_t i = 1; i < m; ++i) {
            std::vector<Int> d(m);
            for (std::size_t j = 0; j < m; ++j)
                d[j] = pts[idx[i]][j] - pts[idx[0]][j];
            v.push_back(std::move(d));
        }
        std::vector<Int> a = hyperplane_normal(v, m);
        bool zero = std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
        if (!zero) {
            Int g = 0;
            for (const Int& x : a) g = gcd(g, x);
            for (Int& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
            for (const Int& x : a) {
                if (x == 0) continue;
                if (x < 0)
                    for (Int& y : a) y = -y;
                break;
            }
            Int b = dot(a, pts[idx[0]]);
            if (seen.emplace(a, b).second) {
                bool below = true, above = true;
                for (const auto& p : pts) {
                    int c = cmp(dot(a, p), b);
                    if (c > 0) below = false;
                    if (c < 0) above = false;
                    if (!below && !above) break;
                }
                if (below || above) {
                    Int h = dot(a, apex) - b;  // signed apex height (scaled by |a|)
                    if (h != 0) {
                        std::size_t drop = 0;
                        for (std::size_t j = 1; j < m; ++j)
                            if (mpz_cmpabs(a[j].get_mpz_t(), a[drop].get_mpz_t()) > 0)
                                drop = j;
                        std::vector<std::vector<Int>> proj;
                        for (const auto& p : pts) {
                            if (dot(a, p) != b) continue;
                            std::vector<Int> q;
                            q.reserve(m - 1);
                            for (std::size_t j = 0; j < m; ++j)
                                if (j != drop) q.push_back(p[j]);
                            proj.push_back(std::move(q));
                        }
                        std::sort(proj.begin(), proj.end());
                        proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
                        // The |a| factors from the height and the projection
                        // scaling cancel against each other.
                        Rat pyramid = hull_volume(proj, m - 1);
                        pyramid *= Rat(abs(h));
                        pyramid /= Rat(Int(m) * abs(a[drop]));
                        vol += pyramid;
                    }
                }
            }
        }
        // next m-combination
        std::size_t i = m;
        while (i > 0 && idx[i - 1] == np - m + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return vol;
}

Int factorial(std::size_t k) {
    Int f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<unsigned long>(i);
    return f;
}

}  // namespace

Rat volume_exact(const LatticePolytope& p) { return hull_volume(p.points, p.dim); }

VolumePolynomial volume_polynomial(const MonomialMap& f) {
    const std::size_t n = f.n;
    Int deg = map_degree(f);
    if (deg == 0)
        throw DomainError("volume_polynomial: map is not dominant "
                          "(Newton simplex is degenerate)");
    LatticePolytope simplex = standard_simplex(n);
    LatticePolytope newton = newton_simplex(f);

    std::vector<Rat> value(n + 1);
    for (std::size_t t = 0; t <= n; ++t)
        value[t] = volume_exact(minkowski_sum(simplex, newton, 1, Int(t)));

    // Exact Lagrange interpolation at the nodes t = 0..n.
    std::vector<Rat> coeff(n + 1, Rat(0));
    for (std::size_t j = 0; j <= n; ++j) {
        std::vector<Rat> basis{Rat(1)};  // product of (x - k) for k != j
        Rat denom = 1;
        for (std::size_t k = 0; k <= n; ++k) {
            if (k == j) continue;
            basis.push_back(0);
            for (std::size_t i = basis.size() - 1; i > 0; --i)
                basis[i] = basis[i - 1] - Rat(Int(k)) * basis[i];
            basis[0] *= -Rat(Int(k));
            denom *= Rat(Int(j)) - Rat(Int(k));
        }
        Rat w = value[j] / denom;
        for (std::size_t i = 0; i <= n; ++i) coeff[i] += w * basis[i];
    }

    Int nf = factorial(n);
    if (coeff[0] != Rat(1) / Rat(nf))
        throw std::logic_error("volume_polynomial: constant term is not vol(simplex)");
    if (coeff[n] != Rat(deg) / Rat(nf))
        throw std::logic_error("volume_polynomial: leading term is not vol(Newton simplex)");
    for (const Rat& c : coeff)
        if (c < 0) throw std::logic_error("volume_polynomial: negative coefficient");
    return VolumePolynomial{std::move(coeff)};
}

MultidegreeVector multidegree(const MonomialMap& f) {
    const std::size_t n = f.n;
    VolumePolynomial poly = volume_polynomial(f);
    MultidegreeVector out;
    out.values.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        Rat v = poly.coefficients[i] * Rat(factorial(n - i) * factorial(i));
        if (v.get_den() != 1)
            throw std::logic_error("multidegree: d_" + std::to_string(i) +
                                   " is not an integer: " + v.get_str());
        out.values[i] = v.get_num();
    }
    return out;
}

}  // namespace mono

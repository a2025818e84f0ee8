#include "mono/monomap.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

namespace mono {

MonomialMap validate(const IntMatrix& matrix) {
    if (matrix.rows() == 0 || !matrix.square())
        throw ValidationError("validate: exponent matrix must be square and nonempty, got " +
                              std::to_string(matrix.rows()) + "x" +
                              std::to_string(matrix.cols()));
    const std::size_t size = matrix.rows();
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            if (matrix.at(i, j) < 0)
                throw ValidationError("validate: negative entry at row " +
                                      std::to_string(i) + ", column " + std::to_string(j));
    Int d = 0;
    for (std::size_t j = 0; j < size; ++j) d += matrix.at(0, j);
    for (std::size_t i = 1; i < size; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < size; ++j) s += matrix.at(i, j);
        if (s != d)
            throw ValidationError("validate: row " + std::to_string(i) + " sums to " +
                                  s.get_str() + ", row 0 sums to " + d.get_str());
    }
    if (d < 1) throw ValidationError("validate: degree is zero (all-zero rows)");

    MonomialMap f;
    f.n = size - 1;
    f.A = matrix;
    f.d = d;
    f.normalized = true;
    for (std::size_t j = 0; j < size && f.normalized; ++j) {
        bool zero = false;
        for (std::size_t i = 0; i < size; ++i)
            if (matrix.at(i, j) == 0) { zero = true; break; }
        if (!zero) f.normalized = false;
    }
    return f;
}

MonomialMap normalize(const MonomialMap& f) {
    if (f.normalized) return f;
    const std::size_t size = f.n + 1;
    IntMatrix a = f.A;
    for (std::size_t j = 0; j < size; ++j) {
        Int mn = a.at(0, j);
        for (std::size_t i = 1; i < size; ++i)
            if (a.at(i, j) < mn) mn = a.at(i, j);
        if (mn > 0)
            for (std::size_t i = 0; i < size; ++i) a.at(i, j) -= mn;
    }
    return validate(a);
}

IntMatrix torus_map(const MonomialMap& f) {
    const std::size_t n = f.n;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = f.A.at(i + 1, j + 1) - f.A.at(0, j + 1);
    return m;
}

Int map_degree(const MonomialMap& f) {
    Int detA = det_exact(f.A);
    if (detA == 0) return 0;
    detA = abs(detA);
    // det(A) = d * det(M), so the division is exact.
    if (detA % f.d != 0)
        throw std::logic_error("map_degree: |det(A)| not divisible by d");
    return detA / f.d;
}

bool is_birational(const MonomialMap& f) { return map_degree(f) == 1; }

MonomialMap compose(const MonomialMap& f, const MonomialMap& g) {
    if (f.n != g.n)
        throw ValidationError("compose: dimension mismatch (" + std::to_string(f.n) +
                              " vs " + std::to_string(g.n) + ")");
    return normalize(validate(f.A * g.A));
}

MonomialMap projectivize(const IntMatrix& torusMatrix) {
    if (!torusMatrix.square())
        throw ValidationError("projectivize: matrix is not square");
    const std::size_t n = torusMatrix.rows();
    // Torus components 1, x^{M_1}, ..., x^{M_n}; shift each column so the
    // exponents (including the implicit zero row) become nonnegative.
    IntMatrix b(n + 1, n);
    for (std::size_t j = 0; j < n; ++j) {
        Int mn = 0;  // implicit zero row
        for (std::size_t i = 0; i < n; ++i)
            if (torusMatrix.at(i, j) < mn) mn = torusMatrix.at(i, j);
        Int shift = -mn;
        b.at(0, j) = shift;
        for (std::size_t i = 0; i < n; ++i)
            b.at(i + 1, j) = torusMatrix.at(i, j) + shift;
    }
    Int maxSum = 0;
    std::vector<Int> rowSum(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j < n; ++j) rowSum[i] += b.at(i, j);
        if (rowSum[i] > maxSum) maxSum = rowSum[i];
    }
    IntMatrix a(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        a.at(i, 0) = maxSum - rowSum[i];  // pad with powers of x_0
        for (std::size_t j = 0; j < n; ++j) a.at(i, j + 1) = b.at(i, j);
    }
    MonomialMap out = normalize(validate(a));
    assert(torus_map(out) == torusMatrix);
    return out;
}

MonomialMap inverse(const MonomialMap& f) {
    IntMatrix m = torus_map(f);
    Int detM = abs(det_exact(m));
    if (detM != 1)
        throw DomainError("inverse: map is not birational, |det(M)| = " + detM.get_str());
    return projectivize(inverse_unimodular(m));
}

Int inverse_degree(const MonomialMap& f) { return inverse(f).d; }

namespace {

bool row_less(const IntMatrix& m, std::size_t r1, std::size_t r2,
              const std::vector<std::size_t>& colPerm) {
    for (std::size_t c : colPerm) {
        int v = cmp(m.at(r1, c), m.at(r2, c));
        if (v != 0) return v < 0;
    }
    return false;
}

}  // namespace

IntMatrix canonical_form(const MonomialMap& f) {
    if (!f.normalized)
        throw DomainError("canonical_form: map must be normalized");
    const std::size_t size = f.n + 1;
    std::vector<std::size_t> colPerm(size);
    std::iota(colPerm.begin(), colPerm.end(), 0);
    IntMatrix best;
    bool haveBest = false;
    std::vector<std::size_t> rowOrder(size);
    do {
        // For a fixed column permutation the lex-least row arrangement is the sort.
        std::iota(rowOrder.begin(), rowOrder.end(), 0);
        std::sort(rowOrder.begin(), rowOrder.end(), [&](std::size_t a, std::size_t b) {
            return row_less(f.A, a, b, colPerm);
        });
        IntMatrix cand(size, size);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j)
                cand.at(i, j) = f.A.at(rowOrder[i], colPerm[j]);
        if (!haveBest || cand < best) {
            best = std::move(cand);
            haveBest = true;
        }
    } while (std::next_permutation(colPerm.begin(), colPerm.end()));
    return best;
}

MonomialMap gen_fnd(std::size_t n, const Int& d) {
    if (n < 1 || d < 1) throw ValidationError("gen_fnd: need n >= 1 and d >= 1");
    IntMatrix a(n + 1, n + 1);
    a.at(0, 0) = d;
    for (std::size_t i = 1; i <= n; ++i) {
        a.at(i, i - 1) = d - 1;
        a.at(i, i) = 1;
    }
    return validate(a);
}

MonomialMap gen_family_one(std::size_t n, const Int& d,
                           const std::vector<std::vector<Int>>& oddRows) {
    if (n < 2 || d < 2) throw ValidationError("gen_family_one: need n >= 2 and d >= 2");
    IntMatrix a(n + 1, n + 1);
    a.at(0, 0) = d;
    std::size_t k = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i % 2 == 0) {
            a.at(i, i - 1) = d - 1;
            a.at(i, i) = 1;
            continue;
        }
        std::vector<Int> prefix;
        if (k < oddRows.size() && !oddRows[k].empty()) prefix = oddRows[k];
        else prefix = [&] {
            std::vector<Int> p(i, 0);
            p[0] = d - 1;
            return p;
        }();
        ++k;
        if (prefix.size() != i)
            throw ValidationError("gen_family_one: row " + std::to_string(i) +
                                  " needs exactly " + std::to_string(i) +
                                  " coefficients, got " + std::to_string(prefix.size()));
        if (prefix[0] == 0)
            throw ValidationError("gen_family_one: row " + std::to_string(i) +
                                  " requires a_{i0} != 0");
        Int s = 0;
        for (std::size_t j = 0; j < i; ++j) {
            if (prefix[j] < 0)
                throw ValidationError("gen_family_one: negative coefficient in row " +
                                      std::to_string(i));
            s += prefix[j];
        }
        if (s != d - 1)
            throw ValidationError("gen_family_one: row " + std::to_string(i) +
                                  " coefficients must sum to d-1 = " + Int(d - 1).get_str() +
                                  ", got " + s.get_str());
        for (std::size_t j = 0; j < i; ++j) a.at(i, j) = prefix[j];
        a.at(i, i) = 1;
    }
    return validate(a);
}

MonomialMap gen_family_two(std::size_t n, const Int& d,
                           const std::vector<Int>& rowThree,
                           const std::vector<std::vector<Int>>& evenRows) {
    if (n < 4 || d < 3) throw ValidationError("gen_family_two: need n >= 4 and d >= 3");
    IntMatrix a(n + 1, n + 1);
    a.at(0, 0) = 1; a.at(0, 1) = 1; a.at(0, 2) = 1; a.at(0, 3) = d - 3;
    a.at(1, 1) = 1; a.at(1, 2) = 1; a.at(1, 3) = d - 2;
    a.at(2, 0) = d - 1; a.at(2, 2) = 1;

    std::vector<Int> r3 = rowThree.empty() ? std::vector<Int>{d - 2, 1, 1} : rowThree;
    if (r3.size() != 3)
        throw ValidationError("gen_family_two: row 3 needs exactly (a30, a31, a33)");
    if (r3[0] < 0 || r3[1] < 0 || r3[2] < 0)
        throw ValidationError("gen_family_two: negative coefficient in row 3");
    if (r3[0] + r3[1] + r3[2] != d)
        throw ValidationError("gen_family_two: a30 + a31 + a33 must equal d = " + d.get_str());
    if (r3[1] == 0 || r3[2] == 0)
        throw ValidationError("gen_family_two: requires a31 * a33 != 0");
    a.at(3, 0) = r3[0]; a.at(3, 1) = r3[1]; a.at(3, 3) = r3[2];

    std::size_t k = 0;
    for (std::size_t i = 4; i <= n; ++i) {
        if (i % 2 == 1) {
            a.at(i, i - 1) = d - 1;
            a.at(i, i) = 1;
            continue;
        }
        std::vector<Int> prefix;
        if (k < evenRows.size() && !evenRows[k].empty()) prefix = evenRows[k];
        else {
            prefix.assign(i, 0);
            prefix[0] = d - 2;
            prefix[2] = 1;
        }
        ++k;
        if (prefix.size() != i)
            throw ValidationError("gen_family_two: row " + std::to_string(i) +
                                  " needs exactly " + std::to_string(i) +
                                  " coefficients, got " + std::to_string(prefix.size()));
        if (prefix[0] == 0 || prefix[2] == 0)
            throw ValidationError("gen_family_two: row " + std::to_string(i) +
                                  " requires a_{i0} a_{i2} != 0");
        Int s = 0;
        for (std::size_t j = 0; j < i; ++j) {
            if (prefix[j] < 0)
                throw ValidationError("gen_family_two: negative coefficient in row " +
                                      std::to_string(i));
            s += prefix[j];
        }
        if (s != d - 1)
            throw ValidationError("gen_family_two: row " + std::to_string(i) +
                                  " coefficients must sum to d-1 = " + Int(d - 1).get_str() +
                                  ", got " + s.get_str());
        for (std::size_t j = 0; j < i; ++j) a.at(i, j) = prefix[j];
        a.at(i, i) = 1;
    }
    return validate(a);
}

IntMatrix parse_matrix(std::istream& in) {
    std::vector<std::vector<Int>> rows;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (header && !line.empty() && line[0] == '#') continue;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            if (rows.empty()) continue;  // allow blank lines before the matrix
            break;                       // matrix ends at the first blank line
        }
        header = false;
        std::istringstream ls(line);
        std::vector<Int> row;
        std::string tok;
        while (ls >> tok) {
            if (tok.find_first_not_of("0123456789") != std::string::npos)
                throw ValidationError("parse_matrix: token '" + tok +
                                      "' is not a nonnegative integer (row " +
                                      std::to_string(rows.size()) + ")");
            row.emplace_back(tok);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ValidationError("parse_matrix: no matrix data");
    const std::size_t cols = rows[0].size();
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].size() != cols)
            throw ValidationError("parse_matrix: ragged row " + std::to_string(i) +
                                  " has " + std::to_string(rows[i].size()) +
                                  " entries, expected " + std::to_string(cols));
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = std::move(rows[i][j]);
    return m;
}

IntMatrix parse_matrix_file(const std::string& path) {
    if (path == "-") return parse_matrix(std::cin);
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file: " + path);
    return parse_matrix(in);
}

std::string format_matrix(const IntMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += m.at(i, j).get_str();
        }
        out += '\n';
    }
    return out;
}

}  // namespace mono

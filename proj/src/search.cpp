#include "mono/search.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "mono/indet.hpp"

namespace mono {

std::vector<std::vector<Int>> compositions(long d, std::size_t parts) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(parts);
    auto rec = [&](auto&& self, std::size_t pos, long rest) -> void {
        if (pos + 1 == parts) {
            cur[pos] = rest;
            out.push_back(cur);
            return;
        }
        for (long v = 0; v <= rest; ++v) {
            cur[pos] = v;
            self(self, pos + 1, rest - v);
        }
    };
    if (parts > 0) rec(rec, 0, d);
    return out;
}

namespace {

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

void check_feasible(std::size_t n, long d, const SearchOptions& opts,
                    std::size_t numComps) {
    // Raw row tuples: multisets of n+1 rows drawn from the compositions.
    Int raw = binomial(static_cast<unsigned long>(numComps + n),
                       static_cast<unsigned long>(n + 1));
    if (raw > Int(std::to_string(opts.rowTupleLimit))) {
        std::ostringstream msg;
        msg << "search (n=" << n << ", d=" << d << ") refused: about "
            << raw.get_str() << " raw row tuples exceed the limit of "
            << opts.rowTupleLimit;
        throw InfeasibleError(msg.str());
    }
}

bool columns_all_have_zero(const IntMatrix& a) {
    const std::size_t size = a.rows();
    for (std::size_t j = 0; j < size; ++j) {
        bool zero = false;
        for (std::size_t i = 0; i < size; ++i)
            if (a.at(i, j) == 0) { zero = true; break; }
        if (!zero) return false;
    }
    return true;
}

/// Visits every normalized matrix whose rows are comps[i0] <= ... (indices
/// non-decreasing), with the first row fixed to comps[i0].
void scan_partition(const std::vector<std::vector<Int>>& comps, std::size_t n,
                    std::size_t i0,
                    const std::function<void(const IntMatrix&)>& visit) {
    const std::size_t size = n + 1;
    std::vector<std::size_t> pick(size);
    pick[0] = i0;
    auto rec = [&](auto&& self, std::size_t row) -> void {
        if (row == size) {
            IntMatrix a(size, size);
            for (std::size_t i = 0; i < size; ++i)
                for (std::size_t j = 0; j < size; ++j)
                    a.at(i, j) = comps[pick[i]][j];
            if (columns_all_have_zero(a)) visit(a);
            return;
        }
        for (std::size_t i = pick[row - 1]; i < comps.size(); ++i) {
            pick[row] = i;
            self(self, row + 1);
        }
    };
    rec(rec, 1);
}

struct Partial {
    unsigned long long total = 0;
    std::map<IntMatrix, long> classes;  // canonical form -> inverse degree
};

std::string composition_line(const std::vector<Int>& c) {
    std::string s;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (j) s += ' ';
        s += c[j].get_str();
    }
    return s;
}

}  // namespace

void enumerate_maps(std::size_t n, long d, bool birational_only,
                    const std::function<void(const MonomialMap&)>& fn) {
    if (n < 1 || d < 1)
        throw ValidationError("enumerate_maps: need n >= 1 and d >= 1");
    auto comps = compositions(d, n + 1);
    for (std::size_t i0 = 0; i0 < comps.size(); ++i0)
        scan_partition(comps, n, i0, [&](const IntMatrix& a) {
            if (birational_only) {
                Int det = abs(det_exact(a));
                if (det != d) return;
            }
            fn(validate(a));
        });
}

SearchReport extremal_search(std::size_t n, long d, const SearchOptions& opts) {
    if (n < 1 || d < 1)
        throw ValidationError("extremal_search: need n >= 1 and d >= 1");
    auto start = std::chrono::steady_clock::now();
    auto comps = compositions(d, n + 1);
    check_feasible(n, d, opts, comps.size());

    std::set<std::string> done;
    if (!opts.checkpointPath.empty()) {
        std::ifstream in(opts.checkpointPath);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) done.insert(line);
    }
    std::mutex checkpointMutex;

    std::vector<Partial> partials(comps.size());
    std::vector<char> skipped(comps.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t p = next.fetch_add(1);
            if (p >= comps.size()) return;
            std::string key = composition_line(comps[p]);
            if (done.count(key)) {
                skipped[p] = 1;
                continue;
            }
            Partial& out = partials[p];
            scan_partition(comps, n, p, [&](const IntMatrix& a) {
                ++out.total;
                Int det = abs(det_exact(a));
                if (det != d) return;
                MonomialMap f = validate(a);
                IntMatrix canon = canonical_form(f);
                if (out.classes.count(canon)) return;
                out.classes.emplace(std::move(canon),
                                    inverse_degree(f).get_si());
            });
            if (!opts.checkpointPath.empty()) {
                std::lock_guard<std::mutex> lock(checkpointMutex);
                std::ofstream log(opts.checkpointPath, std::ios::app);
                log << key << '\n';
            }
        }
    };
    const int nThreads = std::max(1, opts.threads);
    if (nThreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nThreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    SearchReport rep;
    rep.n = n;
    rep.d = d;
    std::map<IntMatrix, long> merged;
    for (std::size_t p = 0; p < comps.size(); ++p) {
        if (skipped[p]) {
            ++rep.skippedPartitions;
            continue;
        }
        ++rep.completedPartitions;
        rep.totalMatrices += partials[p].total;
        for (auto& [canon, inv] : partials[p].classes) merged.emplace(canon, inv);
    }
    rep.birationalClasses = merged.size();
    for (const auto& [canon, inv] : merged) {
        ++rep.histogram[inv];
        if (inv > rep.maxInverseDegree) rep.maxInverseDegree = inv;
    }
    for (const auto& [canon, inv] : merged)
        if (inv == rep.maxInverseDegree) rep.maximizers.push_back(canon);

    if (d >= 2 && !merged.empty()) {
        rep.conjectureApplicable = true;
        if (d == 2) {
            rep.expectedMax = static_cast<long>(n);
        } else {
            Int dm1 = d - 1;
            Int num;
            mpz_pow_ui(num.get_mpz_t(), dm1.get_mpz_t(), static_cast<unsigned long>(n));
            rep.expectedMax = (num - 1) / (d - 2);
        }
        // The maximizer list is the witness either way.
        rep.conjectureStatus = rep.expectedMax == rep.maxInverseDegree
                                   ? "CONFIRMED-AT-THIS-SIZE"
                                   : "REFUTED-WITH-WITNESS";
    }

    rep.runtimeSeconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

TheoremScanResult verify_theorem_exhaustive(std::size_t n, long d,
                                            const SearchOptions& opts) {
    auto comps = compositions(d, n + 1);
    check_feasible(n, d, opts, comps.size());
    TheoremScanResult out;
    enumerate_maps(n, d, false, [&](const MonomialMap& f) {
        Int deg = map_degree(f);
        if (deg == 0 || deg % f.d == 0) return;
        ++out.checked;
        DimensionTheoremResult thm = check_dimension_theorem(f);
        if (!thm.holds) {
            out.violations.push_back("dimension bound fails (dim " +
                                     std::to_string(thm.dim) + " < " +
                                     std::to_string(thm.bound) + "):\n" +
                                     format_matrix(f.A));
            return;
        }
        try {
            WitnessCover w = witness_cover(f);
            if (2 * w.selected.size() > n + 2)
                out.violations.push_back("witness exceeds (n+2)/2:\n" +
                                         format_matrix(f.A));
            else if (static_cast<int>(n - w.selected.size()) < thm.bound)
                out.violations.push_back("witness too weak:\n" + format_matrix(f.A));
        } catch (const std::exception& e) {
            out.violations.push_back(std::string("witness construction failed (") +
                                     e.what() + "):\n" + format_matrix(f.A));
        }
    });
    return out;
}

GapScanResult gap_scan(std::size_t n, long d, const SearchOptions& opts) {
    SearchReport rep = extremal_search(n, d, opts);
    GapScanResult out;
    for (const auto& [inv, count] : rep.histogram) out.attained.push_back(inv);

    if (n == 4 && d >= 3 && rep.birationalClasses >= 2) {
        out.secondBestApplicable = true;
        IntMatrix fnd = canonical_form(normalize(gen_fnd(n, d)));
        // Largest inverse degree over classes other than f_{n,d}.
        bool fndIsUniqueMaximizer =
            rep.maximizers.size() == 1 && rep.maximizers[0] == fnd;
        long secondBest = 0;
        if (fndIsUniqueMaximizer) {
            for (long v : out.attained)
                if (v < rep.maxInverseDegree && v > secondBest) secondBest = v;
        } else {
            secondBest = rep.maxInverseDegree;
        }
        out.secondBest = secondBest;
        Int dm1 = d - 1;
        Int num;
        mpz_pow_ui(num.get_mpz_t(), dm1.get_mpz_t(), static_cast<unsigned long>(n));
        out.secondBestBound = (num - 1) / (d - 2) - d + 1;
        out.secondBestHolds = Int(secondBest) <= out.secondBestBound;
    }
    return out;
}

}  // namespace mono

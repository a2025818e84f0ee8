#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mono/monomap.hpp"

namespace mono {

struct SearchOptions {
    int threads = 1;
    std::string checkpointPath;  // empty: no checkpoint log
    // Refusal threshold on the raw number of row tuples.
    unsigned long long rowTupleLimit = 100000000ULL;
};

struct SearchReport {
    std::size_t n = 0;
    long d = 0;
    unsigned long long totalMatrices = 0;     // normalized candidates enumerated
    unsigned long long birationalClasses = 0; // canonical classes with |det(A)| = d
    std::map<long, unsigned long long> histogram;  // d(f^-1) -> class count
    long maxInverseDegree = 0;
    std::vector<IntMatrix> maximizers;        // canonical forms, sorted
    double runtimeSeconds = 0.0;
    // Status of the conjectured maximum: n for d = 2 (where the
    // classification is known), ((d-1)^n - 1)/(d-2) for d >= 3.
    bool conjectureApplicable = false;
    Int expectedMax;
    std::string conjectureStatus;  // CONFIRMED-AT-THIS-SIZE / REFUTED-WITH-WITNESS
    unsigned long long completedPartitions = 0;
    unsigned long long skippedPartitions = 0;
};

struct TheoremScanResult {
    unsigned long long checked = 0;  // dominant maps with d not dividing deg
    std::vector<std::string> violations;
};

struct GapScanResult {
    std::vector<long> attained;  // sorted attained inverse degrees
    bool secondBestApplicable = false;  // n = 4, d >= 3, with >= 2 classes
    long secondBest = 0;
    Int secondBestBound;  // d(f_{n,d}^{-1}) - d + 1
    bool secondBestHolds = false;
};

/// All compositions of d into `parts` nonnegative parts, lexicographic.
std::vector<std::vector<Int>> compositions(long d, std::size_t parts);

/// Every normalized monomial map of P^n with degree d, up to row
/// permutation (rows form a non-decreasing sequence of compositions).
/// With birational_only, maps with |det(A)| != d are skipped.
void enumerate_maps(std::size_t n, long d, bool birational_only,
                    const std::function<void(const MonomialMap&)>& fn);

/// Symmetry-reduced exhaustive search for the extremal inverse degree.
SearchReport extremal_search(std::size_t n, long d, const SearchOptions& opts = {});

/// Checks the indeterminacy-dimension bound and the witness construction
/// over every enumerated dominant map with d not dividing deg(f).
TheoremScanResult verify_theorem_exhaustive(std::size_t n, long d,
                                            const SearchOptions& opts = {});

/// Attained inverse-degree values, with the second-best gap check at n = 4.
GapScanResult gap_scan(std::size_t n, long d, const SearchOptions& opts = {});

}  // namespace mono

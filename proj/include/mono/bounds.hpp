#pragma once

#include <string>
#include <vector>

#include "mono/indet.hpp"
#include "mono/mixedvol.hpp"

namespace mono {

/// One verified inequality with the exact integers that were compared.
struct CheckDetail {
    std::string name;
    bool holds = false;
    std::string lhs;
    std::string rhs;
};

struct Prop3Result {
    bool applicable = false;  // d >= 2 and d does not divide deg
    bool holds = false;
    std::vector<CheckDetail> details;
};

struct SegreResult {
    bool segreExact = false;     // d_i = d^i for all i < c'
    bool segreTopBound = false;  // d_{c'} <= d^{c'} - topCount
    std::vector<CheckDetail> details;
};

struct BirationalBounds {
    bool withinGeneralBound = false;  // d_{n-1} <= d^{n-1}
    bool bound4Applicable = false;    // d >= 2
    bool withinBound4 = false;        // the i = n-1 instance of the degree bound
    std::vector<CheckDetail> details;
};

struct BoundsReport {
    std::size_t n = 0;
    Int d;
    Int deg;
    int c = 0;       // floor(n/2) + 1
    int codim = -1;  // from the indeterminacy locus; -1 when empty
    MultidegreeVector multidegrees;
    bool logConcave = false;
    bool segreExact = false;
    bool segreTopBound = false;
    bool prop3Applicable = false;
    bool prop3Holds = false;
    bool birational = false;
    bool withinGeneralBound = false;
    bool bound4Applicable = false;
    bool withinBound4 = false;
    std::vector<CheckDetail> details;
};

/// d_i^2 >= d_{i-1} d_{i+1} for all interior i.
bool check_log_concavity(const MultidegreeVector& dvec);

/// d_i <= (1 - d^{-c})^{(i-1)/(c-1)} d^i for i in {c..n}, verified in the
/// cleared-denominator integer form
/// d_i^{c-1} d^{c(i-1)} <= (d^c - 1)^{i-1} d^{i(c-1)}.
Prop3Result check_prop3(const MultidegreeVector& dvec, const Int& d, const Int& deg);

/// Degree relations through the Segre class of the indeterminacy locus:
/// exact below the codimension, bounded by the top-component count at it.
/// An empty locus checks d_i = d^i for every i (morphism case).
SegreResult check_segre_relations(const MultidegreeVector& dvec,
                                  const IndeterminacyLocus& locus, const Int& d);

/// d(f^{-1}) = d_{n-1} against the general bound d^{n-1} and the i = n-1
/// instance of the sharper bound. Requires d_n = 1.
BirationalBounds check_birational_bounds(const MultidegreeVector& dvec, const Int& d);

/// Runs every check on one map; requires a normalized dominant map.
BoundsReport bounds_report(const MonomialMap& f);

}  // namespace mono

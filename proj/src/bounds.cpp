#include "mono/bounds.hpp"

namespace mono {

namespace {

Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

CheckDetail detail(std::string name, const Int& lhs, const Int& rhs, bool holds) {
    return CheckDetail{std::move(name), holds, lhs.get_str(), rhs.get_str()};
}

}  // namespace

bool check_log_concavity(const MultidegreeVector& dvec) {
    const std::size_t n = dvec.values.size() - 1;
    for (std::size_t i = 1; i < n; ++i)
        if (dvec.values[i] * dvec.values[i] <
            dvec.values[i - 1] * dvec.values[i + 1])
            return false;
    return true;
}

Prop3Result check_prop3(const MultidegreeVector& dvec, const Int& d, const Int& deg) {
    const std::size_t n = dvec.values.size() - 1;
    const unsigned long c = n / 2 + 1;
    Prop3Result r;
    r.applicable = (d >= 2 && deg % d != 0);
    if (!r.applicable) return r;
    r.holds = true;
    for (std::size_t i = c; i <= n; ++i) {
        // d_i^{c-1} d^{c(i-1)} <= (d^c - 1)^{i-1} d^{i(c-1)}
        Int lhs = ipow(dvec.values[i], c - 1) * ipow(d, c * (i - 1));
        Int rhs = ipow(Int(ipow(d, c) - 1), i - 1) * ipow(d, i * (c - 1));
        bool ok = lhs <= rhs;
        r.details.push_back(detail("prop3_i" + std::to_string(i), lhs, rhs, ok));
        if (!ok) r.holds = false;
    }
    return r;
}

SegreResult check_segre_relations(const MultidegreeVector& dvec,
                                  const IndeterminacyLocus& locus, const Int& d) {
    const std::size_t n = dvec.values.size() - 1;
    SegreResult r;
    r.segreExact = true;
    const std::size_t cp = locus.empty() ? n + 1 : static_cast<std::size_t>(locus.codim);
    for (std::size_t i = 0; i <= n && i < cp; ++i) {
        Int rhs = ipow(d, i);
        bool ok = dvec.values[i] == rhs;
        r.details.push_back(detail("segre_exact_i" + std::to_string(i),
                                   dvec.values[i], rhs, ok));
        if (!ok) r.segreExact = false;
    }
    if (locus.empty()) {
        r.segreTopBound = true;  // vacuous: no top-dimensional components
    } else {
        // deg_s(B) >= deg(B) >= topCount, so d_{c'} <= d^{c'} - topCount.
        Int rhs = ipow(d, cp) - locus.topCount;
        r.segreTopBound = dvec.values[cp] <= rhs;
        r.details.push_back(detail("segre_top_bound", dvec.values[cp], rhs,
                                   r.segreTopBound));
    }
    return r;
}

BirationalBounds check_birational_bounds(const MultidegreeVector& dvec, const Int& d) {
    const std::size_t n = dvec.values.size() - 1;
    if (dvec.values[n] != 1)
        throw DomainError("check_birational_bounds: map is not birational (d_n = " +
                          dvec.values[n].get_str() + ")");
    BirationalBounds r;
    const Int& dinv = dvec.values[n - 1];
    Int general = ipow(d, n - 1);
    r.withinGeneralBound = dinv <= general;
    r.details.push_back(detail("general_bound", dinv, general, r.withinGeneralBound));

    r.bound4Applicable = (d >= 2 && n >= 2);
    if (r.bound4Applicable) {
        const unsigned long c = n / 2 + 1;
        Int lhs = ipow(dinv, c - 1) * ipow(d, c * (n - 2));
        Int rhs = ipow(Int(ipow(d, c) - 1), n - 2) * ipow(d, (n - 1) * (c - 1));
        r.withinBound4 = lhs <= rhs;
        r.details.push_back(detail("bound4", lhs, rhs, r.withinBound4));
    }
    return r;
}

BoundsReport bounds_report(const MonomialMap& f) {
    if (!f.normalized)
        throw DomainError("bounds_report: map must be normalized");
    Int deg = map_degree(f);
    if (deg == 0)
        throw DomainError("bounds_report: map is not dominant");

    BoundsReport rep;
    rep.n = f.n;
    rep.d = f.d;
    rep.deg = deg;
    rep.c = static_cast<int>(f.n / 2) + 1;
    IndeterminacyLocus locus = indeterminacy(f);
    rep.codim = locus.codim;
    rep.multidegrees = multidegree(f);

    rep.logConcave = check_log_concavity(rep.multidegrees);
    rep.details.push_back(CheckDetail{"log_concavity", rep.logConcave, "", ""});

    SegreResult segre = check_segre_relations(rep.multidegrees, locus, f.d);
    rep.segreExact = segre.segreExact;
    rep.segreTopBound = segre.segreTopBound;
    rep.details.insert(rep.details.end(), segre.details.begin(), segre.details.end());

    Prop3Result p3 = check_prop3(rep.multidegrees, f.d, deg);
    rep.prop3Applicable = p3.applicable;
    rep.prop3Holds = p3.holds;
    rep.details.insert(rep.details.end(), p3.details.begin(), p3.details.end());

    rep.birational = (deg == 1);
    if (rep.birational && f.n >= 1) {
        BirationalBounds bb = check_birational_bounds(rep.multidegrees, f.d);
        rep.withinGeneralBound = bb.withinGeneralBound;
        rep.bound4Applicable = bb.bound4Applicable;
        rep.withinBound4 = bb.withinBound4;
        rep.details.insert(rep.details.end(), bb.details.begin(), bb.details.end());
    }
    return rep;
}

}  // namespace mono

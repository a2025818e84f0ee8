#include "mono/report.hpp"

namespace mono {

using nlohmann::json;

json json_int(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json json_rat(const Rat& v) { return json(v.get_num().get_str() + "/" + v.get_den().get_str()); }

json json_matrix(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_int(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const MonomialMap& f) {
    return json{{"n", f.n},
                {"d", json_int(f.d)},
                {"normalized", f.normalized},
                {"matrix", json_matrix(f.A)}};
}

json to_json(const IndeterminacyLocus& locus) {
    json comps = json::array();
    for (const auto& c : locus.components) comps.push_back(c);
    json out{{"components", std::move(comps)}, {"topCount", locus.topCount}};
    if (locus.empty()) {
        out["dim"] = "empty";
        out["codim"] = "empty";
    } else {
        out["dim"] = locus.dim;
        out["codim"] = locus.codim;
    }
    return out;
}

json to_json(const WitnessCover& w) {
    json classes = json::array();
    for (const auto& c : w.classes) classes.push_back(c);
    return json{{"selected", w.selected},
                {"size", w.selected.size()},
                {"diagonalPermutation", w.diagonalPermutation},
                {"classes", std::move(classes)},
                {"minimalClass", w.minimalClass},
                {"phi", w.phi},
                {"coloring", w.coloring}};
}

json to_json(const MultidegreeVector& dvec) {
    json values = json::array();
    for (const Int& v : dvec.values) values.push_back(json_int(v));
    return json{{"values", std::move(values)}};
}

json to_json(const BoundsReport& rep) {
    json details = json::array();
    for (const auto& d : rep.details) {
        json item{{"name", d.name}, {"holds", d.holds}};
        if (!d.lhs.empty()) {
            item["lhs"] = d.lhs;
            item["rhs"] = d.rhs;
        }
        details.push_back(std::move(item));
    }
    json out{{"n", rep.n},
             {"d", json_int(rep.d)},
             {"deg", json_int(rep.deg)},
             {"c", rep.c},
             {"multidegree", to_json(rep.multidegrees)},
             {"logConcave", rep.logConcave},
             {"segreExact", rep.segreExact},
             {"segreTopBound", rep.segreTopBound},
             {"prop3Applicable", rep.prop3Applicable},
             {"prop3Holds", rep.prop3Holds},
             {"birational", rep.birational},
             {"details", std::move(details)}};
    if (rep.codim >= 0) out["codim"] = rep.codim;
    else out["codim"] = "empty";
    if (rep.birational) {
        out["withinGeneralBound"] = rep.withinGeneralBound;
        out["bound4Applicable"] = rep.bound4Applicable;
        if (rep.bound4Applicable) out["withinBound4"] = rep.withinBound4;
    }
    return out;
}

json to_json(const SearchReport& rep) {
    json hist = json::object();
    for (const auto& [inv, count] : rep.histogram)
        hist[std::to_string(inv)] = count;
    json maximizers = json::array();
    for (const auto& m : rep.maximizers) maximizers.push_back(json_matrix(m));
    json out{{"n", rep.n},
             {"d", rep.d},
             {"totalMatrices", rep.totalMatrices},
             {"birationalClasses", rep.birationalClasses},
             {"histogram", std::move(hist)},
             {"maxInverseDegree", rep.maxInverseDegree},
             {"maximizers", std::move(maximizers)},
             {"completedPartitions", rep.completedPartitions},
             {"skippedPartitions", rep.skippedPartitions},
             {"runtimeSeconds", rep.runtimeSeconds}};
    if (rep.conjectureApplicable) {
        out["expectedMax"] = json_int(rep.expectedMax);
        out["conjectureStatus"] = rep.conjectureStatus;
    }
    return out;
}

json to_json(const GapScanResult& gaps) {
    json out{{"attained", gaps.attained}};
    if (gaps.secondBestApplicable) {
        out["secondBest"] = gaps.secondBest;
        out["secondBestBound"] = json_int(gaps.secondBestBound);
        out["secondBestHolds"] = gaps.secondBestHolds;
    }
    return out;
}

json report_document(const std::string& command, json body) {
    body["schema"] = 1;
    body["command"] = command;
    return body;
}

}  // namespace mono

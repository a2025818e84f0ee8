#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "mono/report.hpp"

namespace {

using mono::Int;
using nlohmann::json;

void print_report(const json& doc, bool asJson, const std::string& text) {
    if (asJson) std::cout << doc.dump(2) << '\n';
    else std::cout << text;
}

std::string yesno(bool b) { return b ? "true" : "false"; }

std::vector<std::vector<Int>> parse_coeff_blocks(const std::string& text) {
    std::vector<std::vector<Int>> blocks;
    std::stringstream ss(text);
    std::string block;
    while (std::getline(ss, block, ';')) {
        std::vector<Int> vals;
        std::stringstream bs(block);
        std::string tok;
        while (std::getline(bs, tok, ',')) {
            if (tok.empty()) continue;
            if (tok.find_first_not_of("0123456789") != std::string::npos)
                throw mono::ValidationError("--coeffs: '" + tok +
                                            "' is not a nonnegative integer");
            vals.emplace_back(tok);
        }
        blocks.push_back(std::move(vals));
    }
    return blocks;
}

std::string locus_text(const mono::IndeterminacyLocus& locus) {
    std::ostringstream os;
    if (locus.empty()) {
        os << "indeterminacy: empty\n";
        return os.str();
    }
    os << "codim: " << locus.codim << "\ndim: " << locus.dim
       << "\ntopCount: " << locus.topCount << "\ncomponents:\n";
    for (const auto& c : locus.components) {
        os << " ";
        for (std::size_t j : c) os << ' ' << j;
        os << '\n';
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for monomial transformations of projective space"};
    app.require_subcommand(1);

    std::string commandEcho;
    {
        std::ostringstream os;
        for (int i = 1; i < argc; ++i) {
            if (i > 1) os << ' ';
            os << argv[i];
        }
        commandEcho = os.str();
    }

    bool asJson = false;
    std::vector<std::string> inputs;
    std::size_t optN = 0;
    long optD = 0;
    std::string family = "fnd";
    std::string coeffs;
    std::string checkpoint;
    std::string searchMode = "extremal";
    bool birationalOnly = false;
    int threads = 1;

    auto addCommon = [&](CLI::App* sub, bool needsInput) {
        sub->add_flag("--json", asJson, "emit a JSON report");
        if (needsInput)
            sub->add_option("--input", inputs, "matrix file ('-' for stdin)")->required();
    };

    auto* cValidate = app.add_subcommand("validate", "validate and normalize a matrix");
    addCommon(cValidate, true);
    auto* cDegree = app.add_subcommand("degree", "determinant, topological degree, birationality");
    addCommon(cDegree, true);
    auto* cInverse = app.add_subcommand("inverse", "inverse of a birational map");
    addCommon(cInverse, true);
    auto* cCompose = app.add_subcommand("compose", "compose two maps (two --input files)");
    addCommon(cCompose, true);
    auto* cIndet = app.add_subcommand("indet", "indeterminacy locus components and dimension");
    addCommon(cIndet, true);
    auto* cWitness = app.add_subcommand("witness", "dimension-bound witness cover");
    addCommon(cWitness, true);
    auto* cMultideg = app.add_subcommand("multidegree", "projective degrees d_0..d_n");
    addCommon(cMultideg, true);
    auto* cBounds = app.add_subcommand("bounds", "verify the degree inequalities");
    addCommon(cBounds, true);

    auto* cSearch = app.add_subcommand("search", "exhaustive search over (n, d)");
    addCommon(cSearch, false);
    cSearch->add_option("--n", optN, "projective dimension")->required();
    cSearch->add_option("--d", optD, "monomial degree")->required();
    cSearch->add_option("--mode", searchMode,
                        "extremal (default), theorem, gaps, or list");
    cSearch->add_flag("--birational-only", birationalOnly,
                      "restrict 'list' mode to birational maps");
    cSearch->add_option("--threads", threads, "worker thread count");
    cSearch->add_option("--checkpoint", checkpoint,
                        "partition log for resumable runs");

    auto* cGen = app.add_subcommand("gen", "emit a named generator matrix");
    addCommon(cGen, false);
    cGen->add_option("--n", optN, "projective dimension")->required();
    cGen->add_option("--d", optD, "monomial degree")->required();
    cGen->add_option("--family", family, "fnd (default), one, or two");
    cGen->add_option("--coeffs", coeffs,
                     "free coefficients, rows ';'-separated, entries ','-separated");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cValidate) {
            mono::MonomialMap f = mono::validate(mono::parse_matrix_file(inputs.at(0)));
            mono::MonomialMap g = mono::normalize(f);
            json body = mono::to_json(g);
            body["inputNormalized"] = f.normalized;
            std::ostringstream os;
            os << "n: " << g.n << "\nd: " << g.d.get_str()
               << "\ninput normalized: " << yesno(f.normalized) << "\nnormalized matrix:\n"
               << mono::format_matrix(g.A);
            print_report(mono::report_document(commandEcho, body), asJson, os.str());
        } else if (*cDegree) {
            mono::MonomialMap f = mono::validate(mono::parse_matrix_file(inputs.at(0)));
            Int det = mono::det_exact(f.A);
            Int deg = mono::map_degree(f);
            bool bir = (deg == 1);
            json body = mono::to_json(f);
            body["det"] = mono::json_int(det);
            body["deg"] = mono::json_int(deg);
            body["birational"] = bir;
            std::ostringstream os;
            os << "n: " << f.n << "\nd: " << f.d.get_str() << "\ndet: " << det.get_str()
               << "\ndeg: " << deg.get_str() << "\nbirational: " << yesno(bir) << '\n';
            print_report(mono::report_document(commandEcho, body), asJson, os.str());
        } else if (*cInverse) {
            mono::MonomialMap f =
                mono::normalize(mono::validate(mono::parse_matrix_file(inputs.at(0))));
            Int detM = mono::map_degree(f);
            if (detM != 1)
                throw mono::DomainError("not birational: |det(M)| = " + detM.get_str());
            mono::MonomialMap inv = mono::inverse(f);
            json body{{"inverse", mono::json_matrix(inv.A)},
                      {"inverseDegree", mono::json_int(inv.d)}};
            std::ostringstream os;
            os << "d(f^-1): " << inv.d.get_str() << "\ninverse matrix:\n"
               << mono::format_matrix(inv.A);
            print_report(mono::report_document(commandEcho, body), asJson, os.str());
        } else if (*cCompose) {
            if (inputs.size() != 2)
                throw mono::ValidationError("compose needs exactly two --input files");
            mono::MonomialMap f = mono::validate(mono::parse_matrix_file(inputs[0]));
            mono::MonomialMap g = mono::validate(mono::parse_matrix_file(inputs[1]));
            mono::MonomialMap h = mono::compose(f, g);
            json body = mono::to_json(h);
            std::ostringstream os;
            os << "d: " << h.d.get_str() << "\ncomposite matrix:\n"
               << mono::format_matrix(h.A);
            print_report(mono::report_document(commandEcho, body), asJson, os.str());
        } else if (*cIndet) {
            mono::MonomialMap f =
                mono::normalize(mono::validate(mono::parse_matrix_file(inputs.at(0))));
            mono::IndeterminacyLocus locus = mono::indeterminacy(f);
            json body = mono::to_json(locus);
            print_report(mono::report_document(commandEcho, body), asJson,
                         locus_text(locus));
        } else if (*cWitness) {
            mono::MonomialMap f =
                mono::normalize(mono::validate(mono::parse_matrix_file(inputs.at(0))));
            mono::WitnessCover w = mono::witness_cover(f);
            json body = mono::to_json(w);
            std::ostringstream os;
            os << "selected columns:";
            for (std::size_t j : w.selected) os << ' ' << j;
            os << "\nsize: " << w.selected.size() << " (bound " << (f.n + 2) / 2
               << ")\n";
            print_report(mono::report_document(commandEcho, body), asJson, os.str());
        } else if (*cMultideg) {
            mono::MonomialMap f =
                mono::normalize(mono::validate(mono::parse_matrix_file(inputs.at(0))));
            mono::MultidegreeVector dvec = mono::multidegree(f);
            json body = mono::to_json(dvec);
            std::ostringstream os;
            os << "multidegree:";
            for (const Int& v : dvec.values) os << ' ' << v.get_str();
            os << '\n';
            print_report(mono::report_document(commandEcho, body), asJson, os.str());
        } else if (*cBounds) {
            mono::MonomialMap f =
                mono::normalize(mono::validate(mono::parse_matrix_file(inputs.at(0))));
            mono::BoundsReport rep = mono::bounds_report(f);
            json body = mono::to_json(rep);
            std::ostringstream os;
            os << "n: " << rep.n << "\nd: " << rep.d.get_str()
               << "\ndeg: " << rep.deg.get_str() << "\nc: " << rep.c << "\nmultidegree:";
            for (const Int& v : rep.multidegrees.values) os << ' ' << v.get_str();
            os << "\nlogConcave: " << yesno(rep.logConcave)
               << "\nsegreExact: " << yesno(rep.segreExact)
               << "\nsegreTopBound: " << yesno(rep.segreTopBound)
               << "\nprop3: "
               << (rep.prop3Applicable ? yesno(rep.prop3Holds) : "not applicable");
            if (rep.birational)
                os << "\ngeneralBound: " << yesno(rep.withinGeneralBound) << "\nbound4: "
                   << (rep.bound4Applicable ? yesno(rep.withinBound4) : "not applicable");
            os << '\n';
            print_report(mono::report_document(commandEcho, body), asJson, os.str());
        } else if (*cSearch) {
            mono::SearchOptions opts;
            opts.threads = threads;
            opts.checkpointPath = checkpoint;
            if (searchMode == "list") {
                mono::enumerate_maps(optN, optD, birationalOnly,
                                     [&](const mono::MonomialMap& f) {
                                         std::cout << mono::format_matrix(f.A) << '\n';
                                     });
            } else if (searchMode == "theorem") {
                mono::TheoremScanResult scan =
                    mono::verify_theorem_exhaustive(optN, optD, opts);
                json body{{"checked", scan.checked},
                          {"violations", scan.violations}};
                std::ostringstream os;
                os << "checked: " << scan.checked
                   << "\nviolations: " << scan.violations.size() << '\n';
                for (const auto& v : scan.violations) os << v;
                print_report(mono::report_document(commandEcho, body), asJson, os.str());
            } else if (searchMode == "gaps") {
                mono::GapScanResult gaps = mono::gap_scan(optN, optD, opts);
                json body = mono::to_json(gaps);
                std::ostringstream os;
                os << "attained:";
                for (long v : gaps.attained) os << ' ' << v;
                os << '\n';
                if (gaps.secondBestApplicable)
                    os << "secondBest: " << gaps.secondBest << " (bound "
                       << gaps.secondBestBound.get_str() << ", "
                       << (gaps.secondBestHolds ? "holds" : "VIOLATED") << ")\n";
                print_report(mono::report_document(commandEcho, body), asJson, os.str());
            } else if (searchMode == "extremal") {
                mono::SearchReport rep = mono::extremal_search(optN, optD, opts);
                json body = mono::to_json(rep);
                std::ostringstream os;
                os << "totalMatrices: " << rep.totalMatrices
                   << "\nbirationalClasses: " << rep.birationalClasses
                   << "\nmaxInverseDegree: " << rep.maxInverseDegree << "\nhistogram:";
                for (const auto& [inv, count] : rep.histogram)
                    os << ' ' << inv << ':' << count;
                os << '\n';
                if (rep.conjectureApplicable)
                    os << "expectedMax: " << rep.expectedMax.get_str() << "\nstatus: "
                       << rep.conjectureStatus << '\n';
                print_report(mono::report_document(commandEcho, body), asJson, os.str());
            } else {
                throw mono::ValidationError("unknown search mode: " + searchMode);
            }
        } else if (*cGen) {
            mono::MonomialMap f;
            auto blocks = coeffs.empty() ? std::vector<std::vector<Int>>{}
                                         : parse_coeff_blocks(coeffs);
            if (family == "fnd") {
                f = mono::gen_fnd(optN, optD);
            } else if (family == "one") {
                f = mono::gen_family_one(optN, optD, blocks);
            } else if (family == "two") {
                std::vector<Int> rowThree;
                std::vector<std::vector<Int>> evenRows;
                if (!blocks.empty()) {
                    rowThree = blocks.front();
                    evenRows.assign(blocks.begin() + 1, blocks.end());
                }
                f = mono::gen_family_two(optN, optD, rowThree, evenRows);
            } else {
                throw mono::ValidationError("unknown family: " + family);
            }
            if (asJson) {
                json body = mono::to_json(f);
                std::cout << mono::report_document(commandEcho, body).dump(2) << '\n';
            } else {
                std::cout << mono::format_matrix(f.A);
            }
        }
    } catch (const mono::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

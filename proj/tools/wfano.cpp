#include <cstdint>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "wfano/appendix.hpp"
#include "wfano/enumerate.hpp"
#include "wfano/hodge.hpp"
#include "wfano/invariants.hpp"
#include "wfano/render.hpp"

#include <json.hpp>

namespace {

using namespace wfano;

int run_classify(int dim, bool fano, bool calabi_yau, const std::string& format,
                 const std::string& reference_path, bool all_candidates, int jobs) {
    if (fano && calabi_yau) {
        std::cerr << "classify: pick one of --fano / --calabi-yau\n";
        return 2;
    }
    Mode mode = calabi_yau ? Mode::calabi_yau : Mode::fano;
    if (dim < 3) {
        std::cerr << "classify: --dim must be at least 3\n";
        return 2;
    }
    OutputFormat fmt;
    try {
        fmt = parse_format(format);
    } catch (const std::exception& e) {
        std::cerr << "classify: " << e.what() << "\n";
        return 2;
    }

    std::optional<ReferenceTable> table;
    try {
        table = load_reference(dim, mode, reference_path);
    } catch (const std::exception& e) {
        std::cerr << "classify: " << e.what() << "\n";
        return 2;
    }

    std::vector<FamilyRecord> records;
    try {
        records = classify(dim, mode, table ? &*table : nullptr, jobs);
    } catch (const std::exception& e) {
        std::cerr << "classify: " << e.what() << "\n";
        return 1;  // invariant mismatch against the reference is a failure, not usage
    }

    std::vector<FamilyRecord> shown = records;
    if (table && !all_candidates) {
        shown.clear();
        for (const auto& r : records)
            if (r.confirmed) shown.push_back(r);
        size_t extras = records.size() - shown.size();
        if (extras > 0)
            std::cerr << "classify: " << extras
                      << " filter-passing candidate(s) not in the reference table; "
                         "rerun with --all-candidates to list them\n";
    }
    std::cout << render_records(shown, dim, fmt);

    if (!table) return 0;
    DiffReport diff = diff_reference(records, *table);
    if (!diff.missing.empty()) {
        std::cerr << "classify: missing reference rows:";
        for (int no : diff.missing) std::cerr << " " << no;
        std::cerr << "\n";
        return 1;
    }
    return 0;
}

int run_invariants(const std::vector<i64>& weights, const std::vector<i64>& degrees,
                   bool with_hodge, const std::string& format) {
    CandidateData cand;
    try {
        cand = normalize(weights, degrees);
    } catch (const std::exception& e) {
        std::cerr << "invariants: " << e.what() << "\n";
        return 2;
    }
    i64 index = index_of(cand);
    Mode mode = index > 0 ? Mode::fano : Mode::calabi_yau;
    FilterReport filters = run_all_filters(cand, mode);
    std::optional<Rational> degree;
    if (index > 0) degree = anticanonical_degree(cand);
    i64 h0 = h0_anticanonical(cand);
    std::optional<std::vector<i64>> hodge;
    std::string hodge_error;
    if (with_hodge) {
        try {
            hodge = middle_hodge(cand);
        } catch (const std::exception& e) {
            hodge_error = e.what();
        }
    }

    int m = cand.dim();
    if (format == "json") {
        nlohmann::ordered_json out;
        out["weights"] = cand.space.weights;
        out["degrees"] = cand.multidegree.degrees;
        out["dim"] = m;
        out["index"] = index;
        if (degree) out["deg"] = degree->num();  // integral whenever filters pass
        out["h0"] = h0;
        out["filters"] = nlohmann::ordered_json::object();
        out["filters"]["mode"] = mode == Mode::fano ? "fano" : "calabi_yau";
        out["filters"]["pass"] = filters.verdict;
        auto failed = nlohmann::ordered_json::array();
        for (const auto& [check, witness] : filters.failed_checks)
            failed.push_back({{"check", check}, {"witness", witness}});
        out["filters"]["failed"] = failed;
        if (hodge) {
            nlohmann::ordered_json h;
            for (int p = m; p >= 0; --p)
                h["h_" + std::to_string(p) + "_" + std::to_string(m - p)] =
                    (*hodge)[static_cast<size_t>(m - p)];
            out["hodge"] = h;
        } else if (!hodge_error.empty()) {
            out["hodge_error"] = hodge_error;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << weight_notation(cand.space.weights) << " degrees (";
    for (int j = 0; j < cand.multidegree.c(); ++j)
        std::cout << (j ? "," : "") << cand.multidegree.degrees[static_cast<size_t>(j)];
    std::cout << ")  dim " << m << "\n";
    std::cout << "index I = " << index << "\n";
    if (degree) std::cout << "(-K)^" << m << " = " << degree->str() << "\n";
    std::cout << "h^0(-K) = " << h0 << "\n";
    std::cout << "filters [" << (mode == Mode::fano ? "fano" : "calabi-yau") << "]: "
              << (filters.verdict ? "pass" : "FAIL") << "\n";
    for (const auto& [check, witness] : filters.failed_checks)
        std::cout << "  " << check << ": " << witness << "\n";
    if (hodge) {
        std::cout << "middle hodge:";
        for (int p = m; p >= 0; --p)
            std::cout << " h^{" << p << "," << m - p
                      << "}=" << (*hodge)[static_cast<size_t>(m - p)];
        std::cout << "\n";
    } else if (!hodge_error.empty()) {
        std::cout << "middle hodge: not computed (" << hodge_error << ")\n";
    }
    return 0;
}

void print_region_report(const appendix::NonpositivityReport& r) {
    if (r.region_empty) {
        std::cout << r.region << ": empty region (vacuous)\n";
        return;
    }
    std::cout << r.region << ": samples=" << r.samples << " climbs=" << r.climbs
              << " maxL=" << r.max_objective << " violations=" << r.violation_count
              << " equality=" << r.equality_cases
              << " off-exceptional=" << r.equality_off_exceptional
              << " kkt(ok/window/fail)=" << r.kkt_verified << "/" << r.window_bound << "/"
              << r.kkt_failed << (r.ok() ? "" : "  <-- FAIL") << "\n";
}

void print_cone_report(const appendix::ConeReport& r) {
    std::cout << r.region << ": attempts=" << r.attempts << " kept=" << r.kept
              << " counterexamples=" << r.counterexamples
              << (r.sampling_warning ? " (warning: fewer than 100 kept)" : "")
              << (r.ok() ? "" : "  <-- FAIL") << "\n";
    if (!r.first_counterexample.empty())
        std::cout << "  first counterexample: " << r.first_counterexample << "\n";
}

int run_verify_appendix(const std::string& lemma, long long samples, int starts,
                        std::uint64_t seed, int k, double l, double p, int r, int c, int N,
                        int m, int jobs) {
    using namespace appendix;
    try {
        if (lemma == "all") {
            GridOutcome outcome =
                run_full_grid(seed, samples, starts, std::max<long long>(samples / 10, 1), jobs);
            long long bad = 0;
            double max_l = -1e300;
            for (const auto& reg : outcome.regions) {
                if (!reg.region_empty) max_l = std::max(max_l, reg.max_objective);
                if (!reg.region_empty && !reg.ok()) {
                    print_region_report(reg);
                    ++bad;
                }
            }
            for (const auto& cone : outcome.cones)
                if (!cone.ok()) {
                    print_cone_report(cone);
                    ++bad;
                }
            std::cout << "regions checked: " << outcome.regions.size() << " ("
                      << outcome.empty_regions << " empty), cone regions: "
                      << outcome.cones.size() << ", max L over all regions: " << max_l
                      << ", failures: " << bad << "\n";
            return outcome.ok() ? 0 : 1;
        }
        if (lemma == "go-up" || lemma == "go-down" || lemma == "go-up-down") {
            ConeLemma id = lemma == "go-up" ? ConeLemma::go_up
                           : lemma == "go-down" ? ConeLemma::go_down
                                                : ConeLemma::go_up_down;
            int dim_arg = lemma == "go-up-down" ? N : m;
            ConeReport report = verify_cone_lemma(id, dim_arg, c, seed, samples);
            print_cone_report(report);
            return report.ok() ? 0 : 1;
        }
        LemmaRegionSpec spec;
        if (lemma == "main")
            spec = {LemmaId::main, 0, 0, 0, 0, c, N};
        else if (lemma == "bb2dd")
            spec = {LemmaId::bb2dd, 0, l, 0, r, 0, 0};
        else if (lemma == "aabb2dd")
            spec = {LemmaId::aabb2dd, k, l, p, r, 0, 0};
        else if (lemma == "aa11ddd")
            spec = {LemmaId::aa11ddd, k, l, 0, 0, c, 0};
        else if (lemma == "aabbdd")
            spec = {LemmaId::aabbdd, k, l, 0, 0, c, 0};
        else {
            std::cerr << "verify-appendix: unknown lemma '" << lemma << "'\n";
            return 2;
        }
        spec.validate();
        NonpositivityReport report = verify_nonpositivity(spec, seed, samples, starts);
        print_region_report(report);
        VerifyConfig wide;
        wide.window_scale = 2.0;
        NonpositivityReport wide_report =
            verify_nonpositivity(spec, seed + 1, std::max<long long>(samples / 10, 1),
                                 std::max(starts / 4, 2), wide);
        wide_report.region += " [window x2]";
        print_region_report(wide_report);
        return report.ok() && wide_report.ok() ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "verify-appendix: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verify-appendix: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of smooth Fano/Calabi-Yau weighted complete "
                 "intersections and verification of the supporting optimization bounds"};
    app.require_subcommand(1);

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "enumerate and classify families");
    int dim = 4;
    bool fano = false, calabi_yau = false, all_candidates = false;
    std::string format = "md", reference_path;
    int jobs = 1;
    cmd_classify->add_option("--dim", dim, "dimension of the families (>= 3)")->required();
    cmd_classify->add_flag("--fano", fano, "Fano mode (default)");
    cmd_classify->add_flag("--calabi-yau", calabi_yau, "Calabi-Yau mode");
    cmd_classify->add_option("--format", format, "json|csv|md (default md)");
    cmd_classify->add_option("--reference", reference_path, "reference table JSON file");
    cmd_classify->add_flag("--all-candidates", all_candidates,
                           "also list filter-passing candidates missing from the reference");
    cmd_classify->add_option("--jobs", jobs, "worker threads (default 1)");

    // invariants
    auto* cmd_invariants = app.add_subcommand("invariants", "invariants of one candidate");
    std::vector<i64> weights, degrees;
    bool with_hodge = false;
    std::string inv_format = "text";
    cmd_invariants->add_option("--weights", weights, "comma-separated weights")
        ->required()
        ->delimiter(',');
    cmd_invariants->add_option("--degrees", degrees, "comma-separated degrees")
        ->required()
        ->delimiter(',');
    cmd_invariants->add_flag("--hodge", with_hodge, "also compute the middle Hodge numbers");
    cmd_invariants->add_option("--format", inv_format, "text|json (default text)");

    // verify-appendix
    auto* cmd_verify = app.add_subcommand("verify-appendix",
                                          "numerical verification of the optimization bounds");
    std::string lemma;
    long long samples = 1'000'000;
    int starts = 100;
    std::uint64_t seed = 42;
    int k = 1, r = 0, c = 1, N = 3, m = 2;
    double l = 0, p = 0;
    int vjobs = static_cast<int>(std::thread::hardware_concurrency());
    cmd_verify
        ->add_option("--lemma", lemma,
                     "main|bb2dd|aabb2dd|aa11ddd|aabbdd|go-up|go-down|go-up-down|all")
        ->required();
    cmd_verify->add_option("--samples", samples, "samples per region / kept instances");
    cmd_verify->add_option("--starts", starts, "hill climbs per region (default 100)");
    cmd_verify->add_option("--seed", seed, "random seed (default 42)");
    cmd_verify->add_option("--k", k, "parameter k");
    cmd_verify->add_option("--l", l, "parameter l");
    cmd_verify->add_option("--p", p, "parameter p");
    cmd_verify->add_option("--r", r, "parameter r");
    cmd_verify->add_option("--c", c, "parameter c");
    cmd_verify->add_option("--N", N, "parameter N");
    cmd_verify->add_option("--m", m, "dimension for go-up / go-down");
    cmd_verify->add_option("--jobs", vjobs, "worker threads for --lemma all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_classify->parsed())
            return run_classify(dim, fano, calabi_yau, format, reference_path, all_candidates,
                                jobs);
        if (cmd_invariants->parsed())
            return run_invariants(weights, degrees, with_hodge, inv_format);
        if (cmd_verify->parsed())
            return run_verify_appendix(lemma, samples, starts, seed, k, l, p, r, c, N, m,
                                       vjobs);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

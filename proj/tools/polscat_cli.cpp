/**
 * @file polscat_cli.cpp
 * @brief Command-line front end: analyze | boundary | cloud | rmt.
 *
 * One subcommand per analysis product:
 *   analyze   characterize a Mueller matrix file (D, E, spectrum,
 *             realizability, state-diagram region);
 *   boundary  tabulate the six analytic boundary curves and the four cusps;
 *   cloud     Monte Carlo sample of the admissible (D, E) domain;
 *   rmt       random-matrix ensemble sweep over detected-mode counts.
 *
 * Exit codes: 0 success, 1 input or parse error, 2 unphysical-matrix
 * verdict from `analyze` (the report is still printed).
 *
 * All sampling output is deterministic for a fixed --seed, independent of
 * --threads.
 */

#include <charconv>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polscat/polscat.hpp"

namespace {

using nlohmann::json;

// --seed accepts decimal or 0x-prefixed hex.
std::uint64_t parse_seed(const std::string& text) {
    std::string_view v(text);
    int base = 10;
    if (v.size() > 2 && (v.substr(0, 2) == "0x" || v.substr(0, 2) == "0X")) {
        base = 16;
        v.remove_prefix(2);
    }
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out, base);
    if (v.empty() || ec != std::errc() || ptr != v.data() + v.size())
        throw polscat::ParseError("--seed: expected a decimal or 0x-prefixed hex integer, got '" +
                                  text + "'");
    return out;
}

constexpr std::array<polscat::CurveId, 6> kAllCurves = {
    polscat::CurveId::C12, polscat::CurveId::C23, polscat::CurveId::C34,
    polscat::CurveId::C14, polscat::CurveId::C13, polscat::CurveId::C24,
};

int run_analyze(const std::string& path, double tol, const std::string& format) {
    const polscat::MuellerMatrix m = polscat::MuellerMatrix::from_raw(polscat::read_matrix_file(path));
    const polscat::ResultReport r = polscat::analyze_mueller(m, tol);

    if (format == "json") {
        json doc;
        doc["d_m"] = r.d_m;
        doc["e_m"] = r.e_m;
        doc["eigenvalues"] = r.eigenvalues;
        doc["physical"] = r.physical;
        doc["min_eigenvalue"] = r.min_eigenvalue;
        doc["region"] = r.region;
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "d_m,e_m,lambda0,lambda1,lambda2,lambda3,physical,min_eigenvalue,region\n"
                  << polscat::fmt12(r.d_m) << ',' << polscat::fmt12(r.e_m);
        for (double l : r.eigenvalues) std::cout << ',' << polscat::fmt12(l);
        std::cout << ',' << (r.physical ? "true" : "false") << ','
                  << polscat::fmt12(r.min_eigenvalue) << ',' << r.region << "\n";
    } else {
        std::cout << "d_m: " << polscat::fmt12(r.d_m) << "\n"
                  << "e_m: " << polscat::fmt12(r.e_m) << "\n"
                  << "eigenvalues:";
        for (double l : r.eigenvalues) std::cout << ' ' << polscat::fmt12(l);
        std::cout << "\nphysical: " << (r.physical ? "true" : "false") << "\n"
                  << "min_eigenvalue: " << polscat::fmt12(r.min_eigenvalue) << "\n"
                  << "region: " << r.region << "\n";
    }
    return r.physical ? 0 : 2;
}

int run_boundary(int samples, const std::string& format) {
    struct Row {
        const char* tag;
        double d, e;
    };
    std::vector<Row> rows;
    for (const polscat::CurveId c : kAllCurves) {
        const auto [lo, hi] = polscat::curve_d_range(c);
        for (int i = 0; i < samples; ++i) {
            const double d = lo + (hi - lo) * static_cast<double>(i) / (samples - 1);
            rows.push_back({polscat::curve_label(c), d, polscat::curve_e_at(c, d)});
        }
    }
    for (const polscat::CuspPoint& p : polscat::cusps()) rows.push_back({p.id, p.d, p.e});

    if (format == "json") {
        json doc = json::array();
        for (const Row& r : rows) doc.push_back({{"curve", r.tag}, {"d", r.d}, {"e", r.e}});
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "curve,d,e\n";
        for (const Row& r : rows)
            std::cout << r.tag << ',' << polscat::fmt12(r.d) << ',' << polscat::fmt12(r.e) << "\n";
    }
    return 0;
}

int run_cloud(std::uint64_t points, std::uint64_t seed, unsigned threads,
              const std::string& format) {
    const auto cloud = polscat::generate_cloud({points, seed}, threads);
    if (format == "json") {
        json doc = json::array();
        for (std::size_t i = 0; i < cloud.size(); ++i) {
            const auto& p = cloud[i];
            doc.push_back({{"index", i},
                           {"d", p.d},
                           {"e", p.e},
                           {"lambda", p.spectrum.lambda}});
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "index,d,e,lambda0,lambda1,lambda2,lambda3\n";
        for (std::size_t i = 0; i < cloud.size(); ++i) {
            const auto& p = cloud[i];
            std::cout << i << ',' << polscat::fmt12(p.d) << ',' << polscat::fmt12(p.e);
            for (double l : p.spectrum.lambda) std::cout << ',' << polscat::fmt12(l);
            std::cout << "\n";
        }
    }
    return 0;
}

int run_rmt(int modes_max, int realizations, const std::string& kind_name, std::uint64_t seed,
            unsigned threads, const std::string& format) {
    polscat::EnsembleConfig cfg;
    cfg.n_modes_max = modes_max;
    cfg.realizations = realizations;
    cfg.kind = (kind_name == "conserving") ? polscat::MediumKind::PolarizationConserving
                                           : polscat::MediumKind::Generic;
    cfg.seed = seed;
    const auto records = polscat::sweep(cfg, threads);

    if (format == "json") {
        json doc = json::array();
        for (const auto& r : records)
            doc.push_back({{"kind", kind_name},
                           {"n", r.n},
                           {"mean_d", r.mean_d},
                           {"mean_e", r.mean_e},
                           {"std_d", r.std_d},
                           {"std_e", r.std_e},
                           {"realizations", realizations}});
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "kind,n,mean_d,mean_e,std_d,std_e,realizations\n";
        for (const auto& r : records)
            std::cout << kind_name << ',' << r.n << ',' << polscat::fmt12(r.mean_d) << ','
                      << polscat::fmt12(r.mean_e) << ',' << polscat::fmt12(r.std_d) << ','
                      << polscat::fmt12(r.std_e) << ',' << realizations << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "polscat: entropy-depolarization characterization of polarization scattering media"};
    app.require_subcommand(1);

    std::string path;
    double tol = 1e-9;
    std::string analyze_format = "text";
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Characterize a 4x4 Mueller matrix file (CSV or JSON)");
    analyze->add_option("file", path, "Matrix file: 4 lines of 4 comma-separated numbers, "
                                      "or JSON {\"mueller\": [[...], ...]}")
        ->required();
    analyze->add_option("--tol", tol, "Positive-semidefiniteness tolerance on H's spectrum")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    analyze->add_option("--format", analyze_format, "Output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "csv", "json"}));

    int samples = 500;
    std::string boundary_format = "csv";
    CLI::App* boundary = app.add_subcommand(
        "boundary", "Tabulate the six analytic (D, E) boundary curves and the four cusp points");
    boundary->add_option("--samples", samples, "Samples per curve, uniform in each curve's D-range")
        ->capture_default_str()
        ->check(CLI::Range(2, 100000000));
    boundary->add_option("--format", boundary_format, "Output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));

    std::uint64_t points = 100000;
    std::string cloud_seed = "42";
    unsigned cloud_threads = 1;
    std::string cloud_format = "csv";
    CLI::App* cloud = app.add_subcommand(
        "cloud", "Monte Carlo sample of the admissible (D, E) domain via the 4-sphere measure");
    cloud->add_option("--points", points, "Number of sampled spectra")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cloud->add_option("--seed", cloud_seed, "RNG seed (decimal or 0x-prefixed hex)")
        ->capture_default_str();
    cloud->add_option("--threads", cloud_threads,
                      "Worker threads (0 = hardware); output is thread-count independent")
        ->capture_default_str();
    cloud->add_option("--format", cloud_format, "Output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));

    int modes_max = 30;
    int realizations = 2000;
    std::string kind_name = "generic";
    std::string rmt_seed = "42";
    unsigned rmt_threads = 1;
    std::string rmt_format = "csv";
    CLI::App* rmt = app.add_subcommand(
        "rmt", "Random-matrix ensemble sweep of (D, E) vs detected-mode count N");
    rmt->add_option("--modes-max", modes_max, "Sweep N = 1..modes-max")
        ->capture_default_str()
        ->check(CLI::Range(1, 100000));
    rmt->add_option("--realizations", realizations, "Ensemble size per N")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    rmt->add_option("--kind", kind_name, "Medium ensemble")
        ->capture_default_str()
        ->check(CLI::IsMember({"generic", "conserving"}));
    rmt->add_option("--seed", rmt_seed, "RNG seed (decimal or 0x-prefixed hex)")
        ->capture_default_str();
    rmt->add_option("--threads", rmt_threads,
                    "Worker threads (0 = hardware); output is thread-count independent")
        ->capture_default_str();
    rmt->add_option("--format", rmt_format, "Output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*analyze) return run_analyze(path, tol, analyze_format);
        if (*boundary) return run_boundary(samples, boundary_format);
        if (*cloud) return run_cloud(points, parse_seed(cloud_seed), cloud_threads, cloud_format);
        if (*rmt)
            return run_rmt(modes_max, realizations, kind_name, parse_seed(rmt_seed), rmt_threads,
                           rmt_format);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}

// command-line workbench: validate/report/dual/invariants/enumerate/compare
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dessin/algebra.hpp"
#include "dessin/census.hpp"
#include "dessin/dessin.hpp"
#include "dessin/error.hpp"
#include "dessin/parse.hpp"
#include "dessin/quiver.hpp"
#include "dessin/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

int centre_bound() {
    if (const char* v = std::getenv("DESSIN_MAX_DIM")) {
        const int bound = std::atoi(v);
        if (bound > 0) return bound;
    }
    return dessin::kDefaultCentreBound;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dessin::Error("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

dessin::Dessin load(const std::string& path) { return dessin::parse_dessin(read_file(path)); }

int run_validate(const std::string& path) {
    const dessin::Dessin d = load(path);
    std::cout << "valid dessin: n = " << d.size() << ", sigma = " << d.sigma().to_cycle_string()
              << ", alpha = " << d.alpha().to_cycle_string() << '\n'
              << "passport: " << d.passport().to_string() << '\n';
    return kExitOk;
}

int run_report(const std::string& path, bool as_json) {
    const dessin::Dessin d = load(path);
    if (as_json) std::cout << dessin::report_json(d, centre_bound()).dump(2) << '\n';
    else std::cout << dessin::report_text(d, centre_bound());
    return kExitOk;
}

int run_dual(const std::string& path, bool oriented, bool emit) {
    const dessin::Dessin d = load(path);
    const dessin::Dessin result = oriented ? dessin::oriented_dual(d) : dessin::dual(d);
    if (emit) {
        std::cout << dessin::print_dessin(result);
        return kExitOk;
    }
    std::cout << (oriented ? "oriented dual" : "dual") << ":\n"
              << "sigma = " << result.sigma().to_cycle_string() << '\n'
              << "alpha = " << result.alpha().to_cycle_string() << '\n'
              << "phi   = " << result.phi().to_cycle_string() << '\n'
              << "passport: " << result.passport().to_string() << '\n';
    const dessin::Quiver full = dessin::full_quiver(d);
    if (oriented) {
        const bool equal = dessin::quiver_equal(dessin::full_quiver(result),
                                                dessin::opposite(full),
                                                dessin::QuiverComparison::Unlabelled);
        std::cout << "quiver equals the opposite quiver (unlabelled): " << (equal ? "yes" : "NO")
                  << '\n';
    } else {
        const bool equal = dessin::quiver_equal(dessin::full_quiver(result), full,
                                                dessin::QuiverComparison::Labelled);
        std::cout << "quiver equals the original arrow-by-arrow: " << (equal ? "yes" : "NO")
                  << '\n';
    }
    return kExitOk;
}

int run_invariants(const std::string& path) {
    const dessin::Dessin d = load(path);
    std::cout << "passport: " << d.passport().to_string() << '\n'
              << "fingerprint: " << dessin::fingerprint(d).to_string() << '\n';
    const auto zero = dessin::zero_product_report(d);
    std::cout << "socle products all zero: " << (zero.socle_products_all_zero ? "yes" : "NO")
              << '\n';
    if (!zero.loop_exceptions.empty()) {
        const dessin::Algebra alg(d);
        std::cout << "nonzero loop products:";
        for (const auto& [x, y] : zero.loop_exceptions)
            std::cout << "  " << alg.describe(x) << " * " << alg.describe(y);
        std::cout << '\n';
    }
    try {
        const auto oracle = dessin::centre_bruteforce(d, centre_bound());
        std::cout << "centre: formula " << dessin::centre_dimension_formula(d) << ", brute force "
                  << oracle.dim << '\n';
    } catch (const dessin::DimensionBoundError& e) {
        std::cout << "centre: formula " << dessin::centre_dimension_formula(d)
                  << ", brute force skipped (" << e.what() << ")\n";
    }
    return kExitOk;
}

int run_enumerate(int n, bool passports, bool verify, int threads) {
    const auto corpus = dessin::enumerate_dessins(n, threads);
    std::cout << "n = " << n << ": " << corpus.size() << " dessins\n";
    if (passports) {
        for (const auto& [passport, members] : dessin::group_by_passport(corpus)) {
            std::cout << passport.to_string() << ": " << members.size() << " dessin"
                      << (members.size() == 1 ? "" : "s") << '\n';
            for (const auto& d : members)
                std::cout << "  sigma = " << d.sigma().to_cycle_string()
                          << "  alpha = " << d.alpha().to_cycle_string() << '\n';
        }
    } else {
        for (const auto& d : corpus)
            std::cout << "sigma = " << d.sigma().to_cycle_string()
                      << "  alpha = " << d.alpha().to_cycle_string() << '\n';
    }
    if (verify) {
        const auto report = dessin::verify_corpus_of(corpus, n, centre_bound());
        std::cout << report.summary() << '\n';
        for (const auto& f : report.failures) std::cout << "FAIL " << f << '\n';
        for (const auto& m : report.centre_mismatches) std::cout << "centre mismatch: " << m << '\n';
        if (!report.all_passed()) return kExitCheckFailed;
    }
    return kExitOk;
}

int run_compare(const std::string& path_a, const std::string& path_b) {
    const dessin::Dessin a = load(path_a), b = load(path_b);
    const bool isomorphic = dessin::is_isomorphic(a, b);
    std::cout << "isomorphic: " << (isomorphic ? "true" : "false") << '\n';
    const dessin::Fingerprint fa = dessin::fingerprint(a), fb = dessin::fingerprint(b);
    if (fa == fb) {
        std::cout << "fingerprints equal: " << fa.to_string() << '\n';
    } else {
        std::cout << "fingerprints differ:\n  a: " << fa.to_string() << "\n  b: " << fb.to_string()
                  << '\n';
    }
    return isomorphic ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dessin workbench: quiver, relations, basis and centre of the algebra of a "
                 "dessin d'enfant, plus exhaustive small-n verification"};
    app.require_subcommand(1);

    std::string path, path_b;
    bool as_json = false, oriented = false, emit = false, passports = false, verify = false;
    int n = 0, threads = 1;

    auto* validate = app.add_subcommand("validate", "parse and validate a .dessin file");
    validate->add_option("file", path, "input file")->required();

    auto* report = app.add_subcommand("report", "full structural report");
    report->add_option("file", path, "input file")->required();
    report->add_flag("--json", as_json, "emit JSON instead of text");

    auto* dual_cmd = app.add_subcommand("dual", "compute the dual (or oriented dual) dessin");
    dual_cmd->add_option("file", path, "input file")->required();
    dual_cmd->add_flag("--oriented", oriented, "orientation-reversing dual");
    dual_cmd->add_flag("--emit", emit, "print the result as a parseable .dessin document");

    auto* invariants = app.add_subcommand("invariants", "passport, fingerprint and centre");
    invariants->add_option("file", path, "input file")->required();

    auto* enumerate = app.add_subcommand("enumerate", "all isomorphism classes for small n");
    enumerate->add_option("--n", n, "number of half-edges (1..7)")->required();
    enumerate->add_flag("--passports", passports, "group the classes by passport");
    enumerate->add_flag("--verify", verify, "run all structural checks over the corpus");
    enumerate->add_option("--threads", threads, "worker threads for enumeration");

    auto* compare = app.add_subcommand("compare", "isomorphism test plus fingerprint diff");
    compare->add_option("fileA", path, "first file")->required();
    compare->add_option("fileB", path_b, "second file")->required();

    try {
        app.parse(argc, argv);
        if (validate->parsed()) return run_validate(path);
        if (report->parsed()) return run_report(path, as_json);
        if (dual_cmd->parsed()) return run_dual(path, oriented, emit);
        if (invariants->parsed()) return run_invariants(path);
        if (enumerate->parsed()) return run_enumerate(n, passports, verify, threads);
        if (compare->parsed()) return run_compare(path, path_b);
        std::cerr << app.help();
        return kExitInputError;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    } catch (const dessin::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

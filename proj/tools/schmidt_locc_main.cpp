#include <cassert>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "locc/equal_entropy.hpp"
#include "locc/json_io.hpp"
#include "locc/order.hpp"
#include "locc/sampling.hpp"
#include "locc/schur.hpp"
#include "locc/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInfeasible = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw locc::InvalidJson("cannot open file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

locc::SchmidtVector load_state(const std::string& inline_json,
                               const std::string& file) {
    if (!inline_json.empty() && !file.empty()) {
        throw locc::InvalidJson("give the state inline or via --file, not both");
    }
    if (inline_json.empty() && file.empty()) {
        throw locc::InvalidJson("no state given; pass inline JSON or --file");
    }
    return locc::schmidt_from_json(file.empty() ? inline_json : slurp(file));
}

std::string join_coeffs(const locc::SchmidtVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.rank(); ++i) {
        if (i) out += ' ';
        out += locc::format_coeff(v[i]);
    }
    return out;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("SCHMIDT_LOCC_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0;
}

struct VerifyDefaults {
    int theorem1 = 1000;
    int theorem2 = 10000; // per rank
    int schur = 10000;
    int reduction = 100;
};

int run_verify(const std::string& suite, const std::string& trials_arg,
               std::uint64_t seed, const locc::SearchConfig& cfg) {
    const VerifyDefaults defaults;
    std::optional<int> trials;
    if (!trials_arg.empty() && trials_arg != "grid" &&
        trials_arg != "default") {
        trials = std::stoi(trials_arg);
        if (*trials < 1) {
            throw locc::OutOfDomain("--trials must be positive");
        }
    }

    std::vector<locc::SuiteReport> reports;
    const auto want = [&](const std::string& s) {
        return suite == "all" || suite == s;
    };
    if (want("theorem1")) {
        reports.push_back(locc::run_theorem1_suite(
            trials.value_or(defaults.theorem1), seed, cfg));
    }
    if (want("theorem2")) {
        reports.push_back(locc::run_theorem2_suite(
            trials.value_or(defaults.theorem2), seed, cfg));
    }
    if (want("schur")) {
        reports.push_back(
            locc::run_schur_suite(trials.value_or(defaults.schur), seed, cfg));
    }
    if (want("eq5")) {
        reports.push_back(locc::run_eq5_suite(cfg));
    }
    if (want("reduction")) {
        reports.push_back(locc::run_reduction_suite(
            trials.value_or(defaults.reduction), seed, cfg));
    }
    if (reports.empty()) {
        throw locc::OutOfDomain(
            "unknown suite '" + suite +
            "'; expected theorem1|theorem2|schur|eq5|reduction|all");
    }

    bool all_passed = true;
    for (const locc::SuiteReport& r : reports) {
        std::cout << "suite " << r.suite << ": "
                  << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks
                  << " checks, " << r.failures << " failures)\n";
        if (!r.passed()) {
            all_passed = false;
            std::cout << "first counterexample: " << r.first_counterexample
                      << "\n";
        }
    }
    return all_passed ? kExitOk : kExitPropertyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schmidt-coefficient orderings, entropy gaps, and "
                 "equal-entropy partner searches"};
    app.require_subcommand(1);

    locc::SearchConfig cfg;
    app.add_option("--entropy-tol", cfg.entropy_tol,
                   "entropy comparison tolerance, bits");
    app.add_option("--coeff-tol", cfg.coeff_tol,
                   "coefficient comparison tolerance");
    app.add_option("--max-iters", cfg.max_bisection_iters,
                   "bisection iteration budget");
    app.add_option("--bracket-width", cfg.bracket_width,
                   "terminal bisection bracket width");

    std::string format = "plain";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"plain", "json"}));

    std::optional<std::uint64_t> seed_flag;
    app.add_option("--seed", seed_flag,
                   "RNG seed (falls back to SCHMIDT_LOCC_SEED, then 0)");

    // entropy
    auto* c_entropy = app.add_subcommand("entropy", "entropy of a state, bits");
    std::string ent_state, ent_file;
    c_entropy->add_option("state", ent_state, "inline JSON state");
    c_entropy->add_option("--file", ent_file, "path to a JSON state");

    // classify
    auto* c_classify =
        app.add_subcommand("classify", "convertibility verdict for a pair");
    std::string cl_a, cl_b, cl_file_a, cl_file_b;
    c_classify->add_option("a", cl_a, "inline JSON state A");
    c_classify->add_option("b", cl_b, "inline JSON state B");
    c_classify->add_option("--file-a", cl_file_a, "path to state A");
    c_classify->add_option("--file-b", cl_file_b, "path to state B");

    // find-partner
    auto* c_partner = app.add_subcommand(
        "find-partner", "equal-entropy rank-3 partner with a pinned top "
                        "coefficient");
    std::string fp_state, fp_file;
    double fp_beta1 = 0.0;
    c_partner->add_option("state", fp_state, "inline JSON state");
    c_partner->add_option("--file", fp_file, "path to a JSON state");
    c_partner->add_option("--beta1", fp_beta1, "partner's top coefficient")
        ->required();

    // family
    auto* c_family = app.add_subcommand(
        "family", "sweep of equal-entropy partners over a top-coefficient "
                  "grid (CSV)");
    std::string fam_state, fam_file;
    double fam_lo = 0.0, fam_hi = 0.0;
    int fam_steps = 0;
    c_family->add_option("state", fam_state, "inline JSON state");
    c_family->add_option("--file", fam_file, "path to a JSON state");
    c_family->add_option("--lo", fam_lo, "lowest top coefficient")->required();
    c_family->add_option("--hi", fam_hi, "highest top coefficient")
        ->required();
    c_family->add_option("--steps", fam_steps, "grid size")->required();

    // lift
    auto* c_lift = app.add_subcommand(
        "lift", "insert a shared coefficient into both states of a pair");
    std::string lift_a, lift_b;
    double lift_kappa = 0.0;
    c_lift->add_option("a", lift_a, "inline JSON state A")->required();
    c_lift->add_option("b", lift_b, "inline JSON state B")->required();
    c_lift->add_option("--kappa", lift_kappa, "coefficient to insert")
        ->required();

    // reduce
    auto* c_reduce = app.add_subcommand(
        "reduce", "strip a shared coefficient from a pair and rescale");
    std::string red_a, red_b;
    std::optional<std::size_t> red_index;
    c_reduce->add_option("a", red_a, "inline JSON state A")->required();
    c_reduce->add_option("b", red_b, "inline JSON state B")->required();
    c_reduce->add_option("--index", red_index,
                         "1-based shared position (default: first match)");

    // verify
    auto* c_verify =
        app.add_subcommand("verify", "run a randomized or exhaustive "
                                     "property suite");
    std::string vf_suite;
    std::string vf_trials;
    c_verify
        ->add_option("--suite", vf_suite,
                     "theorem1|theorem2|schur|eq5|reduction|all")
        ->required();
    c_verify->add_option(
        "--trials", vf_trials,
        "trial count; 'grid' or 'default' keeps per-suite defaults");

    // Let the global tolerance/format/seed flags appear after the
    // subcommand name too.
    for (CLI::App* sub : {c_entropy, c_classify, c_partner, c_family, c_lift,
                          c_reduce, c_verify}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    const bool json_out = format == "json";

    try {
        cfg.validate();

        if (c_entropy->parsed()) {
            const locc::SchmidtVector v = load_state(ent_state, ent_file);
            const double bits = locc::entropy(v).bits;
            if (json_out) {
                nlohmann::json j{{"entropy_bits", bits}};
                std::cout << j.dump() << "\n";
            } else {
                std::printf("%.12f\n", bits);
            }
        } else if (c_classify->parsed()) {
            const locc::SchmidtVector a = load_state(cl_a, cl_file_a);
            const locc::SchmidtVector b = load_state(cl_b, cl_file_b);
            const locc::ClassifyResult r = locc::classify(a, b, cfg.coeff_tol);
#ifndef NDEBUG
            if (a.effective_rank() == 3 && b.effective_rank() == 3) {
                assert(locc::incomparable_rank3_fast(a, b, cfg.coeff_tol) ==
                       (r.variant == locc::Classification::Incomparable));
            }
#endif
            if (json_out) {
                nlohmann::json j{{"classification", locc::to_string(r.variant)},
                                 {"witness_ab", r.witness_ab},
                                 {"witness_ba", r.witness_ba}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "classification: " << locc::to_string(r.variant)
                          << "\n"
                          << "witness_ab: " << r.witness_ab << "\n"
                          << "witness_ba: " << r.witness_ba << "\n";
            }
        } else if (c_partner->parsed()) {
            const locc::SchmidtVector v = load_state(fp_state, fp_file);
            const locc::PartnerResult r = locc::find_partner(v, fp_beta1, cfg);
            if (json_out) {
                nlohmann::json j{
                    {"partner", nlohmann::json{{"coeffs", r.partner.coeffs()}}},
                    {"entropy_residual_bits", r.entropy_residual},
                    {"classification", locc::to_string(r.classification)},
                    {"iterations", r.iterations}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "partner: " << join_coeffs(r.partner) << "\n"
                          << "entropy_residual_bits: "
                          << locc::format_coeff(r.entropy_residual) << "\n"
                          << "classification: "
                          << locc::to_string(r.classification) << "\n"
                          << "iterations: " << r.iterations << "\n";
            }
        } else if (c_family->parsed()) {
            const locc::SchmidtVector v = load_state(fam_state, fam_file);
            const auto records =
                locc::family_sweep(v, fam_lo, fam_hi, fam_steps, cfg);
            if (json_out) {
                nlohmann::json arr = nlohmann::json::array();
                for (const locc::FamilyRecord& r : records) {
                    arr.push_back(nlohmann::json{
                        {"beta1", r.beta1},
                        {"partner",
                         nlohmann::json{{"coeffs", r.partner.coeffs()}}},
                        {"entropy_residual_bits", r.entropy_residual},
                        {"differing_coeffs", r.differing_coeffs},
                        {"classification",
                         locc::to_string(
                             locc::classify(v, r.partner, cfg.coeff_tol)
                                 .variant)}});
                }
                std::cout << nlohmann::json{{"records", arr}}.dump() << "\n";
            } else {
                std::cout << "beta1,beta2,beta3,entropy_residual_bits,"
                             "differing_coeffs,classification\n";
                for (const locc::FamilyRecord& r : records) {
                    std::cout << locc::format_coeff(r.beta1) << ','
                              << locc::format_coeff(r.partner[1]) << ','
                              << locc::format_coeff(r.partner[2]) << ','
                              << locc::format_coeff(r.entropy_residual) << ','
                              << r.differing_coeffs << ','
                              << locc::to_string(
                                     locc::classify(v, r.partner,
                                                    cfg.coeff_tol)
                                         .variant)
                              << "\n";
                }
            }
        } else if (c_lift->parsed()) {
            const locc::SchmidtVector a = locc::schmidt_from_json(lift_a);
            const locc::SchmidtVector b = locc::schmidt_from_json(lift_b);
            const auto [la, lb] = locc::lift(a, b, lift_kappa);
            if (json_out) {
                nlohmann::json j{
                    {"a", nlohmann::json{{"coeffs", la.coeffs()}}},
                    {"b", nlohmann::json{{"coeffs", lb.coeffs()}}}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "lifted_a: " << join_coeffs(la) << "\n"
                          << "lifted_b: " << join_coeffs(lb) << "\n";
            }
        } else if (c_reduce->parsed()) {
            const locc::SchmidtVector a = locc::schmidt_from_json(red_a);
            const locc::SchmidtVector b = locc::schmidt_from_json(red_b);
            std::size_t j = 0;
            if (red_index) {
                j = *red_index;
            } else {
                const auto found =
                    locc::find_shared_index(a, b, cfg.coeff_tol);
                if (!found) {
                    throw locc::NoSharedCoefficient(
                        "no position agrees within tolerance");
                }
                j = *found;
            }
            const auto [ra, rb] = locc::reduce_shared(a, b, j, cfg.coeff_tol);
            if (json_out) {
                nlohmann::json out{
                    {"shared_index", j},
                    {"a", nlohmann::json{{"coeffs", ra.coeffs()}}},
                    {"b", nlohmann::json{{"coeffs", rb.coeffs()}}}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "shared_index: " << j << "\n"
                          << "reduced_a: " << join_coeffs(ra) << "\n"
                          << "reduced_b: " << join_coeffs(rb) << "\n";
            }
        } else if (c_verify->parsed()) {
            return run_verify(vf_suite, vf_trials, resolve_seed(seed_flag),
                              cfg);
        }
        return kExitOk;
    } catch (const locc::Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        const std::string& n = e.name();
        return (n == "Infeasible" || n == "EmptyRange") ? kExitInfeasible
                                                        : kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

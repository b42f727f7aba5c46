// medist: instance-optimal randomized rules and worst-case distortion for the
// metric single-winner (1-median) problem, plus lower-bound certificate
// verification. Exit codes: 0 success, 1 computation failure, 2 input error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "medist/baselines.hpp"
#include "medist/fixtures.hpp"
#include "medist/json_io.hpp"
#include "medist/optimal.hpp"
#include "medist/search.hpp"

namespace {

using medist::io::json;

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

medist::PreferenceProfile load_profile(const std::string& path) {
    std::string text = read_file(path);
    try {
        if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
            return medist::io::profile_from_json(json::parse(text));
        return medist::parse_profile(text);
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(path + ": " + e.what());
    } catch (const medist::ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

json parse_json_file(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

void emit(json j, int precision) {
    medist::io::round_numbers(j, precision);
    std::cout << j.dump(2) << "\n";
}

bool rational_mode_default() {
    const char* env = std::getenv("MEDIST_SOLVER_MODE");
    return env && std::string(env) == "rational";
}

int cmd_solve(const std::string& profile_path, int precision) {
    auto profile = load_profile(profile_path);
    medist::OptimalResult opt = medist::optimal_scf(profile);
    medist::DualMetricsResult dual = medist::optimal_dual_metrics(profile);
    json out = medist::io::optimal_result_to_json(profile, opt);
    out["dual_phi"] = dual.phi;
    emit(out, precision);
    return kExitOk;
}

int cmd_adversary(const std::string& profile_path, const std::string& lottery_path,
                  const std::string& o, int precision) {
    auto profile = load_profile(profile_path);
    medist::Lottery q = medist::io::lottery_from_json(profile, parse_json_file(lottery_path));
    try {
        q.validate(profile, 1e-6);
    } catch (const std::invalid_argument& e) {
        throw InputError(lottery_path + ": " + e.what());
    }
    q = q.normalized();
    if (!o.empty()) {
        if (profile.facility_index(o) < 0) throw InputError("unknown facility: " + o);
        emit(medist::io::adversary_outcome_to_json(medist::solve_adversary(profile, q, o)),
             precision);
    } else {
        emit(medist::io::adversary_result_to_json(medist::distortion_of(profile, q)), precision);
    }
    return kExitOk;
}

int cmd_dual(const std::string& profile_path, bool with_metrics, int precision) {
    auto profile = load_profile(profile_path);
    medist::DualMetricsResult res = medist::optimal_dual_metrics(profile);
    json out = {{"phi", res.phi}};
    if (with_metrics) {
        json metrics = json::array();
        for (int f = 0; f < profile.num_facilities(); ++f)
            metrics.push_back({{"o", profile.facility(f)},
                               {"metric", medist::io::metric_to_json(res.metrics[f])}});
        out["metrics"] = metrics;
    }
    emit(out, precision);
    return kExitOk;
}

int cmd_verify_cert(const std::string& cert_path, bool builtin, bool rational, double tol_phi,
                    int precision) {
    medist::Certificate cert = builtin ? medist::fixtures::reference_certificate()
                                       : medist::io::certificate_from_json(
                                             parse_json_file(cert_path));
    medist::CertificateReport rep = medist::verify_certificate(cert, 1e-9, tol_phi);
    json out = medist::io::certificate_report_to_json(cert.profile, rep);
    if (rational) {
        medist::ExactCertificateReport ex = medist::verify_certificate_exact(cert);
        out["rational"] = {{"feasible", ex.feasible},
                           {"phi", ex.phi.str()},
                           {"normalization", ex.normalization.str()},
                           {"matches_claim", ex.matches_claim}};
        if (!ex.first_violation.empty()) out["rational"]["first_violation"] = ex.first_violation;
    }
    emit(out, precision);
    return rep.feasible ? kExitOk : kExitComputation;
}

int cmd_baseline(const std::string& profile_path, int precision) {
    auto profile = load_profile(profile_path);
    emit(medist::io::baseline_table_to_json(profile, medist::evaluate_baselines(profile)),
         precision);
    return kExitOk;
}

int cmd_search(const medist::SearchSpec& spec, int precision) {
    medist::SearchResult res = medist::search_instances(spec);
    for (const auto& hit : res.hits) {
        json line = {{"gamma", hit.gamma},
                     {"profile", medist::io::profile_to_json(hit.profile)}};
        medist::io::round_numbers(line, precision);
        std::cout << line.dump() << "\n";
    }
    json summary = {{"evaluated", res.evaluated},
                    {"failures", res.failures},
                    {"hits", res.hits.size()},
                    {"best_gamma", res.best_gamma}};
    if (res.best_profile)
        summary["best_profile"] = medist::io::profile_to_json(*res.best_profile);
    medist::io::round_numbers(summary, precision);
    std::cout << summary.dump() << "\n";
    return kExitOk;
}

int cmd_reproduce(bool rational, double tol_override, int precision) {
    const auto& profile = medist::fixtures::reference_instance();
    const double gamma_ref = medist::fixtures::reference_gamma();
    bool all_ok = true;
    json items = json::array();
    auto report = [&](const std::string& name, bool ok, json detail) {
        all_ok = all_ok && ok;
        detail["item"] = name;
        detail["pass"] = ok;
        items.push_back(detail);
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    };
    auto tol = [&](double dflt) { return tol_override > 0 ? tol_override : dflt; };

    medist::OptimalResult opt = medist::optimal_scf(profile);
    report("optimal-gamma", std::abs(opt.gamma - gamma_ref) <= tol(1e-5),
           {{"gamma", opt.gamma}, {"reference", gamma_ref}});

    medist::DualMetricsResult dual = medist::optimal_dual_metrics(profile);
    report("dual-phi", std::abs(dual.phi - gamma_ref) <= tol(1e-5),
           {{"phi", dual.phi}, {"reference", gamma_ref}});

    medist::Certificate cert = medist::fixtures::reference_certificate();
    medist::CertificateReport crep = medist::verify_certificate(cert, 1e-9, tol(5e-4));
    bool cert_ok = crep.feasible && crep.matches_claim &&
                   std::abs(crep.normalization - 1.0) <= tol(1e-4);
    report("certificate", cert_ok,
           {{"phi", crep.phi ? json(*crep.phi) : json()},
            {"normalization", crep.normalization}});
    if (rational) {
        medist::ExactCertificateReport ex = medist::verify_certificate_exact(cert);
        report("certificate-rational", ex.feasible && ex.matches_claim,
               {{"phi", ex.phi.str()}, {"normalization", ex.normalization.str()}});
    }

    auto ref = medist::fixtures::reference_best_dist_point();
    auto feas = medist::lp::check_feasible(ref.lp, ref.point, tol(1e-3));
    report("published-multipliers-feasible", feas.ok,
           {{"max_violation", feas.max_violation}, {"tolerance", tol(1e-3)}});

    json out = {{"items", items}, {"all_pass", all_ok}};
    emit(out, precision);
    return all_ok ? kExitOk : kExitComputation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"instance-optimal randomized social choice via linear programming"};
    app.require_subcommand(1);
    int precision = 6;
    app.add_option("--precision", precision, "decimals in numeric output")->capture_default_str();

    std::string profile_path, lottery_path, cert_path, o_name;
    bool builtin_cert = false, rational = rational_mode_default(), with_metrics = false;
    double tol_phi = 5e-4, tol_override = -1.0;

    auto* solve = app.add_subcommand("solve", "instance-optimal lottery and distortion");
    solve->add_option("profile", profile_path, "profile file (text or .json)")->required();

    auto* adv = app.add_subcommand("adversary", "worst-case distortion of a given lottery");
    adv->add_option("profile", profile_path)->required();
    adv->add_option("lottery", lottery_path, "lottery JSON file")->required();
    adv->add_option("--o", o_name, "single reference facility (default: max over all)");

    auto* dual = app.add_subcommand("dual", "solve the certificate-side LP directly");
    dual->add_option("profile", profile_path)->required();
    dual->add_flag("--metrics", with_metrics, "include the per-facility metrics");

    auto* vc = app.add_subcommand("verify-cert", "verify a lower-bound certificate");
    vc->add_option("certificate", cert_path, "certificate JSON file");
    vc->add_flag("--builtin", builtin_cert, "use the bundled reference certificate");
    vc->add_flag("--rational", rational, "re-verify in exact rational arithmetic");
    vc->add_option("--tol-phi", tol_phi, "tolerance against claimed_phi")->capture_default_str();

    auto* base = app.add_subcommand("baseline", "distortion of classical rules");
    base->add_option("profile", profile_path)->required();

    medist::SearchSpec spec;
    std::string mode = "exhaustive";
    std::vector<std::string> seed_profile_paths;
    auto* search = app.add_subcommand("search", "hunt for high-distortion instances");
    search->add_option("--m", spec.m, "facility count")->capture_default_str();
    search->add_option("--max-groups", spec.max_groups)->capture_default_str();
    search->add_option("--weight-cap", spec.weight_cap)->capture_default_str();
    search->add_option("--threshold", spec.threshold)->capture_default_str();
    search->add_option("--budget", spec.budget)->capture_default_str();
    search->add_option("--seed", spec.seed)->capture_default_str();
    search->add_option("--mode", mode, "exhaustive|sample")->capture_default_str();
    search->add_option("--seed-profile", seed_profile_paths,
                       "profile file(s) injected ahead of the stream");

    auto* repro = app.add_subcommand("reproduce-paper",
                                     "re-derive the published reference results");
    repro->add_flag("--rational", rational, "also verify the certificate exactly");
    repro->add_option("--tolerance", tol_override, "override every item's tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(profile_path, precision);
        if (adv->parsed()) return cmd_adversary(profile_path, lottery_path, o_name, precision);
        if (dual->parsed()) return cmd_dual(profile_path, with_metrics, precision);
        if (vc->parsed()) {
            if (!builtin_cert && cert_path.empty())
                throw InputError("verify-cert needs a certificate file or --builtin");
            return cmd_verify_cert(cert_path, builtin_cert, rational, tol_phi, precision);
        }
        if (base->parsed()) return cmd_baseline(profile_path, precision);
        if (search->parsed()) {
            if (mode == "sample")
                spec.mode = medist::SearchSpec::Mode::sample;
            else if (mode != "exhaustive")
                throw InputError("unknown search mode: " + mode);
            for (const auto& path : seed_profile_paths)
                spec.seed_profiles.push_back(load_profile(path));
            return cmd_search(spec, precision);
        }
        if (repro->parsed()) return cmd_reproduce(rational, tol_override, precision);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitInput;
}

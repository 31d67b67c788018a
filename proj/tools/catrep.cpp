// Copyright 2026 The catrep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// catrep: sweeps, chain runs, oracle checks and formula audits from the command line.
//
// Exit codes: 0 success, 2 invalid arguments, 3 numeric guard or failed check.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "catrep/audit.hpp"
#include "catrep/chain.hpp"
#include "catrep/fock_oracle.hpp"
#include "catrep/sweep.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitNumeric = 3;

struct Options {
    std::optional<double> alpha_min;
    std::optional<double> alpha_max;
    std::optional<int> alpha_steps;
    std::vector<double> etas;
    std::optional<std::string> sweep_case;
    std::vector<double> target;
    std::optional<double> beta;
    std::optional<double> alpha;
    int n = 3;
    std::string order = "hierarchical";
    std::optional<int> cutoff;
    std::string out;
    int threads = 1;
    double oracle_tol = 1e-8;
    double flag_tol = 1e-6;
};

/// Failed numeric check; reported with exit code 3.
struct CheckFailed : catrep::Error {
    using Error::Error;
};

/// Grid from the flags, with per-command defaults for anything left unset.
catrep::SweepSpec make_spec(const Options &o, catrep::SweepSpec defaults) {
    catrep::SweepSpec s = std::move(defaults);
    if (o.alpha_min) s.alpha_min = *o.alpha_min;
    if (o.alpha_max) s.alpha_max = *o.alpha_max;
    if (o.alpha_steps) s.alpha_steps = *o.alpha_steps;
    if (!o.etas.empty()) s.etas = o.etas;
    if (o.sweep_case) s.sweep_case = catrep::parse_case(*o.sweep_case);
    if (!o.target.empty()) {
        if (o.target.size() != 5) {
            throw catrep::InvalidArgument("--target takes five numbers: beta,gamma,omega,mu,phi");
        }
        s.custom_target = catrep::RelativeTarget{o.target[0], o.target[1], o.target[2], o.target[3], o.target[4]};
    }
    s.beta = o.beta;
    s.output_path = o.out;
    return s;
}

double single_eta(const Options &o, double fallback) {
    if (o.etas.empty()) {
        return fallback;
    }
    if (o.etas.size() != 1) {
        throw catrep::InvalidArgument("this command takes a single --eta value");
    }
    return o.etas.front();
}

void check_threads(const Options &o) {
    if (o.threads < 1) {
        throw catrep::InvalidArgument("--threads must be at least 1");
    }
}

/// Writes `text` to --out, or stdout when no path is given.
void emit(const Options &o, const std::string &text) {
    if (o.out.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw catrep::InvalidArgument("cannot open '" + o.out + "' for writing");
    }
    f << text;
    if (!f.flush()) {
        throw catrep::InvalidArgument("failed writing '" + o.out + "'");
    }
}

std::string csv_text(const catrep::Table &t) {
    std::ostringstream ss;
    catrep::write_csv(ss, t);
    return ss.str();
}

void cmd_entropy_sweep(const Options &o) {
    check_threads(o);
    catrep::SweepSpec d;
    d.sweep_case = catrep::SweepCase::Entropy;
    const auto spec = make_spec(o, d);
    emit(o, csv_text(catrep::entropy_sweep(spec, o.threads)));
}

void cmd_fidelity_sweep(const Options &o) {
    check_threads(o);
    const auto spec = make_spec(o, {});
    emit(o, csv_text(catrep::fidelity_sweep(spec, o.threads)));
}

catrep::SwapOrder parse_order(const std::string &s) {
    if (s == "hierarchical") return catrep::SwapOrder::Hierarchical;
    if (s == "left-to-right") return catrep::SwapOrder::LeftToRight;
    if (s == "right-to-left") return catrep::SwapOrder::RightToLeft;
    throw catrep::InvalidArgument("unknown swap order '" + s + "'");
}

void cmd_chain(const Options &o) {
    const double alpha = o.alpha.value_or(1.0);
    const double beta = o.beta.value_or(catrep::alpha_prime(alpha));
    const double eta = single_eta(o, 1.0);
    const auto report = catrep::run_chain(o.n, alpha, beta, eta, parse_order(o.order));

    std::ostringstream ss;
    ss << "n = " << report.n << '\n';
    ss << "locations = " << report.location_count << '\n';
    ss << "swaps = " << report.swap_count << '\n';
    ss << "order = " << o.order << '\n';
    ss << "alpha = " << catrep::format_number(alpha) << '\n';
    ss << "beta = " << catrep::format_number(beta) << '\n';
    ss << "eta = " << catrep::format_number(eta) << '\n';
    ss << "swap_weights =";
    for (double w : report.per_swap_weights) {
        ss << ' ' << catrep::format_number(w);
    }
    ss << '\n';
    ss << "entropy = " << catrep::format_number(report.entropy) << '\n';
    ss << "fidelity_vs_ideal_qbs = " << catrep::format_number(report.fidelity_vs_ideal_qbs) << '\n';
    ss << "final_state:\n";
    catrep::write_state(ss, report.final_state);
    emit(o, ss.str());
}

void cmd_oracle_check(const Options &o) {
    const double alpha = o.alpha.value_or(1.0);
    const double eta = single_eta(o, 1.0);
    const int cutoff = o.cutoff.value_or(catrep::fock::cutoff_rule(alpha));
    const double beta = o.beta.value_or(catrep::alpha_prime(alpha));
    catrep::fock::CrossChecker checker(alpha, eta, beta, cutoff);

    std::ostringstream ss;
    ss << "scenario,max_deviation,engine,oracle,status\n";
    bool ok = true;
    for (auto s : catrep::fock::all_scenarios()) {
        const auto r = checker.run(s);
        const bool pass = r.max_deviation < o.oracle_tol;
        ok = ok && pass;
        ss << catrep::fock::scenario_name(s) << ',' << catrep::format_number(r.max_deviation) << ','
           << catrep::format_number(r.engine_value) << ',' << catrep::format_number(r.oracle_value) << ','
           << (pass ? "ok" : "FAIL") << '\n';
    }
    emit(o, ss.str());
    if (!ok) {
        throw CheckFailed("engine and oracle deviate beyond " + catrep::format_number(o.oracle_tol));
    }
}

void cmd_audit(const Options &o) {
    check_threads(o);
    const auto spec = make_spec(o, catrep::default_audit_grid());
    const catrep::Tolerances tol{o.oracle_tol, o.flag_tol};
    const auto rows = catrep::audit_formulas(spec, tol, o.threads, o.cutoff);
    emit(o, csv_text(catrep::audit_table(rows)));
    for (const auto &r : rows) {
        if (!r.valid) {
            throw CheckFailed("engine and oracle deviate beyond " + catrep::format_number(o.oracle_tol) +
                              " at alpha=" + catrep::format_number(r.alpha) + " eta=" + catrep::format_number(r.eta));
        }
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Coherent-state quantum repeater simulator"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read key=value options from a file (flags override it)");

    Options o;
    app.add_option("--alpha-min", o.alpha_min, "Smallest alpha of the grid");
    app.add_option("--alpha-max", o.alpha_max, "Largest alpha of the grid");
    app.add_option("--alpha-steps", o.alpha_steps, "Number of alpha grid points (>= 2)");
    app.add_option("--eta", o.etas, "Transmittance, or comma-separated list for sweeps")->delimiter(',');
    app.add_option("--case", o.sweep_case, "entropy, fig4a, fig4b, fig4c or custom");
    app.add_option("--target", o.target, "Custom target beta,gamma,omega,mu (units of alpha') and phi")
        ->delimiter(',');
    app.add_option("--beta", o.beta, "QBSM amplitude (default alpha / sqrt(2))");
    app.add_option("--alpha", o.alpha, "Cat amplitude for chain and oracle-check (default 1)");
    app.add_option("--n", o.n, "Chain exponent N (2^N locations)");
    app.add_option("--order", o.order, "Chain swap order: hierarchical, left-to-right, right-to-left");
    app.add_option("--cutoff", o.cutoff, "Photon-number cutoff of the oracle (default from the tail rule)");
    app.add_option("--out", o.out, "Output file (default stdout)");
    app.add_option("--threads", o.threads, "Worker threads for grid evaluation");
    app.add_option("--oracle-tol", o.oracle_tol, "Maximum engine/oracle deviation");
    app.add_option("--flag-tol", o.flag_tol, "Engine/closed-form difference that raises the audit flag");

    auto sub = [&](const char *name, const char *help) {
        auto *s = app.add_subcommand(name, help);
        s->fallthrough();
        return s;
    };
    auto *entropy = sub("entropy-sweep", "Linear entropy of A on an (alpha, eta) grid");
    auto *fid = sub("fidelity-sweep", "Fidelity of the swapped pair on an (alpha, eta) grid");
    auto *chain = sub("chain", "Run a 2^N-location repeater chain");
    auto *oracle = sub("oracle-check", "Compare the engine with the number-basis oracle");
    auto *audit = sub("audit", "Engine, closed form and oracle side by side");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (*entropy) cmd_entropy_sweep(o);
        if (*fid) cmd_fidelity_sweep(o);
        if (*chain) cmd_chain(o);
        if (*oracle) cmd_oracle_check(o);
        if (*audit) cmd_audit(o);
    } catch (const catrep::InvalidArgument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const catrep::ModeError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const catrep::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
    return 0;
}

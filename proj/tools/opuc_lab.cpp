// opuc-lab: build monic orthogonal polynomials on the unit circle for the
// supported semiclassical weight families, generate their Verblunsky
// coefficients by several pipelines, and verify the structure relations,
// difference equations and differential equations they satisfy. Results
// are written as CSV with a fixed 17-significant-digit format so repeated
// runs are byte-identical.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "opuc/csv.hpp"
#include "opuc/figure1.hpp"
#include "opuc/moments.hpp"
#include "opuc/opuc_sequence.hpp"
#include "opuc/verblunsky.hpp"
#include "opuc/verify.hpp"
#include "opuc/weights.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitConvergence = 2;
constexpr int kExitVerification = 3;

struct RunConfig {
    std::string config_path;
    std::string method = "levinson";
    std::string scope = "all";
    std::string out;
    int nodes = opuc::kDefaultNodes;
    int N = 12;
    double tol = 1e-7;
    double perturb = 0.0;
};

opuc::WeightSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return opuc::WeightSpec::from_json_string(buf.str());
}

void check_common(const RunConfig& rc) {
    if (rc.N < 1 || rc.N > 64) throw std::invalid_argument("--N must lie in [1, 64]");
    if (rc.tol <= 0.0) throw std::invalid_argument("--tol must be positive");
    if (rc.perturb < 0.0) throw std::invalid_argument("--perturb must be nonnegative");
}

std::string fmt(double x) { return opuc::format_sig17(x); }

int cmd_moments(const RunConfig& rc) {
    const opuc::WeightSpec spec = load_spec(rc.config_path);
    const opuc::MomentTable table = opuc::compute_moments(spec, rc.N, rc.nodes);

    opuc::CsvWriter csv({"n", "re_mu", "im_mu", "converged_digits"});
    const double mu0 = table.mu(0).real();
    for (int n = 0; n <= rc.N; ++n) {
        const double rel = std::max(table.convergence(n) / mu0, 1e-17);
        const int digits = std::max(0, std::min(17, static_cast<int>(std::floor(-std::log10(rel)))));
        csv.add_row({std::to_string(n), fmt(table.mu(n).real()), fmt(table.mu(n).imag()),
                     std::to_string(digits)});
    }
    opuc::write_atomic(rc.out.empty() ? "moments.csv" : rc.out, csv.text());
    table.require_convergence(rc.tol);
    return kExitOk;
}

int cmd_alphas(const RunConfig& rc) {
    const opuc::WeightSpec spec = load_spec(rc.config_path);
    const std::string path = rc.out.empty() ? "alphas.csv" : rc.out;
    bool inside_disk = true;

    if (rc.method == "levinson") {
        const auto table = opuc::cached_moments(spec, 2 * rc.N + 2, rc.nodes);
        table->require_convergence(rc.tol);
        const opuc::OpucSequence seq = opuc::OpucSequence::build(*table, rc.N);
        opuc::CsvWriter csv({"n", "re_alpha", "im_alpha", "abs_alpha", "norm_sq"});
        for (int n = 0; n < rc.N; ++n) {
            const opuc::Complex a = seq.alpha(n);
            inside_disk = inside_disk && std::abs(a) < 1.0;
            csv.add_row({std::to_string(n), fmt(a.real()), fmt(a.imag()), fmt(std::abs(a)),
                         fmt(seq.norm_sq(n + 1))});
        }
        opuc::write_atomic(path, csv.text());
        return inside_disk ? kExitOk : kExitVerification;
    }

    std::vector<opuc::Complex> alphas;
    if (rc.method == "closed") {
        alphas = opuc::closed_form_alphas(spec, rc.N);
    } else if (rc.method == "diff" || rc.method == "dp2") {
        if (spec.family() != opuc::Family::ModifiedExpJacobi)
            throw std::invalid_argument("method '" + rc.method +
                                        "' applies to the ModifiedExpJacobi family only");
        const auto table = opuc::cached_moments(spec, std::max(4, 2 * rc.N + 2), rc.nodes);
        table->require_convergence(rc.tol);
        const opuc::HeineSeeds seeds = opuc::heine_seeds(*table);

        // Emitted values come from the extended-precision iteration, which
        // tracks the true coefficients through the requested range. The
        // double-precision forward pipeline is run alongside to report how
        // far it stays on the ground truth before roundoff amplification
        // takes over.
        opuc::AlphaPipeline pipe;
        if (rc.method == "dp2") {
            if (spec.eta() != 0.0 || spec.t() == 0.0)
                throw std::invalid_argument("method 'dp2' needs eta = 0 and t != 0");
            pipe = opuc::iterate_painleve2(spec.lambda(), spec.t(), seeds.a0.real(),
                                           seeds.a1.real(), rc.N);
            for (double a : opuc::extended_painleve2_alphas(spec.lambda(), spec.t(), rc.N, rc.nodes))
                alphas.emplace_back(a, 0.0);
        } else {
            pipe = opuc::iterate_ex2(spec.lambda(), spec.eta(), spec.t(), seeds.a0, seeds.a1,
                                     seeds.a2, rc.N);
            if (rc.N >= 3) {
                alphas = opuc::extended_difference_alphas(spec.lambda(), spec.eta(), spec.t(), rc.N,
                                                          rc.nodes);
            } else {
                alphas = pipe.alphas;
            }
        }
        const opuc::OpucSequence ref = opuc::OpucSequence::build(*table, rc.N);
        std::vector<opuc::Complex> ref_alphas;
        for (int n = 0; n < rc.N; ++n) ref_alphas.push_back(ref.alpha(n));
        pipe.stability_index = opuc::stability_index(pipe.alphas, ref_alphas);
        std::fprintf(stderr, "double-precision forward iteration stability index vs levinson: %d of %d\n",
                     pipe.stability_index, rc.N);
    } else {
        throw std::invalid_argument("unknown method '" + rc.method +
                                    "' (expected levinson, closed, diff or dp2)");
    }

    opuc::CsvWriter csv({"n", "re_alpha", "im_alpha", "abs_alpha"});
    for (size_t n = 0; n < alphas.size(); ++n) {
        inside_disk = inside_disk && std::abs(alphas[n]) < 1.0;
        csv.add_row({std::to_string(n), fmt(alphas[n].real()), fmt(alphas[n].imag()),
                     fmt(std::abs(alphas[n]))});
    }
    opuc::write_atomic(path, csv.text());
    return inside_disk ? kExitOk : kExitVerification;
}

int cmd_verify(const RunConfig& rc) {
    const opuc::WeightSpec spec = load_spec(rc.config_path);
    const opuc::Scope scope = opuc::scope_from_name(rc.scope);
    const int seq_len = rc.N + 2;
    const auto table = opuc::cached_moments(spec, 2 * seq_len + 2, rc.nodes);
    table->require_convergence(rc.tol);
    opuc::OpucSequence seq = opuc::OpucSequence::build(*table, seq_len);

    if (rc.perturb > 0.0) {
        std::vector<opuc::Complex> alphas;
        for (int n = 0; n < seq.size(); ++n) alphas.push_back(seq.alpha(n));
        alphas[alphas.size() / 2] += rc.perturb;
        seq = opuc::OpucSequence::from_alphas(std::move(alphas), table->mu(0).real());
    }

    const std::vector<opuc::CheckRow> rows = opuc::run_scope(scope, spec, *table, seq, rc.N);

    if (scope == opuc::Scope::Structure) {
        opuc::CsvWriter csv({"family", "param_set", "n", "residual"});
        for (const auto& r : rows) {
            csv.add_row({r.family, r.param_set, std::to_string(r.n), fmt(r.residual)});
        }
        opuc::write_atomic(rc.out.empty() ? "verify.csv" : rc.out, csv.text());
    } else {
        opuc::CsvWriter csv({"family", "param_set", "n", "equation_id", "residual", "status"});
        for (const auto& r : rows) {
            csv.add_row({r.family, r.param_set, std::to_string(r.n), r.equation_id,
                         fmt(r.residual), r.status});
        }
        opuc::write_atomic(rc.out.empty() ? "verify.csv" : rc.out, csv.text());
    }

    if (const opuc::CheckRow* worst = opuc::worst_breach(rows, rc.tol)) {
        std::fprintf(stderr, "verification breach: %s %s n=%d %s residual=%.3e (tol %.1e)\n",
                     worst->family.c_str(), worst->param_set.c_str(), worst->n,
                     worst->equation_id.c_str(), worst->residual, rc.tol);
        return kExitVerification;
    }
    return kExitOk;
}

int cmd_figure1(const RunConfig& rc) {
    const opuc::Figure1Data data = opuc::compute_figure1(30, rc.nodes);
    const std::string base = rc.out.empty() ? "figure1" : rc.out;
    bool inside_disk = true;

    const auto emit = [&](const std::vector<opuc::Figure1Series>& panel, const std::string& path) {
        opuc::CsvWriter csv({"n", "series", "value"});
        for (const auto& series : panel) {
            for (size_t n = 0; n < series.values.size(); ++n) {
                inside_disk = inside_disk && std::abs(series.values[n]) < 1.0;
                csv.add_row({std::to_string(n), series.label, fmt(series.values[n])});
            }
        }
        opuc::write_atomic(path, csv.text());
    };
    emit(data.panel_a, base + "_a.csv");
    emit(data.panel_b, base + "_b.csv");
    return inside_disk ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semiclassical orthogonal polynomials on the unit circle: moments, Verblunsky "
                 "coefficients, and identity verification"};
    app.require_subcommand(1);

    RunConfig rc;
    const auto add_common = [&rc](CLI::App* sub, bool config_required) {
        auto* opt = sub->add_option("--config", rc.config_path, "weight family JSON file");
        if (config_required) opt->required();
        sub->add_option("--out", rc.out, "output CSV path");
        sub->add_option("--nodes", rc.nodes, "quadrature nodes (power of two)");
        sub->add_option("--N", rc.N, "number of coefficients / max degree checked");
        sub->add_option("--tol", rc.tol, "tolerance for convergence and verification");
    };

    CLI::App* moments = app.add_subcommand("moments", "trigonometric moments of the weight");
    add_common(moments, true);

    CLI::App* alphas = app.add_subcommand("alphas", "Verblunsky coefficients");
    add_common(alphas, true);
    alphas->add_option("--method", rc.method, "levinson | closed | diff | dp2");

    CLI::App* verify = app.add_subcommand("verify", "residual verification sweeps");
    add_common(verify, true);
    verify->add_option("--scope", rc.scope,
                       "pearson | recurrence | structure | difference | ode1 | ode2 | all");
    verify->add_option("--perturb", rc.perturb,
                       "perturb one Verblunsky coefficient by this amount (negative control)");

    CLI::App* figure1 = app.add_subcommand("figure1", "Verblunsky simulation data, both panels");
    add_common(figure1, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        check_common(rc);
        if (moments->parsed()) return cmd_moments(rc);
        if (alphas->parsed()) return cmd_alphas(rc);
        if (verify->parsed()) return cmd_verify(rc);
        if (figure1->parsed()) return cmd_figure1(rc);
        return kExitConfig;
    } catch (const opuc::ConvergenceError& e) {
        std::fprintf(stderr, "error: %s (achieved %.3e, requested %.3e)\n", e.what(), e.achieved,
                     e.requested);
        return kExitConvergence;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    }
}

#include "opuc/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "opuc/ode.hpp"
#include "opuc/structure.hpp"
#include "opuc/verblunsky.hpp"

namespace opuc {

namespace {

// Free constant of the degree-three GeneralizedJacobi pair exercised by the
// sweeps; any value is admissible, this one keeps all coefficients complex.
constexpr Complex kCubicR{0.4, 0.2};

struct Sweep {
    const WeightSpec& spec;
    const MomentTable& table;
    const OpucSequence& seq;
    std::vector<Complex> pts = unit_circle_samples();
    std::vector<CheckRow> rows;

    void add(int n, std::string id, double residual, std::string status = "ok") {
        rows.push_back({family_name(spec.family()), spec.describe(), n, std::move(id), residual,
                        std::move(status)});
    }
    void add(int n, const ResidualReport& r) {
        rows.push_back({family_name(spec.family()), spec.describe(), n, r.id, r.residual,
                        status_name(r.status)});
    }
};

void run_pearson(Sweep& s) {
    s.add(0, "Pearson", pearson_pointwise_residual(s.spec));
    s.add(0, "Boundary", s.spec.boundary_condition_ok() ? 0.0 : 1.0);
}

void run_recurrence(Sweep& s, int n_max) {
    const double mu0 = s.table.mu(0).real();
    for (int n = 1; n <= n_max && n < s.seq.size(); ++n) {
        const Complex am1 = s.seq.alpha(n - 1);
        const Poly defect = s.seq.phi(n) -
                            (1.0 - std::norm(am1)) * s.seq.phi(n - 1).shifted(1) +
                            std::conj(am1) * s.seq.phi_star(n);
        s.add(n, "Szego2", defect.max_abs_coeff() / std::max(1.0, s.seq.phi(n).max_abs_coeff()));

        const double direct = s.table.inner_product(s.seq.phi(n), s.seq.phi(n)).real();
        s.add(n, "NormTelescope", std::abs(direct - s.seq.norm_sq(n)) / s.seq.norm_sq(n));

        if (n >= 2) s.add(n, "CoeffIds", s.seq.coefficient_identity_residual(n));

        double ortho = 0.0;
        const double scale = std::sqrt(s.seq.norm_sq(n)) * std::sqrt(mu0);
        for (int k = 0; k < n; ++k) {
            ortho = std::max(ortho,
                             std::abs(s.table.inner_product(s.seq.phi(n), Poly::monomial(k))) / scale);
        }
        s.add(n, "Orthogonality", ortho);

        s.add(n, "TauUnimodular", std::abs(std::abs(s.seq.tau(n)) - 1.0));
    }
}

void run_structure(Sweep& s, int n_max, bool with_extras) {
    const PearsonPair pair = s.spec.pearson();
    for (int n = 3; n <= n_max && n + 2 <= s.seq.size(); ++n) {
        s.add(n, "Thm2.1", structure_residual(s.seq, pair, n, s.pts));
        if (with_extras) {
            const auto [d_snn, d_snp1] = corollary_alternative_deltas(s.seq, pair, n);
            s.add(n, "Cor2.2-snn", std::abs(d_snn));
            s.add(n, "Cor2.2-snp1", std::abs(d_snp1));
        }
    }
    if (s.spec.family() == Family::GeneralizedJacobi) {
        const PearsonPair cubic = s.spec.pearson_cubic(kCubicR);
        for (int n = 3; n <= n_max && n + 2 <= s.seq.size(); ++n) {
            s.add(n, "Thm2.1-cubic", structure_residual(s.seq, cubic, n, s.pts));
            if (with_extras) {
                const auto [d_snn, d_snp1] = corollary_alternative_deltas(s.seq, cubic, n);
                s.add(n, "Cor2.2-cubic-snn", std::abs(d_snn));
                s.add(n, "Cor2.2-cubic-snp1", std::abs(d_snp1));
            }
        }
    }
    if (with_extras) {
        for (int n = 1; n <= n_max && n + 2 <= s.seq.size(); ++n) {
            for (const auto& r : ell_identity_residuals(s.seq, s.spec, n)) s.add(n, r);
        }
        if (s.spec.family() == Family::LogArgPower) {
            for (int n = 3; n <= n_max && n + 2 <= s.seq.size(); ++n) {
                s.add(n, "rfrak",
                      std::abs(rfrak_residual(s.seq, n, s.spec.effective_r(), s.spec.effective_u())));
            }
        }
    }
}

void run_difference(Sweep& s, int n_max) {
    const PearsonPair pair = s.spec.pearson();
    for (int n = 2; n <= n_max && n + 2 <= s.seq.size(); ++n) {
        s.add(n, "Thm2.3", std::abs(general_difference_residual(s.seq, pair, n)));
    }
    switch (s.spec.family()) {
        case Family::ModifiedExpJacobi: {
            const Complex b = s.spec.b();
            const double t = s.spec.t();
            std::vector<Complex> alphas;
            for (int i = 0; i < s.seq.size(); ++i) alphas.push_back(s.seq.alpha(i));
            for (int n = 2; n <= n_max && n + 2 <= s.seq.size(); ++n) {
                s.add(n, "Thm4.4", std::abs(ex2_difference_residual(s.seq, b, t, n)));
                s.add(n, "Lem4.6", modulus_identity_residual(s.seq, b, t, n));
                if (s.spec.eta() == 0.0 && t != 0.0) {
                    s.add(n, "dPII", dp2_residual(alphas, s.spec.lambda(), t, n));
                }
            }
            break;
        }
        case Family::GeneralizedJacobi: {
            const Complex d = s.spec.d();
            for (int n = 2; n <= n_max && n + 2 <= s.seq.size(); ++n) {
                s.add(n, "Ex3-diff-r",
                      std::abs(ex3_difference_residual(s.seq, d, s.spec.lambda(), s.spec.beta(),
                                                       kCubicR, n)));
                s.add(n, "Ex3-diff-r0",
                      std::abs(ex3_difference_residual_r0(s.seq, d, s.spec.lambda(), s.spec.beta(), n)));
            }
            break;
        }
        case Family::LogArgPower: {
            for (int n = 2; n <= n_max && n + 1 <= s.seq.size(); ++n) {
                s.add(n, "Ex5-3term",
                      std::abs(ex5_three_term_residual(s.seq, s.spec.effective_r(),
                                                       s.spec.effective_u(), n)));
            }
            break;
        }
        default:
            break;
    }
}

void run_ode1(Sweep& s, int n_max) {
    const PearsonPair pair = s.spec.pearson();
    for (int n = 3; n <= n_max && n + 2 <= s.seq.size(); ++n) {
        const OdeSystem sys = build_system(s.seq, pair, n);
        const auto [r1, r2] = first_order_residual(sys, s.seq, s.pts);
        s.add(n, "Thm3.1a", r1);
        s.add(n, "Thm3.1b", r2);
        const CorollaryFirstOrder c = corollary_forms_residual(sys, s.seq, s.pts);
        s.add(n, "Cor3.2a", c.shifted_phi);
        s.add(n, "Cor3.2b", c.shifted_star);
        if (c.weighted_applicable) {
            s.add(n, "Cor3.3a", c.weighted_phi);
            s.add(n, "Cor3.3b", c.weighted_star);
        } else {
            s.add(n, "Cor3.3a", 0.0, "skipped");
            s.add(n, "Cor3.3b", 0.0, "skipped");
        }
    }
}

void run_ode2(Sweep& s, int n_max) {
    const PearsonPair pair = s.spec.pearson();
    for (int n = 3; n <= n_max && n + 2 <= s.seq.size(); ++n) {
        const OdeSystem sys = build_system(s.seq, pair, n);
        s.add(n, "Thm3.4", second_order_residual_phi(sys, s.seq, s.pts));
        s.add(n, "Thm3.6", second_order_residual_phistar(sys, s.seq, s.pts));
        const LinearSecondOrder lin = linear_second_order_residual(sys, s.seq, s.pts);
        if (lin.phi_applicable) {
            s.add(n, "Cor3.5", lin.phi);
        } else {
            s.add(n, "Cor3.5", 0.0, "n/a");
        }
        if (lin.star_applicable) {
            s.add(n, "Cor3.7", lin.phi_star);
        } else {
            s.add(n, "Cor3.7", 0.0, "n/a");
        }
        for (const auto& r : specialized_equation_residuals(s.spec, s.seq, n, s.pts)) s.add(n, r);
    }
}

}  // namespace

std::string scope_name(Scope s) {
    switch (s) {
        case Scope::Pearson: return "pearson";
        case Scope::Recurrence: return "recurrence";
        case Scope::Structure: return "structure";
        case Scope::Difference: return "difference";
        case Scope::Ode1: return "ode1";
        case Scope::Ode2: return "ode2";
        case Scope::All: return "all";
    }
    throw std::logic_error("scope_name: bad enum");
}

Scope scope_from_name(const std::string& name) {
    for (Scope s : {Scope::Pearson, Scope::Recurrence, Scope::Structure, Scope::Difference,
                    Scope::Ode1, Scope::Ode2, Scope::All}) {
        if (scope_name(s) == name) return s;
    }
    throw std::invalid_argument("unknown verification scope: " + name);
}

std::vector<CheckRow> run_scope(Scope scope, const WeightSpec& spec, const MomentTable& table,
                                const OpucSequence& seq, int n_max_check) {
    Sweep s{spec, table, seq};
    switch (scope) {
        case Scope::Pearson:
            run_pearson(s);
            break;
        case Scope::Recurrence:
            run_recurrence(s, n_max_check);
            break;
        case Scope::Structure:
            run_structure(s, n_max_check, false);
            break;
        case Scope::Difference:
            run_difference(s, n_max_check);
            break;
        case Scope::Ode1:
            run_ode1(s, n_max_check);
            break;
        case Scope::Ode2:
            run_ode2(s, n_max_check);
            break;
        case Scope::All:
            run_pearson(s);
            run_recurrence(s, n_max_check);
            run_structure(s, n_max_check, true);
            run_difference(s, n_max_check);
            run_ode1(s, n_max_check);
            run_ode2(s, n_max_check);
            break;
    }
    return std::move(s.rows);
}

const CheckRow* worst_breach(const std::vector<CheckRow>& rows, double tol) {
    const CheckRow* worst = nullptr;
    for (const CheckRow& r : rows) {
        if (r.status != "ok" || r.residual <= tol) continue;
        if (worst == nullptr || r.residual > worst->residual) worst = &r;
    }
    return worst;
}

}  // namespace opuc

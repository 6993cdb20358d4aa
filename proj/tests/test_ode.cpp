#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "opuc/ode.hpp"

using namespace opuc;

namespace {

OpucSequence build(const WeightSpec& spec, int N, int nodes = 8192) {
    return OpucSequence::build(*cached_moments(spec, 2 * N + 2, nodes), N);
}

const std::vector<Complex> kPts = unit_circle_samples();

}  // namespace

TEST_CASE("system polynomials for the circular family") {
    const Complex b(1.0, 0.0);
    const auto spec = WeightSpec::exp_jacobi_circular(1.0, 0.0);
    const OpucSequence seq = build(spec, 8);
    const int n = 4;
    const OdeSystem sys = build_system(seq, spec.pearson(), n);
    const Complex am1 = seq.alpha(n - 1);

    CHECK(poly_match_residual(sys.U, Poly{-(std::conj(b) + 4.0), 4.0}) < 1e-10);
    CHECK(poly_match_residual(sys.V, Poly{-(std::conj(b) + 4.0) * std::conj(am1)}) < 1e-10);
    CHECK(poly_match_residual(sys.W, Poly{0.0, 0.0, -(b + 4.0) * am1}) < 1e-10);
    CHECK(poly_match_residual(sys.Y, Poly{0.0, 0.0, -b}) < 1e-10);
    CHECK(poly_match_residual(sys.A_hat, Poly{0.0, 0.0, 1.0, -1.0}) < 1e-15);
    CHECK(sys.theta_V);
    CHECK(sys.theta_W);
}

TEST_CASE("system polynomials for ExpSine") {
    const Complex u(0.0, 0.5);
    const auto spec = WeightSpec::exp_sine(u);
    const OpucSequence seq = build(spec, 9);
    const int n = 5;
    const OdeSystem sys = build_system(seq, spec.pearson(), n);
    const Complex an = seq.alpha(n), am1 = seq.alpha(n - 1);
    CHECK(poly_match_residual(
              sys.U, Poly{kI * std::conj(u), 5.0 - kI * std::conj(u) * an * std::conj(am1)}) < 1e-10);
    CHECK(poly_match_residual(
              sys.V, Poly{kI * std::conj(u) * std::conj(am1), kI * u * std::conj(an)}) < 1e-10);
    CHECK(poly_match_residual(sys.A_hat, Poly{0.0, 0.0, 1.0}) < 1e-15);
}

TEST_CASE("flat weight: first equation collapses and theta flags clear") {
    const auto spec = WeightSpec::uniform();
    const OpucSequence seq = build(spec, 8, 512);
    const OdeSystem sys = build_system(seq, spec.pearson(), 4);
    // z A Phi' = n (z - 1) z^n balances U = n(z-1), V = 0.
    CHECK(poly_match_residual(sys.U, Poly{-4.0, 4.0}) < 1e-12);
    CHECK_FALSE(sys.theta_V);
    CHECK_FALSE(sys.theta_W);
    const auto [r1, r2] = first_order_residual(sys, seq, kPts);
    CHECK(r1 < 1e-12);
    CHECK(r2 < 1e-8);  // 0 = 0 side, judged on the absolute floor
    CHECK(second_order_residual_phi(sys, seq, kPts) < 1e-12);
    CHECK(second_order_residual_phistar(sys, seq, kPts) < 1e-8);
    const LinearSecondOrder lin = linear_second_order_residual(sys, seq, kPts);
    CHECK_FALSE(lin.phi_applicable);
    CHECK_FALSE(lin.star_applicable);
    const CorollaryFirstOrder cf = corollary_forms_residual(sys, seq, kPts);
    CHECK_FALSE(cf.weighted_applicable);
    CHECK(cf.shifted_phi < 1e-12);
    CHECK(cf.shifted_star < 1e-8);
}

TEST_CASE("first and second order residual sweeps") {
    const std::vector<WeightSpec> specs = {
        WeightSpec::exp_jacobi_circular(1.0, 0.0),
        WeightSpec::exp_jacobi_circular(0.25, 0.5),
        WeightSpec::modified_exp_jacobi(10.0, 5.0, 0.0),
        WeightSpec::modified_exp_jacobi(1.0, 0.25, 0.5),
        WeightSpec::generalized_jacobi(0.5, 0.25, 0.0),
        WeightSpec::generalized_jacobi(0.75, 0.5, 0.5),
        WeightSpec::exp_sine(Complex(0.0, 1.0)),
        WeightSpec::exp_sine(Complex(0.3, 0.4)),
        WeightSpec::log_arg_power(Complex(0.5, 0.0), Complex(0.0, 1.0)),
        WeightSpec::log_arg_power(Complex(2.0, 0.0), Complex(1.0, 1.0)),
    };
    for (const auto& spec : specs) {
        const OpucSequence seq = build(spec, 14);
        const PearsonPair pair = spec.pearson();
        for (int n = 3; n <= 12; ++n) {
            INFO(spec.describe() << " n=" << n);
            const OdeSystem sys = build_system(seq, pair, n);
            const auto [r1, r2] = first_order_residual(sys, seq, kPts);
            CHECK(r1 < 1e-8);
            CHECK(r2 < 1e-8);
            const CorollaryFirstOrder cf = corollary_forms_residual(sys, seq, kPts);
            CHECK(cf.shifted_phi < 1e-8);
            CHECK(cf.shifted_star < 1e-8);
            if (cf.weighted_applicable) {
                CHECK(cf.weighted_phi < 1e-8);
                CHECK(cf.weighted_star < 1e-8);
            }
            CHECK(second_order_residual_phi(sys, seq, kPts) < 1e-7);
            CHECK(second_order_residual_phistar(sys, seq, kPts) < 1e-7);
            const LinearSecondOrder lin = linear_second_order_residual(sys, seq, kPts);
            if (lin.phi_applicable) CHECK(lin.phi < 1e-7);
            if (lin.star_applicable) CHECK(lin.phi_star < 1e-7);
        }
    }
}

TEST_CASE("alpha-weighted corollary forms are skipped on alternating zeros") {
    // lambda = beta makes every other coefficient vanish.
    const auto spec = WeightSpec::generalized_jacobi(0.5, 0.5, 0.0);
    const OpucSequence seq = build(spec, 10);
    const PearsonPair pair = spec.pearson();
    bool saw_skip = false, saw_eval = false;
    for (int n = 3; n <= 8; ++n) {
        const OdeSystem sys = build_system(seq, pair, n);
        const CorollaryFirstOrder cf = corollary_forms_residual(sys, seq, kPts);
        (cf.weighted_applicable ? saw_eval : saw_skip) = true;
        if (cf.weighted_applicable) {
            CHECK(cf.weighted_phi < 1e-8);
            CHECK(cf.weighted_star < 1e-8);
        }
    }
    CHECK(saw_skip);
    CHECK(saw_eval);
}

TEST_CASE("specialized displays") {
    const std::vector<WeightSpec> specs = {
        WeightSpec::exp_jacobi_circular(1.0, 0.0),
        WeightSpec::exp_jacobi_circular(0.25, 0.5),
        WeightSpec::modified_exp_jacobi(10.0, 5.0, 0.0),
        WeightSpec::modified_exp_jacobi(1.0, 0.25, 0.5),
        WeightSpec::modified_exp_jacobi(2.0, 0.0, 0.0),  // modified Bessel member
        WeightSpec::generalized_jacobi(0.5, 0.25, 0.0),
        WeightSpec::generalized_jacobi(2.0, 1.0, 0.0),
        WeightSpec::generalized_jacobi(0.75, 0.5, 0.5),
        WeightSpec::exp_sine(Complex(0.0, 1.0)),  // u = i t/2 with t = 2
        WeightSpec::exp_sine(Complex(0.3, 0.4)),
        WeightSpec::log_arg_power(Complex(0.5, 0.0), Complex(0.0, 1.0)),
        WeightSpec::log_arg_power(Complex(2.0, 0.0), Complex(1.0, 1.0)),
        WeightSpec::log_arg_power(Complex(0.5, 0.0), Complex(0.0, 0.0)),
    };
    for (const auto& spec : specs) {
        const OpucSequence seq = build(spec, 14);
        for (int n = 3; n <= 12; ++n) {
            for (const auto& r : specialized_equation_residuals(spec, seq, n, kPts)) {
                INFO(spec.describe() << " " << r.id << " n=" << n);
                if (r.status == ResidualReport::Status::Ok) {
                    CHECK(r.residual < 1e-7);
                }
            }
        }
    }
    CHECK(specialized_equation_residuals(WeightSpec::uniform(),
                                         build(WeightSpec::uniform(), 8, 512), 4, kPts)
              .empty());
}

TEST_CASE("epsilon-based equation is skipped when alpha vanishes") {
    const auto spec = WeightSpec::generalized_jacobi(0.5, 0.5, 0.0);
    const OpucSequence seq = build(spec, 10);
    bool saw_skip = false;
    for (int n = 3; n <= 8; ++n) {
        for (const auto& r : specialized_equation_residuals(spec, seq, n, kPts)) {
            if (r.status == ResidualReport::Status::Skipped) saw_skip = true;
            if (r.status == ResidualReport::Status::Ok) {
                INFO(r.id << " n=" << n);
                CHECK(r.residual < 1e-7);
            }
        }
    }
    CHECK(saw_skip);
}

TEST_CASE("modified Bessel coefficient polynomials divide by z - 1") {
    const auto spec = WeightSpec::modified_exp_jacobi(2.0, 0.0, 0.0);
    const OpucSequence seq = build(spec, 9);
    const OdeSystem sys = build_system(seq, spec.pearson(), 5);
    const Poly q = divide_exact(sys.V, Poly{-1.0, 1.0}, 1e-10);
    CHECK(q.degree() == 1);
    CHECK_NOTHROW(divide_exact(sys.U, Poly{-1.0, 1.0}, 1e-10));
    CHECK_NOTHROW(divide_exact(sys.W, Poly{-1.0, 1.0}, 1e-10));
    CHECK_NOTHROW(divide_exact(sys.Y, Poly{-1.0, 1.0}, 1e-10));
}

TEST_CASE("Jacobi epsilon closed form") {
    const SecondOrderCoeffs c = second_order_coeffs_jacobi(0.5, 0.25, 5);
    REQUIRE(c.eps_n.has_value());
    CHECK(std::abs(*c.eps_n - Complex((0.5 - 0.25) / (0.5 + 0.25))) < 1e-15);
    // lambda = (-1)^n beta leaves it undefined.
    CHECK_FALSE(second_order_coeffs_jacobi(0.5, 0.5, 4).eps_n.has_value());
}

TEST_CASE("scale invariance of the residuals") {
    // Doubling the weight rescales the moments only; the monic polynomials,
    // the Verblunsky coefficients and every residual stay put.
    const auto spec = WeightSpec::exp_sine(Complex(0.3, 0.4));
    const auto table = cached_moments(spec, 2 * 9 + 2, 4096);
    const OpucSequence seq = OpucSequence::build(*table, 9);

    std::vector<Complex> scaled_mu;
    for (int n = 0; n <= table->n_max(); ++n) scaled_mu.push_back(3.7 * table->mu(n));
    const MomentTable scaled(spec, table->n_max(), table->nodes(), scaled_mu,
                             std::vector<double>(static_cast<size_t>(table->n_max()) + 1, 0.0));
    const OpucSequence seq2 = OpucSequence::build(scaled, 9);

    const PearsonPair pair = spec.pearson();
    for (int n = 3; n <= 7; ++n) {
        const OdeSystem a = build_system(seq, pair, n);
        const OdeSystem b = build_system(seq2, pair, n);
        CHECK(std::abs(second_order_residual_phi(a, seq, kPts) -
                       second_order_residual_phi(b, seq2, kPts)) < 1e-12);
        CHECK(std::abs(structure_residual(seq, pair, n, kPts) -
                       structure_residual(seq2, pair, n, kPts)) < 1e-12);
    }
}

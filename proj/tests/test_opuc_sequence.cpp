#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "opuc/opuc_sequence.hpp"
#include "opuc/verblunsky.hpp"

using namespace opuc;

namespace {

OpucSequence build(const WeightSpec& spec, int N, int nodes = 4096) {
    return OpucSequence::build(*cached_moments(spec, 2 * N + 2, nodes), N);
}

}  // namespace

TEST_CASE("flat weight gives alpha = 0 and Phi_n = z^n") {
    const OpucSequence seq = build(WeightSpec::uniform(), 8);
    for (int n = 0; n < 8; ++n) CHECK(std::abs(seq.alpha(n)) < 1e-13);
    CHECK(poly_match_residual(seq.phi(5), Poly::monomial(5)) < 1e-13);
    CHECK(poly_match_residual(seq.phi_star(5), Poly::one()) < 1e-13);
    for (int n = 0; n <= 8; ++n) CHECK(seq.norm_sq(n) == doctest::Approx(2.0 * M_PI));
    CHECK(seq.alpha(-1) == Complex(-1.0));
}

TEST_CASE("circular Jacobi alphas match -1/(n+2)") {
    const OpucSequence seq = build(WeightSpec::exp_jacobi_circular(1.0, 0.0), 10);
    for (int n = 0; n < 10; ++n) {
        CHECK(std::abs(seq.alpha(n) - Complex(-1.0 / (n + 2.0))) < 1e-12);
    }
    // ell_{2,0} = -conj(alpha_1) = 1/3
    CHECK(std::abs(seq.ell(2, 0) - Complex(1.0 / 3.0)) < 1e-12);
    CHECK(std::abs(seq.ell(2, 2) - Complex(1.0)) == 0.0);
}

TEST_CASE("Jacobi-on-the-circle alphas at lambda = beta = 1/2") {
    const OpucSequence seq = build(WeightSpec::generalized_jacobi(0.5, 0.5, 0.0), 8);
    CHECK(std::abs(seq.alpha(0)) < 1e-12);                        // (lambda - beta) / ... = 0
    CHECK(std::abs(seq.alpha(1) - Complex(-1.0 / 3.0)) < 1e-12);  // -(1/2+1/2)/(2+1)
    for (int n = 1; n <= 8; ++n) {
        const double expected = closed_form_jacobi(0.5, 0.5, n);
        CHECK(std::abs(seq.alpha(n - 1) - Complex(expected)) < 1e-12);
    }
}

TEST_CASE("orthogonality of the built polynomials") {
    const auto spec = WeightSpec::exp_sine(Complex(0.0, 0.5));
    const auto table = cached_moments(spec, 2 * 12 + 2, 4096);
    const OpucSequence seq = OpucSequence::build(*table, 12);
    const double mu0 = table->mu(0).real();
    for (int n = 1; n <= 12; ++n) {
        const double scale = std::sqrt(seq.norm_sq(n)) * std::sqrt(mu0);
        for (int k = 0; k < n; ++k) {
            CHECK(std::abs(table->inner_product(seq.phi(n), Poly::monomial(k))) < 1e-9 * scale);
        }
    }
}

TEST_CASE("both Szego recurrences hold") {
    const auto spec = WeightSpec::modified_exp_jacobi(2.0, 0.75, 0.5);
    const OpucSequence seq = build(WeightSpec::modified_exp_jacobi(2.0, 0.75, 0.5), 10);
    for (int n = 1; n <= 10; ++n) {
        const Complex a = seq.alpha(n - 1);
        const Poly first =
            seq.phi(n) - seq.phi(n - 1).shifted(1) + std::conj(a) * seq.phi_star(n - 1);
        CHECK(first.max_abs_coeff() < 1e-12 * std::max(1.0, seq.phi(n).max_abs_coeff()));
        const Poly second = seq.phi(n) - (1.0 - std::norm(a)) * seq.phi(n - 1).shifted(1) +
                            std::conj(a) * seq.phi_star(n);
        CHECK(second.max_abs_coeff() < 1e-10 * std::max(1.0, seq.phi(n).max_abs_coeff()));
    }
}

TEST_CASE("norm telescoping matches direct inner products") {
    const auto spec = WeightSpec::generalized_jacobi(0.5, 0.25, 0.0);
    const auto table = cached_moments(spec, 2 * 15 + 2, 4096);
    const OpucSequence seq = OpucSequence::build(*table, 15);
    for (int n = 0; n <= 15; ++n) {
        const double direct = table->inner_product(seq.phi(n), seq.phi(n)).real();
        CHECK(std::abs(direct - seq.norm_sq(n)) < 1e-8 * seq.norm_sq(n));
    }
    CHECK(seq.norm_drift() < 1e-10);
}

TEST_CASE("coefficient identities") {
    const OpucSequence flat = build(WeightSpec::uniform(), 6);
    CHECK(flat.coefficient_identity_residual(3) < 1e-14);

    const OpucSequence ex1 = build(WeightSpec::exp_jacobi_circular(1.0, 0.0), 6);
    CHECK(ex1.coefficient_identity_residual(3) < 1e-12);

    const OpucSequence ex4 = build(WeightSpec::exp_sine(Complex(0.0, 0.5)), 8);
    for (int n = 2; n <= 6; ++n) CHECK(ex4.coefficient_identity_residual(n) < 1e-10);
}

TEST_CASE("tau is unimodular and matches the circular-family ratio") {
    const OpucSequence flat = build(WeightSpec::uniform(), 4);
    CHECK(std::abs(flat.tau(3) - Complex(1.0)) < 1e-12);

    // Symmetric weight: real coefficients force tau = 1.
    const OpucSequence sym = build(WeightSpec::modified_exp_jacobi(10.0, 5.0, 0.0), 6);
    CHECK(std::abs(sym.tau(5) - Complex(1.0)) < 1e-10);

    // tau_n = -b [(b + n) alpha_{n-1}]^{-1} for the circular family.
    const Complex b(1.0, 2.0);
    const OpucSequence seq = build(WeightSpec::exp_jacobi_circular(1.0, 2.0), 6);
    const int n = 4;
    CHECK(std::abs(std::abs(seq.tau(n)) - 1.0) < 1e-10);
    const Complex predicted = -b / ((b + static_cast<double>(n)) * seq.alpha(n - 1));
    CHECK(std::abs(seq.tau(n) - predicted) < 1e-10);
}

TEST_CASE("build preconditions and diagnostics") {
    const auto table = cached_moments(WeightSpec::uniform(), 10, 256);
    CHECK_THROWS(OpucSequence::build(*table, 6));  // needs 2N + 2 = 14 moments
    const OpucSequence seq = OpucSequence::build(*table, 4);
    CHECK(seq.max_coeff_magnitude() >= 1.0);
    CHECK_THROWS(seq.alpha(7));
    CHECK_THROWS(seq.ell(3, 4));
}

TEST_CASE("a coefficient at the unit circle aborts the build") {
    // Moments of a measure collapsing onto a point mass push |alpha_0|
    // against 1; the build must refuse rather than divide through a
    // vanishing norm.
    std::vector<Complex> mu;
    for (int n = 0; n <= 10; ++n) mu.push_back(2.0 * M_PI * std::pow(1.0 - 1e-13, n));
    const MomentTable table(WeightSpec::uniform(), 10, 256, mu,
                            std::vector<double>(11, 0.0));
    CHECK_THROWS_AS(OpucSequence::build(table, 4), PrecisionLossError);
}

TEST_CASE("symmetric weights produce real coefficients") {
    for (const auto& spec : {WeightSpec::modified_exp_jacobi(10.0, 5.0, 0.0),
                             WeightSpec::exp_sine(Complex(0.0, 1.0)),
                             WeightSpec::generalized_jacobi(0.5, 0.25, 0.0)}) {
        const OpucSequence seq = build(spec, 12, 8192);
        for (int n = 0; n < 12; ++n) {
            INFO(spec.describe());
            CHECK(std::abs(seq.alpha(n).imag()) < 1e-10);
        }
    }
}

TEST_CASE("rebuilding from alphas reproduces the sequence") {
    const auto spec = WeightSpec::exp_jacobi_circular(0.25, 0.5);
    const auto table = cached_moments(spec, 2 * 8 + 2, 4096);
    const OpucSequence seq = OpucSequence::build(*table, 8);
    std::vector<Complex> alphas;
    for (int n = 0; n < 8; ++n) alphas.push_back(seq.alpha(n));
    const OpucSequence again = OpucSequence::from_alphas(alphas, table->mu(0).real());
    for (int n = 0; n <= 8; ++n) {
        CHECK(poly_match_residual(again.phi(n), seq.phi(n)) < 1e-12);
        CHECK(again.norm_sq(n) == doctest::Approx(seq.norm_sq(n)).epsilon(1e-8));
    }
}

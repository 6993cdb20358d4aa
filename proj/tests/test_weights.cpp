#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "opuc/weights.hpp"

using namespace opuc;

TEST_CASE("weight evaluation basics") {
    CHECK(WeightSpec::uniform().eval(1.234) == 1.0);
    // sin^2(pi/2) = 1
    CHECK(WeightSpec::exp_jacobi_circular(1.0, 0.0).eval(M_PI) == doctest::Approx(1.0));
    // positive exponent kills the zero of sin^2 at theta = 0
    CHECK(WeightSpec::modified_exp_jacobi(10.0, 5.0, 0.0).eval(0.0) == doctest::Approx(0.0));
    // periodic ExpSine endpoint value e^{2|u| sin(arg u)}
    const Complex u(0.0, 0.5);
    const double w0 = WeightSpec::exp_sine(u).eval(0.0);
    CHECK(w0 == doctest::Approx(std::exp(2.0 * 0.5 * std::sin(M_PI / 2.0))));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS(WeightSpec::exp_jacobi_circular(-0.5, 0.0));
    CHECK_THROWS(WeightSpec::generalized_jacobi(0.5, -0.6, 0.0));
    CHECK_THROWS(WeightSpec::log_arg_power(Complex(0.0), Complex(1.0)));
    CHECK_THROWS(WeightSpec::log_arg_power(Complex(1.0), Complex(1.0)));  // |r| = 1
}

TEST_CASE("printed Pearson pairs") {
    // b = 1: A = z - 1, B = i (2 z + 1)
    const PearsonPair p1 = WeightSpec::exp_jacobi_circular(1.0, 0.0).pearson();
    CHECK(poly_match_residual(p1.A, Poly{-1.0, 1.0}) < 1e-15);
    CHECK(poly_match_residual(p1.B, Poly{kI, 2.0 * kI}) < 1e-15);

    // ExpSine, u = i/2: B = u z^2 + i z + conj(u)
    const PearsonPair p4 = WeightSpec::exp_sine(Complex(0.0, 0.5)).pearson();
    CHECK(poly_match_residual(p4.A, Poly{0.0, 1.0}) < 1e-15);
    CHECK(poly_match_residual(p4.B, Poly{Complex(0.0, -0.5), kI, Complex(0.0, 0.5)}) < 1e-15);

    // GeneralizedJacobi default pair at lambda = beta = 1/2 (d = 1):
    // A = z^2 - 1, B = i (3 z^2 + 1)
    const PearsonPair p3 = WeightSpec::generalized_jacobi(0.5, 0.5, 0.0).pearson();
    CHECK(poly_match_residual(p3.A, Poly{-1.0, 0.0, 1.0}) < 1e-15);
    CHECK(poly_match_residual(p3.B, Poly{kI, 0.0, 3.0 * kI}) < 1e-15);
}

TEST_CASE("classes") {
    CHECK(WeightSpec::exp_jacobi_circular(1.0, 0.0).pearson().class_p == 1);
    CHECK(WeightSpec::exp_jacobi_circular(1.0, 0.0).pearson().class_q == 1);

    const PearsonPair p2 = WeightSpec::modified_exp_jacobi(10.0, 5.0, 0.0).pearson();
    CHECK(p2.class_p == 2);
    CHECK(p2.class_q == 3);

    const auto spec3 = WeightSpec::generalized_jacobi(0.5, 0.25, 0.0);
    const PearsonPair cubic = spec3.pearson_cubic(Complex(0.4, 0.2));
    CHECK(cubic.class_p == 3);
    CHECK(cubic.class_q == 3);
    CHECK(spec3.pearson().class_p == 2);
    CHECK(spec3.pearson().class_q == 2);
}

TEST_CASE("class embedding shifts by one") {
    const PearsonPair base = WeightSpec::exp_jacobi_circular(1.0, 0.0).pearson();
    const PearsonPair up = embedded(base);
    CHECK(up.class_p == base.class_p + 1);
    CHECK(up.class_q == base.class_q + 1);
    // Embedding the flat-weight member of the circular family gives the
    // degree-two pair the t = 0 reduction of ModifiedExpJacobi quotes:
    // A = z(z-1), B = i[(b+2) z^2 + (conj(b)-1) z].
    const Complex b(1.0, 0.5);
    const PearsonPair e = embedded(WeightSpec::exp_jacobi_circular(1.0, 0.5).pearson());
    CHECK(poly_match_residual(e.A, Poly{0.0, -1.0, 1.0}) < 1e-15);
    CHECK(poly_match_residual(e.B, Poly{0.0, kI * (std::conj(b) - 1.0), kI * (b + 2.0)}) < 1e-15);
}

TEST_CASE("Pearson differential equation holds pointwise") {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> small(0.1, 1.5);
    const std::vector<WeightSpec> specs = {
        WeightSpec::uniform(),
        WeightSpec::exp_jacobi_circular(small(rng), small(rng)),
        WeightSpec::exp_jacobi_circular(0.25, 0.5),
        WeightSpec::modified_exp_jacobi(2.0, small(rng), small(rng)),
        WeightSpec::modified_exp_jacobi(10.0, 5.0, 0.0),
        WeightSpec::generalized_jacobi(small(rng), small(rng), small(rng)),
        WeightSpec::generalized_jacobi(0.5, 0.25, 0.0),
        WeightSpec::exp_sine(Complex(0.3, 0.4)),
        WeightSpec::exp_sine(Complex(0.0, 1.0)),
        WeightSpec::log_arg_power(Complex(0.5, 0.0), Complex(0.0, 1.0)),
        WeightSpec::log_arg_power(Complex(-0.3, 0.2), Complex(0.7, -0.3)),
    };
    for (const auto& spec : specs) {
        INFO(spec.describe());
        CHECK(pearson_pointwise_residual(spec) < 1e-6);
    }
}

TEST_CASE("Pearson equation holds for the mapped |r| > 1 parameters") {
    const auto spec = WeightSpec::log_arg_power(Complex(2.0, 0.0), Complex(1.0, 1.0));
    CHECK(std::abs(spec.effective_r()) < 1.0);
    CHECK(pearson_pointwise_residual(spec) < 1e-6);
    CHECK(spec.boundary_condition_ok());
}

TEST_CASE("cubic GeneralizedJacobi pair satisfies Pearson for several r") {
    const auto spec = WeightSpec::generalized_jacobi(0.75, 0.5, 0.5);
    for (const Complex r : {Complex(0.0), Complex(0.4, 0.2), Complex(1.5, -0.3)}) {
        const PearsonPair pair = spec.pearson_cubic(r);
        // Finite-difference check at interior points, same scheme as the
        // default pair but with the cubic (A, B).
        double worst = 0.0;
        for (int k = 1; k <= 16; ++k) {
            const double th = 0.4 + k * 0.3;
            if (std::abs(th - M_PI) < 0.2 || th > 2.0 * M_PI - 0.4) continue;
            const double h = 1e-6;
            auto F = [&](double x) { return pair.A.eval(std::exp(Complex(0.0, x))) * spec.eval(x); };
            const Complex fd = (F(th + h) - F(th - h)) / (2.0 * h);
            const Complex target = pair.B.eval(std::exp(Complex(0.0, th))) * spec.eval(th);
            worst = std::max(worst, std::abs(fd - target) / std::max(1.0, std::abs(target)));
        }
        INFO("r = " << r.real() << "+" << r.imag() << "i");
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("boundary condition") {
    CHECK(WeightSpec::exp_jacobi_circular(1.0, 0.7).boundary_condition_ok());  // A(1) = 0
    CHECK(WeightSpec::modified_exp_jacobi(1.0, 0.0, 1.0).boundary_condition_ok());
    CHECK(WeightSpec::exp_sine(Complex(0.2, 0.9)).boundary_condition_ok());
    CHECK(WeightSpec::log_arg_power(Complex(0.5, 0.0), Complex(0.0, 1.0)).boundary_condition_ok());
}

TEST_CASE("json round trip") {
    const std::vector<WeightSpec> specs = {
        WeightSpec::uniform(),
        WeightSpec::exp_jacobi_circular(0.25, 0.5),
        WeightSpec::modified_exp_jacobi(10.0, 5.0, 0.0),
        WeightSpec::generalized_jacobi(0.5, 0.25, 0.0),
        WeightSpec::exp_sine(Complex(0.0, 0.5)),
        WeightSpec::log_arg_power(Complex(0.5, 0.0), Complex(0.0, 1.0)),
    };
    for (const auto& spec : specs) {
        const WeightSpec back = WeightSpec::from_json_string(spec.to_json_string());
        CHECK(back == spec);
    }
    CHECK_THROWS(WeightSpec::from_json_string("{\"family\":\"NoSuch\",\"params\":{}}"));
    CHECK_THROWS(WeightSpec::from_json_string("{\"params\":{}}"));
    // u may be given as a bare number (real value)
    const WeightSpec s =
        WeightSpec::from_json_string("{\"family\":\"ExpSine\",\"params\":{\"u\":0.5}}");
    CHECK(s.u() == Complex(0.5, 0.0));
}

#pragma once

#include <string>
#include <utility>

#include "opuc/poly.hpp"

namespace opuc {

/// The supported weight families on the unit circle, theta in [0, 2pi]:
///
///   Uniform             w = 1
///   ExpJacobiCircular   w = e^{-eta theta} [sin^2(theta/2)]^lambda
///   ModifiedExpJacobi   w = e^{t cos theta} e^{-eta theta} [sin^2(theta/2)]^lambda
///   GeneralizedJacobi   w = e^{-eta theta} [sin^2(theta/2)]^lambda [cos^2(theta/2)]^beta
///   ExpSine             w = e^{2|u| sin(theta + arg u)}
///   LogArgPower         w = e^{2 Re(u/conj(r)) arg(1 - r e^{-i theta})} |e^{i theta} - r|^{-2 Im(u/conj(r))}
///
/// Each is semiclassical: d/dtheta [A(e^{i theta}) w(theta)] = B(e^{i theta}) w(theta)
/// for a pair of polynomials (A, B) of degree at most three.
enum class Family { Uniform, ExpJacobiCircular, ModifiedExpJacobi, GeneralizedJacobi, ExpSine, LogArgPower };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// A Pearson pair together with its class (p, q), where p = deg A and
/// q = max{p - 1, deg((p - 1)A + iB)}.
struct PearsonPair {
    Poly A;
    Poly B;
    int class_p = 0;
    int class_q = 0;
};

std::pair<int, int> pearson_class(const Poly& A, const Poly& B);
PearsonPair make_pearson_pair(Poly A, Poly B);

/// A weight in class (p, q) is also in class (p + 1, q + 1) via
/// (A, B) -> (zA, z(B + iA)).
PearsonPair embedded(const PearsonPair& pair);

class WeightSpec {
  public:
    static WeightSpec uniform();
    static WeightSpec exp_jacobi_circular(double lambda, double eta);
    static WeightSpec modified_exp_jacobi(double t, double lambda, double eta);
    static WeightSpec generalized_jacobi(double lambda, double beta, double eta);
    static WeightSpec exp_sine(Complex u);
    static WeightSpec log_arg_power(Complex r, Complex u);

    Family family() const { return family_; }
    double lambda() const { return lambda_; }
    double beta() const { return beta_; }
    double eta() const { return eta_; }
    double t() const { return t_; }
    Complex u() const { return u_; }
    Complex r() const { return r_; }

    /// b = lambda + i eta (ExpJacobiCircular, ModifiedExpJacobi).
    Complex b() const { return {lambda_, eta_}; }
    /// d = lambda + beta + i eta (GeneralizedJacobi).
    Complex d() const { return {lambda_ + beta_, eta_}; }

    /// LogArgPower parameters mapped into the unit disk. A spec with
    /// |r| > 1 evaluates, up to a positive constant factor, to the family
    /// member with r' = 1/conj(r), u' = -conj(u)/r^2; the Pearson pair and
    /// the per-family identities hold at these effective parameters.
    Complex effective_r() const { return eff_r_; }
    Complex effective_u() const { return eff_u_; }

    double eval(double theta) const;

    /// The family's default Pearson pair as printed in its definition.
    PearsonPair pearson() const;

    /// The degree-three pair of GeneralizedJacobi, parameterized by a free
    /// complex constant r (r = 0 gives the simplest member).
    PearsonPair pearson_cubic(Complex r) const;

    /// Checks A(1) (w(2pi) - w(0)) ~ 0, the hypothesis of the structure
    /// relation. When A(1) itself vanishes the weight values are not
    /// evaluated (they may be singular at the endpoints).
    bool boundary_condition_ok(double tol = 1e-12) const;

    /// True when the periodic extension of w is analytic, so the plain
    /// midpoint rule converges spectrally.
    bool smooth_periodic() const;
    /// GeneralizedJacobi with non-integer beta has an algebraic singularity
    /// at theta = pi.
    bool interior_singularity() const;

    /// {"family": name, "params": {...}} with complex values as [re, im].
    std::string to_json_string() const;
    static WeightSpec from_json_string(const std::string& text);

    /// Short human-readable tag, e.g. "ExpJacobiCircular(lambda=1,eta=0)".
    std::string describe() const;

    bool operator==(const WeightSpec& other) const;

  private:
    WeightSpec() = default;

    Family family_ = Family::Uniform;
    double lambda_ = 0.0;
    double beta_ = 0.0;
    double eta_ = 0.0;
    double t_ = 0.0;
    Complex u_{0.0, 0.0};
    Complex r_{0.0, 0.0};
    Complex eff_r_{0.0, 0.0};
    Complex eff_u_{0.0, 0.0};
};

/// Pointwise Pearson check: central finite differences of A(e^{i theta}) w
/// against B(e^{i theta}) w at interior points away from the singular
/// angles. Returns the worst relative mismatch.
double pearson_pointwise_residual(const WeightSpec& spec, int npts = 32, double step = 1e-6);

}  // namespace opuc

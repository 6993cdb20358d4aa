#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "opuc/poly.hpp"
#include "opuc/weights.hpp"

namespace opuc {

struct ConvergenceError : std::runtime_error {
    ConvergenceError(double achieved_, double requested_)
        : std::runtime_error("moment quadrature did not converge to the requested tolerance"),
          achieved(achieved_),
          requested(requested_) {}
    double achieved;
    double requested;
};

/// Trigonometric moments mu_n = integral over [0, 2pi] of e^{-i n theta} w(theta) dtheta,
/// n = 0..n_max, with negative indices served by conjugation. Provides the
/// inner product <f, g> = sum_{j,k} f_j conj(g_k) mu_{k-j}, i.e.
/// <z^j, z^k> = mu_{k-j}.
class MomentTable {
  public:
    MomentTable(WeightSpec spec, int n_max, int nodes, std::vector<Complex> mu,
                std::vector<double> deltas);

    const WeightSpec& spec() const { return spec_; }
    int n_max() const { return n_max_; }
    int nodes() const { return nodes_; }

    Complex mu(int n) const;

    /// Max over n of |mu_n(nodes) - mu_n(nodes/2)|: the quadrature
    /// self-convergence flag.
    double convergence() const { return convergence_; }
    /// Per-moment version of the flag.
    double convergence(int n) const;

    /// Throws ConvergenceError when the flag exceeds tol.
    void require_convergence(double tol) const;

    /// <f, g>. Requires deg f + deg g <= n_max.
    Complex inner_product(const Poly& f, const Poly& g) const;

  private:
    WeightSpec spec_;
    int n_max_ = 0;
    int nodes_ = 0;
    std::vector<Complex> mu_;
    std::vector<double> deltas_;
    double convergence_ = 0.0;
};

/// Computes the moment table by the shifted composite trapezoid
/// (midpoint) rule. Weights whose periodic extension is analytic are
/// integrated directly at theta_j = 2pi (j + 1/2) / nodes; the others are
/// integrated in a reparameterized variable that flattens the integrand at
/// the singular angles, restoring superalgebraic convergence for the
/// algebraic endpoint singularities the exponents produce. Requires nodes
/// to be a power of two with nodes >= 4 * n_max.
MomentTable compute_moments(const WeightSpec& spec, int n_max, int nodes);

/// Process-wide cache keyed on (spec, n_max, nodes).
std::shared_ptr<const MomentTable> cached_moments(const WeightSpec& spec, int n_max, int nodes);

inline constexpr int kDefaultNodes = 16384;  // 2^14

}  // namespace opuc

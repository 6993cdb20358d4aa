#pragma once

#include <vector>

#include "opuc/moments.hpp"
#include "opuc/poly.hpp"

namespace opuc {

struct PrecisionLossError : std::runtime_error {
    PrecisionLossError(int index_, double abs_alpha_)
        : std::runtime_error("Verblunsky coefficient reached the unit circle at index " +
                             std::to_string(index_)),
          index(index_),
          abs_alpha(abs_alpha_) {}
    int index;
    double abs_alpha;
};

/// The coupled sequences (alpha_n, ||Phi_n||^2, Phi_n, Phi_n^*) of the monic
/// orthogonal polynomials up to degree N.
///
/// Construction runs the Szego recurrence
///   Phi_{n+1} = z Phi_n - conj(alpha_n) Phi_n^*
/// with alpha extracted from orthogonality, conj(alpha_n) = <z Phi_n, 1> / ||Phi_n||^2.
/// That is an O(N^2) Levinson-style sweep over the moment table; it is the
/// ground truth the closed forms and difference-equation pipelines are
/// compared against.
class OpucSequence {
  public:
    /// Requires table.n_max() >= 2N + 2 so downstream residual checks can
    /// form inner products of degree up to N + 2 against the same table.
    static OpucSequence build(const MomentTable& table, int N);

    /// Rebuilds the polynomials from a given Verblunsky sequence (norms by
    /// the (1 - |alpha|^2) telescoping from mu0). Used for perturbation
    /// experiments: the result is Szego-consistent but no longer matches
    /// any Pearson weight when the alphas were tampered with.
    static OpucSequence from_alphas(std::vector<Complex> alphas, double mu0);

    int size() const { return static_cast<int>(alphas_.size()); }

    Complex alpha(int n) const;            // 0 <= n < N; alpha(-1) = -1 by convention
    double norm_sq(int n) const;           // 0 <= n <= N
    const Poly& phi(int n) const;          // 0 <= n <= N
    const Poly& phi_star(int n) const;     // 0 <= n <= N

    /// Coefficient of z^k in Phi_n. Requires 0 <= k <= n <= N.
    Complex ell(int n, int k) const;

    /// tau_n = Phi_n(1) / Phi_n^*(1). Throws when the denominator is below
    /// 1e-14 in magnitude.
    Complex tau(int n) const;

    /// Max absolute residual of the three coefficient identities that the
    /// Szego recurrences imply for ell_{n,1}, ell_{n,n-1} and ell_{n,n-2}.
    double coefficient_identity_residual(int n) const;

    /// Largest |coefficient| across the stored polynomials: a conditioning
    /// diagnostic (growth signals double precision running out).
    double max_coeff_magnitude() const;

    /// Largest relative gap seen between the telescoped norms and the
    /// periodic direct inner-product re-anchoring during construction.
    double norm_drift() const { return norm_drift_; }

  private:
    OpucSequence() = default;

    std::vector<Complex> alphas_;   // alpha_0 .. alpha_{N-1}
    std::vector<double> norms_;     // ||Phi_n||^2, n = 0..N
    std::vector<Poly> phis_;        // Phi_0 .. Phi_N
    std::vector<Poly> stars_;       // Phi_0^* .. Phi_N^*
    double norm_drift_ = 0.0;
};

}  // namespace opuc

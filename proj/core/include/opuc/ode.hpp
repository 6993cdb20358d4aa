#pragma once

#include <optional>
#include <span>
#include <vector>

#include "opuc/opuc_sequence.hpp"
#include "opuc/report.hpp"
#include "opuc/structure.hpp"
#include "opuc/weights.hpp"

namespace opuc {

/// Coefficient polynomials of the first-order system
///   z A(z) Phi_n'(z)      =  U_n Phi_n + V_n Phi_n^*
///   -A_hat(z) (Phi_n^*)'(z) =  W_n Phi_n + Y_n Phi_n^*
/// where A_hat is the conjugate-reversal of A at degree three. The theta
/// flags implement the unit-step factors of the second-order equations
/// with the convention theta(0) = 0; they are decided by the coefficient
/// zero threshold applied to V and W after construction, never by
/// reasoning about parameters.
struct OdeSystem {
    Poly A;
    Poly A_hat;
    Poly U, V, W, Y;
    int n = 0;
    bool theta_V = false;
    bool theta_W = false;
};

OdeSystem build_system(const OpucSequence& seq, const PearsonPair& pair, int n);

/// Residuals of the two first-order equations, each normalized by the max
/// magnitude of its left-hand side over the sample points.
std::pair<double, double> first_order_residual(const OdeSystem& sys, const OpucSequence& seq,
                                               std::span<const Complex> pts);

/// The four equivalent first-order forms obtained from the Szego
/// recurrences. The alpha-weighted pair divides by alpha_{n-1} and is
/// skipped when it vanishes.
struct CorollaryFirstOrder {
    double shifted_phi = 0.0;       // z A Phi' in terms of Phi_n, Phi_{n-1}^*
    double shifted_star = 0.0;      // -z A_hat (Phi^*)' in terms of Phi_{n+1}, Phi_n^*
    double weighted_phi = 0.0;      // conj(alpha_{n-1}) z A Phi' form
    double weighted_star = 0.0;     // conj(alpha_{n-1}) A_hat (Phi^*)' form
    bool weighted_applicable = true;
};
CorollaryFirstOrder corollary_forms_residual(const OdeSystem& sys, const OpucSequence& seq,
                                             std::span<const Complex> pts);

/// Second-order equation for Phi_n in denominator-cleared form (multiplied
/// through by A_hat so no rational terms are sampled).
double second_order_residual_phi(const OdeSystem& sys, const OpucSequence& seq,
                                 std::span<const Complex> pts);

/// Reversed second-order equation for Phi_n^*, cleared by z A(z).
double second_order_residual_phistar(const OdeSystem& sys, const OpucSequence& seq,
                                     std::span<const Complex> pts);

/// Homogeneous linear second-order equations; each side applies only when
/// the corresponding theta flag is set.
struct LinearSecondOrder {
    double phi = 0.0;
    double phi_star = 0.0;
    bool phi_applicable = false;
    bool star_applicable = false;
};
LinearSecondOrder linear_second_order_residual(const OdeSystem& sys, const OpucSequence& seq,
                                               std::span<const Complex> pts);

/// Derived scalars of the per-family second-order displays: eps_n solves
/// (d+n+1) conj(alpha_n) eps_n = (conj(d)+n) conj(alpha_{n-1}) and is
/// unavailable when alpha_n vanishes; f_n and gamma_n are the
/// ModifiedExpJacobi combinations; p2/p3/p4 are the coefficient
/// polynomials of the linear equations they enter.
struct SecondOrderCoeffs {
    std::optional<Complex> eps_n;
    Complex f_n{0.0};
    Complex gamma_n{0.0};
    Poly p2, p3, p4;
};

SecondOrderCoeffs second_order_coeffs_ex2(const OpucSequence& seq, Complex b, double t, int n);
SecondOrderCoeffs second_order_coeffs_ex3(const OpucSequence& seq, Complex d, double lambda,
                                          double beta, int n);
SecondOrderCoeffs second_order_coeffs_jacobi(double lambda, double beta, int n);

/// Every specialized display of the catalog that applies to the family of
/// `spec`: the per-family first- and second-order equations, the linear
/// equations with their p-polynomials, the product factorizations of
/// Y U - V W, and coefficient-wise agreement of the displayed systems with
/// the generic builder after cancelling the common factors.
std::vector<ResidualReport> specialized_equation_residuals(const WeightSpec& spec,
                                                           const OpucSequence& seq, int n,
                                                           std::span<const Complex> pts);

}  // namespace opuc

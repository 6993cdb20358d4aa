#pragma once

#include <span>
#include <vector>

#include "opuc/opuc_sequence.hpp"
#include "opuc/report.hpp"
#include "opuc/weights.hpp"

namespace opuc {

/// Coefficients of the structure relation, n >= 3:
///   A(z) Phi_n'(z) = n a3 Phi_{n+2} + s_{n,n+1} Phi_{n+1} + s_{n,n} Phi_n
///                    + s_{n,n-1} Phi_{n-1} + (p_nn z + t_nn) Phi_n^*.
struct StructureCoeffs {
    Complex s_nm1;  // multiplies Phi_{n-1}
    Complex s_nn;   // multiplies Phi_n
    Complex s_np1;  // multiplies Phi_{n+1}
    Complex p_nn;   // multiplies z Phi_n^*
    Complex t_nn;   // multiplies Phi_n^*
    int n = 0;
};

/// The five coefficients exactly as the relation defines them in terms of
/// the Pearson coefficients, the Verblunsky coefficients and the
/// subleading ell coefficients. Requires n >= 3 and seq extending to n + 2.
StructureCoeffs structure_coeffs(const OpucSequence& seq, const PearsonPair& pair, int n);

/// Differences between the primary formulas for s_{n,n} and s_{n,n+1} and
/// their independent alternative representations. Both should vanish.
std::pair<Complex, Complex> corollary_alternative_deltas(const OpucSequence& seq,
                                                         const PearsonPair& pair, int n);

/// Max over the sample points of the structure-relation defect, normalized
/// by max |A(z) Phi_n'(z)| (floored at 1e-30).
double structure_residual(const OpucSequence& seq, const PearsonPair& pair, int n,
                          std::span<const Complex> pts);

/// count equispaced points on the unit circle rotated by `rotation`, so
/// z = +-1 (where several factors vanish) is never sampled.
std::vector<Complex> unit_circle_samples(int count = 64, double rotation = M_PI / 128);

/// Per-family scalar identities for the subleading coefficients:
/// ModifiedExpJacobi's ell_{n,n-1} expression, the GeneralizedJacobi
/// ell lemma and its companion relation, the ExpJacobiCircular reduction
/// (b+n) ell_{n,n-1} = n conj(b), and the three LogArgPower lemma items.
std::vector<ResidualReport> ell_identity_residuals(const OpucSequence& seq, const WeightSpec& spec,
                                                   int n);

/// The LogArgPower combination that the second-order equation forces to
/// vanish; returned as a normalized residual.
Complex rfrak_residual(const OpucSequence& seq, int n, Complex r, Complex u);

}  // namespace opuc

#pragma once

#include <complex>
#include <string>
#include <vector>

namespace opuc {

/// One plotted series: label plus the values for n = 0..N.
struct Figure1Series {
    std::string label;
    std::vector<double> values;
};

/// Verblunsky-coefficient simulation data.
///
/// Panel (a): alpha_n generated by the discrete Painleve II recurrence for
/// lambda in {0, 5, 10} with t = 10 (symmetric weight, real coefficients).
/// Panel (b): |alpha_n| generated by the degree-two difference-equation
/// iteration for eta in {0, 5, 10} with t = 10, lambda = 5.
/// Both start from the determinant-ratio seeds.
///
/// The forward iterations amplify any seed or arithmetic error by a factor
/// of roughly 3-4 per step, so in double precision they visibly leave the
/// true coefficients near n = 20. To reproduce the true sequences through
/// n = 30 the seeds and iterations here run in binary128 internally; the
/// double-precision pipelines remain available separately for measuring
/// that instability.
struct Figure1Data {
    std::vector<Figure1Series> panel_a;  // values are alpha_n (real)
    std::vector<Figure1Series> panel_b;  // values are |alpha_n|
};

Figure1Data compute_figure1(int N = 30, int nodes = 16384);

/// Binary128 forward iterations used by the simulation data and the CLI
/// generation methods: determinant-ratio seeds from binary128 moments of
/// e^{t cos theta} e^{-eta theta} [sin^2(theta/2)]^lambda, iterated in
/// binary128 and returned as doubles (alpha_0 .. alpha_{N-1}).
std::vector<std::complex<double>> extended_difference_alphas(double lambda, double eta, double t,
                                                             int N, int nodes = 16384);
std::vector<double> extended_painleve2_alphas(double lambda, double t, int N, int nodes = 16384);

}  // namespace opuc

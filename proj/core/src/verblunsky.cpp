#include "opuc/verblunsky.hpp"

#include <cmath>
#include <stdexcept>

namespace opuc {

namespace {

Complex det3(const Complex m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double norm1(std::initializer_list<Complex> terms) {
    double s = 1.0;
    for (const Complex& t : terms) s += std::abs(t);
    return s;
}

void check_iterate(Complex a, int n, bool& diverged) {
    if (!finite(a)) throw std::range_error("difference-equation iterate is non-finite at n = " +
                                           std::to_string(n));
    if (std::abs(a) >= 1.0) diverged = true;
}

}  // namespace

std::string alpha_method_name(AlphaMethod m) {
    switch (m) {
        case AlphaMethod::Levinson: return "levinson";
        case AlphaMethod::ClosedForm: return "closed";
        case AlphaMethod::DifferenceEq: return "diff";
        case AlphaMethod::PainleveII: return "dp2";
    }
    throw std::logic_error("alpha_method_name: bad enum");
}

Complex pochhammer(Complex x, int n) {
    Complex acc(1.0);
    for (int k = 0; k < n; ++k) acc *= x + static_cast<double>(k);
    return acc;
}

Complex closed_form_exp_jacobi(double lambda, double eta, int n) {
    if (n < 1) throw std::invalid_argument("closed_form_exp_jacobi: n >= 1");
    const Complex b{lambda, eta};
    return -pochhammer(b, n) / pochhammer(std::conj(b) + 1.0, n);
}

double closed_form_jacobi(double lambda, double beta, int n) {
    if (n < 1) throw std::invalid_argument("closed_form_jacobi: n >= 1");
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    return -(lambda + sgn * beta) / (n + lambda + beta);
}

std::vector<Complex> closed_form_alphas(const WeightSpec& spec, int N) {
    std::vector<Complex> out;
    out.reserve(static_cast<size_t>(N));
    if (spec.family() == Family::ExpJacobiCircular) {
        for (int n = 1; n <= N; ++n) out.push_back(closed_form_exp_jacobi(spec.lambda(), spec.eta(), n));
    } else if (spec.family() == Family::GeneralizedJacobi && spec.eta() == 0.0) {
        for (int n = 1; n <= N; ++n) out.push_back(Complex(closed_form_jacobi(spec.lambda(), spec.beta(), n)));
    } else if (spec.family() == Family::Uniform) {
        out.assign(static_cast<size_t>(N), Complex(0.0));
    } else {
        throw std::invalid_argument("closed-form Verblunsky coefficients unavailable for " +
                                    spec.describe());
    }
    return out;
}

HeineSeeds heine_seeds(const MomentTable& table) {
    if (table.n_max() < 3) throw std::invalid_argument("heine_seeds: need moments through mu_3");
    const Complex m0 = table.mu(0), m1 = table.mu(1), m2 = table.mu(2), m3 = table.mu(3);
    const Complex den1 = m0 * m0 - m1 * std::conj(m1);
    if (std::abs(m0) < 1e-300 || std::abs(den1) < 1e-14 * std::abs(m0 * m0))
        throw std::domain_error("heine_seeds: vanishing denominator");
    HeineSeeds s;
    s.a0 = m1 / m0;
    s.a1 = (m0 * m2 - m1 * m1) / den1;
    const Complex num[3][3] = {{m1, m2, m3}, {m0, m1, m2}, {std::conj(m1), m0, m1}};
    const Complex den[3][3] = {{m0, std::conj(m1), std::conj(m2)},
                               {m1, m0, std::conj(m1)},
                               {m2, m1, m0}};
    const Complex d2 = det3(den);
    if (std::abs(d2) < 1e-14 * std::pow(std::abs(m0), 3))
        throw std::domain_error("heine_seeds: vanishing 3x3 determinant");
    s.a2 = det3(num) / d2;
    return s;
}

int stability_index(std::span<const Complex> candidate, std::span<const Complex> reference,
                    double tol) {
    const int n = static_cast<int>(std::min(candidate.size(), reference.size()));
    for (int i = 0; i < n; ++i) {
        if (std::abs(candidate[static_cast<size_t>(i)] - reference[static_cast<size_t>(i)]) > tol)
            return i;
    }
    return n;
}

Complex general_difference_residual(const OpucSequence& seq, const PearsonPair& pair, int n) {
    if (n < 2 || n > seq.size() - 2)
        throw std::out_of_range("general_difference_residual: need 2 <= n <= N - 2");
    const Complex a0 = std::conj(pair.A.coeff(0)), a1 = std::conj(pair.A.coeff(1)),
                  a2 = std::conj(pair.A.coeff(2)), a3 = std::conj(pair.A.coeff(3));
    const Complex b0 = std::conj(pair.B.coeff(0)), b1 = std::conj(pair.B.coeff(1)),
                  b2 = std::conj(pair.B.coeff(2)), b3 = std::conj(pair.B.coeff(3));
    const Complex an = seq.alpha(n), am1 = seq.alpha(n - 1), am2 = seq.alpha(n - 2),
                  ap1 = seq.alpha(n + 1);
    const Complex lnn1 = seq.ell(n, n - 1);
    const double nn = n;

    const Complex lhs1 = ((nn - 1.0) * a0 - kI * b0) * (1.0 - std::norm(am1)) * am2;
    const Complex lhs2 = ((nn - 1.0) * a3 + kI * b3) * (1.0 - std::norm(an)) * ap1;
    const Complex rhs1 = -((nn - 1.0) * a2 + kI * b2 - (kI * b3 + (nn - 1.0) * a3) * an * std::conj(am1) -
                           2.0 * a3 * std::conj(lnn1)) *
                         an;
    const Complex rhs2 = -((nn + 1.0) * a1 - kI * b1 + (kI * b0 - (nn + 1.0) * a0) * std::conj(an) * am1 -
                           2.0 * a0 * lnn1) *
                         am1;
    return (lhs1 + lhs2 - rhs1 - rhs2) / norm1({lhs1, lhs2, rhs1, rhs2});
}

Complex ex2_difference_residual(const OpucSequence& seq, Complex b, double t, int n) {
    if (n < 2 || n > seq.size() - 2)
        throw std::out_of_range("ex2_difference_residual: need 2 <= n <= N - 2");
    const Complex an = seq.alpha(n), am1 = seq.alpha(n - 1), am2 = seq.alpha(n - 2),
                  ap1 = seq.alpha(n + 1);
    const Complex lhs = (std::conj(b) + static_cast<double>(n) + 1.0) * an - (b + static_cast<double>(n)) * am1;
    const Complex rhs = -0.5 * t *
                        ((1.0 - std::norm(an)) * ap1 - (1.0 - std::norm(am1)) * am2 +
                         (1.0 + std::conj(an) * am1) * am1 - (1.0 + an * std::conj(am1)) * an);
    return (lhs - rhs) / norm1({lhs, rhs});
}

Complex ex3_difference_residual(const OpucSequence& seq, Complex d, double lambda, double beta,
                                Complex r, int n, int sign) {
    if (n < 2 || n > seq.size() - 2)
        throw std::out_of_range("ex3_difference_residual: need 2 <= n <= N - 2");
    const Complex rc = std::conj(r);
    const Complex an = seq.alpha(n), am1 = seq.alpha(n - 1), am2 = seq.alpha(n - 2),
                  ap1 = seq.alpha(n + 1);
    const double nn = n;
    const Complex lhs1 = rc * (d + nn - 1.0) * (1.0 - std::norm(am1)) * am2;
    const Complex lhs2 = (std::conj(d) + nn + 2.0) * (1.0 - std::norm(an)) * ap1;
    const Complex rhs1 = (rc * (nn - 1.0) - 2.0 * (lambda - beta - rc) + rc * std::conj(d) +
                          (std::conj(d) + nn) * an * std::conj(am1) + 2.0 * std::conj(seq.ell(n + 1, n))) *
                         an;
    const Complex rhs2 = (nn + d - 2.0 * rc * (lambda - beta) + rc * (d + nn + 1.0) * std::conj(an) * am1 +
                          2.0 * rc * seq.ell(n, n - 1)) *
                         am1;
    const Complex rhs = rhs1 + static_cast<double>(sign) * rhs2;
    return (lhs1 + lhs2 - rhs) / norm1({lhs1, lhs2, rhs1, rhs2});
}

Complex ex3_difference_residual_r0(const OpucSequence& seq, Complex d, double lambda, double beta,
                                   int n) {
    if (n < 2 || n > seq.size() - 2)
        throw std::out_of_range("ex3_difference_residual_r0: need 2 <= n <= N - 2");
    const Complex an = seq.alpha(n), am1 = seq.alpha(n - 1), ap1 = seq.alpha(n + 1);
    const double nn = n;
    const Complex lhs1 = (std::conj(d) + nn + 2.0) * (1.0 - std::norm(an)) * ap1;
    const Complex lhs2 = -(d + nn) * am1;
    const Complex rhs = (2.0 * (beta - lambda) + (std::conj(d) + nn) * an * std::conj(am1) +
                         2.0 * std::conj(seq.ell(n + 1, n))) *
                        an;
    return (lhs1 + lhs2 - rhs) / norm1({lhs1, lhs2, rhs});
}

Complex ex5_three_term_residual(const OpucSequence& seq, Complex r, Complex u, int n) {
    if (n < 2 || n > seq.size() - 1)
        throw std::out_of_range("ex5_three_term_residual: need 2 <= n <= N - 1");
    const Complex an = seq.alpha(n), am1 = seq.alpha(n - 1), am2 = seq.alpha(n - 2);
    const double nn = n;
    const Complex iu_conj = std::conj(kI * u);
    const Complex lhs1 = ((nn + 1.0) * r + iu_conj) * an;
    const Complex lhs2 = ((nn - 1.0) * std::conj(r) + u * kI) * am2;
    const double denom = 1.0 - std::norm(am1);
    if (std::abs(denom) < 1e-12) throw std::domain_error("ex5_three_term_residual: 1 - |alpha|^2 vanishes");
    const Complex rhs = (nn * (std::norm(r) + 1.0) +
                         2.0 * std::real(r * std::conj(seq.ell(n, n - 1)))) *
                        am1 / denom;
    return (lhs1 + lhs2 - rhs) / norm1({lhs1, lhs2, rhs});
}

double modulus_identity_residual(const OpucSequence& seq, Complex b, double t, int n) {
    if (n < 2 || n > seq.size() - 1)
        throw std::out_of_range("modulus_identity_residual: need 2 <= n <= N - 1");
    const Complex an = seq.alpha(n), am1 = seq.alpha(n - 1), am2 = seq.alpha(n - 2);
    const double lhs = std::abs(b + kI * t * std::imag(an * std::conj(am1)));
    const double rhs = std::abs((b + static_cast<double>(n)) * am1 +
                                0.5 * t * ((1.0 - std::norm(am1)) * am2 + an - std::conj(an) * am1 * am1));
    return std::abs(lhs - rhs) / (1.0 + lhs + rhs);
}

double dp2_residual(std::span<const Complex> alphas, double lambda, double t, int n) {
    if (t == 0.0) throw std::invalid_argument("dp2_residual: t must be nonzero");
    if (n < 2 || n >= static_cast<int>(alphas.size()))
        throw std::out_of_range("dp2_residual: need 2 <= n < size");
    const double an = alphas[static_cast<size_t>(n)].real();
    const double am1 = alphas[static_cast<size_t>(n - 1)].real();
    const double am2 = alphas[static_cast<size_t>(n - 2)].real();
    const double denom = 1.0 - am1 * am1;
    if (std::abs(denom) < 1e-12) throw std::domain_error("dp2_residual: 1 - alpha^2 vanishes");
    const double rhs = -(2.0 / t) * (lambda + (lambda + n) * am1) / denom;
    return std::abs(an + am2 - rhs) / (1.0 + std::abs(an) + std::abs(am2) + std::abs(rhs));
}

AlphaPipeline iterate_ex2(double lambda, double eta, double t, Complex a0, Complex a1, Complex a2,
                          int N) {
    if (N < 1) throw std::invalid_argument("iterate_ex2: N >= 1");
    const Complex b{lambda, eta};
    AlphaPipeline p;
    p.method = AlphaMethod::DifferenceEq;
    p.alphas.reserve(static_cast<size_t>(N));

    if (t == 0.0) {
        // One-step degenerate relation iterated from alpha_0.
        p.alphas.push_back(a0);
        check_iterate(a0, 0, p.diverged);
        for (int n = 1; n < N; ++n) {
            const Complex prev = p.alphas.back();
            const Complex next = (b + static_cast<double>(n)) * prev / (std::conj(b) + static_cast<double>(n) + 1.0);
            check_iterate(next, n, p.diverged);
            p.alphas.push_back(next);
        }
        p.stability_index = N;
        return p;
    }

    p.alphas = {a0};
    if (N > 1) p.alphas.push_back(a1);
    if (N > 2) p.alphas.push_back(a2);
    for (const Complex& a : p.alphas) check_iterate(a, 0, p.diverged);
    for (int n = 2; n + 1 < N; ++n) {
        const Complex an = p.alphas[static_cast<size_t>(n)];
        const Complex am1 = p.alphas[static_cast<size_t>(n - 1)];
        const Complex am2 = p.alphas[static_cast<size_t>(n - 2)];
        const double denom = 1.0 - std::norm(an);
        if (std::abs(denom) < 1e-12)
            throw std::domain_error("iterate_ex2: 1 - |alpha_n|^2 vanished at n = " + std::to_string(n));
        const Complex next = (-(2.0 / t) * ((std::conj(b) + static_cast<double>(n) + 1.0) * an - (b + static_cast<double>(n)) * am1) +
                              (1.0 - std::norm(am1)) * am2 - (1.0 + std::conj(an) * am1) * am1 +
                              (1.0 + an * std::conj(am1)) * an) /
                             denom;
        check_iterate(next, n + 1, p.diverged);
        p.alphas.push_back(next);
    }
    p.stability_index = N;
    return p;
}

AlphaPipeline iterate_painleve2(double lambda, double t, double a0, double a1, int N) {
    if (t == 0.0) throw std::invalid_argument("iterate_painleve2: t must be nonzero");
    if (lambda <= -0.5) throw std::invalid_argument("iterate_painleve2: lambda must exceed -1/2");
    if (N < 1) throw std::invalid_argument("iterate_painleve2: N >= 1");
    AlphaPipeline p;
    p.method = AlphaMethod::PainleveII;
    p.alphas = {Complex(a0)};
    if (N > 1) p.alphas.push_back(Complex(a1));
    for (int n = 2; n < N; ++n) {
        const double am1 = p.alphas[static_cast<size_t>(n - 1)].real();
        const double am2 = p.alphas[static_cast<size_t>(n - 2)].real();
        const double denom = 1.0 - am1 * am1;
        if (std::abs(denom) < 1e-12)
            throw std::domain_error("iterate_painleve2: 1 - alpha^2 vanished at n = " + std::to_string(n));
        const double next = -(2.0 / t) * (lambda + (lambda + n) * am1) / denom - am2;
        check_iterate(Complex(next), n, p.diverged);
        p.alphas.push_back(Complex(next));
    }
    p.stability_index = N;
    return p;
}

}  // namespace opuc

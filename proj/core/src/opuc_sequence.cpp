#include "opuc/opuc_sequence.hpp"

#include <cmath>

namespace opuc {

namespace {
constexpr int kNormAnchorStride = 5;
}

OpucSequence OpucSequence::build(const MomentTable& table, int N) {
    if (N < 0) throw std::invalid_argument("OpucSequence::build: negative N");
    if (table.n_max() < 2 * N + 2)
        throw std::invalid_argument("OpucSequence::build: moment table must cover degree 2N + 2");

    OpucSequence seq;
    seq.phis_.push_back(Poly::one());
    seq.stars_.push_back(Poly::one());
    seq.norms_.push_back(table.mu(0).real());

    for (int n = 0; n < N; ++n) {
        const Poly& phi = seq.phis_.back();
        const Complex alpha_conj = table.inner_product(phi.shifted(1), Poly::one()) / seq.norms_.back();
        const Complex alpha = std::conj(alpha_conj);
        if (std::abs(alpha) >= 1.0 - 1e-10) throw PrecisionLossError(n, std::abs(alpha));

        Poly next = phi.shifted(1) - alpha_conj * seq.stars_.back();
        double norm_next = (1.0 - std::norm(alpha)) * seq.norms_.back();
        if ((n + 1) % kNormAnchorStride == 0) {
            const double direct = table.inner_product(next, next).real();
            seq.norm_drift_ = std::max(seq.norm_drift_, std::abs(direct - norm_next) / norm_next);
            norm_next = direct;
        }

        seq.alphas_.push_back(alpha);
        seq.stars_.push_back(next.conj_reverse(n + 1));
        seq.phis_.push_back(std::move(next));
        seq.norms_.push_back(norm_next);
    }
    return seq;
}

OpucSequence OpucSequence::from_alphas(std::vector<Complex> alphas, double mu0) {
    if (mu0 <= 0.0) throw std::invalid_argument("OpucSequence::from_alphas: mu0 must be positive");
    OpucSequence seq;
    seq.phis_.push_back(Poly::one());
    seq.stars_.push_back(Poly::one());
    seq.norms_.push_back(mu0);
    for (size_t n = 0; n < alphas.size(); ++n) {
        const Complex alpha = alphas[n];
        Poly next = seq.phis_.back().shifted(1) - std::conj(alpha) * seq.stars_.back();
        seq.norms_.push_back((1.0 - std::norm(alpha)) * seq.norms_.back());
        seq.stars_.push_back(next.conj_reverse(static_cast<int>(n) + 1));
        seq.phis_.push_back(std::move(next));
    }
    seq.alphas_ = std::move(alphas);
    return seq;
}

Complex OpucSequence::alpha(int n) const {
    if (n == -1) return Complex(-1.0);
    if (n < 0 || n >= size()) throw std::out_of_range("OpucSequence::alpha: index out of range");
    return alphas_[static_cast<size_t>(n)];
}

double OpucSequence::norm_sq(int n) const {
    if (n < 0 || n > size()) throw std::out_of_range("OpucSequence::norm_sq: index out of range");
    return norms_[static_cast<size_t>(n)];
}

const Poly& OpucSequence::phi(int n) const {
    if (n < 0 || n > size()) throw std::out_of_range("OpucSequence::phi: index out of range");
    return phis_[static_cast<size_t>(n)];
}

const Poly& OpucSequence::phi_star(int n) const {
    if (n < 0 || n > size()) throw std::out_of_range("OpucSequence::phi_star: index out of range");
    return stars_[static_cast<size_t>(n)];
}

Complex OpucSequence::ell(int n, int k) const {
    if (n < 0 || n > size() || k < 0 || k > n)
        throw std::out_of_range("OpucSequence::ell: need 0 <= k <= n <= N");
    return phi(n).coeff(k);
}

Complex OpucSequence::tau(int n) const {
    const Complex num = phi(n).eval(Complex(1.0));
    const Complex den = phi_star(n).eval(Complex(1.0));
    if (std::abs(den) < 1e-14) throw std::domain_error("OpucSequence::tau: Phi_n^*(1) vanishes");
    return num / den;
}

double OpucSequence::coefficient_identity_residual(int n) const {
    if (n < 2 || n > size()) throw std::out_of_range("coefficient_identity_residual: need 2 <= n <= N");
    auto l = [&](int m, int k) -> Complex {
        if (k < 0) return Complex(0.0);
        return phi(m).coeff(k);
    };
    const Complex a1 = alpha(n - 1), a2 = alpha(n - 2);
    const Complex r1 = l(n, 1) + (std::conj(a1) * std::conj(l(n - 1, n - 2)) + std::conj(a2));
    const Complex r1b =
        l(n, 1) + ((1.0 - std::norm(a1)) * std::conj(a2) + std::conj(a1) * std::conj(l(n, n - 1)));
    const Complex r2 = l(n, n - 1) - l(n - 1, n - 2) - std::conj(a1) * a2;
    const Complex r3 = l(n, n - 2) - l(n - 1, n - 3) + std::conj(a1) * std::conj(l(n - 1, 1));
    return std::max(std::max(std::abs(r1), std::abs(r1b)), std::max(std::abs(r2), std::abs(r3)));
}

double OpucSequence::max_coeff_magnitude() const {
    double m = 0.0;
    for (const Poly& p : phis_) m = std::max(m, p.max_abs_coeff());
    return m;
}

}  // namespace opuc

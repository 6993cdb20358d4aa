#include "opuc/figure1.hpp"

#include <quadmath.h>

#include <stdexcept>
#include <string>

namespace opuc {

namespace {

// Minimal complex arithmetic over __float128. Only what the seed
// determinants and the two recurrences need.
struct QC {
    __float128 re = 0, im = 0;

    friend QC operator+(QC a, QC b) { return {a.re + b.re, a.im + b.im}; }
    friend QC operator-(QC a, QC b) { return {a.re - b.re, a.im - b.im}; }
    friend QC operator*(QC a, QC b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend QC operator*(__float128 s, QC a) { return {s * a.re, s * a.im}; }
    friend QC operator/(QC a, QC b) {
        const __float128 d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
};

QC conj(QC a) { return {a.re, -a.im}; }
__float128 norm2(QC a) { return a.re * a.re + a.im * a.im; }
__float128 qabs(QC a) { return sqrtq(norm2(a)); }

QC det3(const QC m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// mu_0..mu_3 of e^{t cos theta} e^{-eta theta} [sin^2(theta/2)]^lambda by
// the shifted midpoint rule. The figure parameters keep lambda a
// nonnegative integer, so the periodic extension is at least C^{2 lambda - 1}
// and the rule converges far beyond binary128 needs at these node counts.
void seed_moments(double t, double lambda, double eta, int nodes, QC mu[4]) {
    const __float128 two_pi = 2.0Q * M_PIq;
    for (int k = 0; k < 4; ++k) mu[k] = QC{};
    const __float128 h = two_pi / nodes;
    for (int j = 0; j < nodes; ++j) {
        const __float128 th = h * (j + 0.5Q);
        const __float128 s = sinq(0.5Q * th);
        const __float128 w = expq(t * cosq(th) - eta * th) * powq(s * s, lambda);
        const QC step{cosq(th), -sinq(th)};
        QC run{w * h, 0};
        for (int k = 0; k < 4; ++k) {
            mu[k] = mu[k] + run;
            run = run * step;
        }
    }
}

void heine_seeds_q(const QC mu[4], QC& a0, QC& a1, QC& a2) {
    a0 = mu[1] / mu[0];
    a1 = (mu[0] * mu[2] - mu[1] * mu[1]) / (mu[0] * mu[0] - mu[1] * conj(mu[1]));
    const QC num[3][3] = {{mu[1], mu[2], mu[3]}, {mu[0], mu[1], mu[2]}, {conj(mu[1]), mu[0], mu[1]}};
    const QC den[3][3] = {{mu[0], conj(mu[1]), conj(mu[2])},
                          {mu[1], mu[0], conj(mu[1])},
                          {mu[2], mu[1], mu[0]}};
    a2 = det3(num) / det3(den);
}

std::vector<double> painleve2_q(double lambda, double t, __float128 a0, __float128 a1, int N) {
    std::vector<__float128> a = {a0, a1};
    for (int n = 2; n < N; ++n) {
        const __float128 am1 = a[n - 1], am2 = a[n - 2];
        const __float128 next =
            -(2.0Q / t) * (lambda + (lambda + n) * am1) / (1.0Q - am1 * am1) - am2;
        a.push_back(next);
    }
    std::vector<double> out;
    for (__float128 v : a) out.push_back(static_cast<double>(v));
    return out;
}

std::vector<QC> difference_eq_q(double lambda, double eta, double t, QC a0, QC a1, QC a2,
                                int N) {
    const QC b{lambda, eta};
    std::vector<QC> a = {a0, a1, a2};
    for (int n = 2; n + 1 < N; ++n) {
        const QC an = a[n], am1 = a[n - 1], am2 = a[n - 2];
        const QC one{1.0Q, 0};
        const QC lhs = (conj(b) + QC{static_cast<__float128>(n + 1), 0}) * an -
                       (b + QC{static_cast<__float128>(n), 0}) * am1;
        const QC next = ((-2.0Q / t) * lhs + (1.0Q - norm2(am1)) * am2 -
                         (one + conj(an) * am1) * am1 + (one + an * conj(am1)) * an) /
                        QC{1.0Q - norm2(an), 0};
        a.push_back(next);
    }
    return a;
}

}  // namespace

Figure1Data compute_figure1(int N, int nodes) {
    if (N < 2) throw std::invalid_argument("compute_figure1: N >= 2");
    Figure1Data data;
    const double t = 10.0;

    for (double lambda : {0.0, 5.0, 10.0}) {
        QC mu[4], a0, a1, a2;
        seed_moments(t, lambda, 0.0, nodes, mu);
        heine_seeds_q(mu, a0, a1, a2);
        data.panel_a.push_back({"lambda=" + std::to_string(static_cast<int>(lambda)),
                                painleve2_q(lambda, t, a0.re, a1.re, N + 1)});
    }
    for (double eta : {0.0, 5.0, 10.0}) {
        QC mu[4], a0, a1, a2;
        seed_moments(t, 5.0, eta, nodes, mu);
        heine_seeds_q(mu, a0, a1, a2);
        std::vector<double> abs_vals;
        for (const QC& v : difference_eq_q(5.0, eta, t, a0, a1, a2, N + 1))
            abs_vals.push_back(static_cast<double>(qabs(v)));
        data.panel_b.push_back({"eta=" + std::to_string(static_cast<int>(eta)), std::move(abs_vals)});
    }
    return data;
}

std::vector<std::complex<double>> extended_difference_alphas(double lambda, double eta, double t,
                                                             int N, int nodes) {
    if (N < 3) throw std::invalid_argument("extended_difference_alphas: N >= 3");
    QC mu[4], a0, a1, a2;
    seed_moments(t, lambda, eta, nodes, mu);
    heine_seeds_q(mu, a0, a1, a2);
    std::vector<std::complex<double>> out;
    if (t == 0.0) {
        // One-step degenerate relation from alpha_0.
        QC a = a0;
        const QC b{lambda, eta};
        out.emplace_back(static_cast<double>(a.re), static_cast<double>(a.im));
        for (int n = 1; n < N; ++n) {
            a = (b + QC{static_cast<__float128>(n), 0}) * a /
                (conj(b) + QC{static_cast<__float128>(n + 1), 0});
            out.emplace_back(static_cast<double>(a.re), static_cast<double>(a.im));
        }
        return out;
    }
    for (const QC& v : difference_eq_q(lambda, eta, t, a0, a1, a2, N))
        out.emplace_back(static_cast<double>(v.re), static_cast<double>(v.im));
    return out;
}

std::vector<double> extended_painleve2_alphas(double lambda, double t, int N, int nodes) {
    if (N < 2) throw std::invalid_argument("extended_painleve2_alphas: N >= 2");
    if (t == 0.0) throw std::invalid_argument("extended_painleve2_alphas: t must be nonzero");
    QC mu[4], a0, a1, a2;
    seed_moments(t, lambda, 0.0, nodes, mu);
    heine_seeds_q(mu, a0, a1, a2);
    return painleve2_q(lambda, t, a0.re, a1.re, N);
}

}  // namespace opuc

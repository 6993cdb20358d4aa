#include "opuc/moments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

namespace opuc {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int thread_budget() {
    if (const char* env = std::getenv("OPUC_LAB_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

struct QuadNode {
    double theta;
    double weight;
};

// Regularized incomplete beta map of order p on [0, 1]: y(x) has p - 1
// vanishing derivatives at both ends, so the midpoint rule applied in x
// converges superalgebraically even when the integrand has an integrable
// algebraic singularity at a panel end.
constexpr int kGradeOrder = 10;

double beta_pp() {
    // B(p, p) = (p-1)!^2 / (2p-1)!, exact in double for p = 10.
    double num = 1.0, den = 1.0;
    for (int k = 1; k <= kGradeOrder - 1; ++k) num *= k;
    num *= num;
    for (int k = 1; k <= 2 * kGradeOrder - 1; ++k) den *= k;
    return num / den;
}

double grade_map(double x) {
    // Binomial-tail form of the regularized incomplete beta with integer
    // parameters: I_p(x) = sum_{j=p}^{2p-1} C(2p-1, j) x^j (1-x)^{2p-1-j}.
    // Every term is positive, so the evaluation is cancellation-free over
    // the whole interval (the naive power series loses ~7 digits near 1).
    constexpr int m = 2 * kGradeOrder - 1;
    const double omx = 1.0 - x;
    double xp[m + 1], op[m + 1];
    xp[0] = op[0] = 1.0;
    for (int j = 1; j <= m; ++j) {
        xp[j] = xp[j - 1] * x;
        op[j] = op[j - 1] * omx;
    }
    double binom = 1.0;  // C(m, j) starting at j = p
    for (int j = 1; j <= kGradeOrder; ++j) binom = binom * (m - j + 1) / j;
    double acc = 0.0;
    for (int j = kGradeOrder; j <= m; ++j) {
        acc += binom * xp[j] * op[m - j];
        binom = binom * (m - j) / (j + 1);
    }
    return acc;
}

double grade_map_deriv(double x) {
    static const double bpp = beta_pp();
    return std::pow(x * (1.0 - x), kGradeOrder - 1) / bpp;
}

std::vector<QuadNode> build_nodes(const WeightSpec& spec, int nodes) {
    std::vector<QuadNode> out;
    out.reserve(static_cast<size_t>(nodes));
    const double two_pi = 2.0 * M_PI;
    if (spec.smooth_periodic()) {
        const double h = two_pi / nodes;
        for (int j = 0; j < nodes; ++j) out.push_back({h * (j + 0.5), h});
        return out;
    }
    std::vector<std::pair<double, double>> panels;
    if (spec.interior_singularity()) {
        panels = {{0.0, M_PI}, {M_PI, two_pi}};
    } else {
        panels = {{0.0, two_pi}};
    }
    const int per_panel = nodes / static_cast<int>(panels.size());
    for (auto [a, b] : panels) {
        const double len = b - a;
        const double h = 1.0 / per_panel;
        for (int j = 0; j < per_panel; ++j) {
            const double x = h * (j + 0.5);
            out.push_back({a + len * grade_map(x), len * grade_map_deriv(x) * h});
        }
    }
    return out;
}

// Accumulates sum_j w(theta_j) qw_j e^{-i n theta_j} for n = 0..n_max.
// The node range is split into a fixed number of chunks reduced in order,
// so the result does not depend on how many threads actually run.
std::vector<Complex> accumulate(const WeightSpec& spec, const std::vector<QuadNode>& nodes,
                                int n_max) {
    constexpr int kChunks = 16;
    const size_t total = nodes.size();
    std::vector<std::vector<Complex>> partial(kChunks,
                                              std::vector<Complex>(static_cast<size_t>(n_max) + 1));
    auto run_chunk = [&](int c) {
        const size_t lo = total * c / kChunks;
        const size_t hi = total * (c + 1) / kChunks;
        auto& acc = partial[static_cast<size_t>(c)];
        for (size_t j = lo; j < hi; ++j) {
            const double th = nodes[j].theta;
            const double wq = spec.eval(th) * nodes[j].weight;
            const Complex step = std::exp(Complex(0.0, -th));
            Complex run(wq, 0.0);
            for (int n = 0; n <= n_max; ++n) {
                acc[static_cast<size_t>(n)] += run;
                run *= step;
            }
        }
    };

    const int workers = std::min(thread_budget(), kChunks);
    if (workers <= 1) {
        for (int c = 0; c < kChunks; ++c) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        std::mutex mtx;
        int next = 0;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    int c;
                    {
                        std::lock_guard<std::mutex> lock(mtx);
                        if (next >= kChunks) return;
                        c = next++;
                    }
                    run_chunk(c);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    std::vector<Complex> mu(static_cast<size_t>(n_max) + 1);
    for (int c = 0; c < kChunks; ++c) {
        for (size_t n = 0; n < mu.size(); ++n) mu[n] += partial[static_cast<size_t>(c)][n];
    }
    return mu;
}

}  // namespace

MomentTable::MomentTable(WeightSpec spec, int n_max, int nodes, std::vector<Complex> mu,
                         std::vector<double> deltas)
    : spec_(std::move(spec)), n_max_(n_max), nodes_(nodes), mu_(std::move(mu)),
      deltas_(std::move(deltas)) {
    for (double d : deltas_) convergence_ = std::max(convergence_, d);
    if (mu_.empty() || mu_[0].real() <= 0.0 || std::abs(mu_[0].imag()) > 1e-9 * mu_[0].real())
        throw std::runtime_error("MomentTable: mu_0 must be real and positive");
}

Complex MomentTable::mu(int n) const {
    const int a = std::abs(n);
    if (a > n_max_) throw std::out_of_range("MomentTable::mu: index beyond n_max");
    return n >= 0 ? mu_[static_cast<size_t>(a)] : std::conj(mu_[static_cast<size_t>(a)]);
}

double MomentTable::convergence(int n) const {
    if (n < 0 || n > n_max_) throw std::out_of_range("MomentTable::convergence: bad index");
    return deltas_[static_cast<size_t>(n)];
}

void MomentTable::require_convergence(double tol) const {
    if (convergence_ > tol) throw ConvergenceError(convergence_, tol);
}

Complex MomentTable::inner_product(const Poly& f, const Poly& g) const {
    const int df = static_cast<int>(f.coeffs().size()) - 1;
    const int dg = static_cast<int>(g.coeffs().size()) - 1;
    if (df + dg > n_max_) throw std::out_of_range("inner_product: moment table too short");
    Complex acc(0.0);
    for (int j = 0; j <= df; ++j) {
        const Complex fj = f.coeff(j);
        if (fj == Complex(0.0)) continue;
        for (int k = 0; k <= dg; ++k) {
            const Complex gk = g.coeff(k);
            if (gk == Complex(0.0)) continue;
            acc += fj * std::conj(gk) * mu(k - j);
        }
    }
    return acc;
}

MomentTable compute_moments(const WeightSpec& spec, int n_max, int nodes) {
    if (n_max < 0) throw std::invalid_argument("compute_moments: negative n_max");
    if (!power_of_two(nodes)) throw std::invalid_argument("compute_moments: nodes must be a power of two");
    if (nodes < 4 * std::max(n_max, 1)) throw std::invalid_argument("compute_moments: need nodes >= 4 n_max");

    const std::vector<Complex> fine = accumulate(spec, build_nodes(spec, nodes), n_max);
    const std::vector<Complex> coarse = accumulate(spec, build_nodes(spec, nodes / 2), n_max);
    std::vector<double> deltas(static_cast<size_t>(n_max) + 1);
    for (size_t n = 0; n < deltas.size(); ++n) deltas[n] = std::abs(fine[n] - coarse[n]);
    return MomentTable(spec, n_max, nodes, fine, deltas);
}

std::shared_ptr<const MomentTable> cached_moments(const WeightSpec& spec, int n_max, int nodes) {
    static std::mutex mtx;
    static std::map<std::string, std::shared_ptr<const MomentTable>> cache;
    const std::string key =
        spec.to_json_string() + "#" + std::to_string(n_max) + "#" + std::to_string(nodes);
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto table = std::make_shared<const MomentTable>(compute_moments(spec, n_max, nodes));
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, std::move(table)).first->second;
}

}  // namespace opuc

#include "opuc/weights.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace opuc {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

bool nonneg_integer(double x) {
    return x >= 0.0 && x == std::floor(x);
}

double sin_sq_half(double theta) {
    const double s = std::sin(0.5 * theta);
    return s * s;
}

double cos_sq_half(double theta) {
    const double c = std::cos(0.5 * theta);
    return c * c;
}

std::string fmt_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", x);
    return buf;
}

std::string fmt_complex(Complex z) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%g%+gi", z.real(), z.imag());
    return buf;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::Uniform: return "Uniform";
        case Family::ExpJacobiCircular: return "ExpJacobiCircular";
        case Family::ModifiedExpJacobi: return "ModifiedExpJacobi";
        case Family::GeneralizedJacobi: return "GeneralizedJacobi";
        case Family::ExpSine: return "ExpSine";
        case Family::LogArgPower: return "LogArgPower";
    }
    throw std::logic_error("family_name: bad enum");
}

Family family_from_name(const std::string& name) {
    for (Family f : {Family::Uniform, Family::ExpJacobiCircular, Family::ModifiedExpJacobi,
                     Family::GeneralizedJacobi, Family::ExpSine, Family::LogArgPower}) {
        if (family_name(f) == name) return f;
    }
    throw std::invalid_argument("unknown weight family: " + name);
}

std::pair<int, int> pearson_class(const Poly& A, const Poly& B) {
    const int p = A.degree();
    const double scale = std::max(A.max_abs_coeff(), B.max_abs_coeff());
    const Poly combo = Complex(static_cast<double>(p - 1)) * A + kI * B;
    const int q = std::max(p - 1, combo.degree(scale));
    return {p, q};
}

PearsonPair make_pearson_pair(Poly A, Poly B) {
    auto [p, q] = pearson_class(A, B);
    return PearsonPair{std::move(A), std::move(B), p, q};
}

PearsonPair embedded(const PearsonPair& pair) {
    Poly A = pair.A.shifted(1);
    Poly B = (pair.B + kI * pair.A).shifted(1);
    return make_pearson_pair(std::move(A), std::move(B));
}

WeightSpec WeightSpec::uniform() { return WeightSpec{}; }

WeightSpec WeightSpec::exp_jacobi_circular(double lambda, double eta) {
    require(std::isfinite(lambda) && std::isfinite(eta), "ExpJacobiCircular: non-finite parameter");
    require(lambda > -0.5, "ExpJacobiCircular: lambda must exceed -1/2");
    WeightSpec s;
    s.family_ = Family::ExpJacobiCircular;
    s.lambda_ = lambda;
    s.eta_ = eta;
    return s;
}

WeightSpec WeightSpec::modified_exp_jacobi(double t, double lambda, double eta) {
    require(std::isfinite(t) && std::isfinite(lambda) && std::isfinite(eta),
            "ModifiedExpJacobi: non-finite parameter");
    require(lambda > -0.5, "ModifiedExpJacobi: lambda must exceed -1/2");
    WeightSpec s;
    s.family_ = Family::ModifiedExpJacobi;
    s.t_ = t;
    s.lambda_ = lambda;
    s.eta_ = eta;
    return s;
}

WeightSpec WeightSpec::generalized_jacobi(double lambda, double beta, double eta) {
    require(std::isfinite(lambda) && std::isfinite(beta) && std::isfinite(eta),
            "GeneralizedJacobi: non-finite parameter");
    require(lambda > -0.5, "GeneralizedJacobi: lambda must exceed -1/2");
    require(beta > -0.5, "GeneralizedJacobi: beta must exceed -1/2");
    WeightSpec s;
    s.family_ = Family::GeneralizedJacobi;
    s.lambda_ = lambda;
    s.beta_ = beta;
    s.eta_ = eta;
    return s;
}

WeightSpec WeightSpec::exp_sine(Complex u) {
    require(finite(u), "ExpSine: non-finite parameter");
    WeightSpec s;
    s.family_ = Family::ExpSine;
    s.u_ = u;
    return s;
}

WeightSpec WeightSpec::log_arg_power(Complex r, Complex u) {
    require(finite(r) && finite(u), "LogArgPower: non-finite parameter");
    require(std::abs(r) > 0.0, "LogArgPower: r must be nonzero");
    require(std::abs(std::abs(r) - 1.0) > 1e-12, "LogArgPower: |r| must differ from 1");
    WeightSpec s;
    s.family_ = Family::LogArgPower;
    s.r_ = r;
    s.u_ = u;
    if (std::abs(r) < 1.0) {
        s.eff_r_ = r;
        s.eff_u_ = u;
    } else {
        s.eff_r_ = 1.0 / std::conj(r);
        s.eff_u_ = -std::conj(u) / (r * r);
    }
    return s;
}

double WeightSpec::eval(double theta) const {
    switch (family_) {
        case Family::Uniform:
            return 1.0;
        case Family::ExpJacobiCircular:
            return std::exp(-eta_ * theta) * std::pow(sin_sq_half(theta), lambda_);
        case Family::ModifiedExpJacobi:
            return std::exp(t_ * std::cos(theta) - eta_ * theta) * std::pow(sin_sq_half(theta), lambda_);
        case Family::GeneralizedJacobi:
            return std::exp(-eta_ * theta) * std::pow(sin_sq_half(theta), lambda_) *
                   std::pow(cos_sq_half(theta), beta_);
        case Family::ExpSine:
            return std::exp(2.0 * std::abs(u_) * std::sin(theta + std::arg(u_)));
        case Family::LogArgPower: {
            // w = exp(2 Im[conj(m) log(1 - r e^{-i theta})]), m = u / conj(r),
            // with the principal log (continuous and periodic since |r| < 1
            // after the effective-parameter mapping). For original |r| > 1
            // the constant factor below restores the winding-corrected
            // branch of the printed weight.
            const Complex m = eff_u_ / std::conj(eff_r_);
            const Complex zeta = 1.0 - eff_r_ * std::exp(Complex(0.0, -theta));
            double g = 2.0 * std::imag(std::conj(m) * std::log(zeta));
            if (std::abs(r_) > 1.0) {
                const Complex m0 = u_ / std::conj(r_);
                g += 2.0 * (m0.real() * std::arg(-r_) - m0.imag() * std::log(std::abs(r_)));
            }
            return std::exp(g);
        }
    }
    throw std::logic_error("WeightSpec::eval: bad family");
}

PearsonPair WeightSpec::pearson() const {
    switch (family_) {
        case Family::Uniform:
            return make_pearson_pair(Poly{-1.0, 1.0}, Poly{0.0, kI});
        case Family::ExpJacobiCircular: {
            const Complex bb = b();
            return make_pearson_pair(Poly{-1.0, 1.0}, Poly{kI * std::conj(bb), kI * (bb + 1.0)});
        }
        case Family::ModifiedExpJacobi: {
            const Complex bb = b();
            const double h = 0.5 * t_;
            return make_pearson_pair(Poly{0.0, -1.0, 1.0},
                                     Poly{kI * h, kI * (std::conj(bb) - 1.0 - h), kI * (bb + 2.0 - h), kI * h});
        }
        case Family::GeneralizedJacobi: {
            const Complex dd = d();
            return make_pearson_pair(
                Poly{-1.0, 0.0, 1.0},
                Poly{kI * std::conj(dd), kI * 2.0 * (lambda_ - beta_), kI * (dd + 2.0)});
        }
        case Family::ExpSine:
            return make_pearson_pair(Poly{0.0, 1.0}, Poly{std::conj(u_), kI, u_});
        case Family::LogArgPower: {
            const Complex rr = eff_r_;
            const Complex uu = eff_u_;
            const Complex rc = std::conj(rr);
            const double r2 = std::norm(rr);
            Poly A{rr / rc, -(rr + 1.0 / rc), 1.0};
            Poly B{-std::conj(uu) / rc, (2.0 * std::real(uu * rr) - kI * (1.0 + r2)) / rc,
                   (2.0 * kI * rc - uu) / rc};
            return make_pearson_pair(std::move(A), std::move(B));
        }
    }
    throw std::logic_error("WeightSpec::pearson: bad family");
}

PearsonPair WeightSpec::pearson_cubic(Complex r) const {
    require(family_ == Family::GeneralizedJacobi, "pearson_cubic: GeneralizedJacobi only");
    const Complex dd = d();
    Poly A{r, -1.0, -r, 1.0};
    Poly B{-kI * r * std::conj(dd), kI * (std::conj(dd) - 1.0 - 2.0 * r * (lambda_ - beta_)),
           kI * (2.0 * (lambda_ - beta_ - r) - r * dd), kI * (dd + 3.0)};
    return make_pearson_pair(std::move(A), std::move(B));
}

bool WeightSpec::boundary_condition_ok(double tol) const {
    const PearsonPair pair = pearson();
    const Complex a1 = pair.A.eval(Complex(1.0));
    if (std::abs(a1) <= tol * std::max(1.0, pair.A.max_abs_coeff())) return true;
    const double w0 = eval(0.0);
    const double w1 = eval(2.0 * M_PI);
    const double scale = std::max(1.0, std::abs(a1) * (std::abs(w0) + std::abs(w1)));
    return std::abs(a1) * std::abs(w1 - w0) <= tol * scale;
}

bool WeightSpec::smooth_periodic() const {
    switch (family_) {
        case Family::Uniform:
        case Family::ExpSine:
        case Family::LogArgPower:
            return true;
        case Family::ExpJacobiCircular:
        case Family::ModifiedExpJacobi:
            return eta_ == 0.0 && nonneg_integer(lambda_);
        case Family::GeneralizedJacobi:
            return eta_ == 0.0 && nonneg_integer(lambda_) && nonneg_integer(beta_);
    }
    return false;
}

bool WeightSpec::interior_singularity() const {
    return family_ == Family::GeneralizedJacobi && !nonneg_integer(beta_);
}

bool WeightSpec::operator==(const WeightSpec& other) const {
    return family_ == other.family_ && lambda_ == other.lambda_ && beta_ == other.beta_ &&
           eta_ == other.eta_ && t_ == other.t_ && u_ == other.u_ && r_ == other.r_;
}

std::string WeightSpec::describe() const {
    switch (family_) {
        case Family::Uniform:
            return "Uniform";
        case Family::ExpJacobiCircular:
            return "ExpJacobiCircular(lambda=" + fmt_real(lambda_) + ",eta=" + fmt_real(eta_) + ")";
        case Family::ModifiedExpJacobi:
            return "ModifiedExpJacobi(t=" + fmt_real(t_) + ",lambda=" + fmt_real(lambda_) +
                   ",eta=" + fmt_real(eta_) + ")";
        case Family::GeneralizedJacobi:
            return "GeneralizedJacobi(lambda=" + fmt_real(lambda_) + ",beta=" + fmt_real(beta_) +
                   ",eta=" + fmt_real(eta_) + ")";
        case Family::ExpSine:
            return "ExpSine(u=" + fmt_complex(u_) + ")";
        case Family::LogArgPower:
            return "LogArgPower(r=" + fmt_complex(r_) + ",u=" + fmt_complex(u_) + ")";
    }
    throw std::logic_error("describe: bad family");
}

namespace {

nlohmann::json complex_to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

Complex complex_from_json(const nlohmann::json& j, const char* name) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return Complex(j[0].get<double>(), j[1].get<double>());
    }
    throw std::invalid_argument(std::string("parameter '") + name + "' must be a number or [re, im]");
}

double real_from_json(const nlohmann::json& params, const char* name, bool required,
                      double fallback = 0.0) {
    if (!params.contains(name)) {
        if (required) throw std::invalid_argument(std::string("missing parameter '") + name + "'");
        return fallback;
    }
    if (!params[name].is_number())
        throw std::invalid_argument(std::string("parameter '") + name + "' must be a number");
    return params[name].get<double>();
}

}  // namespace

std::string WeightSpec::to_json_string() const {
    nlohmann::json params = nlohmann::json::object();
    switch (family_) {
        case Family::Uniform:
            break;
        case Family::ExpJacobiCircular:
            params["lambda"] = lambda_;
            params["eta"] = eta_;
            break;
        case Family::ModifiedExpJacobi:
            params["t"] = t_;
            params["lambda"] = lambda_;
            params["eta"] = eta_;
            break;
        case Family::GeneralizedJacobi:
            params["lambda"] = lambda_;
            params["beta"] = beta_;
            params["eta"] = eta_;
            break;
        case Family::ExpSine:
            params["u"] = complex_to_json(u_);
            break;
        case Family::LogArgPower:
            params["r"] = complex_to_json(r_);
            params["u"] = complex_to_json(u_);
            break;
    }
    nlohmann::json j;
    j["family"] = family_name(family_);
    j["params"] = params;
    return j.dump();
}

WeightSpec WeightSpec::from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("family") || !j["family"].is_string())
        throw std::invalid_argument("weight config needs a \"family\" string");
    const Family f = family_from_name(j["family"].get<std::string>());
    const nlohmann::json params = j.value("params", nlohmann::json::object());
    switch (f) {
        case Family::Uniform:
            return uniform();
        case Family::ExpJacobiCircular:
            return exp_jacobi_circular(real_from_json(params, "lambda", true),
                                       real_from_json(params, "eta", false));
        case Family::ModifiedExpJacobi:
            return modified_exp_jacobi(real_from_json(params, "t", true),
                                       real_from_json(params, "lambda", true),
                                       real_from_json(params, "eta", false));
        case Family::GeneralizedJacobi:
            return generalized_jacobi(real_from_json(params, "lambda", true),
                                      real_from_json(params, "beta", true),
                                      real_from_json(params, "eta", false));
        case Family::ExpSine:
            if (!params.contains("u")) throw std::invalid_argument("missing parameter 'u'");
            return exp_sine(complex_from_json(params["u"], "u"));
        case Family::LogArgPower:
            if (!params.contains("r") || !params.contains("u"))
                throw std::invalid_argument("LogArgPower needs parameters 'r' and 'u'");
            return log_arg_power(complex_from_json(params["r"], "r"),
                                 complex_from_json(params["u"], "u"));
    }
    throw std::logic_error("from_json_string: bad family");
}

double pearson_pointwise_residual(const WeightSpec& spec, int npts, double step) {
    const PearsonPair pair = spec.pearson();
    // Interior points away from theta in {0, pi, 2pi}, where the exponents
    // can make w or its derivative singular.
    std::vector<double> thetas;
    const double lo = 0.2, hi = 2.0 * M_PI - 0.2;
    int k = 0;
    while (static_cast<int>(thetas.size()) < npts) {
        const double th = lo + (hi - lo) * (k + 0.5) / (npts + 6);
        ++k;
        if (std::abs(th - M_PI) < 0.2) continue;
        thetas.push_back(th);
        if (k > npts + 6) break;
    }

    auto F = [&](double th) { return pair.A.eval(std::exp(Complex(0.0, th))) * spec.eval(th); };
    double worst = 0.0;
    double scale = 0.0;
    std::vector<Complex> diffs;
    diffs.reserve(thetas.size());
    for (double th : thetas) {
        const Complex d_fd = (F(th + step) - F(th - step)) / (2.0 * step);
        const Complex target = pair.B.eval(std::exp(Complex(0.0, th))) * spec.eval(th);
        diffs.push_back(d_fd - target);
        scale = std::max(scale, std::abs(target));
    }
    scale = std::max(scale, 1e-30);
    for (const Complex& d : diffs) worst = std::max(worst, std::abs(d) / scale);
    return worst;
}

}  // namespace opuc

#include "opuc/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace opuc {

Poly::Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::monomial(int k, Complex c) {
    if (k < 0) throw std::invalid_argument("Poly::monomial: negative power");
    std::vector<Complex> v(static_cast<size_t>(k) + 1, Complex(0.0));
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
}

Complex Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Complex(0.0);
    return coeffs_[static_cast<size_t>(k)];
}

double Poly::max_abs_coeff() const {
    double m = 0.0;
    for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

int Poly::degree(double scale) const {
    if (scale <= 0.0) scale = max_abs_coeff();
    const double tol = kZeroTol * scale;
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
        if (std::abs(coeffs_[static_cast<size_t>(k)]) > tol) return k;
    }
    return -1;
}

bool Poly::negligible(double scale) const {
    return max_abs_coeff() <= kZeroTol * scale;
}

Complex Poly::eval(Complex z) const {
    Complex acc(0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    if (!finite(acc)) throw std::range_error("Poly::eval: non-finite result");
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly{};
    std::vector<Complex> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return Poly(std::move(d));
}

Poly Poly::conj_reverse(int n) const {
    const int deg = static_cast<int>(coeffs_.size()) - 1;
    if (n < deg) throw std::invalid_argument("Poly::conj_reverse: declared degree below actual degree");
    std::vector<Complex> r(static_cast<size_t>(n) + 1, Complex(0.0));
    for (int k = 0; k <= n; ++k) r[static_cast<size_t>(k)] = std::conj(coeff(n - k));
    return Poly(std::move(r));
}

Poly Poly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("Poly::shifted: negative shift");
    if (coeffs_.empty()) return Poly{};
    std::vector<Complex> r(coeffs_.size() + static_cast<size_t>(k), Complex(0.0));
    std::copy(coeffs_.begin(), coeffs_.end(), r.begin() + k);
    return Poly(std::move(r));
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (Complex& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Complex(0.0));
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Complex(0.0));
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(Complex s) {
    for (Complex& c : coeffs_) c *= s;
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.coeffs_.empty() || rhs.coeffs_.empty()) return Poly{};
    std::vector<Complex> r(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Complex(0.0));
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) r[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Poly(std::move(r));
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    const int dden = den.degree();
    if (dden < 0) throw std::invalid_argument("divmod: zero divisor");
    const double scale = std::max(num.max_abs_coeff(), den.max_abs_coeff());
    int dnum = num.degree(scale);
    if (dnum < dden) return {Poly{}, num};

    std::vector<Complex> rem(num.coeffs());
    rem.resize(static_cast<size_t>(dnum) + 1);
    std::vector<Complex> quot(static_cast<size_t>(dnum - dden) + 1, Complex(0.0));
    const Complex lead = den.coeff(dden);
    for (int k = dnum - dden; k >= 0; --k) {
        const Complex q = rem[static_cast<size_t>(k + dden)] / lead;
        quot[static_cast<size_t>(k)] = q;
        for (int j = 0; j <= dden; ++j) rem[static_cast<size_t>(k + j)] -= q * den.coeff(j);
    }
    rem.resize(static_cast<size_t>(dden));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly divide_exact(const Poly& num, const Poly& den, double tol) {
    auto [q, r] = divmod(num, den);
    const double bound = tol * std::max(num.max_abs_coeff(), 1e-30);
    if (r.max_abs_coeff() > bound) throw DivisionError(r.max_abs_coeff());
    return q;
}

double poly_match_residual(const Poly& a, const Poly& b) {
    const double scale = std::max({1.0, a.max_abs_coeff(), b.max_abs_coeff()});
    return (a - b).max_abs_coeff() / scale;
}

double max_abs_at(const Poly& p, std::span<const Complex> pts) {
    double m = 0.0;
    for (Complex z : pts) m = std::max(m, std::abs(p.eval(z)));
    return m;
}

}  // namespace opuc

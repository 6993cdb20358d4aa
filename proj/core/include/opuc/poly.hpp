#pragma once

#include <complex>
#include <stdexcept>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace opuc {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

inline bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Dense univariate polynomial with complex coefficients in ascending
/// powers: coeff(k) multiplies z^k.
///
/// Everything in this library is carried by low-degree instances of this
/// type: the monic orthogonal polynomials and their reversed companions,
/// the Pearson pair (A, B), and the coefficient polynomials of the
/// structure relation and the differential equations. Degrees never exceed
/// n + 2, so dense storage and naive convolution are appropriate.
class Poly {
  public:
    /// Relative threshold below which a coefficient counts as zero.
    static constexpr double kZeroTol = 1e-12;

    Poly() = default;
    explicit Poly(std::vector<Complex> coeffs);
    Poly(std::initializer_list<Complex> coeffs);

    static Poly zero() { return Poly{}; }
    static Poly one() { return Poly{Complex(1.0)}; }
    /// c * z^k
    static Poly monomial(int k, Complex c = Complex(1.0));

    const std::vector<Complex>& coeffs() const { return coeffs_; }
    /// Coefficient of z^k; zero outside the stored range.
    Complex coeff(int k) const;

    /// Highest k with |coeff(k)| above kZeroTol * scale. The default scale
    /// is the polynomial's own largest coefficient, which suits degree
    /// queries on freshly constructed values; pass the scale of the inputs
    /// when the polynomial may be a near-cancellation. Returns -1 for the
    /// zero polynomial.
    int degree(double scale = 0.0) const;

    double max_abs_coeff() const;

    /// True when every coefficient is below kZeroTol * scale.
    bool negligible(double scale = 1.0) const;

    /// Horner evaluation. Throws std::range_error on a non-finite result.
    Complex eval(Complex z) const;

    Poly derivative() const;

    /// Reversed polynomial at declared degree n: coefficient k of the
    /// result is the conjugate of coeff(n - k). Requires n >= degree().
    Poly conj_reverse(int n) const;

    /// Multiply by z^k.
    Poly shifted(int k) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(Complex s);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(Poly lhs, Complex s) { return lhs *= s; }
    friend Poly operator*(Complex s, Poly rhs) { return rhs *= s; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);

  private:
    void trim();  // drop exactly-zero leading coefficients

    std::vector<Complex> coeffs_;
};

/// Quotient and remainder of polynomial long division.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

struct DivisionError : std::runtime_error {
    explicit DivisionError(double rem)
        : std::runtime_error("divide_exact: remainder above tolerance"), remainder_norm(rem) {}
    double remainder_norm;
};

/// Exact division: returns q with num = q * den up to a remainder bounded
/// by tol * max|num coefficients|. Throws DivisionError when the remainder
/// exceeds that bound, which downstream checks treat as "the claimed
/// divisibility fails".
Poly divide_exact(const Poly& num, const Poly& den, double tol = 1e-10);

/// Coefficient-wise mismatch of two polynomials, relative to their common
/// scale (floored at 1).
double poly_match_residual(const Poly& a, const Poly& b);

/// max |p(z)| over the sample points.
double max_abs_at(const Poly& p, std::span<const Complex> pts);

}  // namespace opuc

#ifndef PADYN_POLY_HPP
#define PADYN_POLY_HPP

#include <vector>

#include "padyn/arith.hpp"

namespace padyn {

/// A polynomial with exact rational coefficients in the monomial basis,
/// coefficient k multiplying x^k. Trailing zeros are trimmed, so the zero
/// polynomial has no coefficients and degree -1.
class RationalPoly {
  public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs);

    static RationalPoly constant(const Rational &c);
    static RationalPoly identity();

    const std::vector<Rational> &coeffs() const { return coeffs_; }
    /// Coefficient of x^k; zero past the degree.
    Rational coeff(std::size_t k) const;
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    Rational operator()(const Rational &x) const;

    RationalPoly &operator+=(const RationalPoly &rhs);
    RationalPoly &operator-=(const RationalPoly &rhs);
    RationalPoly &operator*=(const RationalPoly &rhs);
    RationalPoly &operator*=(const Rational &c);
    RationalPoly &operator/=(const Rational &c);

    friend RationalPoly operator+(RationalPoly a, const RationalPoly &b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly &b) { return a -= b; }
    friend RationalPoly operator*(RationalPoly a, const RationalPoly &b) { return a *= b; }
    friend RationalPoly operator*(RationalPoly a, const Rational &c) { return a *= c; }
    friend RationalPoly operator/(RationalPoly a, const Rational &c) { return a /= c; }
    friend RationalPoly operator-(RationalPoly a) { return a *= Rational(-1); }

    friend bool operator==(const RationalPoly &, const RationalPoly &) = default;

  private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Exact Horner evaluation at an integer.
Rational poly_eval_exact(const RationalPoly &f, const Integer &x);

/// Coefficients c_0..c_deg of f(a + z) as a polynomial in z, i.e.
/// c_j = f^{(j)}(a) / j!.
std::vector<Rational> taylor_shift(const RationalPoly &f, const Integer &a);

RationalPoly derivative(const RationalPoly &f);

/// binom(x, n) = x(x-1)...(x-n+1)/n!, fully expanded.
RationalPoly binom_poly(unsigned n);

RationalPoly pow(const RationalPoly &f, unsigned e);

/// outer(inner(x)).
RationalPoly compose(const RationalPoly &outer, const RationalPoly &inner);

/// Evaluates a fixed polynomial on Z_p with modular integer arithmetic.
///
/// Precision contract: for x known mod p^N the value f(x) is returned mod
/// p^{N-d}, where d = max(0, -min_{j>=1} vp(c_j)) is the precision loss.
/// f(x + p^N t) - f(x) is divisible by p^{N-d} for every integral t, so
/// exactly those digits are determined by the input.
class PadicEvaluator {
  public:
    PadicEvaluator(const RationalPoly &f, const Prime &p);

    const Prime &prime() const { return prime_; }
    unsigned precision_loss() const { return loss_; }

    /// f(x) at precision x.precision() - precision_loss().
    /// Throws InsufficientPrecision when no digit survives and NotIntegral
    /// when the value is not p-integral.
    PadicInt operator()(const PadicInt &x) const;

    /// f(x) mod p^precision for an exactly known integer x.
    Integer residue_at(const Integer &x, unsigned precision) const;

  private:
    Prime prime_;
    std::vector<Integer> scaled_;  // common-denominator multiple of f
    unsigned denom_exponent_ = 0;  // p-part of the common denominator
    Integer denom_unit_ = 1;       // prime-to-p part of the common denominator
    unsigned loss_ = 0;
};

PadicInt poly_eval_padic(const RationalPoly &f, const PadicInt &x);

} // namespace padyn

#endif

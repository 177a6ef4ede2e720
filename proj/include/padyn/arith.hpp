#ifndef PADYN_ARITH_HPP
#define PADYN_ARITH_HPP

// Exact arithmetic substrate: big integers and rationals (GMP), p-adic
// valuations, finite-precision p-adic integers and cosets of p^m Z_p.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace padyn {

using Integer = mpz_class;
using Rational = mpq_class;

/// A small rational prime. Construction rejects composites.
class Prime {
  public:
    explicit Prime(unsigned long value);

    unsigned long value() const { return value_; }
    operator unsigned long() const { return value_; }

  private:
    unsigned long value_;
};

bool is_prime(unsigned long n);

/// p^e as a big integer.
Integer power(const Prime &p, unsigned long e);

/// p^e as a machine integer; throws StateLimitExceeded on overflow.
std::uint64_t power_u64(const Prime &p, unsigned e);

/// The additive p-adic valuation: an integer, or +infinity for zero.
class Valuation {
  public:
    constexpr Valuation() = default;
    constexpr explicit Valuation(long value) : value_(value), infinite_(false) {}

    static constexpr Valuation infinity() { return Valuation{}; }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }
    /// Only meaningful when finite.
    constexpr long value() const { return value_; }

    friend constexpr bool operator==(const Valuation &a, const Valuation &b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(const Valuation &a, const Valuation &b) {
        if (a.infinite_ || b.infinite_)
            return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
        return a.value_ <=> b.value_;
    }
    friend constexpr Valuation operator+(const Valuation &a, const Valuation &b) {
        if (a.infinite_ || b.infinite_)
            return infinity();
        return Valuation(a.value_ + b.value_);
    }

  private:
    long value_ = 0;
    bool infinite_ = true;
};

std::ostream &operator<<(std::ostream &os, const Valuation &v);

Valuation vp(const Integer &x, const Prime &p);
Valuation vp(const Rational &x, const Prime &p);

/// |x|_p = p^{-vp(x)} as an exact rational; 0 for x = 0.
Rational norm(const Rational &x, const Prime &p);

/// "num/den" with the denominator always present.
std::string to_string(const Rational &x);

/// Inverse of to_string; also accepts a bare integer. Throws ParseError.
Rational parse_rational(const std::string &text);

/// An element of Z_p known modulo p^precision (absolute precision):
/// the set of all x in Z_p with x = residue (mod p^precision).
class PadicInt {
  public:
    PadicInt(const Prime &p, unsigned precision, const Integer &value);

    const Prime &prime() const { return prime_; }
    unsigned precision() const { return precision_; }
    /// Always in [0, p^precision).
    const Integer &residue() const { return residue_; }

    /// The same element known to fewer digits.
    PadicInt truncated(unsigned precision) const;

    friend bool operator==(const PadicInt &a, const PadicInt &b) {
        return a.prime_.value() == b.prime_.value() && a.precision_ == b.precision_ &&
               a.residue_ == b.residue_;
    }

  private:
    Prime prime_;
    unsigned precision_;
    Integer residue_;
};

/// The residue of a p-integral rational modulo p^precision.
/// Throws NotIntegral when vp(x) < 0.
PadicInt reduce(const Rational &x, const Prime &p, unsigned precision);

/// The ball residue + p^depth Z_p. Depth 0 is Z_p itself.
struct CosetIndex {
    unsigned depth = 0;
    std::uint64_t residue = 0;

    friend bool operator==(const CosetIndex &, const CosetIndex &) = default;
    friend auto operator<=>(const CosetIndex &, const CosetIndex &) = default;
};

/// Haar measure p^{-depth} of a coset.
Rational coset_measure(const Prime &p, unsigned depth);

} // namespace padyn

#endif

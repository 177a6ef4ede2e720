#ifndef PADYN_CRITERIA_HPP
#define PADYN_CRITERIA_HPP

// Named sufficient conditions and worked families: isometric Bernoulli
// equivalence, simultaneous per-prime Mahler conditions, and the
// constant-derivative binomial maps binom(x, n) with n = a p^ell.

#include <optional>
#include <vector>

#include "padyn/markov.hpp"
#include "padyn/scaling.hpp"

namespace padyn {

/// Checks both characterizations of "isometrically Bernoulli for radius
/// p^{-ell}" and insists they agree:
///  - metric: |f(x) - f(y)| = p^ell |x - y| for all residue pairs mod
///    p^depth with 0 < |x - y| <= p^{-ell};
///  - matrix: f is locally scaling at depth ell and every entry of its
///    transition matrix is equal.
/// Throws InternalInconsistency if they disagree.
bool isometric_bernoulli_equivalence_check(const RationalPoly &f, const Prime &p, unsigned ell, unsigned depth);

struct ZhatVerdict {
    unsigned long prime = 0;
    bool unit_at_prime = false;            // |a_p|_p = 1
    std::optional<std::size_t> failing_k;  // first k > p with |a_k|_p >= p^{-floor(log_p k)}
    bool passes = false;
};

/// For every prime: a_p is a p-adic unit and vp(a_k) > floor(log_p k) for
/// every listed k > p. Coefficients past the list count as zero.
std::vector<ZhatVerdict> zhat_bernoulli_check(const std::vector<Integer> &coeffs, const std::vector<Prime> &primes);

/// a_k = ((k-1)!)^k for 1 <= k <= max_k, a_0 = 0.
std::vector<Integer> factorial_power_coefficients(unsigned max_k);

/// a_q = prod_{q' < q prime} q'^{1 + floor(log_{q'} q)} at primes q <= max_k,
/// zero elsewhere.
std::vector<Integer> prime_product_coefficients(unsigned max_k);

struct HarmonicCheckResult {
    unsigned long n = 0;
    unsigned long prime = 0;
    unsigned long a = 0;  // n / p^ell
    unsigned ell = 0;     // vp(n)
    bool passes = false;
    std::optional<unsigned long> failing_u;
};

/// |d/dx binom(x, n)| is constant on Z_p iff n = a p^ell with 1 <= a < p
/// and 1/u + ... + 1/(u+a-1) is nonzero mod p for u = 1, ..., p - a.
HarmonicCheckResult constant_derivative_check(unsigned long n, const Prime &p);

struct ValuationRange {
    Valuation min;
    Valuation max;
    bool constant() const { return min == max; }
};

/// min and max of vp(f'(x)) over residues x mod p^depth, f = binom(x, n).
ValuationRange constant_derivative_oracle(unsigned long n, const Prime &p, unsigned depth);

/// binom(x, n) mod p read off the factor block: with u p^ell, ...,
/// (u+a-1) p^ell the multiples of p^ell among x-n+1, ..., x, the value is
/// prod (u+i) / a! mod p. Needs n = a p^ell, 1 <= a < p and x >= n.
unsigned long binomial_residue_by_blocks(unsigned long n, const Prime &p, const Integer &x);

struct AlmostBernoulliReport {
    Prime prime;
    unsigned ell = 0;
    unsigned long n = 0;  // (p - 2) p^ell
    ScalingProfile profile;
    TransitionMatrix matrix;
    std::vector<Rational> column_sums;
    bool measure_preserving = false;
    /// f(i) mod p as -1, 0 or 1, per state.
    std::vector<int> image_class;
    /// The unique stationary distribution (normalized to mass 1).
    RowVector stationary;
    Decomposition decomposition;
    std::vector<ComponentClass> classes;
};

/// binom(x, (p-2) p^ell) analyzed at depth ell + 1. For p = 3 this is the
/// Bernoulli map binom(x, 3^ell) and the report says so (measure-preserving).
AlmostBernoulliReport almost_bernoulli_report(const Prime &p, unsigned ell);

} // namespace padyn

#endif

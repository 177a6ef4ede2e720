#ifndef PADYN_MAHLER_HPP
#define PADYN_MAHLER_HPP

// Mahler expansion f(x) = sum_k a_k binom(x, k) on Z_p and the criteria that
// read dynamics off the coefficients: sup norm, Lipschitz constant, the
// isometric-Bernoulli sufficient condition, and realization of transition
// matrices by polynomials.

#include <optional>
#include <vector>

#include "padyn/poly.hpp"
#include "padyn/scaling.hpp"

namespace padyn {

struct MahlerSeries {
    Prime prime;
    std::vector<Rational> coeffs;  // a_0 ... a_K
};

/// a_k = sum_{j<=k} (-1)^{k-j} binom(k, j) f(j), by forward differences.
MahlerSeries to_mahler(const RationalPoly &f, const Prime &p);

RationalPoly from_mahler(const MahlerSeries &s);
RationalPoly from_mahler(const std::vector<Rational> &coeffs);

/// kappa_k = p^{floor(log_p k)} for k >= 1.
Integer kappa(unsigned long k, const Prime &p);

/// max_k |a_k|; the map sends Z_p into Z_p iff this is at most 1.
Rational sup_norm(const MahlerSeries &s);

/// max_{k>=1} kappa_k |a_k|: the least r with |f(x) - f(y)| <= r |x - y|.
Rational lipschitz_constant(const MahlerSeries &s);

struct BernoulliVerdict {
    bool applies = false;
    unsigned ell = 0;                  // radius p^{-ell}, when applies
    Rational max_weight = 0;           // M = max_k kappa_k |a_k| (k = 0 weighted by 1)
    std::optional<std::size_t> argmax; // k_M when the maximum is attained once
};

/// Sufficient condition for being isometrically Bernoulli: the weight
/// kappa_k |a_k| is maximized at a unique k_M = p^ell with ell >= 1 and
/// |a_{k_M}| = 1. A negative verdict is inconclusive. Throws NotSelfMap
/// when sup_norm > 1.
BernoulliVerdict bernoulli_criterion(const MahlerSeries &s);

struct RealizeOptions {
    std::size_t max_degree = 512;
};

/// A polynomial whose transition matrix at the matrix's depth is exactly
/// `target`. Mahler truncations of the locally affine map
/// x -> p^{-c_i}(x - i) + t_i on each coset i, with the truncation degree
/// doubled until the a-posteriori check passes. Throws NotRealizable when
/// a row is not of the form p^{-c} on a residue class mod p^{m-c}, and
/// RealizationDepthExceeded past options.max_degree.
RationalPoly realize_matrix(const TransitionMatrix &target, const RealizeOptions &options = {});

/// True iff |binom(x,k) - binom(y,k)| = kappa_k |x - y| for k = p^ell and
/// every pair of residues mod p^depth with 0 < |x - y| <= p^{-ell}.
bool qk_exact_scaling_check(unsigned ell, const Prime &p, unsigned depth);

} // namespace padyn

#endif

#ifndef PADYN_SCALING_HPP
#define PADYN_SCALING_HPP

// Locally-scaling structure of a polynomial self-map of Z_p and its
// associated transition matrix on the cosets Z_p / p^m Z_p.

#include <cstdint>
#include <optional>
#include <vector>

#include "padyn/markov.hpp"
#include "padyn/poly.hpp"

namespace padyn {

/// f scales every coset i of depth m by exactly C(i) = p^{c_i}:
/// |f(x) - f(y)| = p^{c_i} |x - y| whenever x, y lie in coset i.
struct ScalingProfile {
    Prime prime;
    unsigned depth = 0;
    /// c_i indexed by coset residue, 0 <= c_i <= depth.
    std::vector<unsigned> scale_exponents;
    /// f(i) mod p^depth.
    std::vector<std::uint64_t> image_centers;

    std::size_t states() const { return scale_exponents.size(); }
    unsigned max_scale_exponent() const;
};

/// Associated transition matrix with its coset geometry: state i is the
/// coset i + p^depth Z_p.
struct TransitionMatrix {
    Prime prime;
    unsigned depth = 0;
    StochasticMatrix matrix;

    friend bool operator==(const TransitionMatrix &a, const TransitionMatrix &b) {
        return a.prime.value() == b.prime.value() && a.depth == b.depth && a.matrix == b.matrix;
    }
};

struct ScalingOptions {
    unsigned max_depth = 8;
    /// Largest coset space (p^depth) the search may materialize.
    std::uint64_t max_states = std::uint64_t{1} << 20;
};

/// Outcome of the Taylor test on one coset a + p^m Z_p. With
/// c_j = taylor_shift(f, a)[j] and v1 = vp(c_1), the coset is decided when
/// v1 is finite and vp(c_j) + (j-1) m > v1 for all j >= 2; then f scales
/// the coset by exactly p^{-v1}.
struct CosetTest {
    enum class Outcome { Scales, Contracts, Undecided };
    Outcome outcome = Outcome::Undecided;
    Valuation v1;
};

CosetTest test_coset(const RationalPoly &f, const Prime &p, unsigned depth, const Integer &representative);

/// Throws NotSelfMap unless f(Z_p) is contained in Z_p. For a polynomial
/// of degree d it suffices that f(0), ..., f(d) are p-integral: the Mahler
/// coefficients are integer combinations of those values.
void check_self_map(const RationalPoly &f, const Prime &p);

/// The profile at exactly this depth, or nullopt when some coset is
/// undecided there. Throws ContractionDetected if a coset is decided with
/// a scale factor below 1.
std::optional<ScalingProfile> profile_at_depth(const RationalPoly &f, const Prime &p, unsigned depth);

/// Smallest depth m <= max_depth at which every coset passes the Taylor
/// test. Throws NotSelfMap, ContractionDetected, NotLocallyScaling (no
/// depth works) or StateLimitExceeded.
ScalingProfile find_scaling_radius(const RationalPoly &f, const Prime &p, const ScalingOptions &options = {});

/// Row i carries p^{-c_i} on the p^{c_i} states j = f(i) mod p^{m - c_i}.
TransitionMatrix transition_matrix(const RationalPoly &f, const ScalingProfile &profile);

/// Every column sums to exactly 1.
bool is_measure_preserving(const StochasticMatrix &a);
bool is_measure_preserving(const TransitionMatrix &a);

/// Enumeration oracle: A(i,j) is the fraction of residues x mod p^enum_depth
/// in coset i whose image lies in coset j. Exact once enum_depth >= m + max c_i.
TransitionMatrix brute_force_matrix(const RationalPoly &f, const Prime &p, unsigned depth, unsigned enum_depth);

} // namespace padyn

#endif

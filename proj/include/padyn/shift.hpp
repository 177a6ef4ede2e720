#ifndef PADYN_SHIFT_HPP
#define PADYN_SHIFT_HPP

// The symbolic side: itineraries of points under a locally scaling map and
// the balls that cylinder sets pull back to.

#include <cstdint>
#include <optional>
#include <vector>

#include "padyn/scaling.hpp"

namespace padyn {

/// Cosets mod p^m visited by x, f(x), f(f(x)), ...
using Itinerary = std::vector<std::uint64_t>;

/// The ball residue + p^depth Z_p.
struct BallDescription {
    unsigned depth = 0;
    Integer residue;

    Rational measure(const Prime &p) const { return coset_measure(p, depth); }
    bool contains(const BallDescription &inner, const Prime &p) const;

    friend bool operator==(const BallDescription &, const BallDescription &) = default;
};

/// The first steps + 1 symbols of x's itinerary at depth m. Throws
/// InsufficientPrecision once an iterate is known to fewer than m digits.
Itinerary itinerary(const RationalPoly &f, const PadicInt &x, unsigned steps, unsigned m);

/// Pullback of the cylinder [word] by exhaustive search at depth
/// m + sum_{t < len-1} c_{word[t]}. nullopt when the word is inadmissible.
std::optional<BallDescription> cylinder_preimage(const RationalPoly &f, const ScalingProfile &profile,
                                                 const Itinerary &word);

/// Every word of length 1..max_len: the pullback has measure
/// mu_{A,v}([word]) with v uniform, and is empty exactly when that is 0.
/// Throws NotLocallyScaling if f fails the Taylor test at depth m.
bool verify_cylinder_measures(const RationalPoly &f, const Prime &p, unsigned m, unsigned max_len);

struct WordFrequency {
    Itinerary word;
    std::uint64_t count = 0;
    Rational empirical;
    Rational exact;
    Rational deviation() const { return abs(empirical - exact); }
};

/// Empirical frequencies of length-word_len itineraries of uniformly random
/// points, next to the exact cylinder measures, for every word (lexicographic).
///
/// Points are residues mod p^P with P = max(m + word_len (max c_i + 1),
/// m + (word_len - 1) d), d the evaluator's precision loss. Each base-p
/// digit is drawn from std::mt19937_64 seeded with seed, rejecting outputs
/// >= floor(2^64 / p) p and reducing the rest mod p; digits are drawn least
/// significant first.
std::vector<WordFrequency> sample_itinerary_frequencies(const RationalPoly &f, const Prime &p, unsigned m,
                                                        unsigned word_len, std::uint64_t samples,
                                                        std::uint64_t seed);

} // namespace padyn

#endif

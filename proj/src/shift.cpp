#include "padyn/shift.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>

#include "padyn/errors.hpp"

namespace padyn {

namespace {

ScalingProfile require_profile(const RationalPoly &f, const Prime &p, unsigned m) {
    auto profile = profile_at_depth(f, p, m);
    if (!profile)
        throw NotLocallyScaling("map fails the Taylor test at depth " + std::to_string(m));
    return *profile;
}

/// Iterates at a precision that leaves m digits after steps evaluations.
Itinerary word_of(const PadicEvaluator &eval, PadicInt x, unsigned steps, unsigned m) {
    const Integer modulus = power(eval.prime(), m);
    Itinerary word;
    for (unsigned t = 0;; ++t) {
        if (x.precision() < m)
            throw InsufficientPrecision("iterate " + std::to_string(t) + " is known to " +
                                        std::to_string(x.precision()) + " digits, need " + std::to_string(m));
        Integer r = x.residue() % modulus;
        word.push_back(r.get_ui());
        if (t == steps)
            return word;
        x = eval(x);
    }
}

std::vector<Itinerary> all_words(std::uint64_t states, unsigned len) {
    std::vector<Itinerary> out;
    Itinerary w(len, 0);
    while (true) {
        out.push_back(w);
        unsigned k = len;
        while (k > 0 && ++w[k - 1] == states)
            w[--k] = 0;
        if (k == 0)
            return out;
    }
}

std::vector<std::size_t> as_states(const Itinerary &w) { return {w.begin(), w.end()}; }

} // namespace

bool BallDescription::contains(const BallDescription &inner, const Prime &p) const {
    if (inner.depth < depth)
        return false;
    Integer diff = inner.residue - residue;
    return mpz_divisible_p(diff.get_mpz_t(), power(p, depth).get_mpz_t()) != 0;
}

Itinerary itinerary(const RationalPoly &f, const PadicInt &x, unsigned steps, unsigned m) {
    return word_of(PadicEvaluator(f, x.prime()), x, steps, m);
}

std::optional<BallDescription> cylinder_preimage(const RationalPoly &f, const ScalingProfile &profile,
                                                 const Itinerary &word) {
    if (word.empty())
        throw InputError("cylinder_preimage needs a nonempty word");
    const Prime &p = profile.prime;
    const unsigned m = profile.depth;
    for (auto d : word)
        if (d >= profile.states())
            throw InputError("symbol " + std::to_string(d) + " is not a coset mod p^" + std::to_string(m));

    unsigned depth = m;
    for (std::size_t t = 0; t + 1 < word.size(); ++t)
        depth += profile.scale_exponents[word[t]];

    PadicEvaluator eval(f, p);
    const unsigned steps = static_cast<unsigned>(word.size() - 1);
    const unsigned precision = std::max(depth, m + steps * eval.precision_loss());
    const std::uint64_t count = power_u64(p, depth - m);
    const Integer stride = power(p, m);

    std::optional<BallDescription> found;
    for (std::uint64_t k = 0; k < count; ++k) {
        Integer r = Integer(static_cast<unsigned long>(word[0])) + stride * static_cast<unsigned long>(k);
        if (word_of(eval, PadicInt(p, precision, r), steps, m) != word)
            continue;
        if (found)
            throw InternalInconsistency("cylinder pulls back to more than one ball at depth " +
                                        std::to_string(depth));
        found = BallDescription{depth, r};
    }
    return found;
}

bool verify_cylinder_measures(const RationalPoly &f, const Prime &p, unsigned m, unsigned max_len) {
    const ScalingProfile profile = require_profile(f, p, m);
    const StochasticMatrix a = transition_matrix(f, profile).matrix;
    const RowVector uniform(a.size(), coset_measure(p, m));
    for (unsigned len = 1; len <= max_len; ++len)
        for (const auto &w : all_words(a.size(), len)) {
            const auto states = as_states(w);
            Rational expected = cylinder_measure(a, uniform, states);
            auto ball = cylinder_preimage(f, profile, w);
            Rational got = ball ? ball->measure(p) : Rational(0);
            if (got != expected)
                return false;
        }
    return true;
}

std::vector<WordFrequency> sample_itinerary_frequencies(const RationalPoly &f, const Prime &p, unsigned m,
                                                        unsigned word_len, std::uint64_t samples,
                                                        std::uint64_t seed) {
    if (samples == 0)
        throw InputError("sample_itinerary_frequencies needs samples >= 1");
    if (word_len == 0)
        throw InputError("sample_itinerary_frequencies needs word_len >= 1");
    const ScalingProfile profile = require_profile(f, p, m);
    const StochasticMatrix a = transition_matrix(f, profile).matrix;
    const RowVector uniform(a.size(), coset_measure(p, m));
    PadicEvaluator eval(f, p);

    const unsigned precision = std::max(m + word_len * (profile.max_scale_exponent() + 1),
                                        m + (word_len - 1) * eval.precision_loss());
    const std::uint64_t base = p.value();
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / base * base;
    std::mt19937_64 rng(seed);
    auto digit = [&] {
        while (true) {
            std::uint64_t r = rng();
            if (r < limit)
                return r % base;
        }
    };

    std::map<Itinerary, std::uint64_t> counts;
    for (std::uint64_t s = 0; s < samples; ++s) {
        Integer x = 0, place = 1;
        for (unsigned k = 0; k < precision; ++k) {
            x += place * static_cast<unsigned long>(digit());
            place *= static_cast<unsigned long>(base);
        }
        ++counts[word_of(eval, PadicInt(p, precision, x), word_len - 1, m)];
    }

    std::vector<WordFrequency> table;
    for (const auto &w : all_words(a.size(), word_len)) {
        WordFrequency row;
        row.word = w;
        auto it = counts.find(w);
        row.count = it == counts.end() ? 0 : it->second;
        row.empirical = Rational(Integer(static_cast<unsigned long>(row.count)),
                                 Integer(static_cast<unsigned long>(samples)));
        row.empirical.canonicalize();
        row.exact = cylinder_measure(a, uniform, as_states(w));
        table.push_back(std::move(row));
    }
    return table;
}

} // namespace padyn

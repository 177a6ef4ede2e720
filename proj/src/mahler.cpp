#include "padyn/mahler.hpp"

#include <algorithm>

#include "padyn/errors.hpp"

namespace padyn {

namespace {

/// In-place forward differences: values f(0..K) become Delta^k f(0).
template <typename T>
void forward_differences(std::vector<T> &v) {
    for (std::size_t k = 1; k < v.size(); ++k)
        for (std::size_t j = v.size() - 1; j >= k; --j)
            v[j] -= v[j - 1];
}

} // namespace

MahlerSeries to_mahler(const RationalPoly &f, const Prime &p) {
    std::vector<Rational> values(static_cast<std::size_t>(f.degree() + 1));
    for (std::size_t j = 0; j < values.size(); ++j)
        values[j] = poly_eval_exact(f, Integer(static_cast<unsigned long>(j)));
    forward_differences(values);
    return {p, std::move(values)};
}

RationalPoly from_mahler(const std::vector<Rational> &coeffs) {
    // Newton form: a_0 + x(a_1 + (x-1)/2 (a_2 + (x-2)/3 (a_3 + ...))).
    if (coeffs.empty())
        return {};
    RationalPoly acc = RationalPoly::constant(coeffs.back());
    for (std::size_t k = coeffs.size() - 1; k >= 1; --k) {
        RationalPoly factor({Rational(-static_cast<long>(k - 1), static_cast<long>(k)), Rational(1, static_cast<long>(k))});
        acc *= factor;
        acc += RationalPoly::constant(coeffs[k - 1]);
    }
    return acc;
}

RationalPoly from_mahler(const MahlerSeries &s) { return from_mahler(s.coeffs); }

Integer kappa(unsigned long k, const Prime &p) {
    if (k == 0)
        throw InputError("kappa is defined for k >= 1");
    Integer r = 1;
    while (r * p.value() <= k)
        r *= p.value();
    return r;
}

Rational sup_norm(const MahlerSeries &s) {
    Rational best = 0;
    for (const auto &a : s.coeffs)
        best = std::max(best, norm(a, s.prime));
    return best;
}

Rational lipschitz_constant(const MahlerSeries &s) {
    Rational best = 0;
    for (std::size_t k = 1; k < s.coeffs.size(); ++k)
        best = std::max(best, Rational(Rational(kappa(k, s.prime)) * norm(s.coeffs[k], s.prime)));
    return best;
}

BernoulliVerdict bernoulli_criterion(const MahlerSeries &s) {
    if (sup_norm(s) > 1)
        throw NotSelfMap("Mahler coefficients are not all " + std::to_string(s.prime.value()) +
                         "-adic integers (sup norm " + to_string(sup_norm(s)) + ")");
    BernoulliVerdict v;
    std::size_t hits = 0;
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
        Rational w = norm(s.coeffs[k], s.prime);
        if (k >= 1)
            w *= Rational(kappa(k, s.prime));
        if (w == 0)
            continue;
        if (w > v.max_weight) {
            v.max_weight = w;
            v.argmax = k;
            hits = 1;
        } else if (w == v.max_weight) {
            ++hits;
        }
    }
    if (hits != 1) {
        v.argmax.reset();
        return v;
    }
    // k_M must be p^ell with ell >= 1 and a_{k_M} a unit.
    std::size_t k = *v.argmax;
    unsigned ell = 0;
    while (k > 1 && k % s.prime.value() == 0) {
        k /= s.prime.value();
        ++ell;
    }
    if (k != 1 || ell == 0 || norm(s.coeffs[*v.argmax], s.prime) != 1)
        return v;
    v.applies = true;
    v.ell = ell;
    return v;
}

RationalPoly realize_matrix(const TransitionMatrix &target, const RealizeOptions &options) {
    const Prime &p = target.prime;
    const unsigned m = target.depth;
    const std::uint64_t states = power_u64(p, m);
    if (target.matrix.size() != states)
        throw NotRealizable("matrix has " + std::to_string(target.matrix.size()) + " states, expected " +
                            std::to_string(p.value()) + "^" + std::to_string(m));

    // Per row: scale exponent c_i and image class t_i mod p^{m - c_i}.
    std::vector<unsigned> exponent(states);
    std::vector<std::uint64_t> lift(states);
    for (std::uint64_t i = 0; i < states; ++i) {
        const auto &row = target.matrix.row(i);
        const Rational value = row.front().value;
        const auto why = "row " + std::to_string(i) + ": ";
        if (value.get_num() != 1)
            throw NotRealizable(why + "entry " + to_string(value) + " is not a power of 1/p");
        auto c = vp(value.get_den(), p);
        if (value.get_den() != power(p, static_cast<unsigned long>(c.value())) || c.value() > static_cast<long>(m))
            throw NotRealizable(why + "entry " + to_string(value) + " is not p^-c with 0 <= c <= depth");
        exponent[i] = static_cast<unsigned>(c.value());
        const std::uint64_t step = power_u64(p, m - exponent[i]);
        lift[i] = row.front().col % step;
        if (row.size() != power_u64(p, exponent[i]))
            throw NotRealizable(why + "support has " + std::to_string(row.size()) + " states, entry " +
                                to_string(value) + " needs " + std::to_string(power_u64(p, exponent[i])));
        for (std::size_t k = 0; k < row.size(); ++k)
            if (row[k].value != value || row[k].col != lift[i] + k * step)
                throw NotRealizable(why + "support is not a residue class mod " + std::to_string(step));
    }

    // Locally affine model, integer-valued on the integers.
    auto model = [&](std::uint64_t x) {
        std::uint64_t i = x % states;
        return Integer(static_cast<unsigned long>((x - i) / power_u64(p, exponent[i]) + lift[i]));
    };

    std::size_t degree = std::max<std::size_t>(states + 1, 2 * states);
    while (true) {
        std::vector<Integer> values(degree + 1);
        for (std::size_t x = 0; x <= degree; ++x)
            values[x] = model(x);
        forward_differences(values);
        RationalPoly f = from_mahler(std::vector<Rational>(values.begin(), values.end()));
        try {
            auto profile = profile_at_depth(f, p, m);
            if (profile && transition_matrix(f, *profile) == target)
                return f;
        } catch (const ContractionDetected &) {
            // Truncation still too coarse.
        }
        if (degree >= options.max_degree)
            throw RealizationDepthExceeded("no verified realization up to degree " +
                                           std::to_string(options.max_degree));
        degree = std::min(2 * degree, options.max_degree);
    }
}

bool qk_exact_scaling_check(unsigned ell, const Prime &p, unsigned depth) {
    if (depth < ell + 2)
        throw InputError("qk_exact_scaling_check needs depth >= ell + 2");
    const std::uint64_t k = power_u64(p, ell);
    const std::uint64_t total = power_u64(p, depth);
    std::vector<Integer> values(total);
    for (std::uint64_t x = 0; x < total; ++x)
        mpz_bin_uiui(values[x].get_mpz_t(), x, k);
    for (std::uint64_t x = 0; x < total; ++x)
        for (std::uint64_t y = x + k; y < total; y += k) {
            auto lhs = vp(Integer(values[y] - values[x]), p);
            auto rhs = vp(Integer(static_cast<unsigned long>(y - x)), p).value() - static_cast<long>(ell);
            if (lhs != Valuation(rhs))
                return false;
        }
    return true;
}

} // namespace padyn

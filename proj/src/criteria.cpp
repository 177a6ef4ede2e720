#include "padyn/criteria.hpp"

#include <algorithm>

#include "padyn/errors.hpp"

namespace padyn {

namespace {

unsigned long floor_log(unsigned long k, unsigned long p) {
    unsigned long e = 0;
    for (unsigned long r = p; r <= k; r *= p)
        ++e;
    return e;
}

unsigned long inverse_mod(unsigned long x, unsigned long p) {
    Integer r, xi(x), pi(p);
    if (!mpz_invert(r.get_mpz_t(), xi.get_mpz_t(), pi.get_mpz_t()))
        throw InputError(std::to_string(x) + " is not invertible mod " + std::to_string(p));
    return r.get_ui();
}

bool matrix_all_equal(const StochasticMatrix &a) {
    const std::size_t n = a.size();
    if (a.nonzeros() != n * n)
        return false;
    const Rational first = a.row(0).front().value;
    for (std::size_t i = 0; i < n; ++i)
        for (const auto &e : a.row(i))
            if (e.value != first)
                return false;
    return true;
}

} // namespace

bool isometric_bernoulli_equivalence_check(const RationalPoly &f, const Prime &p, unsigned ell, unsigned depth) {
    if (depth < ell + 2)
        throw InputError("isometric_bernoulli_equivalence_check needs depth >= ell + 2");
    check_self_map(f, p);

    PadicEvaluator eval(f, p);
    const std::uint64_t total = power_u64(p, depth);
    const std::uint64_t step = power_u64(p, ell);
    std::vector<Integer> values(total);
    for (std::uint64_t x = 0; x < total; ++x)
        values[x] = eval.residue_at(Integer(static_cast<unsigned long>(x)), depth);
    bool metric = true;
    for (std::uint64_t x = 0; x < total && metric; ++x)
        for (std::uint64_t y = x + step; y < total; y += step) {
            long expected = vp(Integer(static_cast<unsigned long>(y - x)), p).value() - static_cast<long>(ell);
            // Values are known mod p^depth and expected < depth.
            if (vp(Integer(values[y] - values[x]), p) != Valuation(expected)) {
                metric = false;
                break;
            }
        }

    bool matrix = false;
    try {
        if (auto profile = profile_at_depth(f, p, ell))
            matrix = matrix_all_equal(transition_matrix(f, *profile).matrix);
    } catch (const ContractionDetected &) {
        matrix = false;
    }
    if (metric != matrix)
        throw InternalInconsistency("metric scaling identity (" + std::string(metric ? "holds" : "fails") +
                                    ") and all-equal transition matrix (" + (matrix ? "holds" : "fails") +
                                    ") disagree at ell = " + std::to_string(ell));
    return metric;
}

std::vector<ZhatVerdict> zhat_bernoulli_check(const std::vector<Integer> &coeffs, const std::vector<Prime> &primes) {
    std::vector<ZhatVerdict> out;
    for (const auto &p : primes) {
        ZhatVerdict v;
        v.prime = p.value();
        v.unit_at_prime = p.value() < coeffs.size() && vp(coeffs[p.value()], p) == Valuation(0);
        for (std::size_t k = p.value() + 1; k < coeffs.size(); ++k) {
            auto val = vp(coeffs[k], p);
            if (val.is_finite() && val.value() <= static_cast<long>(floor_log(k, p.value()))) {
                v.failing_k = k;
                break;
            }
        }
        v.passes = v.unit_at_prime && !v.failing_k;
        out.push_back(v);
    }
    return out;
}

std::vector<Integer> factorial_power_coefficients(unsigned max_k) {
    std::vector<Integer> a(max_k + 1, 0);
    for (unsigned k = 1; k <= max_k; ++k) {
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), k - 1);
        mpz_pow_ui(a[k].get_mpz_t(), fact.get_mpz_t(), k);
    }
    return a;
}

std::vector<Integer> prime_product_coefficients(unsigned max_k) {
    std::vector<Integer> a(max_k + 1, 0);
    for (unsigned q = 2; q <= max_k; ++q) {
        if (!is_prime(q))
            continue;
        Integer prod = 1;
        for (unsigned r = 2; r < q; ++r) {
            if (!is_prime(r))
                continue;
            Integer term;
            mpz_ui_pow_ui(term.get_mpz_t(), r, 1 + floor_log(q, r));
            prod *= term;
        }
        a[q] = prod;
    }
    return a;
}

HarmonicCheckResult constant_derivative_check(unsigned long n, const Prime &p) {
    if (n == 0)
        throw InputError("constant_derivative_check needs n >= 1");
    HarmonicCheckResult r;
    r.n = n;
    r.prime = p.value();
    r.a = n;
    while (r.a % p.value() == 0) {
        r.a /= p.value();
        ++r.ell;
    }
    if (r.a >= p.value())
        return r;
    for (unsigned long u = 1; u + r.a <= p.value(); ++u) {
        unsigned long sum = 0;
        for (unsigned long i = 0; i < r.a; ++i)
            sum = (sum + inverse_mod(u + i, p.value())) % p.value();
        if (sum == 0) {
            r.failing_u = u;
            return r;
        }
    }
    r.passes = true;
    return r;
}

ValuationRange constant_derivative_oracle(unsigned long n, const Prime &p, unsigned depth) {
    if (n == 0)
        throw InputError("constant_derivative_oracle needs n >= 1");
    if (depth < floor_log(n, p.value()) + 2)
        throw InputError("constant_derivative_oracle needs depth >= floor(log_p n) + 2");
    RationalPoly fprime = derivative(binom_poly(static_cast<unsigned>(n)));
    const std::uint64_t total = power_u64(p, depth);
    ValuationRange range;
    bool first = true;
    for (std::uint64_t x = 0; x < total; ++x) {
        auto v = vp(poly_eval_exact(fprime, Integer(static_cast<unsigned long>(x))), p);
        if (first) {
            range.min = range.max = v;
            first = false;
        } else {
            range.min = std::min(range.min, v);
            range.max = std::max(range.max, v);
        }
    }
    return range;
}

unsigned long binomial_residue_by_blocks(unsigned long n, const Prime &p, const Integer &x) {
    unsigned long a = n;
    unsigned ell = 0;
    while (a % p.value() == 0) {
        a /= p.value();
        ++ell;
    }
    if (a >= p.value())
        throw InputError("n must be a p^ell with 1 <= a < p");
    if (x < n)
        throw InputError("x must be at least n");
    const Integer block = power(p, ell);
    // Smallest multiple of p^ell in [x - n + 1, x], as u p^ell.
    Integer low = x - n + 1;
    Integer u;
    mpz_cdiv_q(u.get_mpz_t(), low.get_mpz_t(), block.get_mpz_t());
    Integer num = 1;
    for (unsigned long i = 0; i < a; ++i)
        num *= u + i;
    Integer den;
    mpz_fac_ui(den.get_mpz_t(), a);
    Integer pm(p.value());
    Integer r;
    mpz_invert(r.get_mpz_t(), den.get_mpz_t(), pm.get_mpz_t());
    r *= num;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), pm.get_mpz_t());
    return r.get_ui();
}

AlmostBernoulliReport almost_bernoulli_report(const Prime &p, unsigned ell) {
    if (p.value() < 3)
        throw InputError("the almost-Bernoulli family needs p >= 3");
    if (ell < 1)
        throw InputError("the almost-Bernoulli family needs ell >= 1");
    const unsigned long n = (p.value() - 2) * power_u64(p, ell);
    const RationalPoly f = binom_poly(static_cast<unsigned>(n));
    auto profile = profile_at_depth(f, p, ell + 1);
    if (!profile)
        throw NotLocallyScaling("binom(x, " + std::to_string(n) + ") fails the Taylor test at depth " +
                                std::to_string(ell + 1));
    AlmostBernoulliReport r{.prime = p,
                            .ell = ell,
                            .n = n,
                            .profile = *profile,
                            .matrix = transition_matrix(f, *profile)};
    const auto &a = r.matrix.matrix;
    r.column_sums = a.column_sums();
    r.measure_preserving = is_measure_preserving(a);
    for (auto center : r.profile.image_centers) {
        auto t = center % p.value();
        if (t == 0 || t == 1)
            r.image_class.push_back(static_cast<int>(t));
        else if (t == p.value() - 1)
            r.image_class.push_back(-1);
        else
            throw InternalInconsistency("image class " + std::to_string(t) + " outside {0, 1, -1}");
    }
    auto stationary = stationary_distributions(a);
    if (stationary.size() != 1)
        throw InternalInconsistency("expected a unique stationary distribution, found " +
                                    std::to_string(stationary.size()));
    r.stationary = std::move(stationary.front());
    r.decomposition = decompose(a, r.stationary);
    for (const auto &m : r.decomposition.component_matrices)
        r.classes.push_back(classify_component(m));
    return r;
}

} // namespace padyn

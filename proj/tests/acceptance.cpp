// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "corpus.hpp"
#include "oracle.hpp"
#include "padyn/analysis.hpp"
#include "padyn/criteria.hpp"
#include "padyn/errors.hpp"
#include "padyn/expr.hpp"
#include "padyn/shift.hpp"

using namespace padyn;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool cond, const std::string &what) {
        if (!cond) {
            if (pass)
                detail << "failed: ";
            else
                detail << "; ";
            detail << what;
            pass = false;
        }
    }
};

struct Criterion {
    int number;
    std::string name;
    double seconds;
    std::function<void(Outcome &)> body;
};

RationalPoly woodcock_smart(unsigned long p) { return RationalPoly(corpus::woodcock_smart(p)); }

void choose2(Outcome &o) {
    AnalysisReport r = analyze(binom_poly(2), Prime(2));
    const Rational h(1, 2);
    o.require(r.profile.depth == 1, "radius exponent 1");
    o.require(r.profile.scale_exponents == std::vector<unsigned>{1, 1}, "scale exponents 1, 1");
    o.require(r.matrix.matrix == StochasticMatrix::from_dense({{h, h}, {h, h}}), "matrix all 1/2");
    o.require(r.measure_preserving, "measure-preserving");
    o.require(r.classes.size() == 1 && r.classes[0].kind == ComponentKind::ErgodicMarkov && r.classes[0].mixing,
              "single mixing component");
    o.require(r.bernoulli.applies && r.bernoulli.ell == 1, "Bernoulli verdict ell = 1");
    o.detail << "m = 1, A = [[1/2,1/2],[1/2,1/2]], mixing, ell = 1";
}

void woodcock(Outcome &o) {
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        RationalPoly f = woodcock_smart(p);
        auto v = bernoulli_criterion(to_mahler(f, Prime(p)));
        o.require(v.applies && v.ell == 1, "criterion ell = 1 at p = " + std::to_string(p));
        AnalysisReport r = analyze(f, Prime(p));
        o.require(r.classes.size() == 1 && r.classes[0].mixing, "mixing at p = " + std::to_string(p));
    }
    o.detail << "p = 2, 3, 5: ell = 1, mixing";
}

void binomial_family(Outcome &o) {
    for (auto [p, ell] : {std::pair{2ul, 1u}, std::pair{2ul, 2u}, std::pair{3ul, 1u}, std::pair{5ul, 1u}}) {
        const std::string tag = "(" + std::to_string(p) + "," + std::to_string(ell) + ")";
        RationalPoly f = binom_poly(static_cast<unsigned>(oracle::ipow(p, ell)));
        auto v = bernoulli_criterion(to_mahler(f, Prime(p)));
        o.require(v.applies && v.ell == ell, "criterion " + tag);
        o.require(isometric_bernoulli_equivalence_check(f, Prime(p), ell, ell + 3), "metric identity " + tag);
    }
    o.detail << "(2,1) (2,2) (3,1) (5,1) at depth ell + 3";
}

void almost_bernoulli(Outcome &o) {
    auto r = almost_bernoulli_report(Prime(5), 1);
    o.require(!r.measure_preserving, "not measure-preserving");
    // Independent enumeration and dense solve.
    auto dense = oracle::enumerate_matrix(oracle::binomial(15), 5, 2, 4);
    o.require(r.matrix.matrix.dense() == dense, "matrix equals enumeration");
    std::vector<std::size_t> recurrent;
    for (std::size_t j = 0; j < 25; ++j)
        if (j % 5 == 0 || j % 5 == 1 || j % 5 == 4)
            recurrent.push_back(j);
    auto solved = oracle::stationary(dense, recurrent);
    o.require(r.stationary == solved, "stationary vector equals dense solve");
    bool values = true, columns = true;
    for (std::size_t j = 0; j < 25; ++j) {
        const bool zero = j % 5 == 0, unit = j % 5 == 1 || j % 5 == 4;
        values &= r.stationary[j] == (zero ? Rational(3, 25) : unit ? Rational(1, 25) : Rational(0));
        columns &= r.column_sums[j] == (zero ? Rational(3) : unit ? Rational(1) : Rational(0));
    }
    o.require(values, "v = 3/25 on 0, 1/25 on +-1, 0 elsewhere");
    o.require(columns, "column sums 3 on j = 0, 1 on j = +-1, 0 elsewhere (mod 5)");
    o.require(mat_vec_product(r.stationary, r.matrix.matrix) == r.stationary, "v = vA");
    o.require(r.classes.size() == 1 && r.classes[0].mixing &&
                  is_primitive(r.decomposition.component_matrices[0]),
              "recurrent component primitive");
    // The displayed vector (p-2)/p, 1/p, 1/p matches up to one global factor.
    Rational scale = Rational(3, 5) / r.stationary[0];
    bool proportional = true;
    for (std::size_t j = 0; j < 25; ++j) {
        const bool zero = j % 5 == 0, unit = j % 5 == 1 || j % 5 == 4;
        Rational shown = zero ? Rational(3, 5) : unit ? Rational(1, 5) : Rational(0);
        proportional &= r.stationary[j] * scale == shown;
    }
    o.require(proportional, "displayed eigenvector up to normalization");
    o.detail << "v = 3/25, 1/25, 0; column sums 3/1/0; 15 recurrent states, primitive";
}

void oracle_equivalence(Outcome &o) {
    std::size_t n = 0;
    for (const auto &m : corpus::maps()) {
        Prime p(m.prime);
        RationalPoly f = m.poly();
        ScalingProfile s = find_scaling_radius(f, p);
        TransitionMatrix t = transition_matrix(f, s);
        const unsigned e = s.depth + s.max_scale_exponent() + 1;
        o.require(brute_force_matrix(f, p, s.depth, e) == t, m.name);
        o.require(t.matrix.dense() == oracle::enumerate_matrix(m.coeffs, m.prime, s.depth, e), m.name + " (oracle)");
        ++n;
    }
    o.require(n >= 10, "corpus has at least 10 maps");
    o.detail << n << " maps";
}

void conjugacy(Outcome &o) {
    o.require(verify_cylinder_measures(binom_poly(2), Prime(2), 1, 3), "binom(x,2), p = 2");
    o.require(verify_cylinder_measures(woodcock_smart(3), Prime(3), 1, 3), "(x^3-x)/3, p = 3");
    o.require(verify_cylinder_measures(parse_polynomial("x + 1"), Prime(2), 1, 3), "x+1, p = 2");
    o.detail << "all words of length <= 3";
}

void realization(Outcome &o) {
    std::size_t n = 0;
    for (unsigned long p : {2ul, 3ul}) {
        std::vector<StochasticMatrix::Row> rows;
        for (std::size_t j = 0; j < p; ++j)
            rows.push_back({{j, Rational(1)}});
        StochasticMatrix::Row uniform;
        for (std::size_t j = 0; j < p; ++j)
            uniform.push_back({j, Rational(1, static_cast<long>(p))});
        rows.push_back(uniform);
        const std::size_t k = rows.size();
        const std::size_t total = oracle::ipow(k, static_cast<unsigned>(p));
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<StochasticMatrix::Row> picked;
            for (std::size_t c = code, i = 0; i < p; ++i, c /= k)
                picked.push_back(rows[c % k]);
            TransitionMatrix target{Prime(p), 1, StochasticMatrix(picked)};
            RationalPoly f = realize_matrix(target);
            auto profile = profile_at_depth(f, Prime(p), 1);
            o.require(profile && transition_matrix(f, *profile) == target, "matrix #" + std::to_string(n));
            ++n;
        }
    }
    o.require(n >= 20, "family has at least 20 matrices");
    o.detail << n << " matrices";
}

void harmonic(Outcome &o) {
    std::size_t n = 0;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul})
        for (unsigned long k = 1; k <= 30; ++k) {
            unsigned depth = 2;
            for (unsigned long r = p; r <= k; r *= p)
                ++depth;
            bool check = constant_derivative_check(k, Prime(p)).passes;
            bool enumerated = constant_derivative_oracle(k, Prime(p), depth).constant();
            o.require(check == enumerated, "n = " + std::to_string(k) + ", p = " + std::to_string(p));
            ++n;
        }
    for (unsigned long p : {3ul, 5ul, 7ul})
        for (unsigned ell : {0u, 1u})
            o.require(constant_derivative_check((p - 2) * oracle::ipow(p, ell), Prime(p)).passes,
                      "n = (p-2)p^ell for p = " + std::to_string(p));
    o.require(!constant_derivative_check(2, Prime(3)).passes, "n = 2, p = 3 fails");
    o.detail << n << " (n, p) pairs";
}

void mahler_identities(Outcome &o) {
    for (const auto &m : corpus::maps()) {
        auto s = to_mahler(m.poly(), Prime(m.prime));
        o.require(sup_norm(s) == oracle::sup_by_enumeration(m.coeffs, m.prime, 6), "sup norm " + m.name);
        o.require(lipschitz_constant(s) == oracle::lipschitz_by_enumeration(m.coeffs, m.prime, 6),
                  "Lipschitz " + m.name);
    }
    o.require(qk_exact_scaling_check(1, Prime(2), 6), "k = 2, p = 2");
    o.require(qk_exact_scaling_check(2, Prime(2), 6), "k = 4, p = 2");
    o.require(qk_exact_scaling_check(1, Prime(3), 6), "k = 3, p = 3");
    o.require(qk_exact_scaling_check(2, Prime(3), 6), "k = 9, p = 3");
    o.detail << corpus::maps().size() << " maps mod p^6; k = 2, 4, 3, 9";
}

void zhat(Outcome &o) {
    std::vector<Prime> primes{Prime(2), Prime(3), Prime(5)};
    for (const auto &[name, coeffs] : {std::pair{std::string("((k-1)!)^k"), factorial_power_coefficients(20)},
                                       std::pair{std::string("prime products"), prime_product_coefficients(20)}}) {
        auto verdicts = zhat_bernoulli_check(coeffs, primes);
        for (std::size_t i = 0; i < primes.size(); ++i) {
            const std::string tag = name + " at p = " + std::to_string(primes[i].value());
            o.require(verdicts[i].passes, tag);
            auto b = bernoulli_criterion({primes[i], std::vector<Rational>(coeffs.begin(), coeffs.end())});
            o.require(b.applies && b.argmax == std::optional<std::size_t>(primes[i].value()), "criterion " + tag);
        }
    }
    o.detail << "both lists, k <= 20, p = 2, 3, 5";
}

void classification(Outcome &o) {
    AnalysisReport r = analyze(parse_polynomial("x + 1"), Prime(2));
    o.require(r.classes.size() == 1 && r.classes[0].kind == ComponentKind::LocalIsometry && !r.classes[0].mixing,
              "x+1 over Z_2 is a non-mixing local isometry");
    StochasticMatrix id = StochasticMatrix::identity(2);
    Decomposition d = decompose(id, {Rational(1, 2), Rational(1, 2)});
    o.require(d.components.size() == 2, "identity has two components");
    for (const auto &m : d.component_matrices)
        o.require(classify_component(m).kind == ComponentKind::LocalIsometry, "identity component is an isometry");
    std::size_t labelled = 0;
    for (const auto &m : corpus::maps()) {
        AnalysisReport a = analyze(m.poly(), Prime(m.prime));
        o.require(a.classes.size() == a.decomposition.components.size(), "one class per component: " + m.name);
        for (const auto &c : a.classes) {
            bool known = c.kind == ComponentKind::LocalIsometry || c.kind == ComponentKind::ErgodicMarkov;
            o.require(known, "labelled class: " + m.name);
            o.require(!(c.kind == ComponentKind::LocalIsometry && c.mixing), "isometry never mixing: " + m.name);
            o.require(!c.isometrically_bernoulli || c.mixing, "Bernoulli implies mixing: " + m.name);
            ++labelled;
        }
    }
    o.detail << "x+1 LocalIsometry, identity 2 components, " << labelled << " corpus components labelled";
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "choose-2 pipeline", 1, choose2},
        {2, "Woodcock-Smart family", 5, woodcock},
        {3, "binomial Bernoulli family", 30, binomial_family},
        {4, "almost-Bernoulli p = 5, l = 1", 10, almost_bernoulli},
        {5, "Taylor matrix = enumeration", 60, oracle_equivalence},
        {6, "cylinder measures", 30, conjugacy},
        {7, "realization round trip", 120, realization},
        {8, "harmonic criterion vs enumeration", 60, harmonic},
        {9, "Mahler identities", 60, mahler_identities},
        {10, "multi-prime coefficient checks", 5, zhat},
        {11, "classification completeness", 1, classification},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception &e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.seconds)
            o.require(false, "took " + std::to_string(secs) + " s, budget " + std::to_string(c.seconds) + " s");
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.number << " " << c.name << ": " << o.detail.str() << " ("
                  << static_cast<long>(secs * 1000) << " ms)\n";
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}

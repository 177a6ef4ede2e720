// padyn: dynamics of polynomial self-maps of Z_p.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "padyn/analysis.hpp"
#include "padyn/criteria.hpp"
#include "padyn/errors.hpp"
#include "padyn/expr.hpp"
#include "padyn/report.hpp"
#include "padyn/shift.hpp"

using namespace padyn;

namespace {

enum Exit { ok = 0, input_error = 1, analysis_error = 2, limit_error = 3 };

struct Common {
    unsigned long prime = 0;
    unsigned long max_prime = 13;
    unsigned max_depth = 8;
    std::uint64_t max_states = 3000;
    bool json = false;
};

Prime checked_prime(const Common &c) {
    if (!is_prime(c.prime))
        throw InputError(std::to_string(c.prime) + " is not prime");
    if (c.prime > c.max_prime)
        throw InputError("prime " + std::to_string(c.prime) + " exceeds --max-prime " + std::to_string(c.max_prime));
    return Prime(c.prime);
}

/// Collects pass/fail lines for the examples command.
class Replay {
  public:
    void check(bool cond, const std::string &what) {
        std::cout << (cond ? "  ok    " : "  FAIL  ") << what << "\n";
        failed_ |= !cond;
    }
    int exit_code() const { return failed_ ? analysis_error : ok; }

  private:
    bool failed_ = false;
};

std::string join(const std::vector<Rational> &xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? " " : "") + to_string(xs[i]);
    return s;
}

int cmd_analyze(const std::string &expr, const Common &c, unsigned enum_depth) {
    Prime p = checked_prime(c);
    RationalPoly f = parse_polynomial(expr);
    AnalysisReport r = analyze(f, p, {c.max_depth, c.max_states});
    if (enum_depth > 0) {
        auto brute = brute_force_matrix(f, p, r.matrix.depth, enum_depth);
        if (!(brute == r.matrix))
            throw InternalInconsistency("enumeration at depth " + std::to_string(enum_depth) +
                                        " disagrees with the Taylor matrix");
    }
    if (c.json)
        std::cout << report_json(r, expr).dump(2) << "\n";
    else
        std::cout << report_text(r, expr);
    return ok;
}

int cmd_mahler(const std::string &expr, const Common &c) {
    Prime p = checked_prime(c);
    MahlerSeries s = to_mahler(parse_polynomial(expr), p);
    BernoulliVerdict v = bernoulli_criterion(s);
    if (c.json)
        std::cout << mahler_json(s, v, expr).dump(2) << "\n";
    else
        std::cout << mahler_text(s, v);
    return ok;
}

int cmd_realize(const std::string &path, const Common &c, std::size_t max_degree) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    auto target = [&] {
        try {
            return read_matrix(in);
        } catch (const NotStochastic &e) {
            throw NotRealizable(e.what());
        }
    }();
    if (c.prime != 0 && c.prime != target.prime.value())
        throw InputError("-p " + std::to_string(c.prime) + " disagrees with the file's prime " +
                         std::to_string(target.prime.value()));
    if (target.matrix.size() > c.max_states)
        throw StateLimitExceeded("matrix has " + std::to_string(target.matrix.size()) + " states, cap is " +
                                 std::to_string(c.max_states));
    RationalPoly f = realize_matrix(target, {max_degree});
    std::cout << format_polynomial(f) << "\n";
    return ok;
}

int cmd_itinerary(const std::string &expr, const Common &c, const std::string &x, unsigned steps, unsigned m,
                  unsigned precision) {
    Prime p = checked_prime(c);
    RationalPoly f = parse_polynomial(expr);
    if (precision == 0)
        precision = m + steps * PadicEvaluator(f, p).precision_loss();
    Integer value;
    if (value.set_str(x, 10) != 0)
        throw ParseError("bad integer '" + x + "'");
    auto word = itinerary(f, PadicInt(p, precision, value), steps, m);
    for (std::size_t i = 0; i < word.size(); ++i)
        std::cout << (i ? " " : "") << word[i];
    std::cout << "\n";
    return ok;
}

int cmd_sample(const std::string &expr, const Common &c, unsigned m, unsigned len, std::uint64_t samples,
               std::uint64_t seed) {
    Prime p = checked_prime(c);
    auto table = sample_itinerary_frequencies(parse_polynomial(expr), p, m, len, samples, seed);
    if (c.json) {
        Json rows = Json::array();
        for (const auto &row : table)
            rows.push_back({{"word", row.word},
                            {"count", row.count},
                            {"empirical", to_string(row.empirical)},
                            {"exact", to_string(row.exact)}});
        Json j;
        j["schema_version"] = schema_version;
        j["tool_version"] = tool_version;
        j["input"] = expr;
        j["prime"] = p.value();
        j["depth"] = m;
        j["samples"] = samples;
        j["seed"] = seed;
        j["words"] = std::move(rows);
        std::cout << j.dump(2) << "\n";
        return ok;
    }
    std::cout << "word\tcount\tempirical\texact\n";
    for (const auto &row : table) {
        for (std::size_t i = 0; i < row.word.size(); ++i)
            std::cout << (i ? "," : "") << row.word[i];
        std::cout << "\t" << row.count << "\t" << to_string(row.empirical) << "\t" << to_string(row.exact) << "\n";
    }
    return ok;
}

int example_choose2() {
    Replay r;
    Prime p(2);
    auto a = analyze(parse_polynomial("binom(x,2)"), p);
    std::cout << "binom(x,2) on Z_2\n";
    r.check(a.profile.depth == 1, "radius 1/2 (m = 1)");
    r.check(a.profile.scale_exponents == std::vector<unsigned>{1, 1}, "scales both cosets by 2");
    r.check(a.matrix.matrix == StochasticMatrix::from_dense({{Rational(1, 2), Rational(1, 2)},
                                                             {Rational(1, 2), Rational(1, 2)}}),
            "matrix is all 1/2");
    r.check(a.measure_preserving, "measure-preserving");
    r.check(a.classes.size() == 1 && a.classes[0].mixing, "one mixing component");
    r.check(a.bernoulli.applies && a.bernoulli.ell == 1, "Mahler criterion: Bernoulli, ell = 1");
    return r.exit_code();
}

int example_woodcock_smart(const Common &c) {
    Replay r;
    Prime p = checked_prime(c);
    std::ostringstream expr;
    expr << "(x^" << p.value() << " - x)/" << p.value();
    RationalPoly f = parse_polynomial(expr.str());
    std::cout << expr.str() << " on Z_" << p.value() << "\n";
    auto verdict = bernoulli_criterion(to_mahler(f, p));
    r.check(verdict.applies && verdict.ell == 1, "Mahler criterion: Bernoulli, ell = 1");
    auto a = analyze(f, p);
    r.check(a.measure_preserving, "measure-preserving");
    r.check(a.classes.size() == 1 && a.classes[0].mixing, "mixing");
    r.check(a.classes.size() == 1 && a.classes[0].isometrically_bernoulli, "all transition entries equal");
    r.check(isometric_bernoulli_equivalence_check(f, p, 1, p.value() <= 3 ? 4 : 3),
            "|f(x) - f(y)| = p |x - y| on balls of radius 1/p");
    return r.exit_code();
}

int example_almost_bernoulli(unsigned long prime, unsigned ell) {
    Replay r;
    if (!is_prime(prime))
        throw InputError(std::to_string(prime) + " is not prime");
    Prime p(prime);
    auto rep = almost_bernoulli_report(p, ell);
    std::cout << "binom(x, " << rep.n << ") on Z_" << prime << ", cosets mod " << prime << "^" << rep.profile.depth
              << "\n";
    const auto &a = rep.matrix.matrix;
    bool scales = std::all_of(rep.profile.scale_exponents.begin(), rep.profile.scale_exponents.end(),
                              [&](unsigned c) { return c == ell; });
    r.check(scales, "every coset scaled by p^ell");
    const std::uint64_t period = power_u64(p, ell + 1);
    bool classes_ok = true;
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        std::uint64_t x = i % period;
        int want = x < rep.n ? 0 : x < rep.n + power_u64(p, ell) ? 1 : -1;
        classes_ok &= rep.image_class[i] == want;
    }
    r.check(classes_ok, "f(i) mod p follows the three-block pattern");
    r.check(rep.measure_preserving == (prime == 3), prime == 3 ? "measure-preserving" : "not measure-preserving");
    std::cout << "  column sums  " << join(rep.column_sums) << "\n";
    std::cout << "  stationary   " << join(rep.stationary) << "\n";
    r.check(mat_vec_product(rep.stationary, a) == rep.stationary, "v = vA");
    bool ratio_ok = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto t = i % prime;
        const Rational &v = rep.stationary[i];
        const Rational &unit = rep.stationary[1];
        if (t == 0)
            ratio_ok &= v == unit * static_cast<unsigned long>(prime - 2);
        else if (t == 1 || t == prime - 1)
            ratio_ok &= v == unit && v > 0;
        else
            ratio_ok &= v == 0;
    }
    r.check(ratio_ok, "mass (p-2) : 1 : 1 on classes 0, 1, -1 mod p, zero elsewhere");
    r.check(rep.classes.size() == 1 && rep.classes[0].mixing, "recurrent component is mixing");
    return r.exit_code();
}

int example_zhat(const std::vector<Integer> &coeffs, const std::string &name) {
    Replay r;
    std::vector<Prime> primes{Prime(2), Prime(3), Prime(5)};
    std::cout << name << ", k <= " << coeffs.size() - 1 << "\n";
    auto verdicts = zhat_bernoulli_check(coeffs, primes);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const auto &v = verdicts[i];
        r.check(v.passes, "p = " + std::to_string(v.prime) + ": a_p unit, a_k small for k > p");
        MahlerSeries s{primes[i], std::vector<Rational>(coeffs.begin(), coeffs.end())};
        auto b = bernoulli_criterion(s);
        r.check(b.applies && b.argmax && *b.argmax == v.prime,
                "p = " + std::to_string(v.prime) + ": Mahler criterion with k_M = p");
    }
    return r.exit_code();
}

int run(int argc, char **argv) {
    CLI::App app{"Dynamics of polynomial self-maps of Z_p"};
    app.require_subcommand(1);
    Common c;
    auto common = [&](CLI::App *sub, bool prime_required) {
        auto opt = sub->add_option("-p,--prime", c.prime, "prime p");
        if (prime_required)
            opt->required();
        sub->add_option("--max-prime", c.max_prime, "largest accepted prime")->capture_default_str();
        sub->add_option("--max-depth", c.max_depth, "deepest coset level searched")->capture_default_str();
        sub->add_option("--max-states", c.max_states, "largest accepted matrix")->capture_default_str();
        sub->add_flag("--json", c.json, "machine-readable output");
    };

    std::string expr, path, x, example;
    std::vector<std::string> example_args;
    unsigned enum_depth = 0, steps = 0, m = 1, precision = 0, word_len = 2;
    std::size_t max_degree = 512;
    std::uint64_t seed = 0, samples = 10000;

    auto *analyze_cmd = app.add_subcommand("analyze", "radius, matrix, decomposition and classification");
    analyze_cmd->add_option("expr", expr, "polynomial in x")->required();
    analyze_cmd->add_option("--enum-depth", enum_depth, "cross-check the matrix by enumeration at this depth");
    common(analyze_cmd, true);

    auto *mahler_cmd = app.add_subcommand("mahler", "Mahler coefficients and the Bernoulli criterion");
    mahler_cmd->add_option("expr", expr, "polynomial in x")->required();
    common(mahler_cmd, true);

    auto *realize_cmd = app.add_subcommand("realize", "polynomial with a given transition matrix");
    realize_cmd->add_option("file", path, "matrix file")->required();
    realize_cmd->add_option("--max-degree", max_degree, "degree cap")->capture_default_str();
    common(realize_cmd, false);

    auto *itinerary_cmd = app.add_subcommand("itinerary", "cosets visited by an orbit");
    itinerary_cmd->add_option("expr", expr, "polynomial in x")->required();
    itinerary_cmd->add_option("-x", x, "starting point (integer)")->required();
    itinerary_cmd->add_option("-n,--steps", steps, "number of steps")->required();
    itinerary_cmd->add_option("-m,--depth", m, "coset depth")->capture_default_str();
    itinerary_cmd->add_option("--precision", precision, "digits of x (default m + n d)");
    common(itinerary_cmd, true);

    auto *sample_cmd = app.add_subcommand("sample", "itinerary frequencies of random points");
    sample_cmd->add_option("expr", expr, "polynomial in x")->required();
    sample_cmd->add_option("-m,--depth", m, "coset depth")->capture_default_str();
    sample_cmd->add_option("--word-len", word_len, "word length")->capture_default_str();
    sample_cmd->add_option("--samples", samples, "number of points")->capture_default_str();
    sample_cmd->add_option("--seed", seed, "generator seed")->capture_default_str();
    common(sample_cmd, true);

    auto *examples_cmd = app.add_subcommand("examples", "replay worked examples");
    examples_cmd->add_option("name", example, "choose2 | woodcock-smart | almost-bernoulli | zhat-factorial | zhat-primes")
        ->required();
    examples_cmd->add_option("args", example_args, "almost-bernoulli: p ell");
    common(examples_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? ok : input_error;
    }

    if (analyze_cmd->parsed())
        return cmd_analyze(expr, c, enum_depth);
    if (mahler_cmd->parsed())
        return cmd_mahler(expr, c);
    if (realize_cmd->parsed())
        return cmd_realize(path, c, max_degree);
    if (itinerary_cmd->parsed())
        return cmd_itinerary(expr, c, x, steps, m, precision);
    if (sample_cmd->parsed())
        return cmd_sample(expr, c, m, word_len, samples, seed);

    if (example == "choose2")
        return example_choose2();
    if (example == "woodcock-smart") {
        if (c.prime == 0)
            c.prime = 3;
        return example_woodcock_smart(c);
    }
    if (example == "almost-bernoulli") {
        if (example_args.size() != 2)
            throw InputError("almost-bernoulli needs p and ell");
        return example_almost_bernoulli(std::stoul(example_args[0]), static_cast<unsigned>(std::stoul(example_args[1])));
    }
    if (example == "zhat-factorial")
        return example_zhat(factorial_power_coefficients(20), "a_k = ((k-1)!)^k");
    if (example == "zhat-primes")
        return example_zhat(prime_product_coefficients(20), "a_q = prod_{q' < q} q'^(1 + floor(log_q' q))");
    throw InputError("unknown example '" + example + "'");
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    } catch (const ContractionDetected &e) {
        std::cerr << "error: contraction: " << e.what() << "\n";
        return analysis_error;
    } catch (const AnalysisError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return analysis_error;
    } catch (const LimitError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return limit_error;
    } catch (const InternalInconsistency &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return analysis_error;
    } catch (const std::logic_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
}

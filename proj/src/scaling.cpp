#include "padyn/scaling.hpp"

#include <algorithm>
#include <map>

#include "padyn/errors.hpp"

namespace padyn {

unsigned ScalingProfile::max_scale_exponent() const {
    unsigned m = 0;
    for (auto c : scale_exponents)
        m = std::max(m, c);
    return m;
}

CosetTest test_coset(const RationalPoly &f, const Prime &p, unsigned depth, const Integer &representative) {
    auto c = taylor_shift(f, representative);
    CosetTest result;
    result.v1 = c.size() > 1 ? vp(c[1], p) : Valuation::infinity();
    if (result.v1.is_infinite())
        return result;
    for (std::size_t j = 2; j < c.size(); ++j) {
        auto vj = vp(c[j], p);
        if (vj.is_infinite())
            continue;
        if (vj.value() + static_cast<long>(j - 1) * static_cast<long>(depth) <= result.v1.value())
            return result;
    }
    result.outcome = result.v1.value() > 0 ? CosetTest::Outcome::Contracts : CosetTest::Outcome::Scales;
    return result;
}

void check_self_map(const RationalPoly &f, const Prime &p) {
    for (int a = 0; a <= f.degree(); ++a) {
        auto value = poly_eval_exact(f, a);
        auto v = vp(value, p);
        if (v.is_finite() && v.value() < 0)
            throw NotSelfMap("f(" + std::to_string(a) + ") = " + to_string(value) + " has " +
                             std::to_string(p.value()) + "-adic valuation " + std::to_string(v.value()));
    }
}

namespace {

[[noreturn]] void throw_contraction(const Prime &p, unsigned depth, std::uint64_t residue, const Valuation &v1) {
    throw ContractionDetected("f contracts the coset " + std::to_string(residue) + " mod " +
                                  std::to_string(p.value()) + "^" + std::to_string(depth) + " by " +
                                  std::to_string(p.value()) + "^-" + std::to_string(v1.value()),
                              depth, std::to_string(residue));
}

std::vector<std::uint64_t> image_centers(const RationalPoly &f, const Prime &p, unsigned depth, std::uint64_t states) {
    PadicEvaluator eval(f, p);
    std::vector<std::uint64_t> centers(states);
    for (std::uint64_t a = 0; a < states; ++a)
        centers[a] = eval.residue_at(Integer(static_cast<unsigned long>(a)), depth).get_ui();
    return centers;
}

} // namespace

std::optional<ScalingProfile> profile_at_depth(const RationalPoly &f, const Prime &p, unsigned depth) {
    if (f.is_constant())
        throw InputError("constant maps are not locally scaling");
    check_self_map(f, p);
    const std::uint64_t states = power_u64(p, depth);
    ScalingProfile profile{p, depth, std::vector<unsigned>(states), {}};
    for (std::uint64_t a = 0; a < states; ++a) {
        auto t = test_coset(f, p, depth, Integer(static_cast<unsigned long>(a)));
        switch (t.outcome) {
        case CosetTest::Outcome::Undecided:
            return std::nullopt;
        case CosetTest::Outcome::Contracts:
            throw_contraction(p, depth, a, t.v1);
        case CosetTest::Outcome::Scales:
            profile.scale_exponents[a] = static_cast<unsigned>(-t.v1.value());
            break;
        }
    }
    if (profile.max_scale_exponent() > depth)
        throw InternalInconsistency("scale exponent exceeds depth for a self-map");
    profile.image_centers = image_centers(f, p, depth, states);
    return profile;
}

ScalingProfile find_scaling_radius(const RationalPoly &f, const Prime &p, const ScalingOptions &options) {
    if (f.is_constant())
        throw InputError("constant maps are not locally scaling");
    check_self_map(f, p);

    // Refine only the undecided cosets: once the test passes on a ball it
    // passes on every sub-ball with the same exponent.
    struct Decided {
        unsigned depth;
        std::uint64_t residue;
        unsigned exponent;
    };
    std::vector<Decided> decided;
    std::vector<std::uint64_t> open{0};
    std::uint64_t modulus = 1;  // p^depth
    for (unsigned depth = 0; depth <= options.max_depth; ++depth) {
        if (modulus > options.max_states)
            throw StateLimitExceeded("coset space " + std::to_string(p.value()) + "^" + std::to_string(depth) +
                                     " exceeds the cap of " + std::to_string(options.max_states) + " states");
        std::vector<std::uint64_t> next;
        for (auto r : open) {
            auto t = test_coset(f, p, depth, Integer(static_cast<unsigned long>(r)));
            switch (t.outcome) {
            case CosetTest::Outcome::Contracts:
                throw_contraction(p, depth, r, t.v1);
            case CosetTest::Outcome::Scales:
                decided.push_back({depth, r, static_cast<unsigned>(-t.v1.value())});
                break;
            case CosetTest::Outcome::Undecided:
                for (std::uint64_t k = 0; k < p.value(); ++k)
                    next.push_back(r + k * modulus);
                break;
            }
        }
        if (next.empty()) {
            ScalingProfile profile{p, depth, std::vector<unsigned>(modulus), {}};
            for (const auto &d : decided) {
                std::uint64_t step = power_u64(p, d.depth);
                for (std::uint64_t r = d.residue; r < modulus; r += step)
                    profile.scale_exponents[r] = d.exponent;
            }
            if (profile.max_scale_exponent() > depth)
                throw InternalInconsistency("scale exponent exceeds depth for a self-map");
            profile.image_centers = image_centers(f, p, depth, modulus);
            return profile;
        }
        open = std::move(next);
        if (depth < options.max_depth)
            modulus = power_u64(p, depth + 1);
    }
    throw NotLocallyScaling("no scaling radius found up to depth " + std::to_string(options.max_depth) + " (" +
                            std::to_string(open.size()) + " coset(s) of depth " +
                            std::to_string(options.max_depth) + " undecided, e.g. residue " +
                            std::to_string(open.front() % modulus) + ")");
}

TransitionMatrix transition_matrix(const RationalPoly &f, const ScalingProfile &profile) {
    (void)f;
    const auto &p = profile.prime;
    const std::uint64_t states = profile.states();
    std::vector<StochasticMatrix::Row> rows(states);
    for (std::uint64_t i = 0; i < states; ++i) {
        unsigned c = profile.scale_exponents[i];
        std::uint64_t step = power_u64(p, profile.depth - c);
        std::uint64_t t = profile.image_centers[i] % step;
        Rational value(Integer(1), power(p, c));
        for (std::uint64_t j = t; j < states; j += step)
            rows[i].push_back({static_cast<std::size_t>(j), value});
    }
    return {p, profile.depth, StochasticMatrix(std::move(rows))};
}

bool is_measure_preserving(const StochasticMatrix &a) {
    for (const auto &s : a.column_sums())
        if (s != 1)
            return false;
    return true;
}

bool is_measure_preserving(const TransitionMatrix &a) { return is_measure_preserving(a.matrix); }

TransitionMatrix brute_force_matrix(const RationalPoly &f, const Prime &p, unsigned depth, unsigned enum_depth) {
    if (enum_depth < depth)
        throw InputError("enumeration depth must be at least the coset depth");
    const std::uint64_t states = power_u64(p, depth);
    const std::uint64_t total = power_u64(p, enum_depth);
    PadicEvaluator eval(f, p);
    std::vector<std::map<std::size_t, unsigned long>> counts(states);
    for (std::uint64_t x = 0; x < total; ++x) {
        Integer image;
        try {
            image = eval.residue_at(Integer(static_cast<unsigned long>(x)), depth);
        } catch (const NotIntegral &e) {
            throw NotSelfMap(e.what());
        }
        ++counts[x % states][image.get_ui()];
    }
    const Integer per_row = power(p, enum_depth - depth);
    std::vector<StochasticMatrix::Row> rows(states);
    for (std::uint64_t i = 0; i < states; ++i)
        for (const auto &[j, n] : counts[i]) {
            Rational v(Integer(n), per_row);
            v.canonicalize();
            rows[i].push_back({j, v});
        }
    return {p, depth, StochasticMatrix(std::move(rows))};
}

} // namespace padyn

#include "padyn/analysis.hpp"

#include "padyn/errors.hpp"

namespace padyn {

AnalysisReport analyze(const RationalPoly &f, const Prime &p, const AnalyzeOptions &options) {
    // The Mahler test is complete for polynomials, so run it first.
    MahlerSeries mahler = to_mahler(f, p);
    Rational sup = sup_norm(mahler);
    if (sup > 1)
        throw NotSelfMap("map does not send Z_" + std::to_string(p.value()) + " into itself (Mahler sup norm " +
                         to_string(sup) + ")");

    ScalingOptions scaling{options.max_depth, options.max_states};
    ScalingProfile profile = find_scaling_radius(f, p, scaling);
    TransitionMatrix matrix = transition_matrix(f, profile);

    AnalysisReport r{.prime = p,
                     .map = f,
                     .profile = std::move(profile),
                     .matrix = std::move(matrix),
                     .mahler = std::move(mahler),
                     .sup_norm = sup};
    r.lipschitz = lipschitz_constant(r.mahler);
    r.bernoulli = bernoulli_criterion(r.mahler);

    const auto &a = r.matrix.matrix;
    r.column_sums = a.column_sums();
    r.measure_preserving = is_measure_preserving(a);
    if (r.measure_preserving) {
        r.invariant_vector.assign(a.size(), coset_measure(p, r.matrix.depth));
    } else {
        r.stationary = stationary_distributions(a);
        r.invariant_vector.assign(a.size(), Rational(0));
        for (const auto &v : r.stationary)
            for (std::size_t i = 0; i < v.size(); ++i)
                r.invariant_vector[i] += v[i];
        for (auto &x : r.invariant_vector)
            x /= static_cast<unsigned long>(r.stationary.size());
    }
    r.decomposition = decompose(a, r.invariant_vector);
    for (std::size_t k = 0; k < r.decomposition.components.size(); ++k) {
        auto cls = classify_component(r.decomposition.component_matrices[k]);
        if (r.decomposition.components[k].size() != a.size())
            cls.isometrically_bernoulli = false;
        r.classes.push_back(cls);
    }
    return r;
}

} // namespace padyn

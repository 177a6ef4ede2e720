#ifndef PADYN_ANALYSIS_HPP
#define PADYN_ANALYSIS_HPP

#include <vector>

#include "padyn/mahler.hpp"
#include "padyn/markov.hpp"
#include "padyn/scaling.hpp"

namespace padyn {

struct AnalyzeOptions {
    unsigned max_depth = 8;
    std::uint64_t max_states = 3000;
};

/// Everything the full pipeline learns about one polynomial map.
struct AnalysisReport {
    Prime prime;
    RationalPoly map;
    ScalingProfile profile;
    TransitionMatrix matrix;
    std::vector<Rational> column_sums;
    bool measure_preserving = false;
    /// Uniform Haar weights when measure-preserving; otherwise the mean of
    /// the stationary distributions, which is positive on every recurrent
    /// class.
    RowVector invariant_vector;
    Decomposition decomposition;
    /// One per decomposition component. isometrically_bernoulli is only set
    /// when the component is the whole coset space.
    std::vector<ComponentClass> classes;
    /// Stationary distributions, filled only when Haar measure is not
    /// preserved.
    std::vector<RowVector> stationary;
    MahlerSeries mahler;
    Rational sup_norm;
    Rational lipschitz;
    BernoulliVerdict bernoulli;
};

/// Radius, matrix, measure preservation, ergodic decomposition,
/// per-component classification, stationary measures and the Mahler-side
/// Bernoulli verdict. Propagates errors of the individual steps.
AnalysisReport analyze(const RationalPoly &f, const Prime &p, const AnalyzeOptions &options = {});

} // namespace padyn

#endif

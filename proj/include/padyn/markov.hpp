#ifndef PADYN_MARKOV_HPP
#define PADYN_MARKOV_HPP

// Exact stochastic-matrix machinery for finite Markov shifts: stationary
// vectors, ergodic decomposition, irreducibility and primitivity, cylinder
// measures and the local-isometry / ergodic-Markov classification.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "padyn/arith.hpp"

namespace padyn {

/// A row-stochastic matrix with exact nonnegative rational entries, stored
/// by rows as sorted (column, value) lists of the positive entries.
class StochasticMatrix {
  public:
    struct Entry {
        std::size_t col;
        Rational value;

        friend bool operator==(const Entry &, const Entry &) = default;
    };
    using Row = std::vector<Entry>;

    StochasticMatrix() = default;
    /// Zero entries are dropped and duplicate columns summed. Throws
    /// NotStochastic on a negative entry, an out-of-range column or a row
    /// that does not sum to exactly 1.
    explicit StochasticMatrix(std::vector<Row> rows);

    static StochasticMatrix from_dense(const std::vector<std::vector<Rational>> &dense);
    static StochasticMatrix identity(std::size_t n);

    std::size_t size() const { return rows_.size(); }
    const Row &row(std::size_t i) const { return rows_[i]; }
    Rational at(std::size_t i, std::size_t j) const;
    bool positive(std::size_t i, std::size_t j) const;

    std::vector<Rational> column_sums() const;
    std::vector<std::vector<Rational>> dense() const;
    std::size_t nonzeros() const;

    /// Restriction to a set of states that no row leaves (a closed class).
    /// States are renumbered in the order given.
    StochasticMatrix restricted(std::span<const std::size_t> states) const;

    friend bool operator==(const StochasticMatrix &, const StochasticMatrix &) = default;

  private:
    std::vector<Row> rows_;
};

using RowVector = std::vector<Rational>;

/// (vA)(j) = sum_i v(i) A(i,j).
RowVector mat_vec_product(const RowVector &v, const StochasticMatrix &a);

/// Strongly connected components of the positive-entry digraph, each sorted
/// ascending, listed by smallest member. Only states with keep[i] set take
/// part when keep is non-empty.
std::vector<std::vector<std::size_t>> strongly_connected_components(const StochasticMatrix &a,
                                                                     const std::vector<bool> &keep = {});

/// One stationary probability vector per recurrent (closed) class, each
/// supported on exactly that class, ordered by the class's smallest state.
std::vector<RowVector> stationary_distributions(const StochasticMatrix &a);

struct Decomposition {
    std::vector<std::vector<std::size_t>> components;
    std::vector<std::size_t> transient_states;
    std::vector<StochasticMatrix> component_matrices;
};

/// Ergodic decomposition of (A, v) for a nonnegative stationary v: the
/// support of v splits into closed irreducible classes, the complement is
/// reported as transient. Throws NegativeEntry / NotStationary.
Decomposition decompose(const StochasticMatrix &a, const RowVector &v);

bool is_irreducible(const StochasticMatrix &a);

/// Irreducible and some power has all entries positive; decided with
/// boolean repeated squaring up to the Wielandt bound n^2 - 2n + 2.
bool is_primitive(const StochasticMatrix &a);

/// gcd of cycle lengths of an irreducible matrix, from BFS levels rooted at
/// state 0. Primitive exactly when this is 1.
std::size_t period(const StochasticMatrix &a);

bool is_permutation(const StochasticMatrix &a);

enum class ComponentKind { LocalIsometry, ErgodicMarkov };

std::string_view to_string(ComponentKind kind);

/// Class of one irreducible component. There is no weakly-mixing label: an
/// ergodic component is either mixing or a finite cycle.
struct ComponentClass {
    ComponentKind kind = ComponentKind::ErgodicMarkov;
    bool mixing = false;
    bool isometrically_bernoulli = false;
};

/// LocalIsometry iff A_k is a permutation matrix; otherwise ErgodicMarkov,
/// mixing iff primitive, isometrically Bernoulli iff every entry of A_k
/// is equal. Whether A_k spans the whole space is the caller's business.
ComponentClass classify_component(const StochasticMatrix &component);

/// mu_{A,v}([d_0 ... d_l]) = v(d_0) A(d_0,d_1) ... A(d_{l-1},d_l). The
/// empty word is the whole space.
Rational cylinder_measure(const StochasticMatrix &a, const RowVector &v,
                          std::span<const std::size_t> word);

} // namespace padyn

#endif

#include "padyn/markov.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>

#include "padyn/errors.hpp"

namespace padyn {

StochasticMatrix::StochasticMatrix(std::vector<Row> rows) : rows_(std::move(rows)) {
    const std::size_t n = rows_.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::map<std::size_t, Rational> merged;
        for (auto &e : rows_[i]) {
            if (e.col >= n)
                throw NotStochastic("row " + std::to_string(i) + " has column " + std::to_string(e.col) +
                                    " outside 0.." + std::to_string(n - 1));
            e.value.canonicalize();
            if (e.value < 0)
                throw NotStochastic("negative entry in row " + std::to_string(i));
            merged[e.col] += e.value;
        }
        Row clean;
        Rational sum = 0;
        for (auto &[col, value] : merged) {
            if (value == 0)
                continue;
            sum += value;
            clean.push_back({col, value});
        }
        if (sum != 1)
            throw NotStochastic("row " + std::to_string(i) + " sums to " + to_string(sum));
        rows_[i] = std::move(clean);
    }
}

StochasticMatrix StochasticMatrix::from_dense(const std::vector<std::vector<Rational>> &dense) {
    std::vector<Row> rows(dense.size());
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (dense[i].size() != dense.size())
            throw NotStochastic("matrix is not square");
        for (std::size_t j = 0; j < dense[i].size(); ++j)
            if (dense[i][j] != 0)
                rows[i].push_back({j, dense[i][j]});
    }
    return StochasticMatrix(std::move(rows));
}

StochasticMatrix StochasticMatrix::identity(std::size_t n) {
    std::vector<Row> rows(n);
    for (std::size_t i = 0; i < n; ++i)
        rows[i].push_back({i, Rational(1)});
    return StochasticMatrix(std::move(rows));
}

Rational StochasticMatrix::at(std::size_t i, std::size_t j) const {
    const auto &r = rows_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry &e, std::size_t c) { return e.col < c; });
    if (it != r.end() && it->col == j)
        return it->value;
    return 0;
}

bool StochasticMatrix::positive(std::size_t i, std::size_t j) const { return at(i, j) > 0; }

std::vector<Rational> StochasticMatrix::column_sums() const {
    std::vector<Rational> sums(size());
    for (const auto &r : rows_)
        for (const auto &e : r)
            sums[e.col] += e.value;
    return sums;
}

std::vector<std::vector<Rational>> StochasticMatrix::dense() const {
    std::vector<std::vector<Rational>> d(size(), std::vector<Rational>(size()));
    for (std::size_t i = 0; i < size(); ++i)
        for (const auto &e : rows_[i])
            d[i][e.col] = e.value;
    return d;
}

std::size_t StochasticMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto &r : rows_)
        n += r.size();
    return n;
}

StochasticMatrix StochasticMatrix::restricted(std::span<const std::size_t> states) const {
    std::vector<std::size_t> index(size(), SIZE_MAX);
    for (std::size_t k = 0; k < states.size(); ++k)
        index.at(states[k]) = k;
    std::vector<Row> rows(states.size());
    for (std::size_t k = 0; k < states.size(); ++k) {
        for (const auto &e : rows_[states[k]]) {
            if (index[e.col] == SIZE_MAX)
                throw InputError("state " + std::to_string(states[k]) + " leaves the restricted set");
            rows[k].push_back({index[e.col], e.value});
        }
    }
    return StochasticMatrix(std::move(rows));
}

RowVector mat_vec_product(const RowVector &v, const StochasticMatrix &a) {
    if (v.size() != a.size())
        throw InputError("row vector length " + std::to_string(v.size()) + " does not match " +
                         std::to_string(a.size()) + " states");
    RowVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (v[i] == 0)
            continue;
        for (const auto &e : a.row(i))
            out[e.col] += v[i] * e.value;
    }
    return out;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const StochasticMatrix &a,
                                                                     const std::vector<bool> &keep) {
    // Iterative Tarjan.
    const std::size_t n = a.size();
    auto kept = [&](std::size_t i) { return keep.empty() || keep[i]; };
    constexpr std::size_t unvisited = SIZE_MAX;
    std::vector<std::size_t> number(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> call;  // (vertex, next edge)
    std::vector<std::vector<std::size_t>> sccs;
    std::size_t counter = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (!kept(root) || number[root] != unvisited)
            continue;
        call.push_back({root, 0});
        number[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto &[v, edge] = call.back();
            const auto &row = a.row(v);
            if (edge < row.size()) {
                std::size_t w = row[edge++].col;
                if (!kept(w))
                    continue;
                if (number[w] == unvisited) {
                    number[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], number[w]);
                }
                continue;
            }
            std::size_t done = v;
            call.pop_back();
            if (!call.empty())
                low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == number[done]) {
                std::vector<std::size_t> scc;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    scc.push_back(w);
                } while (w != done);
                std::sort(scc.begin(), scc.end());
                sccs.push_back(std::move(scc));
            }
        }
    }
    std::sort(sccs.begin(), sccs.end(), [](const auto &x, const auto &y) { return x.front() < y.front(); });
    return sccs;
}

namespace {

bool is_closed(const StochasticMatrix &a, const std::vector<std::size_t> &cls, const std::vector<bool> &member) {
    for (auto i : cls)
        for (const auto &e : a.row(i))
            if (!member[e.col])
                return false;
    return true;
}

/// Unique probability vector with v = vA on an irreducible matrix, by exact
/// Gauss-Jordan elimination on (A^T - I) with one row replaced by sum v = 1.
RowVector solve_irreducible_stationary(const StochasticMatrix &a) {
    const std::size_t k = a.size();
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < k; ++i)
        for (const auto &e : a.row(i))
            m[e.col][i] += e.value;
    for (std::size_t j = 0; j < k; ++j)
        m[j][j] -= 1;
    for (std::size_t i = 0; i < k; ++i)
        m[k - 1][i] = 1;
    m[k - 1][k] = 1;

    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && m[pivot][col] == 0)
            ++pivot;
        if (pivot == k)
            throw InternalInconsistency("singular stationary system for an irreducible class");
        std::swap(m[pivot], m[col]);
        Rational inv = 1 / m[col][col];
        for (std::size_t c = col; c <= k; ++c)
            m[col][c] *= inv;
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            Rational factor = m[r][col];
            for (std::size_t c = col; c <= k; ++c)
                if (m[col][c] != 0)
                    m[r][c] -= factor * m[col][c];
        }
    }
    RowVector v(k);
    for (std::size_t i = 0; i < k; ++i)
        v[i] = m[i][k];
    return v;
}

} // namespace

std::vector<RowVector> stationary_distributions(const StochasticMatrix &a) {
    std::vector<RowVector> out;
    for (const auto &cls : strongly_connected_components(a)) {
        std::vector<bool> member(a.size(), false);
        for (auto i : cls)
            member[i] = true;
        if (!is_closed(a, cls, member))
            continue;
        RowVector local = solve_irreducible_stationary(a.restricted(cls));
        RowVector v(a.size());
        for (std::size_t k = 0; k < cls.size(); ++k) {
            if (local[k] <= 0)
                throw InternalInconsistency("stationary vector of an irreducible class is not positive");
            v[cls[k]] = local[k];
        }
        if (mat_vec_product(v, a) != v)
            throw InternalInconsistency("computed stationary vector is not fixed by A");
        out.push_back(std::move(v));
    }
    return out;
}

Decomposition decompose(const StochasticMatrix &a, const RowVector &v) {
    if (v.size() != a.size())
        throw InputError("row vector length does not match the matrix");
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < 0)
            throw NegativeEntry("v(" + std::to_string(i) + ") = " + to_string(v[i]) + " is negative");
    if (mat_vec_product(v, a) != v)
        throw NotStationary("v is not fixed by A");

    std::vector<bool> support(a.size());
    Decomposition d;
    for (std::size_t i = 0; i < v.size(); ++i) {
        support[i] = v[i] > 0;
        if (!support[i])
            d.transient_states.push_back(i);
    }
    d.components = strongly_connected_components(a, support);
    std::vector<std::size_t> owner(a.size(), SIZE_MAX);
    for (std::size_t k = 0; k < d.components.size(); ++k)
        for (auto i : d.components[k])
            owner[i] = k;
    // Flux balance: no positive entry may leave a class of the support.
    for (std::size_t k = 0; k < d.components.size(); ++k)
        for (auto i : d.components[k])
            for (const auto &e : a.row(i))
                if (owner[e.col] != k)
                    throw InternalInconsistency("positive entry " + std::to_string(i) + " -> " +
                                                std::to_string(e.col) + " crosses ergodic components");
    for (const auto &c : d.components)
        d.component_matrices.push_back(a.restricted(c));
    return d;
}

bool is_irreducible(const StochasticMatrix &a) {
    if (a.size() == 0)
        return false;
    return strongly_connected_components(a).size() == 1;
}

namespace {

using BitRow = std::vector<std::uint64_t>;

std::vector<BitRow> boolean_square(const std::vector<BitRow> &m) {
    const std::size_t n = m.size();
    const std::size_t words = n ? m[0].size() : 0;
    std::vector<BitRow> out(n, BitRow(words, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if ((m[i][k / 64] >> (k % 64)) & 1u)
                for (std::size_t w = 0; w < words; ++w)
                    out[i][w] |= m[k][w];
    return out;
}

bool all_positive(const std::vector<BitRow> &m) {
    const std::size_t n = m.size();
    for (const auto &row : m)
        for (std::size_t j = 0; j < n; ++j)
            if (!((row[j / 64] >> (j % 64)) & 1u))
                return false;
    return true;
}

} // namespace

bool is_primitive(const StochasticMatrix &a) {
    if (!is_irreducible(a))
        return false;
    const std::size_t n = a.size();
    const std::size_t words = (n + 63) / 64;
    std::vector<BitRow> m(n, BitRow(words, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (const auto &e : a.row(i))
            m[i][e.col / 64] |= std::uint64_t{1} << (e.col % 64);
    const std::size_t wielandt = n * n - 2 * n + 2;
    std::size_t exponent = 1;
    while (true) {
        if (all_positive(m))
            return true;
        if (exponent >= wielandt)
            return false;
        m = boolean_square(m);
        exponent *= 2;
    }
}

std::size_t period(const StochasticMatrix &a) {
    if (!is_irreducible(a))
        throw InputError("period is defined for irreducible matrices only");
    std::vector<long> level(a.size(), -1);
    std::queue<std::size_t> queue;
    level[0] = 0;
    queue.push(0);
    std::size_t g = 0;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop();
        for (const auto &e : a.row(u)) {
            if (level[e.col] < 0) {
                level[e.col] = level[u] + 1;
                queue.push(e.col);
            }
        }
    }
    for (std::size_t u = 0; u < a.size(); ++u)
        for (const auto &e : a.row(u)) {
            long diff = level[u] + 1 - level[e.col];
            g = std::gcd(g, static_cast<std::size_t>(diff < 0 ? -diff : diff));
        }
    return g;
}

bool is_permutation(const StochasticMatrix &a) {
    std::vector<int> hits(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto &r = a.row(i);
        if (r.size() != 1 || r[0].value != 1)
            return false;
        if (++hits[r[0].col] > 1)
            return false;
    }
    return true;
}

std::string_view to_string(ComponentKind kind) {
    switch (kind) {
    case ComponentKind::LocalIsometry:
        return "LocalIsometry";
    case ComponentKind::ErgodicMarkov:
        return "ErgodicMarkov";
    }
    return "?";
}

ComponentClass classify_component(const StochasticMatrix &component) {
    if (!is_irreducible(component))
        throw InputError("classify_component needs an irreducible matrix");
    ComponentClass c;
    if (is_permutation(component)) {
        c.kind = ComponentKind::LocalIsometry;
        return c;
    }
    c.kind = ComponentKind::ErgodicMarkov;
    c.mixing = is_primitive(component);
    const std::size_t n = component.size();
    bool all_equal = component.nonzeros() == n * n;
    if (all_equal) {
        const Rational &first = component.row(0).front().value;
        for (std::size_t i = 0; i < n && all_equal; ++i)
            for (const auto &e : component.row(i))
                if (e.value != first) {
                    all_equal = false;
                    break;
                }
    }
    c.isometrically_bernoulli = all_equal;
    return c;
}

Rational cylinder_measure(const StochasticMatrix &a, const RowVector &v, std::span<const std::size_t> word) {
    if (word.empty())
        return std::accumulate(v.begin(), v.end(), Rational(0));
    Rational m = v.at(word[0]);
    for (std::size_t t = 0; t + 1 < word.size() && m != 0; ++t)
        m *= a.at(word[t], word[t + 1]);
    return m;
}

} // namespace padyn

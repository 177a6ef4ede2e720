#include "padyn/report.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "padyn/errors.hpp"
#include "padyn/expr.hpp"

namespace padyn {

namespace {

Json rationals(const std::vector<Rational> &xs) {
    Json out = Json::array();
    for (const auto &x : xs)
        out.push_back(to_string(x));
    return out;
}

Json states(const std::vector<std::size_t> &xs) {
    Json out = Json::array();
    for (auto x : xs)
        out.push_back(x);
    return out;
}

std::string class_name(const ComponentClass &c) {
    return std::string(to_string(c.kind));
}

std::vector<std::string> notes_for(const AnalysisReport &r) {
    std::vector<std::string> notes;
    notes.push_back("row i of the matrix carries p^-c_i on each of the p^c_i cosets j = f(i) mod p^(m - c_i)");
    if (!r.measure_preserving) {
        notes.push_back("Haar measure is not preserved; each stationary distribution is normalized to total mass 1");
        notes.push_back("the decomposition uses the mean of the stationary distributions as invariant vector");
    }
    if (!r.decomposition.transient_states.empty())
        notes.push_back("transient states carry no invariant mass and belong to no component");
    return notes;
}

} // namespace

Json report_json(const AnalysisReport &r, const std::string &input) {
    Json j;
    j["schema_version"] = schema_version;
    j["tool_version"] = tool_version;
    j["input"] = {{"source", input}, {"polynomial", format_polynomial(r.map)}};
    j["prime"] = r.prime.value();
    j["radius_exponent"] = r.profile.depth;
    j["scale_exponents"] = r.profile.scale_exponents;
    j["image_centers"] = r.profile.image_centers;

    Json matrix = Json::array();
    const auto &a = r.matrix.matrix;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (const auto &e : a.row(i))
            matrix.push_back(Json::array({i, e.col, to_string(e.value)}));
    j["matrix"] = std::move(matrix);
    j["column_sums"] = rationals(r.column_sums);
    j["measure_preserving"] = r.measure_preserving;

    Json components = Json::array();
    for (std::size_t k = 0; k < r.classes.size(); ++k)
        components.push_back({{"states", states(r.decomposition.components[k])},
                              {"class", class_name(r.classes[k])},
                              {"mixing", r.classes[k].mixing},
                              {"bernoulli", r.classes[k].isometrically_bernoulli}});
    j["components"] = std::move(components);
    j["transient_states"] = states(r.decomposition.transient_states);

    if (!r.measure_preserving) {
        Json stationary = Json::array();
        for (const auto &v : r.stationary)
            stationary.push_back(rationals(v));
        j["stationary"] = std::move(stationary);
    }

    Json verdict = {{"applies", r.bernoulli.applies}, {"max_weight", to_string(r.bernoulli.max_weight)}};
    verdict["ell"] = r.bernoulli.applies ? Json(r.bernoulli.ell) : Json(nullptr);
    verdict["argmax"] = r.bernoulli.argmax ? Json(*r.bernoulli.argmax) : Json(nullptr);
    j["mahler"] = {{"sup_norm", to_string(r.sup_norm)}, {"lipschitz", to_string(r.lipschitz)}, {"bernoulli", verdict}};
    j["notes"] = notes_for(r);
    return j;
}

std::string report_text(const AnalysisReport &r, const std::string &input) {
    std::ostringstream os;
    const unsigned long p = r.prime.value();
    os << "map            " << format_polynomial(r.map) << "   (input: " << input << ")\n";
    os << "prime          " << p << "\n";
    os << "radius         r = " << to_string(coset_measure(r.prime, r.profile.depth)) << "  (m = " << r.profile.depth
       << ", " << r.profile.states() << " cosets)\n";
    os << "scale exps     ";
    for (std::size_t i = 0; i < r.profile.states(); ++i)
        os << (i ? " " : "") << r.profile.scale_exponents[i];
    os << "\n";
    os << "measure-pres.  " << (r.measure_preserving ? "yes" : "no") << "\n";
    if (!r.measure_preserving) {
        os << "column sums    ";
        for (std::size_t i = 0; i < r.column_sums.size(); ++i)
            os << (i ? " " : "") << to_string(r.column_sums[i]);
        os << "\n";
    }
    os << "components     " << r.classes.size() << "\n";
    for (std::size_t k = 0; k < r.classes.size(); ++k) {
        const auto &c = r.classes[k];
        os << "  [" << k << "] " << class_name(c) << (c.mixing ? ", mixing" : ", not mixing")
           << (c.isometrically_bernoulli ? ", isometrically Bernoulli" : "") << "; states";
        for (auto s : r.decomposition.components[k])
            os << " " << s;
        os << "\n";
    }
    if (!r.decomposition.transient_states.empty()) {
        os << "transient      ";
        for (std::size_t i = 0; i < r.decomposition.transient_states.size(); ++i)
            os << (i ? " " : "") << r.decomposition.transient_states[i];
        os << "\n";
    }
    for (std::size_t k = 0; k < r.stationary.size(); ++k) {
        os << "stationary[" << k << "]  ";
        for (std::size_t i = 0; i < r.stationary[k].size(); ++i)
            os << (i ? " " : "") << to_string(r.stationary[k][i]);
        os << "\n";
    }
    os << "sup norm       " << to_string(r.sup_norm) << "\n";
    os << "lipschitz      " << to_string(r.lipschitz) << "\n";
    os << "bernoulli      ";
    if (r.bernoulli.applies)
        os << "yes, ell = " << r.bernoulli.ell << " (k_M = " << *r.bernoulli.argmax << ")\n";
    else
        os << "inconclusive\n";
    return os.str();
}

Json mahler_json(const MahlerSeries &s, const BernoulliVerdict &v, const std::string &input) {
    Json j;
    j["schema_version"] = schema_version;
    j["tool_version"] = tool_version;
    j["input"] = input;
    j["prime"] = s.prime.value();
    Json rows = Json::array();
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
        Rational w = norm(s.coeffs[k], s.prime);
        if (k >= 1)
            w *= Rational(kappa(k, s.prime));
        rows.push_back({{"k", k},
                        {"a_k", to_string(s.coeffs[k])},
                        {"norm", to_string(norm(s.coeffs[k], s.prime))},
                        {"weight", to_string(w)}});
    }
    j["coefficients"] = std::move(rows);
    j["sup_norm"] = to_string(sup_norm(s));
    j["lipschitz"] = to_string(lipschitz_constant(s));
    j["bernoulli"] = {{"applies", v.applies},
                      {"ell", v.applies ? Json(v.ell) : Json(nullptr)},
                      {"argmax", v.argmax ? Json(*v.argmax) : Json(nullptr)},
                      {"max_weight", to_string(v.max_weight)}};
    return j;
}

std::string mahler_text(const MahlerSeries &s, const BernoulliVerdict &v) {
    std::ostringstream os;
    os << "k\ta_k\t|a_k|\tkappa_k|a_k|\n";
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
        Rational n = norm(s.coeffs[k], s.prime);
        Rational w = k >= 1 ? Rational(n * Rational(kappa(k, s.prime))) : n;
        os << k << "\t" << to_string(s.coeffs[k]) << "\t" << to_string(n) << "\t" << to_string(w);
        if (v.applies && v.argmax && *v.argmax == k)
            os << "\t<- unit at k = p^" << v.ell;
        os << "\n";
    }
    os << "sup norm " << to_string(sup_norm(s)) << ", lipschitz " << to_string(lipschitz_constant(s)) << "\n";
    if (v.applies)
        os << "verdict: isometrically Bernoulli, ell = " << v.ell << "\n";
    else
        os << "verdict: inconclusive\n";
    return os.str();
}

TransitionMatrix read_matrix(std::istream &in) {
    std::string line;
    std::size_t lineno = 0;
    auto next = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos)
                line.erase(hash);
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                return true;
        }
        return false;
    };
    auto where = [&] { return "line " + std::to_string(lineno) + ": "; };

    if (!next())
        throw ParseError("empty matrix file");
    unsigned long p = 0;
    unsigned m = 0;
    {
        std::istringstream header(line);
        std::string rest;
        if (!(header >> p >> m) || (header >> rest))
            throw ParseError(where() + "expected header 'p m'");
    }
    if (!is_prime(p))
        throw ParseError(where() + std::to_string(p) + " is not prime");
    const Prime prime(p);
    const std::uint64_t n = power_u64(prime, m);

    std::vector<StochasticMatrix::Row> rows(n);
    while (next()) {
        std::istringstream fields(line);
        std::uint64_t i = 0, j = 0;
        std::string value, rest;
        if (!(fields >> i >> j >> value) || (fields >> rest))
            throw ParseError(where() + "expected 'i j num/den'");
        if (i >= n || j >= n)
            throw ParseError(where() + "state out of range [0, " + std::to_string(n) + ")");
        Rational x;
        try {
            x = parse_rational(value);
        } catch (const ParseError &e) {
            throw ParseError(where() + e.what());
        }
        rows[i].push_back({j, x});
    }
    return {prime, m, StochasticMatrix(std::move(rows))};
}

void write_matrix(std::ostream &out, const TransitionMatrix &a) {
    out << a.prime.value() << " " << a.depth << "\n";
    for (std::size_t i = 0; i < a.matrix.size(); ++i)
        for (const auto &e : a.matrix.row(i))
            out << i << " " << e.col << " " << to_string(e.value) << "\n";
}

} // namespace padyn

#ifndef PADYN_REPORT_HPP
#define PADYN_REPORT_HPP

// Serialization: analysis reports as JSON and text, Mahler tables, and the
// sparse matrix file format
//
//   p m
//   i j num/den
//   ...
//
// with blank lines and '#' comments ignored.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "padyn/analysis.hpp"

namespace padyn {

inline constexpr const char *schema_version = "padyn-report/1";
inline constexpr const char *tool_version = "0.1.0";

using Json = nlohmann::ordered_json;

/// Every rational is a "num/den" string. Keys keep a fixed order so equal
/// reports serialize to identical bytes.
Json report_json(const AnalysisReport &r, const std::string &input);
std::string report_text(const AnalysisReport &r, const std::string &input);

Json mahler_json(const MahlerSeries &s, const BernoulliVerdict &v, const std::string &input);
std::string mahler_text(const MahlerSeries &s, const BernoulliVerdict &v);

/// Throws ParseError on syntax errors and NotStochastic on rows that do
/// not sum to 1.
TransitionMatrix read_matrix(std::istream &in);
void write_matrix(std::ostream &out, const TransitionMatrix &a);

} // namespace padyn

#endif

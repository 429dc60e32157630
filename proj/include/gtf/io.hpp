#pragma once

// JSON formats for series, loops, configurations, puncture paths and
// class combinations. Malformed documents raise FormatError.
//
//   series:  {"n", "N", "scalar": "rational"|"complex", "terms": [{"word", "num", "den"} | {"word", "re", "im"}]}
//            cyclic series add "cyclic": true; pair series add "pairs": true and use "left"/"right".
//   curve:   {"vertices": [["p/q", "p/q"], ...]}
//   config:  {"punctures": [["p/q", "p/q"], ...]}
//   path:    {"waypoints": [[[re, im], ...], ...]}

#include <filesystem>
#include <string>

#include <json.hpp>

#include "gtf/geometry.hpp"
#include "gtf/group_word.hpp"
#include "gtf/isomonodromy.hpp"
#include "gtf/necklace.hpp"
#include "gtf/surface.hpp"

namespace gtf::io {

using json = nlohmann::json;

json to_json(const FreeSeries<Rational>& s);
json to_json(const FreeSeries<Complex>& s);
json to_json(const CyclicSeries<Rational>& s);
json to_json(const CyclicSeries<Complex>& s);
json to_json(const CyclicPairSeries<Rational>& s);
json to_json(const CyclicPairSeries<Complex>& s);

json to_json(const GroupWord& w);
json to_json(const ConjClass& c);
json to_json(const ClassCombination& c);
json to_json(const ClassPairCombination& c);
json to_json(const CobracketValue& v);

json to_json(const Point& p);
json to_json(const PolylineLoop& loop);
json to_json(const Configuration& cfg);
json to_json(const ConfPath& path);

/// "rational" or "complex"; throws FormatError when absent or unknown.
std::string scalar_kind(const json& j);
bool is_cyclic(const json& j);

template <SeriesScalar S>
FreeSeries<S> free_series_from_json(const json& j);
template <SeriesScalar S>
CyclicSeries<S> cyclic_series_from_json(const json& j);

ConjClass conj_class_from_json(const json& j);
Point point_from_json(const json& j);
PolylineLoop curve_from_json(const json& j);
Configuration config_from_json(const json& j);
ConfPath path_from_json(const json& j);

json read_file(const std::filesystem::path& p);
/// Writes j with two-space indentation and a trailing newline.
void write_file(const std::filesystem::path& p, const json& j);

}  // namespace gtf::io

#include "gtf/io.hpp"

#include <fstream>
#include <sstream>

namespace gtf::io {

namespace {

json word_json(Word w) { return json(w.letters()); }

Word word_from(const json& j) {
    if (!j.is_array()) throw FormatError("word must be an array of generator indices");
    std::vector<int> letters;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw FormatError("word letters must be integers");
        const int l = x.get<int>();
        if (l < 1 || l > kMaxGenerators) throw FormatError("word letters are 1-indexed generator indices");
        letters.push_back(l);
    }
    if (letters.size() > static_cast<std::size_t>(kMaxWordLength))
        throw FormatError("word longer than the supported degree");
    return Word::from_letters(letters);
}

void put_coeff(json& term, const Rational& c) {
    term["num"] = c.get_num().get_str();
    term["den"] = c.get_den().get_str();
}
void put_coeff(json& term, const Complex& c) {
    term["re"] = c.real();
    term["im"] = c.imag();
}

std::string integer_text(const json& j, const char* field) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw FormatError(std::string("coefficient field '") + field + "' must be an integer or a string");
}

template <SeriesScalar S>
S coeff_from(const json& term) {
    if constexpr (std::is_same_v<S, Rational>) {
        if (!term.contains("num")) throw FormatError("rational term without 'num'");
        const std::string num = integer_text(term["num"], "num");
        const std::string den = term.contains("den") ? integer_text(term["den"], "den") : "1";
        try {
            return parse_rational(num + "/" + den);
        } catch (const std::exception& e) {
            throw FormatError(std::string("bad rational coefficient: ") + e.what());
        }
    } else {
        auto num = [&](const char* f) {
            if (!term.contains(f)) return 0.0;
            if (!term[f].is_number()) throw FormatError(std::string("field '") + f + "' must be a number");
            return term[f].get<double>();
        };
        if (term.contains("num")) return coeff_from<Rational>(term).get_d() + Complex{};
        return {num("re"), num("im")};
    }
}

template <SeriesScalar S>
json header(int n, int order) {
    return json{{"n", n}, {"N", order}, {"scalar", std::string(ScalarTraits<S>::name)}};
}

template <SeriesScalar S>
json free_json(const FreeSeries<S>& s) {
    json out = header<S>(s.generators(), s.order());
    json terms = json::array();
    for (const auto& [w, c] : s.terms()) {
        json t{{"word", word_json(w)}};
        put_coeff(t, c);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

template <SeriesScalar S>
json cyclic_json(const CyclicSeries<S>& s) {
    json out = header<S>(s.generators(), s.order());
    out["cyclic"] = true;
    json terms = json::array();
    for (const auto& [w, c] : s.terms()) {
        json t{{"word", word_json(w.word())}};
        put_coeff(t, c);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

template <SeriesScalar S>
json pair_json(const CyclicPairSeries<S>& s) {
    json out = header<S>(s.generators(), s.order());
    out["cyclic"] = true;
    out["pairs"] = true;
    json terms = json::array();
    for (const auto& [k, c] : s.terms()) {
        json t{{"left", word_json(k.left.word())}, {"right", word_json(k.right.word())}};
        put_coeff(t, c);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

void check_shape(const json& j, int& n, int& order) {
    if (!j.is_object()) throw FormatError("series document must be an object");
    for (const char* f : {"n", "N"})
        if (!j.contains(f) || !j[f].is_number_integer()) throw FormatError(std::string("series needs integer '") + f + "'");
    n = j["n"].get<int>();
    order = j["N"].get<int>();
    if (n < 1 || order < 0) throw FormatError("series needs n >= 1 and N >= 0");
    if (!j.contains("terms") || !j["terms"].is_array()) throw FormatError("series needs a 'terms' array");
}

template <SeriesScalar S>
void check_scalar(const json& j) {
    if (scalar_kind(j) != ScalarTraits<S>::name && !(std::is_same_v<S, Complex> && scalar_kind(j) == "rational"))
        throw FormatError("series scalar '" + scalar_kind(j) + "' where '" + std::string(ScalarTraits<S>::name) +
                          "' is required");
}

template <class Builder, class Key>
void add_checked(Builder& b, const Key& k, const auto& c) {
    try {
        b.add(k, c);
    } catch (const ContractError& e) {
        throw FormatError(e.what());
    }
}

Rational rational_from(const json& j) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception& e) {
            throw FormatError(std::string("bad rational coordinate: ") + e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw FormatError("coordinates must be \"p/q\" strings or integers");
}

Complex complex_from(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw FormatError("complex values are [re, im] number pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw FormatError(std::string("missing field '") + name + "'");
    return j[name];
}

}  // namespace

json to_json(const FreeSeries<Rational>& s) { return free_json(s); }
json to_json(const FreeSeries<Complex>& s) { return free_json(s); }
json to_json(const CyclicSeries<Rational>& s) { return cyclic_json(s); }
json to_json(const CyclicSeries<Complex>& s) { return cyclic_json(s); }
json to_json(const CyclicPairSeries<Rational>& s) { return pair_json(s); }
json to_json(const CyclicPairSeries<Complex>& s) { return pair_json(s); }

json to_json(const GroupWord& w) { return json(w.letters()); }
json to_json(const ConjClass& c) { return json(c.letters()); }

json to_json(const ClassCombination& c) {
    json terms = json::array();
    for (const auto& [k, v] : c) terms.push_back({{"class", to_json(k)}, {"coeff", v}});
    return json{{"terms", std::move(terms)}};
}

json to_json(const ClassPairCombination& c) {
    json terms = json::array();
    for (const auto& [k, v] : c) terms.push_back({{"left", to_json(k.first)}, {"right", to_json(k.second)}, {"coeff", v}});
    return json{{"terms", std::move(terms)}};
}

json to_json(const CobracketValue& v) {
    json out = to_json(v.total());
    out["loop_class"] = to_json(v.loop_class);
    out["rotation"] = v.rotation;
    out["intersection_terms"] = to_json(v.pairs)["terms"];
    return out;
}

json to_json(const Point& p) { return json::array({format_rational(p.x), format_rational(p.y)}); }

json to_json(const PolylineLoop& loop) {
    json v = json::array();
    for (const auto& p : loop.vertices()) v.push_back(to_json(p));
    return json{{"vertices", std::move(v)}};
}

json to_json(const Configuration& cfg) {
    json v = json::array();
    for (const auto& p : cfg.punctures()) v.push_back(to_json(p));
    return json{{"punctures", std::move(v)}};
}

json to_json(const ConfPath& path) {
    json w = json::array();
    for (const auto& zs : path.waypoints()) {
        json row = json::array();
        for (const auto& z : zs) row.push_back(json::array({z.real(), z.imag()}));
        w.push_back(std::move(row));
    }
    return json{{"waypoints", std::move(w)}};
}

std::string scalar_kind(const json& j) {
    const auto& s = field(j, "scalar");
    if (!s.is_string()) throw FormatError("'scalar' must be a string");
    const auto k = s.get<std::string>();
    if (k != "rational" && k != "complex") throw FormatError("unknown scalar kind '" + k + "'");
    return k;
}

bool is_cyclic(const json& j) { return j.is_object() && j.contains("cyclic") && j["cyclic"] == true; }

template <SeriesScalar S>
FreeSeries<S> free_series_from_json(const json& j) {
    int n = 0, order = 0;
    check_shape(j, n, order);
    check_scalar<S>(j);
    if (is_cyclic(j)) throw FormatError("expected a linear series, found a cyclic one");
    typename FreeSeries<S>::Builder b(n, order);
    for (const auto& t : j["terms"]) {
        const Word w = word_from(field(t, "word"));
        if (w.degree() > order) throw FormatError("term above the declared truncation order");
        add_checked(b, w, coeff_from<S>(t));
    }
    return std::move(b).build();
}

template <SeriesScalar S>
CyclicSeries<S> cyclic_series_from_json(const json& j) {
    int n = 0, order = 0;
    check_shape(j, n, order);
    check_scalar<S>(j);
    if (j.contains("pairs") && j["pairs"] == true) throw FormatError("expected a cyclic series, found pairs");
    typename CyclicSeries<S>::Builder b(n, order);
    for (const auto& t : j["terms"]) {
        const Word w = word_from(field(t, "word"));
        if (w.degree() > order) throw FormatError("term above the declared truncation order");
        add_checked(b, CyclicWord::of(w), coeff_from<S>(t));
    }
    return std::move(b).build();
}

template FreeSeries<Rational> free_series_from_json<Rational>(const json&);
template FreeSeries<Complex> free_series_from_json<Complex>(const json&);
template CyclicSeries<Rational> cyclic_series_from_json<Rational>(const json&);
template CyclicSeries<Complex> cyclic_series_from_json<Complex>(const json&);

ConjClass conj_class_from_json(const json& j) {
    if (!j.is_array()) throw FormatError("a class is an array of signed generator indices");
    std::vector<int> letters;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<int>() == 0) throw FormatError("class letters are nonzero integers");
        letters.push_back(x.get<int>());
    }
    return ConjClass::of(letters);
}

Point point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw FormatError("points are [x, y] pairs");
    return {rational_from(j[0]), rational_from(j[1])};
}

PolylineLoop curve_from_json(const json& j) {
    const auto& v = field(j, "vertices");
    if (!v.is_array()) throw FormatError("'vertices' must be an array");
    std::vector<Point> pts;
    for (const auto& p : v) pts.push_back(point_from_json(p));
    try {
        return PolylineLoop(std::move(pts));
    } catch (const std::logic_error& e) {
        throw FormatError(std::string("invalid curve: ") + e.what());
    }
}

Configuration config_from_json(const json& j) {
    const auto& v = field(j, "punctures");
    if (!v.is_array()) throw FormatError("'punctures' must be an array");
    std::vector<Point> pts;
    for (const auto& p : v) pts.push_back(point_from_json(p));
    return Configuration(std::move(pts));
}

ConfPath path_from_json(const json& j) {
    const auto& w = field(j, "waypoints");
    if (!w.is_array() || w.empty()) throw FormatError("'waypoints' must be a non-empty array");
    std::vector<std::vector<Complex>> rows;
    for (const auto& row : w) {
        if (!row.is_array()) throw FormatError("each waypoint is an array of [re, im] positions");
        std::vector<Complex> zs;
        for (const auto& z : row) zs.push_back(complex_from(z));
        rows.push_back(std::move(zs));
    }
    try {
        return ConfPath(std::move(rows));
    } catch (const std::logic_error& e) {
        throw FormatError(std::string("invalid path: ") + e.what());
    }
}

json read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw FormatError("cannot open " + p.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(p.string() + ": " + e.what());
    }
}

void write_file(const std::filesystem::path& p, const json& j) {
    std::ofstream out(p);
    if (!out) throw FormatError("cannot write " + p.string());
    out << j.dump(2) << '\n';
}

}  // namespace gtf::io

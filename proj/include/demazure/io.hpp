#pragma once

// JSON encoding of the result types. Weights and root vectors are plain
// coordinate arrays; multiplicity tables are keyed by weight labels.

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "affine.hpp"
#include "characters.hpp"
#include "crystals.hpp"
#include "pieri.hpp"
#include "report.hpp"

namespace demazure {

using json = nlohmann::json;

/// Inverse of to_string(Weight) for a known rank: "2ϖ1+ϖ3", "-ϖ2", "0", "3ϖ".
inline Weight parse_weight(int n, const std::string& text) {
    static const std::string varpi = "ϖ";
    Weight w = Weight::zero(n);
    if (text == "0") return w;
    std::size_t pos = 0;
    auto fail = [&] { throw Error(ErrorKind::invalid_argument, "cannot parse weight '" + text + "'"); };
    while (pos < text.size()) {
        Int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            fail();
        }
        Int coeff = 0;
        bool digits = false;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = coeff * 10 + (text[pos++] - '0');
            digits = true;
        }
        if (!digits) coeff = 1;
        if (text.compare(pos, varpi.size(), varpi) != 0) fail();
        pos += varpi.size();
        int j = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) j = j * 10 + (text[pos++] - '0');
        if (j == 0 && n == 1) j = 1;
        if (j < 1 || j > n) fail();
        w[j] += sign * coeff;
    }
    return w;
}

inline void to_json(json& j, const Weight& w) { j = w.coords; }
inline void from_json(const json& j, Weight& w) { w.coords = j.get<std::vector<Int>>(); }

inline void to_json(json& j, const QPlusVector& q) { j = q.coeffs; }
inline void from_json(const json& j, QPlusVector& q) { q.coeffs = j.get<std::vector<Int>>(); }

inline void to_json(json& j, const RootPos& a) { j = json::array({a.i, a.j}); }
inline void from_json(const json& j, RootPos& a) {
    a.i = j.at(0).get<int>();
    a.j = j.at(1).get<int>();
}

inline void to_json(json& j, const EpsSet& chi) { j = json{{"n", chi.n}, {"K", chi.K}, {"label", to_string(chi)}}; }
inline void from_json(const json& j, EpsSet& chi) {
    chi.n = j.at("n").get<int>();
    chi.K = j.at("K").get<std::vector<int>>();
}

inline void to_json(json& j, const AffineWeight& x) { j = x.a; }
inline void from_json(const json& j, AffineWeight& x) { x.a = j.get<std::vector<Int>>(); }

inline void to_json(json& j, const LevelZeroVector& v) { j = v.c; }
inline void from_json(const json& j, LevelZeroVector& v) { v.c = j.get<std::vector<Int>>(); }

inline void to_json(json& j, const LevelSplit& s) { j = json{{"s", s.s}, {"m", s.m}}; }
inline void from_json(const json& j, LevelSplit& s) {
    s.s = j.at("s").get<Int>();
    s.m = j.at("m").get<Int>();
}

inline void to_json(json& j, const PieriTerm& t) {
    j = json{{"chi", t.chi},
             {"mu", t.mu},
             {"target", t.target},
             {"shift", t.shift},
             {"decomposition", t.decomposition},
             {"label", to_string(t.target)}};
}
inline void from_json(const json& j, PieriTerm& t) {
    t.chi = j.at("chi").get<EpsSet>();
    t.mu = j.at("mu").get<QPlusVector>();
    t.target = j.at("target").get<Weight>();
    t.shift = j.at("shift").get<Int>();
    t.decomposition = j.at("decomposition").get<std::vector<RootPos>>();
}

inline void to_json(json& j, const MultiplicityTable& t) {
    json entries = json::object();
    for (auto& [w, c] : t.entries) entries[to_string(w)] = c;
    j = json{{"base", t.base}, {"level", t.level}, {"entries", entries}};
}
inline void from_json(const json& j, MultiplicityTable& t) {
    t.base = j.at("base").get<Weight>();
    t.level = j.at("level").get<Int>();
    t.entries.clear();
    for (auto& [key, c] : j.at("entries").items()) t.entries[parse_weight(t.base.rank(), key)] = c.get<Int>();
}

inline void to_json(json& j, const Character& c) {
    json terms = json::array();
    for (auto& [w, m] : c.terms) terms.push_back(json::array({w, m}));
    j = json{{"n", c.n}, {"terms", terms}};
}
inline void from_json(const json& j, Character& c) {
    c = Character(j.at("n").get<int>());
    for (auto& t : j.at("terms")) c.add_term(t.at(0).get<Weight>(), t.at(1).get<Int>());
}

inline void to_json(json& j, const SeriesTruncation& s) {
    json coeffs = json::array();
    for (auto& [k, c] : s.coeffs) coeffs.push_back(json::array({k, c}));
    j = json{{"mu", s.mu}, {"level", s.level}, {"bound", s.bound}, {"coeffs", coeffs}};
}
inline void from_json(const json& j, SeriesTruncation& s) {
    s.mu = j.at("mu").get<Weight>();
    s.level = j.at("level").get<Int>();
    s.bound = j.at("bound").get<Int>();
    s.coeffs.clear();
    for (auto& t : j.at("coeffs")) s.coeffs[t.at(0).get<QPlusVector>()] = t.at(1).get<Int>();
}

inline void to_json(json& j, const SocleData& d) {
    j = json{{"soc", d.soc}, {"Lambda", d.Lambda}, {"h", d.h}, {"sigma", d.sigma}, {"label", to_string(d.soc)},
             {"affine_label", to_string(d.Lambda)}};
}
inline void from_json(const json& j, SocleData& d) {
    d.soc = j.at("soc").get<Weight>();
    d.Lambda = j.at("Lambda").get<AffineWeight>();
    d.h = j.at("h").get<int>();
    d.sigma = j.at("sigma").get<std::vector<int>>();
}

inline void to_json(json& j, const DominantizeResult& r) {
    j = json{{"weight", r.weight}, {"word", r.word}, {"label", to_string(r.weight)}};
}
inline void from_json(const json& j, DominantizeResult& r) {
    r.weight = j.at("weight").get<AffineWeight>();
    r.word = j.at("word").get<std::vector<int>>();
}

inline void to_json(json& j, const CheckReport& r) {
    j = json{{"name", r.name},         {"passed", r.passed},     {"checked", r.checked},
             {"failed", r.failed},     {"failures", r.failures}, {"notes", r.notes}};
}
inline void from_json(const json& j, CheckReport& r) {
    r.name = j.at("name").get<std::string>();
    r.passed = j.at("passed").get<bool>();
    r.checked = j.at("checked").get<std::int64_t>();
    r.failed = j.at("failed").get<std::int64_t>();
    r.failures = j.at("failures").get<std::vector<std::string>>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
}

inline void to_json(json& j, const CrystalBound& b) {
    j = json{{"lhs", b.lhs}, {"rhs", b.rhs}, {"inequality", b.inequality()}, {"equality", b.equality()}};
}
inline void from_json(const json& j, CrystalBound& b) {
    b.lhs = j.at("lhs").get<Int>();
    b.rhs = j.at("rhs").get<Int>();
}

inline void to_json(json& j, const KRElement& b) { j = json{{"n", b.n}, {"r", b.r}, {"s", b.s}, {"rows", b.rows}}; }
inline void from_json(const json& j, KRElement& b) {
    b.n = j.at("n").get<int>();
    b.r = j.at("r").get<int>();
    b.s = j.at("s").get<int>();
    b.rows = j.at("rows").get<std::vector<std::vector<int>>>();
}

}  // namespace demazure

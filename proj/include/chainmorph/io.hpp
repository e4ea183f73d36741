#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "enumerate.hpp"
#include "error.hpp"
#include "green.hpp"
#include "interval.hpp"
#include "partial_map.hpp"
#include "qbijection.hpp"
#include "regularity.hpp"
#include "regularity_q.hpp"
#include "symbolic.hpp"

namespace chainmorph {

using json = nlohmann::ordered_json;

// ---- finite maps ----

inline json map_to_json(const PartialMap& m) {
    json j;
    j["chain"] = m.n();
    if (m.is_full() && m.n() > 0) {
        j["full"] = m.raw();
        return j;
    }
    json pairs = json::object();
    for (int x : m.domain()) pairs[std::to_string(x)] = m(x);
    j["map"] = pairs;
    return j;
}

inline PartialMap map_from_json(const json& j, std::optional<int> chain = std::nullopt) {
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "map spec must be a JSON object");
    int n = 0;
    if (j.contains("chain")) {
        if (!j["chain"].is_number_integer()) throw Error(ErrorKind::ParseError, "\"chain\" must be an integer");
        n = j["chain"].get<int>();
        if (chain && *chain != n) throw Error(ErrorKind::ChainMismatch, "map spec is on X_" + std::to_string(n) + ", expected X_" + std::to_string(*chain));
    } else if (chain) {
        n = *chain;
    } else {
        throw Error(ErrorKind::ParseError, "map spec lacks \"chain\"");
    }
    if (n < 0) throw Error(ErrorKind::ParseError, "negative chain size");
    if (j.contains("full")) {
        const auto& f = j["full"];
        if (!f.is_array() || static_cast<int>(f.size()) != n) throw Error(ErrorKind::ParseError, "\"full\" must list exactly n values");
        PartialMap m(n);
        for (int x = 1; x <= n; ++x) {
            if (!f[x - 1].is_number_integer()) throw Error(ErrorKind::ParseError, "map values must be integers");
            m.set(x, f[x - 1].get<int>());
        }
        return m;
    }
    if (j.contains("map")) {
        const auto& mp = j["map"];
        if (!mp.is_object()) throw Error(ErrorKind::ParseError, "\"map\" must be an object");
        PartialMap m(n);
        for (auto it = mp.begin(); it != mp.end(); ++it) {
            if (!it.value().is_number_integer()) throw Error(ErrorKind::ParseError, "map values must be integers");
            m.set(detail::parse_element(it.key(), n), it.value().get<int>());
        }
        return m;
    }
    throw Error(ErrorKind::ParseError, "map spec needs \"full\" or \"map\"");
}

// Accepts a JSON spec carrying its own chain, or the short forms "[..]" and "{d:v,..}".
inline PartialMap parse_map_spec(std::string_view text, std::optional<int> chain) {
    auto s = trim(text);
    if (!s.empty() && s.front() == '{' && s.find("\"chain\"") != std::string_view::npos) {
        json j;
        try {
            j = json::parse(s);
        } catch (const json::exception& e) {
            throw Error(ErrorKind::ParseError, e.what());
        }
        return map_from_json(j, chain);
    }
    if (!chain) throw Error(ErrorKind::ParseError, "short map spec needs a chain size");
    return parse_map(*chain, s);
}

inline json subset_to_json(const Subset& s) { return json(s); }

// ---- rationals and symbolic maps ----

inline json rat_to_json(const Rat& q) {
    if (denominator_of(q) == 1) {
        auto p = numerator_of(q);
        if (p >= std::numeric_limits<long long>::min() && p <= std::numeric_limits<long long>::max())
            return static_cast<long long>(p);
    }
    return format_rat(q);
}

inline Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw Error(ErrorKind::MalformedMap, "coefficient must be an integer or a \"p/q\" string, got " + j.dump());
}

inline json moebius_to_json(const MoebiusMap& f) { return json::array({rat_to_json(f.a), rat_to_json(f.b), rat_to_json(f.c), rat_to_json(f.d)}); }

inline MoebiusMap moebius_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw Error(ErrorKind::MalformedMap, "\"moebius\" needs four coefficients [a,b,c,d]");
    return MoebiusMap{rat_from_json(j[0]), rat_from_json(j[1]), rat_from_json(j[2]), rat_from_json(j[3])};
}

inline json symbolic_to_json(const PiecewiseMoebiusMap& m) {
    json pieces = json::array();
    for (const auto& p : m.pieces()) {
        json q;
        q["interval"] = format_interval(p.dom);
        if (p.is_constant())
            q["const"] = format_rat(p.constant());
        else
            q["moebius"] = moebius_to_json(p.moebius());
        pieces.push_back(q);
    }
    return json{{"pieces", pieces}};
}

inline PiecewiseMoebiusMap symbolic_from_json(const json& j) {
    if (!j.is_object() || !j.contains("pieces") || !j["pieces"].is_array())
        throw Error(ErrorKind::MalformedMap, "symbolic map needs a \"pieces\" array");
    std::vector<Piece> pieces;
    for (const auto& q : j["pieces"]) {
        if (!q.is_object() || !q.contains("interval") || !q["interval"].is_string())
            throw Error(ErrorKind::MalformedMap, "each piece needs an \"interval\" string");
        for (auto it = q.begin(); it != q.end(); ++it)
            if (it.key() != "interval" && it.key() != "moebius" && it.key() != "const")
                throw Error(ErrorKind::MalformedMap, "unknown piece field \"" + it.key() + "\"");
        auto dom = parse_interval(q["interval"].get<std::string>());
        bool has_m = q.contains("moebius"), has_c = q.contains("const");
        if (has_m == has_c) throw Error(ErrorKind::MalformedMap, "each piece needs exactly one of \"moebius\" and \"const\"");
        if (has_m)
            pieces.push_back(Piece{dom, moebius_from_json(q["moebius"])});
        else
            pieces.push_back(Piece{dom, rat_from_json(q["const"])});
    }
    return PiecewiseMoebiusMap::make(std::move(pieces));
}

inline PiecewiseMoebiusMap parse_symbolic_spec(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    return symbolic_from_json(j);
}

// ---- reports ----

inline json error_to_json(const Error& e) { return json{{"error", std::string(kind_name(e.kind()))}, {"message", e.message()}}; }

inline json tags_to_json(const std::vector<ClassTag>& tags) {
    json a = json::array();
    for (auto t : tags) a.push_back(std::string(tag_name(t)));
    return a;
}

inline json criterion_to_json(const RegCriterionReport& r) {
    json j;
    j["criterion"] = r.criterion;
    j["condition1"] = r.condition1;
    j["condition2"] = r.condition2;
    if (r.condition3) j["condition3"] = *r.condition3;
    if (r.failing_gap)
        j["failing_gap"] = json{{"index", r.failing_gap->index},
                                {"left_attained", r.failing_gap->left_attained},
                                {"right_attained", r.failing_gap->right_attained}};
    else
        j["failing_gap"] = nullptr;
    j["verdict"] = r.verdict;
    return j;
}

inline json verdict_to_json(const GreenVerdict& v) {
    json ws = json::array();
    for (const auto& w : v.witnesses) ws.push_back(json{{"role", w.role}, {"map", map_to_json(w.map)}, {"verified", w.verified}});
    return json{{"relation", std::string(relation_name(v.relation))},
                {"holds", v.holds},
                {"witnesses", ws},
                {"witnesses_verified", v.witnesses_verified()}};
}

inline json bijection_to_json(const BijectionReport& r) {
    json j{{"decision", decision_name(r.decision)}, {"reason", r.reason}};
    j["witness"] = r.witness ? symbolic_to_json(*r.witness) : json(nullptr);
    j["witness_verified"] = r.witness_verified;
    return j;
}

inline json dj_to_json(const DJReport& r) {
    json checks = json::object();
    for (const auto& [k, v] : r.checks) checks[k] = v;
    return json{{"alpha", symbolic_to_json(r.alpha)},
                {"beta", symbolic_to_json(r.beta)},
                {"D", json{{"decision", decision_name(r.d_decision)},
                           {"holds", r.d_holds ? json(*r.d_holds) : json(nullptr)},
                           {"reason", r.d_reason}}},
                {"J", json{{"holds", r.j_holds},
                           {"theta", moebius_to_json(r.theta)},
                           {"tau", moebius_to_json(r.tau)},
                           {"theta_image", format_union(r.theta_image)},
                           {"tau_image", format_union(r.tau_image)},
                           {"checks", checks}}}};
}

inline json symbolic_inverse_to_json(const SymbolicInverse& s) {
    return json{{"beta", symbolic_to_json(s.beta)},
                {"ideal", format_union(s.ideal)},
                {"criterion", criterion_to_json(s.criterion)},
                {"aba_equals_a", s.aba_equals_a},
                {"bab_equals_b", s.bab_equals_b}};
}

} // namespace chainmorph

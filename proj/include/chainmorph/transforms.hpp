#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "partial_map.hpp"

namespace chainmorph {

enum class ClassTag { PT, T, I, O, PO, POI, OP, POP, POPI };

inline constexpr std::array<ClassTag, 9> all_tags{ClassTag::PT, ClassTag::T,  ClassTag::I,   ClassTag::O,   ClassTag::PO,
                                                  ClassTag::POI, ClassTag::OP, ClassTag::POP, ClassTag::POPI};

inline std::string_view tag_name(ClassTag t) {
    switch (t) {
    case ClassTag::PT: return "PT";
    case ClassTag::T: return "T";
    case ClassTag::I: return "I";
    case ClassTag::O: return "O";
    case ClassTag::PO: return "PO";
    case ClassTag::POI: return "POI";
    case ClassTag::OP: return "OP";
    case ClassTag::POP: return "POP";
    case ClassTag::POPI: return "POPI";
    }
    return "?";
}

inline ClassTag parse_tag(std::string_view s) {
    std::string up(s);
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (auto t : all_tags)
        if (tag_name(t) == up) return t;
    throw Error(ErrorKind::ParseError, "unknown class tag '" + std::string(s) + "'");
}

// Classes whose members are full transformations.
inline bool tag_is_full(ClassTag t) { return t == ClassTag::T || t == ClassTag::O || t == ClassTag::OP; }

inline void require_same_chain(const PartialMap& a, const PartialMap& b) {
    if (a.n() != b.n())
        throw Error(ErrorKind::ChainMismatch, "chains of size " + std::to_string(a.n()) + " and " + std::to_string(b.n()));
}

inline bool is_order_preserving(const PartialMap& a) {
    int prev = 0;
    for (int x = 1; x <= a.n(); ++x) {
        if (!a.defined(x)) continue;
        if (a(x) < prev) return false;
        prev = a(x);
    }
    return true;
}

// Checks (OP1) and (OP2) for a candidate ideal y of dom(a).
inline bool is_ideal_of(const PartialMap& a, const Subset& y) {
    auto dom = a.domain();
    if (dom.empty()) return y.empty();
    if (y.empty()) return false;
    std::vector<char> in_y(static_cast<std::size_t>(a.n() + 1), 0);
    for (int x : y) {
        if (!a.defined(x)) return false;
        in_y[static_cast<std::size_t>(x)] = 1;
    }
    int prev_y = 0, prev_c = 0;
    for (int x : dom) {
        int v = a(x);
        if (in_y[static_cast<std::size_t>(x)]) {
            if (v < prev_y) return false;
            prev_y = v;
        } else {
            if (v < prev_c) return false;
            prev_c = v;
        }
    }
    for (int p : dom) {
        if (!in_y[static_cast<std::size_t>(p)]) continue;
        for (int q : dom) {
            if (in_y[static_cast<std::size_t>(q)]) continue;
            if (!(p <= q && a(p) >= a(q))) return false;
        }
    }
    return true;
}

// All ideals, by increasing size. Candidates are the nonempty prefixes of the domain:
// (OP2) forces every ideal to be an order ideal of the domain.
inline std::vector<Subset> find_ideals(const PartialMap& a) {
    auto dom = a.domain();
    if (dom.empty()) return {Subset{}};
    std::vector<Subset> out;
    for (std::size_t k = 1; k <= dom.size(); ++k) {
        Subset y(dom.begin(), dom.begin() + static_cast<std::ptrdiff_t>(k));
        if (is_ideal_of(a, y)) out.push_back(std::move(y));
    }
    return out;
}

inline bool is_orientation_preserving(const PartialMap& a) { return a.empty() || !find_ideals(a).empty(); }

inline Subset unique_ideal(const PartialMap& a) {
    auto ideals = find_ideals(a);
    if (ideals.empty()) throw Error(ErrorKind::NotOrientationPreserving, a.to_string() + " has no ideal");
    if (a.is_constant())
        throw Error(ErrorKind::ConstantMap, a.to_string() + " is constant and admits " + std::to_string(ideals.size()) + " ideals");
    return ideals.front();
}

inline Subset complement_in_domain(const PartialMap& a, const Subset& y) {
    Subset rest;
    for (int x : a.domain())
        if (!std::binary_search(y.begin(), y.end(), x)) rest.push_back(x);
    return rest;
}

inline void require_ideal(const PartialMap& a, const Subset& y) {
    if (!is_ideal_of(a, y)) throw Error(ErrorKind::NotAnIdeal, format_subset(y) + " is not an ideal of " + a.to_string());
}

// The common value of Y(alpha) and (Dom \ Y)(alpha), if they meet.
inline std::optional<int> glued_point(const PartialMap& a, const Subset& y) {
    require_ideal(a, y);
    auto ya = a.image_of(y);
    auto ca = a.image_of(complement_in_domain(a, y));
    Subset both;
    std::set_intersection(ya.begin(), ya.end(), ca.begin(), ca.end(), std::back_inserter(both));
    if (both.empty()) return std::nullopt;
    return both.front();
}

// Left-to-right composition: x(ab) = (xa)b.
inline PartialMap compose(const PartialMap& a, const PartialMap& b) {
    require_same_chain(a, b);
    PartialMap out(a.n());
    for (int x = 1; x <= a.n(); ++x)
        if (a.defined(x) && b.defined(a(x))) out.set(x, b(a(x)));
    return out;
}

inline PartialMap restrict(const PartialMap& a, const Subset& s) {
    PartialMap out(a.n());
    for (int x : s)
        if (a.defined(x)) out.set(x, a(x));
    return out;
}

inline PartialMap invert(const PartialMap& a) {
    if (!a.is_injective()) throw Error(ErrorKind::NotInjective, a.to_string() + " is not injective");
    PartialMap out(a.n());
    for (int x : a.domain()) out.set(a(x), x);
    return out;
}

inline bool is_member(const PartialMap& a, ClassTag t) {
    switch (t) {
    case ClassTag::PT: return true;
    case ClassTag::T: return a.is_full();
    case ClassTag::I: return a.is_injective();
    case ClassTag::O: return a.is_full() && is_order_preserving(a);
    case ClassTag::PO: return is_order_preserving(a);
    case ClassTag::POI: return a.is_injective() && is_order_preserving(a);
    case ClassTag::OP: return a.is_full() && is_orientation_preserving(a);
    case ClassTag::POP: return is_orientation_preserving(a);
    case ClassTag::POPI: return a.is_injective() && is_orientation_preserving(a);
    }
    return false;
}

inline std::vector<ClassTag> classify(const PartialMap& a) {
    std::vector<ClassTag> tags;
    for (auto t : all_tags)
        if (is_member(a, t)) tags.push_back(t);
    return tags;
}

struct IdempotentShape {
    enum class Kind { OrderPreserving, MinAnchored, MaxAnchored };
    Kind kind = Kind::OrderPreserving;
    int anchor = 0;
};

inline std::string_view shape_name(IdempotentShape::Kind k) {
    switch (k) {
    case IdempotentShape::Kind::OrderPreserving: return "OrderPreserving";
    case IdempotentShape::Kind::MinAnchored: return "MinAnchored";
    case IdempotentShape::Kind::MaxAnchored: return "MaxAnchored";
    }
    return "?";
}

inline IdempotentShape classify_idempotent(const PartialMap& a, std::optional<Subset> ideal = std::nullopt) {
    if (!a.is_full()) throw Error(ErrorKind::NotFull, a.to_string() + " is not full");
    if (!is_orientation_preserving(a)) throw Error(ErrorKind::NotOrientationPreserving, a.to_string());
    if (compose(a, a) != a) throw Error(ErrorKind::NotIdempotent, a.to_string() + " is not idempotent");
    if (is_order_preserving(a)) return {IdempotentShape::Kind::OrderPreserving, 0};
    Subset y = ideal ? *ideal : unique_ideal(a);
    require_ideal(a, y);
    auto im = a.image();
    auto ya = a.image_of(y);
    auto ca = a.image_of(complement_in_domain(a, y));
    if (ya == im && ca.size() == 1 && ca.front() == im.front()) return {IdempotentShape::Kind::MinAnchored, im.front()};
    if (ca == im && ya.size() == 1 && ya.front() == im.back()) return {IdempotentShape::Kind::MaxAnchored, im.back()};
    throw Error(ErrorKind::NotIdempotent, a.to_string() + " matches no idempotent shape");
}

} // namespace chainmorph

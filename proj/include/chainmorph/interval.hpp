#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace chainmorph {

// A nonempty convex set of rationals with exact (or infinite) endpoints.
struct QInterval {
    ExtRat lo;
    bool lo_closed = false;
    ExtRat hi;
    bool hi_closed = false;

    static QInterval make(const ExtRat& lo, bool lo_closed, const ExtRat& hi, bool hi_closed) {
        if ((!lo.finite() && lo_closed) || (!hi.finite() && hi_closed))
            throw Error(ErrorKind::BadInterval, "infinite endpoints cannot be closed");
        if (lo.kind == ExtRat::Kind::PosInf || hi.kind == ExtRat::Kind::NegInf)
            throw Error(ErrorKind::BadInterval, "interval endpoints out of order");
        if (lo > hi || (lo == hi && !(lo_closed && hi_closed)))
            throw Error(ErrorKind::BadInterval, "empty interval");
        return QInterval{lo, lo_closed, hi, hi_closed};
    }
    static QInterval closed(const Rat& a, const Rat& b) { return make(a, true, b, true); }
    static QInterval open(const ExtRat& a, const ExtRat& b) { return make(a, false, b, false); }
    static QInterval point(const Rat& q) { return make(q, true, q, true); }
    static QInterval whole() { return make(ExtRat::neg_inf(), false, ExtRat::pos_inf(), false); }

    bool is_singleton() const { return lo == hi; }
    bool bounded() const { return lo.finite() && hi.finite(); }

    bool contains(const Rat& q) const {
        ExtRat x(q);
        if (x < lo || (x == lo && !lo_closed)) return false;
        if (x > hi || (x == hi && !hi_closed)) return false;
        return true;
    }

    friend bool operator==(const QInterval&, const QInterval&) = default;
};

namespace detail {

// Lower bounds: a closed bound at v sits below an open bound at v.
inline bool lower_less(const ExtRat& a, bool a_closed, const ExtRat& b, bool b_closed) {
    if (a != b) return a < b;
    return a_closed && !b_closed;
}

// Upper bounds: an open bound at v sits below a closed bound at v.
inline bool upper_less(const ExtRat& a, bool a_closed, const ExtRat& b, bool b_closed) {
    if (a != b) return a < b;
    return !a_closed && b_closed;
}

inline bool nonempty_bounds(const ExtRat& lo, bool lo_closed, const ExtRat& hi, bool hi_closed) {
    if (!lo.finite() && lo.kind == ExtRat::Kind::PosInf) return false;
    if (!hi.finite() && hi.kind == ExtRat::Kind::NegInf) return false;
    if (lo < hi) return true;
    return lo == hi && lo_closed && hi_closed && lo.finite();
}

} // namespace detail

inline std::optional<QInterval> intersect(const QInterval& a, const QInterval& b) {
    ExtRat lo = a.lo;
    bool lc = a.lo_closed;
    if (detail::lower_less(a.lo, a.lo_closed, b.lo, b.lo_closed)) { lo = b.lo; lc = b.lo_closed; }
    ExtRat hi = a.hi;
    bool hc = a.hi_closed;
    if (detail::upper_less(b.hi, b.hi_closed, a.hi, a.hi_closed)) { hi = b.hi; hc = b.hi_closed; }
    if (!detail::nonempty_bounds(lo, lc, hi, hc)) return std::nullopt;
    return QInterval{lo, lc, hi, hc};
}

// Some rational inside the interval, chosen deterministically.
inline Rat representative(const QInterval& iv) {
    if (iv.lo_closed) return iv.lo.value;
    if (iv.hi_closed) return iv.hi.value;
    if (iv.lo.finite() && iv.hi.finite()) return (iv.lo.value + iv.hi.value) / 2;
    if (iv.hi.finite()) return iv.hi.value - 1;
    if (iv.lo.finite()) return iv.lo.value + 1;
    return Rat(0);
}

struct Signature {
    bool has_min = false;
    bool has_max = false;
    bool bounded_below = false;
    bool bounded_above = false;
    friend bool operator==(const Signature&, const Signature&) = default;
};

struct Gap {
    bool left_attained = false;
    bool right_attained = false;
    friend bool operator==(const Gap&, const Gap&) = default;
};

// Finite union of disjoint intervals in canonical (sorted, fully merged) form.
class IntervalUnion {
public:
    IntervalUnion() = default;
    explicit IntervalUnion(std::vector<QInterval> parts) : parts_(normalize_parts(std::move(parts))) {}
    IntervalUnion(const QInterval& iv) : parts_{iv} {}

    static IntervalUnion whole() { return IntervalUnion(QInterval::whole()); }

    const std::vector<QInterval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    bool contains(const Rat& q) const {
        return std::any_of(parts_.begin(), parts_.end(), [&](const QInterval& p) { return p.contains(q); });
    }

    IntervalUnion complement() const {
        std::vector<QInterval> out;
        ExtRat lo = ExtRat::neg_inf();
        bool lc = false;
        for (const auto& p : parts_) {
            if (detail::nonempty_bounds(lo, lc, p.lo, !p.lo_closed)) out.push_back(QInterval{lo, lc, p.lo, !p.lo_closed});
            lo = p.hi;
            lc = !p.hi_closed;
        }
        if (detail::nonempty_bounds(lo, lc, ExtRat::pos_inf(), false)) out.push_back(QInterval{lo, lc, ExtRat::pos_inf(), false});
        return IntervalUnion(std::move(out));
    }

    friend IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b) {
        auto parts = a.parts_;
        parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
        return IntervalUnion(std::move(parts));
    }

    friend IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b) {
        std::vector<QInterval> out;
        for (const auto& p : a.parts_)
            for (const auto& q : b.parts_)
                if (auto r = intersect(p, q)) out.push_back(*r);
        return IntervalUnion(std::move(out));
    }

    friend IntervalUnion difference(const IntervalUnion& a, const IntervalUnion& b) { return intersect(a, b.complement()); }

    bool subset_of(const IntervalUnion& other) const { return difference(*this, other).empty(); }

    friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

    static std::vector<QInterval> normalize_parts(std::vector<QInterval> parts) {
        std::sort(parts.begin(), parts.end(), [](const QInterval& a, const QInterval& b) {
            return detail::lower_less(a.lo, a.lo_closed, b.lo, b.lo_closed);
        });
        std::vector<QInterval> out;
        for (const auto& p : parts) {
            if (!out.empty()) {
                auto& last = out.back();
                // Over a dense chain two intervals merge iff they overlap or touch at an attained point.
                bool merge = p.lo < last.hi || (p.lo == last.hi && (p.lo_closed || last.hi_closed));
                if (merge) {
                    if (detail::upper_less(last.hi, last.hi_closed, p.hi, p.hi_closed)) {
                        last.hi = p.hi;
                        last.hi_closed = p.hi_closed;
                    }
                    continue;
                }
            }
            out.push_back(p);
        }
        return out;
    }

private:
    std::vector<QInterval> parts_;
};

inline IntervalUnion interval_union_normalize(std::vector<QInterval> parts) { return IntervalUnion(std::move(parts)); }

inline Signature union_signature(const IntervalUnion& u) {
    if (u.empty()) throw Error(ErrorKind::EmptySet, "signature of the empty set");
    const auto& first = u.parts().front();
    const auto& last = u.parts().back();
    Signature s;
    s.has_min = first.lo_closed && first.lo.finite();
    s.has_max = last.hi_closed && last.hi.finite();
    s.bounded_below = first.lo.finite();
    s.bounded_above = last.hi.finite();
    return s;
}

inline std::vector<Gap> gap_list(const IntervalUnion& u) {
    if (u.empty()) throw Error(ErrorKind::EmptySet, "gaps of the empty set");
    std::vector<Gap> gaps;
    const auto& ps = u.parts();
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) gaps.push_back(Gap{ps[i].hi_closed, ps[i + 1].lo_closed});
    return gaps;
}

inline std::string format_interval(const QInterval& iv) {
    return std::string(iv.lo_closed ? "[" : "(") + format_ext(iv.lo) + "," + format_ext(iv.hi) + (iv.hi_closed ? "]" : ")");
}

inline std::string format_union(const IntervalUnion& u) {
    std::string s = "{";
    for (std::size_t i = 0; i < u.parts().size(); ++i) {
        if (i) s += ",";
        s += format_interval(u.parts()[i]);
    }
    return s + "}";
}

namespace detail {

// Reads one interval starting at pos; both "(a,b]" and "]a,b]" spellings are accepted.
inline QInterval read_interval(std::string_view s, std::size_t& pos) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
    if (pos >= s.size()) throw Error(ErrorKind::ParseError, "expected interval");
    char open = s[pos];
    if (open != '[' && open != '(' && open != ']')
        throw Error(ErrorKind::ParseError, "interval must start with '[', '(' or ']'");
    auto comma = s.find(',', pos + 1);
    if (comma == std::string_view::npos) throw Error(ErrorKind::ParseError, "interval missing ','");
    auto close = s.find_first_of(")][", comma + 1);
    if (close == std::string_view::npos) throw Error(ErrorKind::ParseError, "interval missing closing bracket");
    ExtRat lo = parse_ext(s.substr(pos + 1, comma - pos - 1));
    ExtRat hi = parse_ext(s.substr(comma + 1, close - comma - 1));
    char shut = s[close];
    pos = close + 1;
    return QInterval::make(lo, open == '[', hi, shut == ']');
}

} // namespace detail

inline QInterval parse_interval(std::string_view text) {
    auto s = trim(text);
    std::size_t pos = 0;
    auto iv = detail::read_interval(s, pos);
    if (!trim(s.substr(pos)).empty()) throw Error(ErrorKind::ParseError, "trailing text after interval");
    return iv;
}

// "{I1,I2,...}" or a single interval.
inline IntervalUnion parse_union(std::string_view text) {
    auto s = trim(text);
    if (s.empty() || s.front() != '{') return IntervalUnion(parse_interval(s));
    if (s.back() != '}') throw Error(ErrorKind::ParseError, "union must end with '}'");
    auto body = s.substr(1, s.size() - 2);
    std::vector<QInterval> parts;
    std::size_t pos = 0;
    while (true) {
        while (pos < body.size() && body[pos] == ' ') ++pos;
        if (pos >= body.size()) break;
        parts.push_back(detail::read_interval(body, pos));
        while (pos < body.size() && body[pos] == ' ') ++pos;
        if (pos < body.size()) {
            if (body[pos] != ',') throw Error(ErrorKind::ParseError, "expected ',' between intervals");
            ++pos;
        }
    }
    return IntervalUnion(std::move(parts));
}

} // namespace chainmorph

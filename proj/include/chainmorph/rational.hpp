#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace chainmorph {

using Integer = boost::multiprecision::cpp_int;
// Always in lowest terms with a positive denominator.
using Rat = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rat& q) { return boost::multiprecision::denominator(q); }

inline std::strong_ordering compare(const Rat& a, const Rat& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

inline bool is_integer_text(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// Accepts "p/q" or an integer.
inline Rat parse_rat(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    auto num = trim(s.substr(0, slash));
    if (num.size() > 1 && num.front() == '+') num.remove_prefix(1);
    if (!is_integer_text(num)) throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
    Integer p{std::string(num)};
    if (slash == std::string_view::npos) return Rat(p);
    auto den = trim(s.substr(slash + 1));
    if (!is_integer_text(den)) throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
    Integer q{std::string(den)};
    if (q == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rat(p) / Rat(q);
}

inline std::string format_rat(const Rat& q) {
    auto den = denominator_of(q);
    if (den == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + den.str();
}

// Rationals extended by -inf and +inf.
struct ExtRat {
    enum class Kind { NegInf, Finite, PosInf };

    Kind kind = Kind::Finite;
    Rat value = 0;

    ExtRat() = default;
    ExtRat(const Rat& q) : kind(Kind::Finite), value(q) {}
    ExtRat(int q) : kind(Kind::Finite), value(q) {}

    static ExtRat neg_inf() { ExtRat e; e.kind = Kind::NegInf; return e; }
    static ExtRat pos_inf() { ExtRat e; e.kind = Kind::PosInf; return e; }

    bool finite() const { return kind == Kind::Finite; }

    friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
        if (a.kind != Kind::Finite) return std::strong_ordering::equal;
        return compare(a.value, b.value);
    }
    friend bool operator==(const ExtRat& a, const ExtRat& b) { return (a <=> b) == 0; }
};

inline ExtRat parse_ext(std::string_view text) {
    auto s = trim(text);
    if (s == "-inf" || s == "-oo") return ExtRat::neg_inf();
    if (s == "inf" || s == "+inf" || s == "oo" || s == "+oo") return ExtRat::pos_inf();
    return ExtRat(parse_rat(s));
}

inline std::string format_ext(const ExtRat& e) {
    switch (e.kind) {
    case ExtRat::Kind::NegInf: return "-inf";
    case ExtRat::Kind::PosInf: return "inf";
    default: return format_rat(e.value);
    }
}

} // namespace chainmorph

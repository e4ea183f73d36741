#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace chainmorph {

// Sorted, duplicate-free list of chain elements.
using Subset = std::vector<int>;

// A partial transformation of the chain 1 < 2 < ... < n.
class PartialMap {
public:
    PartialMap() = default;
    explicit PartialMap(int n) : n_(n), v_(static_cast<std::size_t>(n), 0) {
        if (n < 1) throw Error(ErrorKind::ParseError, "chain size must be at least 1");
    }

    static PartialMap full(const std::vector<int>& values) {
        PartialMap m(static_cast<int>(values.size()));
        for (int x = 1; x <= m.n_; ++x) m.set(x, values[static_cast<std::size_t>(x - 1)]);
        return m;
    }

    static PartialMap from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
        PartialMap m(n);
        for (auto [x, y] : pairs) {
            if (m.defined(x)) throw Error(ErrorKind::MalformedMap, "element " + std::to_string(x) + " mapped twice");
            m.set(x, y);
        }
        return m;
    }

    static PartialMap identity(int n) {
        PartialMap m(n);
        for (int x = 1; x <= n; ++x) m.v_[static_cast<std::size_t>(x - 1)] = x;
        return m;
    }

    // Values with 0 meaning "undefined"; the encoding used by enumeration.
    static PartialMap from_raw(int n, std::vector<int> raw) {
        PartialMap m(n);
        m.v_ = std::move(raw);
        return m;
    }

    int n() const { return n_; }
    const std::vector<int>& raw() const { return v_; }

    bool defined(int x) const { return x >= 1 && x <= n_ && v_[static_cast<std::size_t>(x - 1)] != 0; }
    int operator()(int x) const { return (x >= 1 && x <= n_) ? v_[static_cast<std::size_t>(x - 1)] : 0; }

    void set(int x, int y) {
        if (x < 1 || x > n_ || y < 1 || y > n_)
            throw Error(ErrorKind::MalformedMap, "pair " + std::to_string(x) + "->" + std::to_string(y) + " outside the chain");
        v_[static_cast<std::size_t>(x - 1)] = y;
    }

    void unset(int x) {
        if (x >= 1 && x <= n_) v_[static_cast<std::size_t>(x - 1)] = 0;
    }

    Subset domain() const {
        Subset d;
        for (int x = 1; x <= n_; ++x)
            if (defined(x)) d.push_back(x);
        return d;
    }

    Subset image() const {
        Subset im;
        for (int y : v_)
            if (y) im.push_back(y);
        std::sort(im.begin(), im.end());
        im.erase(std::unique(im.begin(), im.end()), im.end());
        return im;
    }

    std::size_t rank() const { return image().size(); }
    bool empty() const { return std::all_of(v_.begin(), v_.end(), [](int y) { return y == 0; }); }
    bool is_full() const { return std::none_of(v_.begin(), v_.end(), [](int y) { return y == 0; }); }
    bool is_injective() const { return rank() == domain().size(); }
    bool is_constant() const { return !empty() && rank() == 1; }

    // Image of a subset of the domain.
    Subset image_of(const Subset& a) const {
        Subset im;
        for (int x : a)
            if (defined(x)) im.push_back((*this)(x));
        std::sort(im.begin(), im.end());
        im.erase(std::unique(im.begin(), im.end()), im.end());
        return im;
    }

    Subset preimage(int y) const {
        Subset pre;
        for (int x = 1; x <= n_; ++x)
            if ((*this)(x) == y && y != 0) pre.push_back(x);
        return pre;
    }

    // Kernel as a class label per element: the image value, or 0 outside the domain.
    bool same_kernel(const PartialMap& other) const {
        if (n_ != other.n_) return false;
        for (int x = 1; x <= n_; ++x) {
            if (defined(x) != other.defined(x)) return false;
            for (int y = x + 1; y <= n_; ++y) {
                if (!defined(x) || !defined(y)) continue;
                if (((*this)(x) == (*this)(y)) != (other(x) == other(y))) return false;
            }
        }
        return true;
    }

    std::uint64_t code() const {
        std::uint64_t c = 0;
        for (int x = n_; x >= 1; --x) c = c * static_cast<std::uint64_t>(n_ + 1) + static_cast<std::uint64_t>((*this)(x));
        return c;
    }

    friend bool operator==(const PartialMap&, const PartialMap&) = default;

    // "[v1,...,vn]" when full, "{d1:v1,...}" otherwise.
    std::string to_string() const {
        std::string s;
        if (is_full() && n_ > 0) {
            s = "[";
            for (int x = 1; x <= n_; ++x) {
                if (x > 1) s += ",";
                s += std::to_string((*this)(x));
            }
            return s + "]";
        }
        s = "{";
        bool first = true;
        for (int x = 1; x <= n_; ++x) {
            if (!defined(x)) continue;
            if (!first) s += ",";
            first = false;
            s += std::to_string(x) + ":" + std::to_string((*this)(x));
        }
        return s + "}";
    }

private:
    int n_ = 0;
    std::vector<int> v_;
};

namespace detail {

inline int parse_element(std::string_view tok, int n) {
    tok = trim(tok);
    if (!is_integer_text(tok)) throw Error(ErrorKind::ParseError, "bad chain element '" + std::string(tok) + "'");
    long v = std::stol(std::string(tok));
    if (v < 1 || v > n) throw Error(ErrorKind::ParseError, "element " + std::string(tok) + " outside chain of size " + std::to_string(n));
    return static_cast<int>(v);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    if (trim(s).empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto p = s.find(sep, start);
        out.push_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
        if (p == std::string_view::npos) break;
        start = p + 1;
    }
    return out;
}

} // namespace detail

// Parses "[v1,...,vn]" (full, length must equal n) or "{d:v,...}".
inline PartialMap parse_map(int n, std::string_view text) {
    auto s = trim(text);
    if (s.size() < 2) throw Error(ErrorKind::ParseError, "empty map spec");
    if (s.front() == '[' && s.back() == ']') {
        auto toks = detail::split(s.substr(1, s.size() - 2), ',');
        if (static_cast<int>(toks.size()) != n)
            throw Error(ErrorKind::ParseError, "full map needs " + std::to_string(n) + " values, got " + std::to_string(toks.size()));
        std::vector<int> vals;
        for (auto t : toks) vals.push_back(detail::parse_element(t, n));
        return PartialMap::full(vals);
    }
    if (s.front() == '{' && s.back() == '}') {
        PartialMap m(n);
        if (trim(s.substr(1, s.size() - 2)).empty()) return m;
        for (auto t : detail::split(s.substr(1, s.size() - 2), ',')) {
            auto colon = t.find(':');
            if (colon == std::string_view::npos) throw Error(ErrorKind::ParseError, "expected 'd:v' in '" + std::string(t) + "'");
            auto key = trim(t.substr(0, colon));
            if (key.size() >= 2 && key.front() == '"' && key.back() == '"') key = key.substr(1, key.size() - 2);
            int x = detail::parse_element(key, n);
            int y = detail::parse_element(t.substr(colon + 1), n);
            if (m.defined(x)) throw Error(ErrorKind::ParseError, "element " + std::to_string(x) + " mapped twice");
            m.set(x, y);
        }
        return m;
    }
    throw Error(ErrorKind::ParseError, "map spec must be '[...]' or '{...}'");
}

inline Subset parse_subset(int n, std::string_view text) {
    auto s = trim(text);
    if (!s.empty() && (s.front() == '{' || s.front() == '[')) s = s.substr(1, s.size() - 2);
    Subset out;
    if (trim(s).empty()) return out;
    for (auto t : detail::split(s, ',')) out.push_back(detail::parse_element(t, n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::string format_subset(const Subset& a) {
    std::string s = "{";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + "}";
}

} // namespace chainmorph

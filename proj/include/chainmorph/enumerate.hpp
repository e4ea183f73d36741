#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "partial_map.hpp"
#include "transforms.hpp"

namespace chainmorph {

inline constexpr std::uint64_t default_max_candidates = 100000000ULL;

// The ceiling from CHAINMORPH_MAX_CANDIDATES, or the default.
inline std::uint64_t configured_max_candidates() {
    if (const char* env = std::getenv("CHAINMORPH_MAX_CANDIDATES")) {
        char* end = nullptr;
        auto v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return default_max_candidates;
}

inline std::uint64_t candidate_count(ClassTag tag, int n) {
    std::uint64_t base = tag_is_full(tag) ? static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n + 1);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > UINT64_MAX / base) return UINT64_MAX;
        total *= base;
    }
    return total;
}

// Calls f on every member of the class, in lexicographic order of the value
// sequence (element 1 most significant, "undefined" smallest).
template <class F>
void for_each_in_class(ClassTag tag, int n, F&& f, std::uint64_t max_candidates = configured_max_candidates()) {
    if (n < 1) throw Error(ErrorKind::ParseError, "chain size must be at least 1");
    auto total = candidate_count(tag, n);
    if (total > max_candidates)
        throw Error(ErrorKind::SizeLimit, std::to_string(total) + " candidates exceed the ceiling " + std::to_string(max_candidates));
    const int lo = tag_is_full(tag) ? 1 : 0;
    std::vector<int> raw(static_cast<std::size_t>(n), lo);
    while (true) {
        auto m = PartialMap::from_raw(n, raw);
        if (is_member(m, tag)) f(m);
        int i = n - 1;
        while (i >= 0 && raw[static_cast<std::size_t>(i)] == n) {
            raw[static_cast<std::size_t>(i)] = lo;
            --i;
        }
        if (i < 0) break;
        ++raw[static_cast<std::size_t>(i)];
    }
}

inline std::vector<PartialMap> enumerate_class(ClassTag tag, int n, std::uint64_t max_candidates = configured_max_candidates()) {
    std::vector<PartialMap> out;
    for_each_in_class(tag, n, [&](const PartialMap& m) { out.push_back(m); }, max_candidates);
    return out;
}

inline std::uint64_t count_class(ClassTag tag, int n, std::uint64_t max_candidates = configured_max_candidates()) {
    std::uint64_t c = 0;
    for_each_in_class(tag, n, [&](const PartialMap&) { ++c; }, max_candidates);
    return c;
}

struct MonoidTable {
    ClassTag tag = ClassTag::PT;
    int n = 0;
    std::vector<PartialMap> elements;
    std::vector<int> product; // product[i * size + j] = index of elements[i] * elements[j]
    int identity_index = -1;

    int size() const { return static_cast<int>(elements.size()); }
    int mul(int i, int j) const { return product[static_cast<std::size_t>(i) * elements.size() + static_cast<std::size_t>(j)]; }

    std::optional<int> index_of(const PartialMap& m) const {
        auto it = lookup.find(m.code());
        if (it == lookup.end() || m.n() != n) return std::nullopt;
        return it->second;
    }

    std::unordered_map<std::uint64_t, int> lookup;
};

inline MonoidTable build_monoid(ClassTag tag, int n, std::uint64_t max_candidates = configured_max_candidates()) {
    MonoidTable t;
    t.tag = tag;
    t.n = n;
    t.elements = enumerate_class(tag, n, max_candidates);
    const auto size = t.elements.size();
    if (size * size > max_candidates)
        throw Error(ErrorKind::SizeLimit, "product table of " + std::to_string(size * size) + " entries exceeds the ceiling");
    for (std::size_t i = 0; i < size; ++i) t.lookup.emplace(t.elements[i].code(), static_cast<int>(i));
    t.product.resize(size * size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            auto p = compose(t.elements[i], t.elements[j]);
            auto idx = t.index_of(p);
            if (!idx)
                throw Error(ErrorKind::ClosureViolation, t.elements[i].to_string() + " * " + t.elements[j].to_string() + " = " +
                                                             p.to_string() + " leaves " + std::string(tag_name(tag)));
            t.product[i * size + j] = *idx;
        }
    auto id = t.index_of(PartialMap::identity(n));
    if (!id) throw Error(ErrorKind::ClosureViolation, "identity missing from " + std::string(tag_name(tag)));
    t.identity_index = *id;
    return t;
}

enum class Relation { L, R, H, D, J };

inline std::string_view relation_name(Relation r) {
    switch (r) {
    case Relation::L: return "L";
    case Relation::R: return "R";
    case Relation::H: return "H";
    case Relation::D: return "D";
    case Relation::J: return "J";
    }
    return "?";
}

inline Relation parse_relation(std::string_view s) {
    if (s == "L" || s == "l") return Relation::L;
    if (s == "R" || s == "r") return Relation::R;
    if (s == "H" || s == "h") return Relation::H;
    if (s == "D" || s == "d") return Relation::D;
    if (s == "J" || s == "j") return Relation::J;
    throw Error(ErrorKind::ParseError, "unknown relation '" + std::string(s) + "'");
}

struct GreenOracleResult {
    Relation relation = Relation::L;
    std::vector<int> class_of;             // class label per element index
    std::vector<std::vector<int>> classes; // labels index into this list

    bool related(int i, int j) const { return class_of[static_cast<std::size_t>(i)] == class_of[static_cast<std::size_t>(j)]; }
};

namespace detail {

using Bits = std::vector<std::uint64_t>;

inline Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
inline void set_bit(Bits& b, std::size_t i) { b[i / 64] |= (std::uint64_t{1} << (i % 64)); }
inline bool get_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }
inline void or_into(Bits& a, const Bits& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] |= b[k];
}

inline GreenOracleResult group_by(Relation rel, const std::vector<Bits>& keys) {
    GreenOracleResult res;
    res.relation = rel;
    std::vector<std::size_t> reps;
    res.class_of.assign(keys.size(), -1);
    for (std::size_t i = 0; i < keys.size(); ++i) {
        int label = -1;
        for (std::size_t c = 0; c < reps.size(); ++c)
            if (keys[reps[c]] == keys[i]) { label = static_cast<int>(c); break; }
        if (label < 0) {
            label = static_cast<int>(reps.size());
            reps.push_back(i);
            res.classes.emplace_back();
        }
        res.class_of[i] = label;
        res.classes[static_cast<std::size_t>(label)].push_back(static_cast<int>(i));
    }
    return res;
}

} // namespace detail

// Green's relations straight from principal one- and two-sided ideals of the table.
inline GreenOracleResult green_oracle(const MonoidTable& t, Relation rel) {
    const auto size = static_cast<std::size_t>(t.size());
    std::vector<detail::Bits> left(size, detail::make_bits(size)), right(size, detail::make_bits(size));
    for (std::size_t a = 0; a < size; ++a) {
        detail::set_bit(left[a], a);
        detail::set_bit(right[a], a);
        for (std::size_t s = 0; s < size; ++s) {
            detail::set_bit(left[a], static_cast<std::size_t>(t.mul(static_cast<int>(s), static_cast<int>(a))));
            detail::set_bit(right[a], static_cast<std::size_t>(t.mul(static_cast<int>(a), static_cast<int>(s))));
        }
    }
    switch (rel) {
    case Relation::L: return detail::group_by(rel, left);
    case Relation::R: return detail::group_by(rel, right);
    case Relation::H: {
        std::vector<detail::Bits> keys(size);
        for (std::size_t a = 0; a < size; ++a) {
            keys[a] = left[a];
            keys[a].insert(keys[a].end(), right[a].begin(), right[a].end());
        }
        return detail::group_by(rel, keys);
    }
    case Relation::D: {
        auto l = detail::group_by(Relation::L, left);
        auto r = detail::group_by(Relation::R, right);
        // a D b iff some c has a L c and c R b.
        std::vector<detail::Bits> keys(size, detail::make_bits(size));
        for (std::size_t a = 0; a < size; ++a)
            for (int c : l.classes[static_cast<std::size_t>(l.class_of[a])])
                for (int b : r.classes[static_cast<std::size_t>(r.class_of[static_cast<std::size_t>(c)])])
                    detail::set_bit(keys[a], static_cast<std::size_t>(b));
        return detail::group_by(rel, keys);
    }
    case Relation::J: {
        std::vector<detail::Bits> keys(size, detail::make_bits(size));
        for (std::size_t a = 0; a < size; ++a)
            for (std::size_t u = 0; u < size; ++u)
                if (detail::get_bit(left[a], u)) detail::or_into(keys[a], right[u]);
        return detail::group_by(rel, keys);
    }
    }
    return {};
}

// Some b with a * b * a = a, by exhaustive search.
inline std::optional<int> regular_oracle(const MonoidTable& t, int idx) {
    for (int b = 0; b < t.size(); ++b)
        if (t.mul(t.mul(idx, b), idx) == idx) return b;
    return std::nullopt;
}

} // namespace chainmorph

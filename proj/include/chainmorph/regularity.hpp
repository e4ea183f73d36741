#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "interval.hpp"
#include "partial_map.hpp"
#include "transforms.hpp"

namespace chainmorph {

// z[x] is the chosen preimage of x for x in Im(alpha), 0 elsewhere.
struct ChoiceFunction {
    std::vector<int> z;
    int operator()(int x) const { return z[static_cast<std::size_t>(x)]; }
};

// Smallest preimage, taken inside Y whenever x is in Y(alpha).
inline ChoiceFunction default_choice(const PartialMap& a, const Subset& y) {
    ChoiceFunction c{std::vector<int>(static_cast<std::size_t>(a.n() + 1), 0)};
    for (int v : a.image()) {
        auto pre = a.preimage(v);
        auto in_y = std::find_if(pre.begin(), pre.end(), [&](int x) { return std::binary_search(y.begin(), y.end(), x); });
        c.z[static_cast<std::size_t>(v)] = in_y != pre.end() ? *in_y : pre.front();
    }
    return c;
}

inline bool is_valid_choice(const PartialMap& a, const Subset& y, const ChoiceFunction& c) {
    if (c.z.size() != static_cast<std::size_t>(a.n() + 1)) return false;
    auto ya = a.image_of(y);
    for (int v : a.image()) {
        int zx = c(v);
        if (!a.defined(zx) || a(zx) != v) return false;
        if (std::binary_search(ya.begin(), ya.end(), v) && !std::binary_search(y.begin(), y.end(), zx)) return false;
    }
    return true;
}

// Visits every ideal-preferring choice function.
template <class F>
void for_each_choice(const PartialMap& a, const Subset& y, F&& f) {
    auto im = a.image();
    auto ya = a.image_of(y);
    std::vector<Subset> options;
    for (int v : im) {
        Subset opts;
        bool prefer_y = std::binary_search(ya.begin(), ya.end(), v);
        for (int x : a.preimage(v))
            if (!prefer_y || std::binary_search(y.begin(), y.end(), x)) opts.push_back(x);
        options.push_back(std::move(opts));
    }
    ChoiceFunction c{std::vector<int>(static_cast<std::size_t>(a.n() + 1), 0)};
    std::vector<std::size_t> pos(im.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < im.size(); ++i) c.z[static_cast<std::size_t>(im[i])] = options[i][pos[i]];
        f(static_cast<const ChoiceFunction&>(c));
        std::size_t i = 0;
        while (i < im.size() && ++pos[i] == options[i].size()) pos[i++] = 0;
        if (i == im.size()) break;
    }
}

inline void require_pop(const PartialMap& a) {
    if (!is_orientation_preserving(a)) throw Error(ErrorKind::NotOrientationPreserving, a.to_string() + " is not orientation-preserving");
}

// zeta : Im(alpha) -> Dom(alpha), x -> z_x.
inline PartialMap zeta_inverse(const PartialMap& a, const Subset& y) {
    require_pop(a);
    require_ideal(a, y);
    auto c = default_choice(a, y);
    PartialMap z(a.n());
    for (int v : a.image()) z.set(v, c(v));
    return z;
}

struct FiniteImage {
    int n = 0;
    Subset elems;
};

using ImageSet = std::variant<FiniteImage, IntervalUnion>;

struct GapReport {
    std::size_t index = 0;
    bool left_attained = false;
    bool right_attained = false;
};

struct RegCriterionReport {
    std::string criterion; // "o" or "op"
    bool condition1 = false;
    bool condition2 = false;
    std::optional<bool> condition3; // the O criterion only
    std::optional<GapReport> failing_gap;
    bool verdict = false;
};

namespace detail {

struct ImageShape {
    Signature sig;
    std::vector<Gap> gaps;
};

inline ImageShape image_shape(const ImageSet& im) {
    if (auto f = std::get_if<FiniteImage>(&im)) {
        if (f->elems.empty()) throw Error(ErrorKind::EmptyImage, "empty image");
        ImageShape s;
        s.sig = Signature{true, true, true, true};
        for (std::size_t i = 0; i + 1 < f->elems.size(); ++i)
            if (f->elems[i + 1] > f->elems[i] + 1) s.gaps.push_back(Gap{true, true});
        return s;
    }
    const auto& u = std::get<IntervalUnion>(im);
    if (u.empty()) throw Error(ErrorKind::EmptyImage, "empty image");
    return ImageShape{union_signature(u), gap_list(u)};
}

inline std::optional<GapReport> first_bad_gap(const std::vector<Gap>& gaps) {
    for (std::size_t i = 0; i < gaps.size(); ++i)
        if (!gaps[i].left_attained && !gaps[i].right_attained) return GapReport{i, false, false};
    return std::nullopt;
}

} // namespace detail

inline RegCriterionReport reg_o_criterion(const ImageSet& im) {
    auto s = detail::image_shape(im);
    RegCriterionReport r;
    r.criterion = "o";
    r.condition1 = !s.sig.bounded_above || s.sig.has_max;
    r.condition2 = !s.sig.bounded_below || s.sig.has_min;
    r.failing_gap = detail::first_bad_gap(s.gaps);
    r.condition3 = !r.failing_gap.has_value();
    r.verdict = r.condition1 && r.condition2 && *r.condition3;
    return r;
}

inline RegCriterionReport reg_op_criterion(const ImageSet& im) {
    auto s = detail::image_shape(im);
    RegCriterionReport r;
    r.criterion = "op";
    r.condition1 = !(s.sig.bounded_above || s.sig.bounded_below) || s.sig.has_max || s.sig.has_min;
    r.failing_gap = detail::first_bad_gap(s.gaps);
    r.condition2 = !r.failing_gap.has_value();
    r.verdict = r.condition1 && r.condition2;
    return r;
}

inline ImageSet finite_image(const PartialMap& a) { return FiniteImage{a.n(), a.image()}; }

// Which defining clause produced each value of the full inverse.
enum class BetaClause { InImage = 1, Bound = 2, Interior = 3 };

struct BetaConstruction {
    PartialMap beta;
    Subset ideal;
    ChoiceFunction choice;
    std::vector<BetaClause> clause; // indexed by x - 1
};

inline BetaConstruction build_op_inverse_detailed(const PartialMap& a, std::optional<Subset> ideal = std::nullopt,
                                                  std::optional<ChoiceFunction> choice = std::nullopt) {
    if (!a.is_full()) throw Error(ErrorKind::NotFull, a.to_string() + " is not full");
    require_pop(a);
    Subset y = ideal ? *ideal : unique_ideal(a);
    require_ideal(a, y);
    ChoiceFunction z = choice ? *choice : default_choice(a, y);
    if (!is_valid_choice(a, y, z)) throw Error(ErrorKind::MalformedMap, "choice function is not an ideal-preferring section");
    auto im = a.image();
    const int lo = im.front(), hi = im.back();
    BetaConstruction out{PartialMap(a.n()), y, z, {}};
    for (int x = 1; x <= a.n(); ++x) {
        if (std::binary_search(im.begin(), im.end(), x)) {
            out.beta.set(x, z(x));
            out.clause.push_back(BetaClause::InImage);
        } else if (x < lo || x > hi) {
            // On a finite chain the image always has a maximum.
            out.beta.set(x, z(hi));
            out.clause.push_back(BetaClause::Bound);
        } else {
            auto below = std::lower_bound(im.begin(), im.end(), x);
            out.beta.set(x, z(*std::prev(below)));
            out.clause.push_back(BetaClause::Interior);
        }
    }
    return out;
}

inline PartialMap build_op_inverse(const PartialMap& a, std::optional<Subset> ideal = std::nullopt) {
    return build_op_inverse_detailed(a, std::move(ideal)).beta;
}

inline bool verify_inner_inverse(const PartialMap& a, const PartialMap& b) {
    require_same_chain(a, b);
    return compose(compose(a, b), a) == a;
}

struct InverseReport {
    bool aba_equals_a = false;
    bool bab_equals_b = false;
};

inline InverseReport inverse_report(const PartialMap& a, const PartialMap& b) {
    require_same_chain(a, b);
    return InverseReport{compose(compose(a, b), a) == a, compose(compose(b, a), b) == b};
}

} // namespace chainmorph

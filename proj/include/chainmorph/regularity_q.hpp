#pragma once

#include <optional>
#include <vector>

#include "error.hpp"
#include "interval.hpp"
#include "regularity.hpp"
#include "symbolic.hpp"

namespace chainmorph {

struct SymbolicInverse {
    PiecewiseMoebiusMap beta;
    IntervalUnion ideal;
    RegCriterionReport criterion;
    bool aba_equals_a = false;
    bool bab_equals_b = false;
};

namespace detail {

// Pieces in choice order: those inside the ideal first, each group left to right.
inline std::vector<std::size_t> choice_order(const PiecewiseMoebiusMap& a, const IntervalUnion& y) {
    std::vector<std::size_t> inside, outside;
    for (std::size_t i = 0; i < a.pieces().size(); ++i)
        (IntervalUnion(a.pieces()[i].dom).subset_of(y) ? inside : outside).push_back(i);
    inside.insert(inside.end(), outside.begin(), outside.end());
    return inside;
}

// The chosen preimage z_v of an image point v.
inline Rat choose_preimage(const PiecewiseMoebiusMap& a, const std::vector<std::size_t>& order, const Rat& v) {
    for (auto i : order) {
        const auto& p = a.pieces()[i];
        if (!p.image().contains(v)) continue;
        return p.is_constant() ? representative(p.dom) : p.moebius().inverse().eval(v);
    }
    throw Error(ErrorKind::MalformedMap, format_rat(v) + " is not in the image");
}

} // namespace detail

// The full inverse of a regular full orientation-preserving map of the rationals:
// inverse pieces on the image, and constants on the bound regions and on the gaps.
inline SymbolicInverse build_op_inverse_symbolic(const PiecewiseMoebiusMap& a, std::optional<IntervalUnion> ideal = std::nullopt) {
    if (!a.is_full()) throw Error(ErrorKind::NotFull, "symbolic inverse needs a full map");
    auto found = is_orientation_preserving_symbolic(a);
    if (!found) throw Error(ErrorKind::NotOrientationPreserving, "map admits no ideal");
    SymbolicInverse out;
    out.ideal = ideal ? *ideal : *found;
    auto im = image_of(a);
    out.criterion = reg_op_criterion(ImageSet{im});
    if (!out.criterion.verdict)
        throw Error(ErrorKind::CriterionFails, std::string("image ") + format_union(im) + " fails condition " +
                                                   (out.criterion.condition1 ? "2" : "1"));
    auto order = detail::choice_order(a, out.ideal);
    std::vector<Piece> pieces;

    // Image points: invert through the first qualifying piece.
    IntervalUnion remaining = im;
    for (auto i : order) {
        const auto& p = a.pieces()[i];
        auto mine = intersect(IntervalUnion(p.image()), remaining);
        for (const auto& part : mine.parts()) {
            if (p.is_constant()) pieces.push_back(Piece{part, representative(p.dom)});
            else pieces.push_back(Piece{part, p.moebius().inverse()});
        }
        remaining = difference(remaining, mine);
    }

    // Points outside the image: bounds take z of the extreme value, gaps the nearest attained side.
    const auto sig = union_signature(im);
    const auto& parts = im.parts();
    const auto outside = im.complement();
    for (const auto& region : outside.parts()) {
        Rat target;
        bool below_all = region.hi <= parts.front().lo;
        bool above_all = region.lo >= parts.back().hi;
        if (below_all || above_all) {
            target = sig.has_max ? parts.back().hi.value : parts.front().lo.value;
        } else {
            std::size_t k = 0;
            while (!(parts[k].hi <= region.lo && parts[k + 1].lo >= region.hi)) ++k;
            target = parts[k].hi_closed ? parts[k].hi.value : parts[k + 1].lo.value;
        }
        pieces.push_back(Piece{region, detail::choose_preimage(a, order, target)});
    }
    out.beta = PiecewiseMoebiusMap::make(std::move(pieces));
    out.aba_equals_a = maps_equal(compose_symbolic(compose_symbolic(a, out.beta), a), a);
    out.bab_equals_b = maps_equal(compose_symbolic(compose_symbolic(out.beta, a), out.beta), out.beta);
    return out;
}

} // namespace chainmorph

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "interval.hpp"
#include "moebius.hpp"
#include "symbolic.hpp"

namespace chainmorph {

// Order type of a bounded convex set of rationals: a point, or a dense interval
// determined up to isomorphism by which endpoints it contains.
struct IsoType {
    bool singleton = false;
    bool has_min = false;
    bool has_max = false;
    friend bool operator==(const IsoType&, const IsoType&) = default;
};

inline void require_bounded(const QInterval& iv) {
    if (!iv.bounded()) throw Error(ErrorKind::UnboundedUnsupported, format_interval(iv) + " is unbounded");
}

inline IsoType iso_type(const QInterval& iv) {
    require_bounded(iv);
    if (iv.is_singleton()) return {true, true, true};
    return {false, iv.lo_closed, iv.hi_closed};
}

// Bounded nonempty non-degenerate intervals are order-isomorphic iff their signatures agree.
inline bool q_interval_signature_iso(const Signature& a, const Signature& b) {
    if (!a.bounded_below || !a.bounded_above || !b.bounded_below || !b.bounded_above)
        throw Error(ErrorKind::UnboundedUnsupported, "signature of an unbounded set");
    return a.has_min == b.has_min && a.has_max == b.has_max;
}

// The increasing affine bijection between two bounded intervals of the same type.
inline Piece affine_iso(const QInterval& from, const QInterval& to) {
    if (iso_type(from) != iso_type(to))
        throw Error(ErrorKind::BadInterval, format_interval(from) + " and " + format_interval(to) + " are not isomorphic");
    if (from.is_singleton()) return Piece{from, to.lo.value};
    const Rat &a = from.lo.value, &b = from.hi.value, &c = to.lo.value, &d = to.hi.value;
    return Piece{from, MoebiusMap{d - c, c * (b - a) - a * (d - c), 0, b - a}};
}

enum class CutKind { Trivial, RationalToIdeal, RationalToFilter, Gap };

inline std::string cut_name(CutKind k) {
    switch (k) {
    case CutKind::Trivial: return "trivial";
    case CutKind::RationalToIdeal: return "rational cut, point in ideal";
    case CutKind::RationalToFilter: return "rational cut, point in filter";
    case CutKind::Gap: return "irrational cut";
    }
    return "?";
}

// A decomposition of an interval into an order ideal followed by an order filter.
struct Split {
    CutKind cut = CutKind::Trivial;
    IsoType ideal;
    std::optional<IsoType> filter; // empty for the trivial split
    std::optional<QInterval> ideal_part, filter_part; // concrete parts for rational cuts
};

inline std::vector<Split> enumerate_splits(const QInterval& iv) {
    auto t = iso_type(iv);
    std::vector<Split> out{Split{CutKind::Trivial, t, std::nullopt, iv, std::nullopt}};
    if (t.singleton) return out;
    const Rat mid = (iv.lo.value + iv.hi.value) / 2;
    const bool l = iv.lo_closed, r = iv.hi_closed;
    auto part = [](const ExtRat& lo, bool lc, const ExtRat& hi, bool hc) { return QInterval::make(lo, lc, hi, hc); };
    out.push_back({CutKind::RationalToIdeal, {false, l, true}, IsoType{false, false, r}, part(iv.lo, l, mid, true), part(mid, false, iv.hi, r)});
    if (l) out.push_back({CutKind::RationalToIdeal, {true, true, true}, IsoType{false, false, r}, QInterval::point(iv.lo.value), part(iv.lo, false, iv.hi, r)});
    out.push_back({CutKind::RationalToFilter, {false, l, false}, IsoType{false, true, r}, part(iv.lo, l, mid, false), part(mid, true, iv.hi, r)});
    if (r) out.push_back({CutKind::RationalToFilter, {false, l, false}, IsoType{true, true, true}, part(iv.lo, l, iv.hi, false), QInterval::point(iv.hi.value)});
    out.push_back({CutKind::Gap, {false, l, false}, IsoType{false, false, r}, std::nullopt, std::nullopt});
    return out;
}

enum class Decision { Exists, DoesNotExist, Undecided };

inline std::string decision_name(Decision d) {
    switch (d) {
    case Decision::Exists: return "exists";
    case Decision::DoesNotExist: return "does-not-exist";
    case Decision::Undecided: return "undecided";
    }
    return "?";
}

struct BijectionReport {
    Decision decision = Decision::DoesNotExist;
    std::optional<PiecewiseMoebiusMap> witness;
    bool witness_verified = false;
    std::string reason;
};

// Checks that w maps i bijectively onto j and is orientation-preserving.
inline bool verify_orientation_bijection(const PiecewiseMoebiusMap& w, const QInterval& i, const QInterval& j) {
    return w.domain() == IntervalUnion(i) && image_of(w) == IntervalUnion(j) && is_injective_symbolic(w) &&
           is_orientation_preserving_symbolic(w).has_value();
}

// An orientation-preserving bijection I -> J with proper ideal Y sends the filter
// I \ Y onto an ideal J1 of J and Y onto the complementary filter J2; both
// restrictions are order isomorphisms. Existence thus reduces to matching split types.
inline BijectionReport orientation_bijection_exists(const QInterval& i, const QInterval& j) {
    auto si = enumerate_splits(i);
    auto sj = enumerate_splits(j);
    BijectionReport rep;
    std::string gap_reason;
    for (const auto& a : si)
        for (const auto& b : sj) {
            bool trivial_a = a.cut == CutKind::Trivial, trivial_b = b.cut == CutKind::Trivial;
            if (trivial_a != trivial_b) continue;
            bool match = trivial_a ? a.ideal == b.ideal : (*a.filter == b.ideal && a.ideal == *b.filter);
            if (!match) continue;
            bool constructive = a.cut != CutKind::Gap && b.cut != CutKind::Gap;
            if (!constructive) {
                if (gap_reason.empty())
                    gap_reason = "only matches through an " + cut_name(CutKind::Gap) + " (" + cut_name(a.cut) + " / " + cut_name(b.cut) +
                                 "); no finite rational witness";
                continue;
            }
            std::vector<Piece> pieces;
            if (trivial_a) pieces.push_back(affine_iso(i, j));
            else {
                pieces.push_back(affine_iso(*a.filter_part, *b.ideal_part));
                pieces.push_back(affine_iso(*a.ideal_part, *b.filter_part));
            }
            auto w = PiecewiseMoebiusMap::make(std::move(pieces));
            rep.decision = Decision::Exists;
            rep.witness_verified = verify_orientation_bijection(w, i, j);
            rep.witness = std::move(w);
            rep.reason = trivial_a ? "order isomorphism" : "ideal split: " + cut_name(a.cut) + "; target split: " + cut_name(b.cut);
            return rep;
        }
    if (!gap_reason.empty()) {
        rep.decision = Decision::Undecided;
        rep.reason = gap_reason;
    } else {
        rep.decision = Decision::DoesNotExist;
        rep.reason = "no pair of splits has matching order types";
    }
    return rep;
}

struct DJReport {
    PiecewiseMoebiusMap alpha, beta;
    Decision d_decision = Decision::DoesNotExist;
    std::optional<bool> d_holds;
    std::string d_reason;
    MoebiusMap theta, tau;
    IntervalUnion theta_image, tau_image;
    std::map<std::string, bool> checks;
    bool j_holds = false;
};

// Partial identities on ]a,b[ and [c,d]: not D-related, yet J-related through affine injections.
inline DJReport dj_gap_witness(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    if (!(a < b) || !(c < d)) throw Error(ErrorKind::BadInterval, "need a < b and c < d");
    const auto I = QInterval::open(a, b);
    const auto J = QInterval::closed(c, d);
    DJReport r;
    r.alpha = PiecewiseMoebiusMap::identity_on(I);
    r.beta = PiecewiseMoebiusMap::identity_on(J);
    auto bij = orientation_bijection_exists(I, J);
    r.d_decision = bij.decision;
    r.d_reason = bij.reason;
    if (bij.decision != Decision::Undecided) r.d_holds = bij.decision == Decision::Exists;

    r.theta = MoebiusMap{d - c, 2 * b * c - 2 * a * d + b * d - a * c, 0, 3 * (b - a)};
    r.tau = MoebiusMap{b - a, 2 * a * d - 2 * b * c + b * d - a * c, 0, 3 * (d - c)};
    auto theta_map = PiecewiseMoebiusMap::single(I, r.theta);
    auto tau_map = PiecewiseMoebiusMap::single(J, r.tau);
    r.theta_image = image_of(theta_map);
    r.tau_image = image_of(tau_map);
    r.checks["theta increasing"] = r.theta.det() > 0;
    r.checks["tau increasing"] = r.tau.det() > 0;
    r.checks["theta injective"] = is_injective_symbolic(theta_map);
    r.checks["tau injective"] = is_injective_symbolic(tau_map);
    r.checks["theta image inside [c,d]"] = r.theta_image.subset_of(IntervalUnion(J));
    r.checks["tau image inside ]a,b["] = r.tau_image.subset_of(IntervalUnion(I));

    // alpha = theta beta theta^-1 and beta = tau alpha tau^-1 inside the partial order-preserving maps.
    auto theta_inv = PiecewiseMoebiusMap::single(r.theta_image.parts().front(), r.theta.inverse());
    auto tau_inv = PiecewiseMoebiusMap::single(r.tau_image.parts().front(), r.tau.inverse());
    r.checks["alpha = theta beta theta^-1"] = maps_equal(compose_symbolic(compose_symbolic(theta_map, r.beta), theta_inv), r.alpha);
    r.checks["beta = tau alpha tau^-1"] = maps_equal(compose_symbolic(compose_symbolic(tau_map, r.alpha), tau_inv), r.beta);
    r.checks["factors order-preserving"] = is_order_preserving_symbolic(theta_map) && is_order_preserving_symbolic(theta_inv) &&
                                           is_order_preserving_symbolic(tau_map) && is_order_preserving_symbolic(tau_inv);
    r.j_holds = true;
    for (const auto& [name, ok] : r.checks) r.j_holds = r.j_holds && ok;
    return r;
}

} // namespace chainmorph

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "interval.hpp"
#include "moebius.hpp"
#include "rational.hpp"
#include "transforms.hpp"

namespace chainmorph {

struct Piece {
    QInterval dom;
    std::variant<MoebiusMap, Rat> fn; // strictly increasing Moebius map, or a constant

    bool is_constant() const { return std::holds_alternative<Rat>(fn); }
    const MoebiusMap& moebius() const { return std::get<MoebiusMap>(fn); }
    const Rat& constant() const { return std::get<Rat>(fn); }

    Rat eval(const Rat& x) const { return is_constant() ? constant() : moebius().eval(x); }

    QInterval image() const {
        if (is_constant()) return QInterval::point(constant());
        const auto& f = moebius();
        return QInterval::make(limit_at(f, dom.lo, Side::FromAbove), dom.lo_closed, limit_at(f, dom.hi, Side::FromBelow), dom.hi_closed);
    }
};

// A partial transformation of the rationals given by finitely many pieces.
class PiecewiseMoebiusMap {
public:
    PiecewiseMoebiusMap() = default;

    static PiecewiseMoebiusMap make(std::vector<Piece> pieces) {
        for (const auto& p : pieces) {
            if (p.is_constant()) continue;
            const auto& f = p.moebius();
            auto det = f.det();
            if (det == 0) throw Error(ErrorKind::MalformedMap, "degenerate Moebius coefficients " + format_moebius(f));
            if (det < 0) throw Error(ErrorKind::UnsupportedShape, "decreasing piece " + format_moebius(f) + " on " + format_interval(p.dom));
            if (auto pole = f.pole(); pole && p.dom.contains(*pole))
                throw Error(ErrorKind::MalformedMap, "pole " + format_rat(*pole) + " inside " + format_interval(p.dom));
        }
        std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) {
            return detail::lower_less(x.dom.lo, x.dom.lo_closed, y.dom.lo, y.dom.lo_closed);
        });
        for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
            if (intersect(pieces[i].dom, pieces[i + 1].dom))
                throw Error(ErrorKind::MalformedMap, "overlapping pieces on " + format_interval(pieces[i].dom) + " and " +
                                                         format_interval(pieces[i + 1].dom));
        PiecewiseMoebiusMap m;
        m.pieces_ = std::move(pieces);
        return m;
    }

    static PiecewiseMoebiusMap single(const QInterval& dom, const MoebiusMap& f) { return make({Piece{dom, f}}); }
    static PiecewiseMoebiusMap identity_on(const QInterval& dom) { return single(dom, MoebiusMap::identity()); }

    const std::vector<Piece>& pieces() const { return pieces_; }

    IntervalUnion domain() const {
        std::vector<QInterval> ds;
        for (const auto& p : pieces_) ds.push_back(p.dom);
        return IntervalUnion(std::move(ds));
    }

    bool is_full() const { return domain() == IntervalUnion::whole(); }

    std::optional<Rat> eval(const Rat& x) const {
        for (const auto& p : pieces_)
            if (p.dom.contains(x)) return p.eval(x);
        return std::nullopt;
    }

private:
    std::vector<Piece> pieces_;
};

inline IntervalUnion image_of(const PiecewiseMoebiusMap& m) {
    std::vector<QInterval> ims;
    for (const auto& p : m.pieces()) ims.push_back(p.image());
    return IntervalUnion(std::move(ims));
}

// x -> (x alpha) beta
inline PiecewiseMoebiusMap compose_symbolic(const PiecewiseMoebiusMap& a, const PiecewiseMoebiusMap& b) {
    std::vector<Piece> out;
    for (const auto& p : a.pieces()) {
        if (p.is_constant()) {
            if (auto v = b.eval(p.constant())) out.push_back(Piece{p.dom, *v});
            continue;
        }
        const auto& f = p.moebius();
        const auto inv = f.inverse();
        const auto img = p.image();
        for (const auto& q : b.pieces()) {
            auto j = intersect(img, q.dom);
            if (!j) continue;
            // f is an increasing bijection from p.dom onto img, so preimages of endpoints are endpoints.
            auto lo = limit_at(inv, j->lo, Side::FromAbove);
            auto hi = limit_at(inv, j->hi, Side::FromBelow);
            auto pre = intersect(QInterval::make(lo, j->lo_closed && lo.finite(), hi, j->hi_closed && hi.finite()), p.dom);
            if (!pre) continue;
            if (q.is_constant()) out.push_back(Piece{*pre, q.constant()});
            else out.push_back(Piece{*pre, f.then(q.moebius())});
        }
    }
    return PiecewiseMoebiusMap::make(std::move(out));
}

inline bool maps_equal(const PiecewiseMoebiusMap& a, const PiecewiseMoebiusMap& b) {
    if (a.domain() != b.domain()) return false;
    for (const auto& p : a.pieces())
        for (const auto& q : b.pieces()) {
            auto common = intersect(p.dom, q.dom);
            if (!common) continue;
            if (common->is_singleton()) {
                if (p.eval(common->lo.value) != q.eval(common->lo.value)) return false;
                continue;
            }
            if (p.is_constant() != q.is_constant()) return false;
            if (p.is_constant() ? p.constant() != q.constant() : !p.moebius().proportional(q.moebius())) return false;
        }
    return true;
}

namespace detail {

// Order-preserving on the union of pieces [first, last): pieces are increasing or
// constant, so it suffices that consecutive images do not overlap out of order.
inline bool order_preserving_run(const std::vector<QInterval>& images, std::size_t first, std::size_t last) {
    for (std::size_t i = first; i + 1 < last; ++i)
        if (images[i].hi > images[i + 1].lo) return false;
    return true;
}

} // namespace detail

// Returns an ideal (as a union of leading pieces) when the map is orientation-preserving.
// A cut strictly inside an increasing piece would violate (OP2), and a cut inside a
// constant piece works only if the cut after that piece also works, so piece
// boundaries are the only candidates. The whole domain is tried first.
inline std::optional<IntervalUnion> is_orientation_preserving_symbolic(const PiecewiseMoebiusMap& m) {
    const auto& ps = m.pieces();
    if (ps.empty()) return IntervalUnion{};
    std::vector<QInterval> images;
    for (const auto& p : ps) images.push_back(p.image());
    const std::size_t k = ps.size();
    for (std::size_t i = k; i >= 1; --i) {
        if (!detail::order_preserving_run(images, 0, i) || !detail::order_preserving_run(images, i, k)) continue;
        if (i < k) {
            ExtRat inf_y = ExtRat::pos_inf(), sup_c = ExtRat::neg_inf();
            for (std::size_t j = 0; j < i; ++j) inf_y = std::min(inf_y, images[j].lo);
            for (std::size_t j = i; j < k; ++j) sup_c = std::max(sup_c, images[j].hi);
            if (inf_y < sup_c) continue;
        }
        std::vector<QInterval> ys;
        for (std::size_t j = 0; j < i; ++j) ys.push_back(ps[j].dom);
        return IntervalUnion(std::move(ys));
    }
    return std::nullopt;
}

inline bool is_order_preserving_symbolic(const PiecewiseMoebiusMap& m) {
    std::vector<QInterval> images;
    for (const auto& p : m.pieces()) images.push_back(p.image());
    return detail::order_preserving_run(images, 0, images.size());
}

inline bool is_injective_symbolic(const PiecewiseMoebiusMap& m) {
    const auto& ps = m.pieces();
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (ps[i].is_constant() && !ps[i].dom.is_singleton()) return false;
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            if (intersect(ps[i].image(), ps[j].image())) return false;
    }
    return true;
}

inline std::vector<ClassTag> classify_symbolic(const PiecewiseMoebiusMap& m) {
    const bool full = m.is_full();
    const bool inj = is_injective_symbolic(m);
    const bool op = is_order_preserving_symbolic(m);
    const bool orient = is_orientation_preserving_symbolic(m).has_value();
    std::vector<ClassTag> tags{ClassTag::PT};
    if (full) tags.push_back(ClassTag::T);
    if (inj) tags.push_back(ClassTag::I);
    if (full && op) tags.push_back(ClassTag::O);
    if (op) tags.push_back(ClassTag::PO);
    if (op && inj) tags.push_back(ClassTag::POI);
    if (full && orient) tags.push_back(ClassTag::OP);
    if (orient) tags.push_back(ClassTag::POP);
    if (orient && inj) tags.push_back(ClassTag::POPI);
    return tags;
}

} // namespace chainmorph

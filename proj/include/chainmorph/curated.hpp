#pragma once

#include <string>
#include <vector>

#include "interval.hpp"
#include "moebius.hpp"
#include "symbolic.hpp"

namespace chainmorph {

struct CuratedMap {
    std::string name;
    PiecewiseMoebiusMap map;
    bool regular = true; // expected verdict of the OP regularity criterion
};

namespace curated {

inline const ExtRat ninf = ExtRat::neg_inf();
inline const ExtRat pinf = ExtRat::pos_inf();

inline QInterval iv(const ExtRat& lo, bool lc, const ExtRat& hi, bool hc) { return QInterval::make(lo, lc, hi, hc); }

// x/(x+1) on [0,inf[ and -x/(x-1) on ]-inf,0[: image ]-1,1[, order-preserving, not regular.
inline PiecewiseMoebiusMap open_image_map() {
    return PiecewiseMoebiusMap::make({Piece{iv(0, true, pinf, false), MoebiusMap{1, 0, 1, 1}},
                                      Piece{iv(ninf, false, 0, false), MoebiusMap{-1, 0, 1, -1}}});
}

// -1 below 1 and -1/x from 1 on: order-preserving with image [-1,0[.
inline PiecewiseMoebiusMap half_open_image_map() {
    return PiecewiseMoebiusMap::make({Piece{iv(ninf, false, 1, false), Rat(-1)}, Piece{iv(1, true, pinf, false), MoebiusMap{0, -1, 1, 0}}});
}

// -1/x on [-1,0[ and 1 elsewhere: orientation-preserving with ideal ]-inf,0[.
inline PiecewiseMoebiusMap half_open_partner() {
    return PiecewiseMoebiusMap::make({Piece{iv(ninf, false, -1, false), Rat(1)}, Piece{iv(-1, true, 0, false), MoebiusMap{0, -1, 1, 0}},
                                      Piece{iv(0, true, pinf, false), Rat(1)}});
}

inline PiecewiseMoebiusMap identity() { return PiecewiseMoebiusMap::identity_on(QInterval::whole()); }

// x below 0, x+1 from 0 on: image ]-inf,0[ u [1,inf[.
inline PiecewiseMoebiusMap shift_gap() {
    return PiecewiseMoebiusMap::make({Piece{iv(ninf, false, 0, false), MoebiusMap::identity()},
                                      Piece{iv(0, true, pinf, false), MoebiusMap::affine(1, 1)}});
}

// (3-2x)/(1-x) on ]-inf,0], x on ]0,1], 1 above: ideal ]-inf,0], image ]0,1] u ]2,3].
inline PiecewiseMoebiusMap wrap() {
    return PiecewiseMoebiusMap::make({Piece{iv(ninf, false, 0, true), MoebiusMap{-2, 3, -1, 1}},
                                      Piece{iv(0, false, 1, true), MoebiusMap::identity()}, Piece{iv(1, false, pinf, false), Rat(1)}});
}

inline PiecewiseMoebiusMap constant_five() { return PiecewiseMoebiusMap::make({Piece{QInterval::whole(), Rat(5)}}); }

// Ideal ]-inf,0] whose image meets the complement's image in the single point 1.
inline PiecewiseMoebiusMap glued() {
    return PiecewiseMoebiusMap::make({Piece{iv(ninf, false, -1, true), Rat(1)}, Piece{iv(-1, false, 0, true), MoebiusMap::affine(1, 2)},
                                      Piece{iv(0, false, 1, false), MoebiusMap::identity()}, Piece{iv(1, true, pinf, false), Rat(1)}});
}

// Two gaps, one attained on each side: image ]-inf,0] u ]1,2] u ]3,inf[.
inline PiecewiseMoebiusMap two_gaps() {
    return PiecewiseMoebiusMap::make({Piece{iv(ninf, false, 0, true), MoebiusMap::identity()},
                                      Piece{iv(0, false, 1, true), MoebiusMap::affine(1, 1)},
                                      Piece{iv(1, false, pinf, false), MoebiusMap::affine(1, 2)}});
}

// (x-2)/(x-1) on ]-inf,0] and -1/x above: image ]-inf,0[ u ]1,2], gap attained on neither side.
inline PiecewiseMoebiusMap unattained_gap() {
    return PiecewiseMoebiusMap::make({Piece{iv(ninf, false, 0, true), MoebiusMap{1, -2, 1, -1}},
                                      Piece{iv(0, false, pinf, false), MoebiusMap{0, -1, 1, 0}}});
}

} // namespace curated

// Full maps of the rationals used by the symbolic suites.
inline std::vector<CuratedMap> curated_maps() {
    return {
        {"identity", curated::identity(), true},
        {"shift-gap", curated::shift_gap(), true},
        {"wrap", curated::wrap(), true},
        {"constant", curated::constant_five(), true},
        {"half-open-image", curated::half_open_image_map(), true},
        {"half-open-partner", curated::half_open_partner(), true},
        {"glued", curated::glued(), true},
        {"two-gaps", curated::two_gaps(), true},
        {"open-image", curated::open_image_map(), false},
        {"unattained-gap", curated::unattained_gap(), false},
    };
}

} // namespace chainmorph

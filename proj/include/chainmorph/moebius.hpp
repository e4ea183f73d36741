#pragma once

#include <optional>
#include <string>

#include "error.hpp"
#include "interval.hpp"
#include "rational.hpp"

namespace chainmorph {

// x -> (a x + b) / (c x + d)
struct MoebiusMap {
    Rat a = 1, b = 0, c = 0, d = 1;

    static MoebiusMap identity() { return {1, 0, 0, 1}; }
    static MoebiusMap affine(const Rat& slope, const Rat& intercept) { return {slope, intercept, 0, 1}; }

    Rat det() const { return a * d - b * c; }

    std::optional<Rat> pole() const {
        if (c == 0) return std::nullopt;
        return -d / c;
    }

    Rat eval(const Rat& x) const {
        Rat den = c * x + d;
        if (den == 0) throw Error(ErrorKind::MalformedMap, "evaluation at the pole " + format_rat(x));
        return (a * x + b) / den;
    }

    // First this map, then g.
    MoebiusMap then(const MoebiusMap& g) const {
        return {g.a * a + g.b * c, g.a * b + g.b * d, g.c * a + g.d * c, g.c * b + g.d * d};
    }

    MoebiusMap inverse() const { return {d, -b, -c, a}; }

    // Same function: coefficient vectors agree up to a nonzero scalar.
    bool proportional(const MoebiusMap& o) const {
        const Rat u[4] = {a, b, c, d};
        const Rat v[4] = {o.a, o.b, o.c, o.d};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (u[i] * v[j] != u[j] * v[i]) return false;
        return true;
    }

    friend bool operator==(const MoebiusMap&, const MoebiusMap&) = default;
};

enum class Side { FromBelow, FromAbove };

// One-sided limit at x, exact: a rational or +-inf.
inline ExtRat limit_at(const MoebiusMap& f, const ExtRat& x, Side side) {
    const bool up = f.det() > 0;
    if (x.finite()) {
        auto p = f.pole();
        if (!p || *p != x.value) return ExtRat(f.eval(x.value));
        // f(x) = a/c - det / (c^2 (x - p))
        bool plus = (side == Side::FromBelow) == up;
        return plus ? ExtRat::pos_inf() : ExtRat::neg_inf();
    }
    if (f.c != 0) return ExtRat(f.a / f.c);
    bool plus = (x.kind == ExtRat::Kind::PosInf) == (f.a / f.d > 0);
    return plus ? ExtRat::pos_inf() : ExtRat::neg_inf();
}

inline std::string format_moebius(const MoebiusMap& f) {
    return "[" + format_rat(f.a) + "," + format_rat(f.b) + "," + format_rat(f.c) + "," + format_rat(f.d) + "]";
}

} // namespace chainmorph

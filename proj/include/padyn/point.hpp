#pragma once

#include "padyn/scalar.hpp"

namespace padyn {

// A point of the plane K^2 with the sup norm ||(x,y)|| = max(|x|, |y|).
struct Point {
    Scalar x;
    Scalar y;

    Norm norm() const { return sup_norm(x.norm(), y.norm()); }

    // min of the coordinate precisions: the precision the point is known to.
    long prec() const { return x.prec() < y.prec() ? x.prec() : y.prec(); }

    // Tri-state membership in the unit polydisc R^2 (+1/-1/0 as Scalar).
    int in_unit_polydisc() const {
        int ix = x.integrality(), iy = y.integrality();
        if (ix < 0 || iy < 0) return -1;
        if (ix > 0 && iy > 0) return +1;
        return 0;
    }

    bool agrees_with(const Point& o) const {
        return x.agrees_with(o.x) && y.agrees_with(o.y);
    }
};

inline Norm distance(const Point& a, const Point& b) {
    return sup_norm(sub(a.x, b.x).norm(), sub(a.y, b.y).norm());
}

}  // namespace padyn

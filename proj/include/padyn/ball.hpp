#pragma once

#include <gmpxx.h>

#include <string>

#include "padyn/point.hpp"

namespace padyn {

// An ultrametric ball of R^2 at radius p^-depth: the residue class
// {(x,y) : x = x_res, y = y_res mod p^depth}.  Diameter equals radius, and
// distinct balls of one depth are disjoint, so ball covers are exact counts.
struct BallId {
    mpz_class x_res;
    mpz_class y_res;
    long depth = 0;

    static BallId of(const Point& pt, long depth) {
        return {pt.x.reduce_mod(depth), pt.y.reduce_mod(depth), depth};
    }

    bool contains(const Point& pt) const {
        return pt.x.reduce_mod(depth) == x_res && pt.y.reduce_mod(depth) == y_res;
    }

    // The depth-(depth-1) ball containing this one.
    BallId parent(unsigned p) const {
        const mpz_class& m = pow_p(p, depth - 1);
        return {x_res % m, y_res % m, depth - 1};
    }

    bool operator==(const BallId& o) const {
        return depth == o.depth && x_res == o.x_res && y_res == o.y_res;
    }
    bool operator<(const BallId& o) const {
        if (depth != o.depth) return depth < o.depth;
        const int cx = cmp(x_res, o.x_res);
        if (cx != 0) return cx < 0;
        return cmp(y_res, o.y_res) < 0;
    }

    std::string str() const {
        return "(" + x_res.get_str() + "," + y_res.get_str() + ")@" + std::to_string(depth);
    }
};

}  // namespace padyn

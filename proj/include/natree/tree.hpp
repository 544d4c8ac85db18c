#ifndef NATREE_TREE_HPP
#define NATREE_TREE_HPP

#include "natree/hplane.hpp"
#include "natree/series.hpp"

#include <stdexcept>

namespace natree {

// Canonical representative of a class of the quotient tree: the pair
// (u, t) with u = x truncated strictly above t = log y. Two classes are
// equal iff the canonical pairs coincide.
class TreePoint {
public:
    TreePoint(const Series& u, Rat height);

    const Series& u() const { return u_; }
    const Rat& height() const { return t_; }

    friend bool operator==(const TreePoint&, const TreePoint&) = default;

private:
    Series u_;
    Rat t_;
};

TreePoint project(const HPoint& z);

// Same max formula as hp_distance, but positive definite on canonical forms.
Rat tree_distance(const TreePoint& p, const TreePoint& p2);

// Height of the apex of the geodesic between p and p': the least height at
// which the two vertical rays below the points are identified.
Rat merge_height(const TreePoint& p, const TreePoint& p2);

// Geodesic between two tree points as an up-then-down path through the apex.
struct SegmentSpec {
    TreePoint a;
    TreePoint b;
    Rat merge;

    Rat length() const { return (merge - a.height()) + (merge - b.height()); }
};

SegmentSpec segment_spec(const TreePoint& a, const TreePoint& b);

// Point at arc length s from a along the segment [a, b]; throws
// std::out_of_range unless 0 <= s <= tree_distance(a, b).
TreePoint param_point(const TreePoint& a, const TreePoint& b, const Rat& s);

// (d(base,p1) + d(base,p2) - d(p1,p2)) / 2, the distance from base to the
// median of the triple.
Rat gromov_product(const TreePoint& p1, const TreePoint& p2, const TreePoint& base);

// The unique point m with d(p_i, m) equal to the Gromov product of the other
// two based at p_i, for each i.
TreePoint median(const TreePoint& p1, const TreePoint& p2, const TreePoint& p3);

bool is_on_segment(const TreePoint& p, const TreePoint& a, const TreePoint& b);

// Among the three pairwise-sum pairings of the four points, the two largest
// sums agree.
bool four_point_ok(const TreePoint& p1, const TreePoint& p2, const TreePoint& p3,
                   const TreePoint& p4);

}  // namespace natree

#endif

#include "natree/tree.hpp"

#include <algorithm>
#include <utility>

namespace natree {

TreePoint::TreePoint(const Series& u, Rat height) : t_(std::move(height)) {
    if (!u.is_exact()) throw std::invalid_argument("tree point series must be exact");
    u_ = truncate_above(u, t_);
}

TreePoint project(const HPoint& z) {
    return TreePoint(z.x(), log_abs(z.y()).value());
}

Rat tree_distance(const TreePoint& p, const TreePoint& p2) {
    const Rat vertical = abs_value(p.height() - p2.height());
    Valuation horizontal = log_abs(sub(p.u(), p2.u()));
    if (!horizontal.is_finite()) return vertical;
    return std::max(Rat(2 * horizontal.value() - p.height() - p2.height()), vertical);
}

Rat merge_height(const TreePoint& p, const TreePoint& p2) {
    Rat h = std::max(p.height(), p2.height());
    Valuation branch = log_abs(sub(p.u(), p2.u()));
    if (branch.is_finite()) h = std::max(h, branch.value());
    return h;
}

SegmentSpec segment_spec(const TreePoint& a, const TreePoint& b) {
    return {a, b, merge_height(a, b)};
}

TreePoint param_point(const TreePoint& a, const TreePoint& b, const Rat& s) {
    if (s < 0 || s > tree_distance(a, b)) throw std::out_of_range("parameter outside the segment");
    const Rat apex = merge_height(a, b);
    const Rat up = apex - a.height();
    if (s <= up) return TreePoint(a.u(), a.height() + s);
    return TreePoint(b.u(), apex - (s - up));
}

Rat gromov_product(const TreePoint& p1, const TreePoint& p2, const TreePoint& base) {
    return (tree_distance(base, p1) + tree_distance(base, p2) - tree_distance(p1, p2)) / 2;
}

TreePoint median(const TreePoint& p1, const TreePoint& p2, const TreePoint& p3) {
    TreePoint m = param_point(p1, p2, gromov_product(p2, p3, p1));
    // tripod consistency; a violation would mean the metric is not 0-hyperbolic
    if (tree_distance(p1, m) != gromov_product(p2, p3, p1) ||
        tree_distance(p2, m) != gromov_product(p1, p3, p2) ||
        tree_distance(p3, m) != gromov_product(p1, p2, p3))
        throw std::logic_error("median does not satisfy the tripod equations");
    return m;
}

bool is_on_segment(const TreePoint& p, const TreePoint& a, const TreePoint& b) {
    return tree_distance(a, p) + tree_distance(p, b) == tree_distance(a, b);
}

bool four_point_ok(const TreePoint& p1, const TreePoint& p2, const TreePoint& p3,
                   const TreePoint& p4) {
    Rat s1 = tree_distance(p1, p2) + tree_distance(p3, p4);
    Rat s2 = tree_distance(p1, p3) + tree_distance(p2, p4);
    Rat s3 = tree_distance(p1, p4) + tree_distance(p2, p3);
    Rat sums[3] = {std::move(s1), std::move(s2), std::move(s3)};
    std::sort(sums, sums + 3);
    return sums[1] == sums[2];
}

}  // namespace natree

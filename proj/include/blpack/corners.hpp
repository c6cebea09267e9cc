#pragma once

#include <utility>
#include <vector>

#include "blpack/geometry.hpp"

namespace blpack {

/// A bottom-left corner admitting a specific rectangle, plus what supplies
/// the blocking contact on each axis (0 = container wall/floor).
struct Corner {
    Rational x;
    Rational y;
    int left_support = 0;
    int bottom_support = 0;

    friend bool operator==(const Corner& a, const Corner& b) { return a.x == b.x && a.y == b.y; }
};

/// Candidate positions for any bottom-left corner: the cartesian product of
/// {0} u {right edges} and {0} u {top edges} of the placed rectangles,
/// ordered by (y, x). At most (k+1)^2 points for k placed rectangles.
std::vector<std::pair<Rational, Rational>> candidate_grid(const Packing& p);

/// All positions where a rectangle of the given dims and orientation fits in
/// the container, overlaps nothing, and would be blocked both downwards and
/// leftwards. Ordered by (y, x) ascending, so the front element is the
/// lowest-then-leftmost position.
std::vector<Corner> enumerate_corners(const Packing& p, const Dims& dims, Orientation v);

}  // namespace blpack

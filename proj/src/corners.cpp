#include "blpack/corners.hpp"

#include <algorithm>

namespace blpack {

namespace {

std::vector<Rational> sorted_unique(std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

std::vector<Rational> grid_xs(const Packing& p) {
    std::vector<Rational> xs;
    xs.reserve(p.size() + 1);
    xs.emplace_back(0);
    for (const PlacedRect& r : p.placed()) xs.push_back(r.right());
    return sorted_unique(std::move(xs));
}

std::vector<Rational> grid_ys(const Packing& p) {
    std::vector<Rational> ys;
    ys.reserve(p.size() + 1);
    ys.emplace_back(0);
    for (const PlacedRect& r : p.placed()) ys.push_back(r.top());
    return sorted_unique(std::move(ys));
}

}  // namespace

std::vector<std::pair<Rational, Rational>> candidate_grid(const Packing& p) {
    std::vector<std::pair<Rational, Rational>> grid;
    const auto xs = grid_xs(p);
    const auto ys = grid_ys(p);
    grid.reserve(xs.size() * ys.size());
    for (const Rational& y : ys) {
        for (const Rational& x : xs) grid.emplace_back(x, y);
    }
    return grid;
}

std::vector<Corner> enumerate_corners(const Packing& p, const Dims& dims, Orientation v) {
    const Dims eff = effective_dims(dims, v);
    const Dims& container = p.instance().container;
    std::vector<Corner> corners;

    for (const Rational& y : grid_ys(p)) {
        Rational top = y + eff.h;
        if (top > container.h) continue;
        for (const Rational& x : grid_xs(p)) {
            Rational right = x + eff.w;
            if (right > container.w) continue;

            bool overlaps = false;
            for (const PlacedRect& j : p.placed()) {
                if (x < j.right() && j.left() < right && y < j.top() && j.bottom() < top) {
                    overlaps = true;
                    break;
                }
            }
            if (overlaps) continue;

            // Blocked downwards: floor, or edge contact with positive
            // x-projection overlap. Corner-point-only contact does not count.
            int bottom_support = -1;
            if (y.is_zero()) {
                bottom_support = 0;
            } else {
                for (const PlacedRect& j : p.placed()) {
                    if (j.top() == y && max(x, j.left()) < min(right, j.right())) {
                        bottom_support = j.id();
                        break;
                    }
                }
            }
            if (bottom_support < 0) continue;

            int left_support = -1;
            if (x.is_zero()) {
                left_support = 0;
            } else {
                for (const PlacedRect& j : p.placed()) {
                    if (j.right() == x && max(y, j.bottom()) < min(top, j.top())) {
                        left_support = j.id();
                        break;
                    }
                }
            }
            if (left_support < 0) continue;

            corners.push_back(Corner{x, y, left_support, bottom_support});
        }
    }
    return corners;
}

}  // namespace blpack

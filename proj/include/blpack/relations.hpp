#pragma once

#include "blpack/geometry.hpp"

namespace blpack {

enum class Direction : unsigned char { kDown, kLeft, kUp, kRight };

/// Directional interference: j is over i when some upward displacement of i
/// (any positive distance, not only an infinitesimal one) would overlap j.
/// Closed form: positive x-projection overlap and top(j) > bottom(i).
bool is_over(const PlacedRect& j, const PlacedRect& i);

/// Mirror of is_over: positive y-projection overlap and right(j) > left(i).
bool is_right_of(const PlacedRect& j, const PlacedRect& i);

/// No rectangle is over (dir = up) or right of (dir = right) rectangle `id`.
/// Container borders are deliberately ignored.
bool can_move_freely(int id, const Packing& p, Direction dir);

/// Whether `id` cannot slide at all in `dir` (down or left). Movement is a
/// continuous slide, so blocking requires touching support: the floor/left
/// wall, or a rectangle in edge contact with positive projection overlap.
/// Throws FeasibilityError on infeasible packings.
bool is_blocked(int id, const Packing& p, Direction dir);

/// Largest displacement of `id` in `dir` (down or left) that keeps every
/// intermediate position feasible. Zero exactly when is_blocked.
Rational max_slide(int id, const Packing& p, Direction dir);

/// Slide `id` down then left, repeating until both slides are zero, with all
/// other rectangles fixed. Returns the final placement.
Placement settle(int id, const Packing& p);

/// Blocked both downwards and leftwards.
bool is_bl_stable_rect(int id, const Packing& p);

/// Every placed rectangle is bottom-left stable (vacuously true when empty).
bool is_bl_stable(const Packing& p);

}  // namespace blpack

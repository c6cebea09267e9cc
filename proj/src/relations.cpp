#include "blpack/relations.hpp"

namespace blpack {

namespace {

bool x_projections_overlap(const PlacedRect& a, const PlacedRect& b) {
    return max(a.left(), b.left()) < min(a.right(), b.right());
}

bool y_projections_overlap(const PlacedRect& a, const PlacedRect& b) {
    return max(a.bottom(), b.bottom()) < min(a.top(), b.top());
}

void require_feasible(const Packing& p, const char* op) {
    if (!is_feasible(p)) {
        throw FeasibilityError(std::string(op) + " requires a feasible packing");
    }
}

}  // namespace

bool is_over(const PlacedRect& j, const PlacedRect& i) {
    return x_projections_overlap(i, j) && j.top() > i.bottom();
}

bool is_right_of(const PlacedRect& j, const PlacedRect& i) {
    return y_projections_overlap(i, j) && j.right() > i.left();
}

bool can_move_freely(int id, const Packing& p, Direction dir) {
    if (dir != Direction::kUp && dir != Direction::kRight) {
        throw Error("can_move_freely is defined for up and right only");
    }
    const PlacedRect& rect = p.at(id);
    for (const PlacedRect& j : p.placed()) {
        if (j.id() == id) continue;
        if (dir == Direction::kUp ? is_over(j, rect) : is_right_of(j, rect)) return false;
    }
    return true;
}

bool is_blocked(int id, const Packing& p, Direction dir) {
    if (dir != Direction::kDown && dir != Direction::kLeft) {
        throw Error("is_blocked is defined for down and left only");
    }
    require_feasible(p, "is_blocked");
    const PlacedRect& rect = p.at(id);
    if (dir == Direction::kDown) {
        if (rect.bottom().is_zero()) return true;
        for (const PlacedRect& j : p.placed()) {
            if (j.id() == id) continue;
            if (j.top() == rect.bottom() && x_projections_overlap(rect, j)) return true;
        }
    } else {
        if (rect.left().is_zero()) return true;
        for (const PlacedRect& j : p.placed()) {
            if (j.id() == id) continue;
            if (j.right() == rect.left() && y_projections_overlap(rect, j)) return true;
        }
    }
    return false;
}

Rational max_slide(int id, const Packing& p, Direction dir) {
    if (dir != Direction::kDown && dir != Direction::kLeft) {
        throw Error("max_slide is defined for down and left only");
    }
    require_feasible(p, "max_slide");
    const PlacedRect& rect = p.at(id);
    Rational support;  // floor / left wall
    if (dir == Direction::kDown) {
        for (const PlacedRect& j : p.placed()) {
            if (j.id() == id) continue;
            if (x_projections_overlap(rect, j) && j.top() <= rect.bottom()) {
                support = max(support, j.top());
            }
        }
        return rect.bottom() - support;
    }
    for (const PlacedRect& j : p.placed()) {
        if (j.id() == id) continue;
        if (y_projections_overlap(rect, j) && j.right() <= rect.left()) {
            support = max(support, j.right());
        }
    }
    return rect.left() - support;
}

Placement settle(int id, const Packing& p) {
    require_feasible(p, "settle");
    Packing cur = p;
    for (;;) {
        Rational down = max_slide(id, cur, Direction::kDown);
        if (down.is_positive()) {
            Placement pos = cur.at(id).pos();
            pos.y -= down;
            cur.move(id, pos);
        }
        Rational left = max_slide(id, cur, Direction::kLeft);
        if (left.is_positive()) {
            Placement pos = cur.at(id).pos();
            pos.x -= left;
            cur.move(id, pos);
        }
        if (!down.is_positive() && !left.is_positive()) break;
    }
    return cur.at(id).pos();
}

bool is_bl_stable_rect(int id, const Packing& p) {
    return is_blocked(id, p, Direction::kDown) && is_blocked(id, p, Direction::kLeft);
}

bool is_bl_stable(const Packing& p) {
    require_feasible(p, "is_bl_stable");
    for (const PlacedRect& r : p.placed()) {
        if (!is_bl_stable_rect(r.id(), p)) return false;
    }
    return true;
}

}  // namespace blpack

#include "blpack/geometry.hpp"

#include <algorithm>

namespace blpack {

Dims effective_dims(const Dims& dims, Orientation v) {
    if (v == Orientation::kVertical) return Dims{dims.h, dims.w};
    return dims;
}

PlacedRect::PlacedRect(int id, const Dims& dims, const Placement& pos)
    : id_(id), dims_(dims), pos_(pos), eff_(effective_dims(dims, pos.v)) {
    right_ = pos_.x + eff_.w;
    top_ = pos_.y + eff_.h;
}

Rational Instance::total_rect_area() const {
    Rational sum;
    for (const Dims& d : rects) sum += d.area();
    return sum;
}

bool Instance::is_integer() const {
    if (!container.w.is_integer() || !container.h.is_integer()) return false;
    for (const Dims& d : rects) {
        if (!d.w.is_integer() || !d.h.is_integer()) return false;
    }
    return true;
}

void Instance::validate() const {
    if (!container.valid()) throw ParseError("container dimensions must be positive");
    for (std::size_t i = 0; i < rects.size(); ++i) {
        if (!rects[i].valid()) {
            throw ParseError("rectangle " + std::to_string(i + 1) + " has a non-positive dimension");
        }
    }
}

const PlacedRect* Packing::find(int id) const {
    auto it = std::lower_bound(placed_.begin(), placed_.end(), id,
                               [](const PlacedRect& r, int v) { return r.id() < v; });
    if (it == placed_.end() || it->id() != id) return nullptr;
    return &*it;
}

const PlacedRect& Packing::at(int id) const {
    const PlacedRect* r = find(id);
    if (r == nullptr) throw Error("rectangle " + std::to_string(id) + " is not placed");
    return *r;
}

void Packing::place(int id, const Placement& pos) {
    if (!instance_.valid_id(id)) throw Error("unknown rectangle id " + std::to_string(id));
    auto it = std::lower_bound(placed_.begin(), placed_.end(), id,
                               [](const PlacedRect& r, int v) { return r.id() < v; });
    if (it != placed_.end() && it->id() == id) {
        throw Error("rectangle " + std::to_string(id) + " is already placed");
    }
    placed_.insert(it, PlacedRect(id, instance_.dims_of(id), pos));
}

void Packing::remove(int id) {
    auto it = std::lower_bound(placed_.begin(), placed_.end(), id,
                               [](const PlacedRect& r, int v) { return r.id() < v; });
    if (it == placed_.end() || it->id() != id) {
        throw Error("rectangle " + std::to_string(id) + " is not placed");
    }
    placed_.erase(it);
}

void Packing::move(int id, const Placement& pos) {
    remove(id);
    place(id, pos);
}

Rational overlap_area(const PlacedRect& a, const PlacedRect& b) {
    Rational w = min(a.right(), b.right()) - max(a.left(), b.left());
    if (!w.is_positive()) return Rational();
    Rational h = min(a.top(), b.top()) - max(a.bottom(), b.bottom());
    if (!h.is_positive()) return Rational();
    return w * h;
}

bool boxes_overlap(const PlacedRect& a, const PlacedRect& b) {
    return a.left() < b.right() && b.left() < a.right() &&
           a.bottom() < b.top() && b.bottom() < a.top();
}

Rational outside_overlap(const PlacedRect& r, const Dims& container) {
    const Rational zero;
    Rational w = min(r.right(), container.w) - max(r.left(), zero);
    Rational h = min(r.top(), container.h) - max(r.bottom(), zero);
    Rational inside;
    if (w.is_positive() && h.is_positive()) inside = w * h;
    return r.area() - inside;
}

bool inside_container(const PlacedRect& r, const Dims& container) {
    return !r.left().is_negative() && !r.bottom().is_negative() &&
           r.right() <= container.w && r.top() <= container.h;
}

Rational total_overlap(const Packing& p) {
    const auto& rects = p.placed();
    Rational sum;
    for (std::size_t i = 0; i < rects.size(); ++i) {
        sum += outside_overlap(rects[i], p.instance().container);
        for (std::size_t j = i + 1; j < rects.size(); ++j) {
            sum += overlap_area(rects[i], rects[j]);
        }
    }
    return sum;
}

Rational total_coordinate(const Packing& p) {
    Rational sum;
    for (const PlacedRect& r : p.placed()) {
        sum += r.left();
        sum += r.bottom();
    }
    return sum;
}

bool is_feasible(const Packing& p) {
    const auto& rects = p.placed();
    for (std::size_t i = 0; i < rects.size(); ++i) {
        if (!inside_container(rects[i], p.instance().container)) return false;
        for (std::size_t j = i + 1; j < rects.size(); ++j) {
            if (boxes_overlap(rects[i], rects[j])) return false;
        }
    }
    return true;
}

}  // namespace blpack

#pragma once

#include <cstddef>
#include <vector>

#include "blpack/error.hpp"
#include "blpack/rational.hpp"

namespace blpack {

enum class Orientation : unsigned char {
    kHorizontal = 0,
    kVertical = 1,  // placed with width and height swapped
};

/// Width/height pair; both strictly positive for valid rectangles.
struct Dims {
    Rational w;
    Rational h;

    Rational area() const { return w * h; }
    bool valid() const { return w.is_positive() && h.is_positive(); }

    friend bool operator==(const Dims& a, const Dims& b) { return a.w == b.w && a.h == b.h; }
    friend bool operator!=(const Dims& a, const Dims& b) { return !(a == b); }
};

/// Dimensions actually occupied once the orientation is applied.
Dims effective_dims(const Dims& dims, Orientation v);

/// Bottom-left corner coordinates plus orientation of one rectangle.
struct Placement {
    Rational x;
    Rational y;
    Orientation v = Orientation::kHorizontal;

    friend bool operator==(const Placement& a, const Placement& b) {
        return a.x == b.x && a.y == b.y && a.v == b.v;
    }
    friend bool operator!=(const Placement& a, const Placement& b) { return !(a == b); }
};

/// A rectangle bound to a placement; the occupied box is cached.
class PlacedRect {
public:
    PlacedRect(int id, const Dims& dims, const Placement& pos);

    int id() const { return id_; }
    const Dims& dims() const { return dims_; }
    const Placement& pos() const { return pos_; }
    Orientation orientation() const { return pos_.v; }

    const Dims& effective() const { return eff_; }
    const Rational& left() const { return pos_.x; }
    const Rational& bottom() const { return pos_.y; }
    const Rational& right() const { return right_; }
    const Rational& top() const { return top_; }
    Rational area() const { return eff_.w * eff_.h; }

    friend bool operator==(const PlacedRect& a, const PlacedRect& b) {
        return a.id_ == b.id_ && a.dims_ == b.dims_ && a.pos_ == b.pos_;
    }
    friend bool operator!=(const PlacedRect& a, const PlacedRect& b) { return !(a == b); }

private:
    int id_;
    Dims dims_;
    Placement pos_;
    Dims eff_;
    Rational right_;
    Rational top_;
};

/// Container dimensions plus the rectangle multiset, ids 1..n.
struct Instance {
    Dims container;
    std::vector<Dims> rects;

    int size() const { return static_cast<int>(rects.size()); }
    bool valid_id(int id) const { return id >= 1 && id <= size(); }
    const Dims& dims_of(int id) const { return rects[static_cast<std::size_t>(id) - 1]; }
    Rational total_rect_area() const;
    bool is_integer() const;
    /// Throws ParseError when the container or any rectangle has a
    /// non-positive dimension.
    void validate() const;

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.container == b.container && a.rects == b.rects;
    }
    friend bool operator!=(const Instance& a, const Instance& b) { return !(a == b); }
};

/// A (possibly partial) packing: a subset of the instance rectangles with
/// placements. Kept sorted by id. Value type; all operations on packings
/// are pure, so const packings are safe to share across threads.
class Packing {
public:
    Packing() = default;
    explicit Packing(Instance instance) : instance_(std::move(instance)) {}

    const Instance& instance() const { return instance_; }
    const std::vector<PlacedRect>& placed() const { return placed_; }
    std::size_t size() const { return placed_.size(); }
    bool empty() const { return placed_.empty(); }
    bool complete() const { return static_cast<int>(placed_.size()) == instance_.size(); }

    bool has(int id) const { return find(id) != nullptr; }
    const PlacedRect* find(int id) const;
    const PlacedRect& at(int id) const;

    /// Place instance rectangle `id`; throws Error on unknown or duplicate id.
    void place(int id, const Placement& pos);
    void remove(int id);
    /// Re-position an already placed rectangle, keeping its orientation flag
    /// as given.
    void move(int id, const Placement& pos);

    friend bool operator==(const Packing& a, const Packing& b) {
        return a.instance_ == b.instance_ && a.placed_ == b.placed_;
    }
    friend bool operator!=(const Packing& a, const Packing& b) { return !(a == b); }

private:
    Instance instance_;
    std::vector<PlacedRect> placed_;
};

/// Positive-area intersection of the two occupied boxes; boundary contact
/// yields exactly zero.
Rational overlap_area(const PlacedRect& a, const PlacedRect& b);

/// True iff the boxes intersect with positive area.
bool boxes_overlap(const PlacedRect& a, const PlacedRect& b);

/// Area of r lying outside the container box [0,W]x[0,H].
Rational outside_overlap(const PlacedRect& r, const Dims& container);

bool inside_container(const PlacedRect& r, const Dims& container);

/// Sum of all pairwise overlaps plus every rectangle's overlap with the
/// outside of the container. Zero exactly when the packing is feasible.
Rational total_overlap(const Packing& p);

/// Sum of x_i + y_i over the placed rectangles.
Rational total_coordinate(const Packing& p);

/// Every placed rectangle inside the container and no positive pairwise
/// overlap. Orthogonal placement is structural, so it is not re-checked.
bool is_feasible(const Packing& p);

}  // namespace blpack

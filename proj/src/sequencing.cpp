#include "blpack/sequencing.hpp"

#include <algorithm>
#include <string>

#include "blpack/relations.hpp"

namespace blpack {

namespace {

// Lexicographic <x, y> order on top-right corner points. Distinct rectangles
// of a feasible packing cannot share a top-right corner, so ties signal a
// broken precondition.
bool key_less(const PlacedRect& a, const PlacedRect& b) {
    int c = a.right().compare(b.right());
    if (c != 0) return c < 0;
    c = a.top().compare(b.top());
    if (c == 0) throw Error("two rectangles share a top-right corner point");
    return c < 0;
}

}  // namespace

std::vector<int> escape_walk(const Packing& p) {
    if (p.empty()) throw Error("escape_walk on an empty packing");
    if (!is_feasible(p)) throw FeasibilityError("escape_walk requires a feasible packing");

    const auto& rects = p.placed();
    const PlacedRect* cur = &rects[0];
    for (std::size_t i = 1; i < rects.size(); ++i) {
        if (key_less(*cur, rects[i])) cur = &rects[i];
    }

    std::vector<int> walk{cur->id()};
    for (;;) {
        const PlacedRect* next = nullptr;
        for (const PlacedRect& j : rects) {
            if (j.id() == cur->id() || !is_over(j, *cur)) continue;
            if (next == nullptr || key_less(*next, j)) next = &j;
        }
        if (next == nullptr) break;
        cur = next;
        walk.push_back(cur->id());
        if (walk.size() > rects.size()) {
            throw Error("escape walk exceeded the rectangle count");  // unreachable
        }
    }
    return walk;
}

int escape_candidate(const Packing& p) {
    return escape_walk(p).back();
}

std::vector<int> extraction_order(const Packing& p) {
    if (!is_feasible(p)) throw FeasibilityError("extraction_order requires a feasible packing");
    Packing cur = p;
    std::vector<int> order;
    order.reserve(cur.size());
    while (!cur.empty()) {
        int id = escape_candidate(cur);
        order.push_back(id);
        cur.remove(id);
    }
    return order;
}

StabilizeResult stabilize(const Packing& p) {
    if (!is_feasible(p)) throw FeasibilityError("stabilize requires a feasible packing");
    std::vector<int> order = extraction_order(p);

    Packing out(p.instance());
    PlacementSequence seq;
    seq.actions.reserve(order.size());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int id = *it;
        out.place(id, p.at(id).pos());
        if (!is_feasible(out)) {
            throw Error("re-insertion broke feasibility");  // would contradict the escape order
        }
        Placement settled = settle(id, out);
        out.move(id, settled);
        seq.actions.push_back(PlacementAction{id, settled.v, settled.x, settled.y});
    }
    return StabilizeResult{std::move(out), std::move(seq)};
}

PlacementSequence extract_sequence(const Packing& p) {
    if (!is_feasible(p)) throw FeasibilityError("extract_sequence requires a feasible packing");
    if (!is_bl_stable(p)) {
        throw StabilityError("extract_sequence requires a bottom-left stable packing");
    }
    StabilizeResult result = stabilize(p);
    for (const PlacementAction& a : result.sequence.actions) {
        if (p.at(a.id).pos() != result.packing.at(a.id).pos()) {
            throw Error("settle moved a rectangle of a stable packing");  // unreachable
        }
    }
    return std::move(result.sequence);
}

Packing replay(const Instance& instance, const PlacementSequence& s) {
    instance.validate();
    Packing out(instance);
    for (std::size_t i = 0; i < s.actions.size(); ++i) {
        const PlacementAction& a = s.actions[i];
        const std::string at = " at action " + std::to_string(i);
        if (!instance.valid_id(a.id)) {
            throw ReplayError(ReplayError::Kind::kUnknownId, i,
                              "unknown rectangle id " + std::to_string(a.id) + at);
        }
        if (out.has(a.id)) {
            throw ReplayError(ReplayError::Kind::kDuplicateId, i,
                              "rectangle " + std::to_string(a.id) + " placed twice" + at);
        }
        const auto corners = enumerate_corners(out, instance.dims_of(a.id), a.v);
        const bool is_corner = std::any_of(corners.begin(), corners.end(), [&](const Corner& c) {
            return c.x == a.x && c.y == a.y;
        });
        if (!is_corner) {
            throw ReplayError(ReplayError::Kind::kNotACorner, i,
                              "action-not-a-corner: (" + a.x.to_string() + ", " + a.y.to_string() +
                                  ") is not a bottom-left corner for rectangle " +
                                  std::to_string(a.id) + at);
        }
        out.place(a.id, Placement{a.x, a.y, a.v});
    }
    return out;
}

}  // namespace blpack

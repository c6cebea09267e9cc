#pragma once

#include <vector>

#include "blpack/corners.hpp"
#include "blpack/geometry.hpp"

namespace blpack {

/// One bottom-left placement action: put rectangle `id` with orientation `v`
/// onto the corner (x, y) of the packing built so far.
struct PlacementAction {
    int id = 0;
    Orientation v = Orientation::kHorizontal;
    Rational x;
    Rational y;

    friend bool operator==(const PlacementAction& a, const PlacementAction& b) {
        return a.id == b.id && a.v == b.v && a.x == b.x && a.y == b.y;
    }
};

/// Ordered list of placement actions; replayable as a packing certificate.
struct PlacementSequence {
    std::vector<PlacementAction> actions;

    friend bool operator==(const PlacementSequence& a, const PlacementSequence& b) {
        return a.actions == b.actions;
    }
};

/// The escape search: rectangles ranked lexicographically by top-right
/// corner <x, y>; starting from the highest ranked, repeatedly jump to the
/// highest ranked rectangle among those over the current one. Returns the
/// visited ids; the last one can move both upwards and rightwards freely.
/// Throws FeasibilityError on infeasible input, Error on empty input.
std::vector<int> escape_walk(const Packing& p);

/// Final rectangle of escape_walk.
int escape_candidate(const Packing& p);

/// Repeatedly remove the escape candidate until the packing is empty;
/// returns ids in removal order. A rectangle removed later is never over or
/// right of one removed earlier.
std::vector<int> extraction_order(const Packing& p);

struct StabilizeResult {
    Packing packing;
    PlacementSequence sequence;
};

/// Turn any feasible packing into a bottom-left stable one: extract all
/// rectangles, then re-insert them in reverse order, settling each at its
/// original placement against the ones already inserted. Orientations are
/// preserved and the coordinate sum never increases. The recorded sequence
/// replays exactly to the returned packing.
StabilizeResult stabilize(const Packing& p);

/// stabilize() specialised to bottom-left stable input, where re-inserted
/// rectangles are already blocked on both axes and nothing moves: returns a
/// sequence whose replay reproduces p coordinate-for-coordinate.
/// Throws StabilityError when p is feasible but not stable.
PlacementSequence extract_sequence(const Packing& p);

/// Certificate checker: apply the actions in order, requiring every action's
/// position to be an enumerated bottom-left corner of the partial packing.
/// Throws ReplayError (with the offending action index) otherwise.
Packing replay(const Instance& instance, const PlacementSequence& s);

}  // namespace blpack

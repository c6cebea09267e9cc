#pragma once

#include <string>

#include "blpack/geometry.hpp"
#include "blpack/sequencing.hpp"

namespace blpack {

/// Parse an instance document:
///   {"container":{"w":"4","h":"3"},"rects":[{"id":1,"w":"2","h":"3"}, ...]}
/// Numbers are decimal strings ("0.1" parses to exactly 1/10), fractions
/// ("1/3"), or bare integers. Unknown fields are rejected. Ids must be the
/// set 1..n. Throws ParseError with a field diagnostic.
Instance parse_instance(const std::string& text);

/// Canonical form: fixed field order, rects sorted by id, every quantity a
/// canonical rational string. parse(serialize(x)) == x and serialization of
/// a parsed canonical document is byte-identical.
std::string serialize_instance(const Instance& instance);

/// 64-bit FNV-1a over the canonical instance serialization, as 16 hex
/// digits. Ties packing/sequence files to their instance.
std::string instance_hash(const Instance& instance);

/// Parse {"instance-hash":"...","placements":[{"id":1,"x":"0","y":"0","v":0}, ...]}
/// against the given instance; the embedded hash must match.
Packing parse_packing(const std::string& text, const Instance& instance);
std::string serialize_packing(const Packing& p);

/// Parse {"instance-hash":"...","actions":[{"id":1,"v":0,"x":"0","y":"0"}, ...]};
/// action order is preserved.
PlacementSequence parse_sequence(const std::string& text, const Instance& instance);
std::string serialize_sequence(const PlacementSequence& s, const Instance& instance);

/// Deterministic SVG rendering: container outline plus one labeled rectangle
/// per placement, viewBox matching the container.
std::string render_svg(const Packing& p);

}  // namespace blpack

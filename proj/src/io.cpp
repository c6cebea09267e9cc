#include "blpack/io.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include <json.hpp>

namespace blpack {

namespace {

using json = nlohmann::ordered_json;

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

void check_fields(const json& obj, const char* where, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) throw ParseError(std::string(where) + ": expected an object");
    for (const auto& item : obj.items()) {
        if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) {
                return item.key() == k;
            }) == allowed.end()) {
            throw ParseError(std::string(where) + ": unknown field '" + item.key() + "'");
        }
    }
    for (const char* k : allowed) {
        if (!obj.contains(k)) {
            throw ParseError(std::string(where) + ": missing field '" + k + "'");
        }
    }
}

Rational parse_number(const json& v, const std::string& where) {
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (v.is_number_integer()) {
        return Rational(v.get<long long>());
    }
    if (v.is_number()) {
        throw ParseError(where + ": floating-point literals are not exact; write the value as a "
                                 "decimal string");
    }
    throw ParseError(where + ": expected a number");
}

Rational parse_positive(const json& v, const std::string& where) {
    Rational r = parse_number(v, where);
    if (!r.is_positive()) throw ParseError(where + ": dimension must be positive");
    return r;
}

int parse_id(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ParseError(where + ": id must be an integer");
    long long id = v.get<long long>();
    if (id < 1 || id > 1000000) throw ParseError(where + ": id out of range");
    return static_cast<int>(id);
}

Orientation parse_orientation(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ParseError(where + ": v must be 0 or 1");
    long long flag = v.get<long long>();
    if (flag != 0 && flag != 1) throw ParseError(where + ": v must be 0 or 1");
    return flag == 1 ? Orientation::kVertical : Orientation::kHorizontal;
}

json number_to_json(const Rational& r) {
    return json(r.to_string());
}

}  // namespace

Instance parse_instance(const std::string& text) {
    json doc = parse_document(text);
    check_fields(doc, "instance", {"container", "rects"});
    check_fields(doc["container"], "container", {"w", "h"});

    Instance instance;
    instance.container.w = parse_positive(doc["container"]["w"], "container.w");
    instance.container.h = parse_positive(doc["container"]["h"], "container.h");

    if (!doc["rects"].is_array()) throw ParseError("rects: expected an array");
    const auto& rect_list = doc["rects"];
    instance.rects.resize(rect_list.size());
    std::set<int> seen;
    for (std::size_t i = 0; i < rect_list.size(); ++i) {
        const std::string where = "rects[" + std::to_string(i) + "]";
        check_fields(rect_list[i], where.c_str(), {"id", "w", "h"});
        int id = parse_id(rect_list[i]["id"], where);
        if (!seen.insert(id).second) throw ParseError(where + ": duplicate id " + std::to_string(id));
        if (id > static_cast<int>(rect_list.size())) {
            throw ParseError(where + ": ids must be 1..n");
        }
        Dims d;
        d.w = parse_positive(rect_list[i]["w"], where + ".w");
        d.h = parse_positive(rect_list[i]["h"], where + ".h");
        instance.rects[static_cast<std::size_t>(id) - 1] = d;
    }
    return instance;
}

std::string serialize_instance(const Instance& instance) {
    json doc;
    doc["container"] = {{"w", number_to_json(instance.container.w)},
                        {"h", number_to_json(instance.container.h)}};
    doc["rects"] = json::array();
    for (int id = 1; id <= instance.size(); ++id) {
        const Dims& d = instance.dims_of(id);
        doc["rects"].push_back(
            {{"id", id}, {"w", number_to_json(d.w)}, {"h", number_to_json(d.h)}});
    }
    return doc.dump(2) + "\n";
}

std::string instance_hash(const Instance& instance) {
    const std::string text = serialize_instance(instance);
    std::uint64_t hash = 1469598103934665603ull;  // FNV-1a offset basis
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[hash & 0xf];
        hash >>= 4;
    }
    return out;
}

namespace {

void check_hash(const json& doc, const Instance& instance, const char* kind) {
    if (!doc["instance-hash"].is_string()) {
        throw ParseError(std::string(kind) + ": instance-hash must be a string");
    }
    const std::string expect = instance_hash(instance);
    const std::string got = doc["instance-hash"].get<std::string>();
    if (got != expect) {
        throw ParseError(std::string(kind) + ": instance-hash " + got +
                         " does not match the instance (" + expect + ")");
    }
}

}  // namespace

Packing parse_packing(const std::string& text, const Instance& instance) {
    instance.validate();
    json doc = parse_document(text);
    check_fields(doc, "packing", {"instance-hash", "placements"});
    check_hash(doc, instance, "packing");
    if (!doc["placements"].is_array()) throw ParseError("placements: expected an array");

    Packing p(instance);
    const auto& list = doc["placements"];
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "placements[" + std::to_string(i) + "]";
        check_fields(list[i], where.c_str(), {"id", "x", "y", "v"});
        int id = parse_id(list[i]["id"], where);
        if (!instance.valid_id(id)) throw ParseError(where + ": unknown id " + std::to_string(id));
        if (p.has(id)) throw ParseError(where + ": duplicate id " + std::to_string(id));
        Placement pos;
        pos.x = parse_number(list[i]["x"], where + ".x");
        pos.y = parse_number(list[i]["y"], where + ".y");
        pos.v = parse_orientation(list[i]["v"], where + ".v");
        p.place(id, pos);
    }
    return p;
}

std::string serialize_packing(const Packing& p) {
    json doc;
    doc["instance-hash"] = instance_hash(p.instance());
    doc["placements"] = json::array();
    for (const PlacedRect& r : p.placed()) {
        doc["placements"].push_back({{"id", r.id()},
                                     {"x", number_to_json(r.left())},
                                     {"y", number_to_json(r.bottom())},
                                     {"v", r.orientation() == Orientation::kVertical ? 1 : 0}});
    }
    return doc.dump(2) + "\n";
}

PlacementSequence parse_sequence(const std::string& text, const Instance& instance) {
    instance.validate();
    json doc = parse_document(text);
    check_fields(doc, "sequence", {"instance-hash", "actions"});
    check_hash(doc, instance, "sequence");
    if (!doc["actions"].is_array()) throw ParseError("actions: expected an array");

    PlacementSequence seq;
    const auto& list = doc["actions"];
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "actions[" + std::to_string(i) + "]";
        check_fields(list[i], where.c_str(), {"id", "v", "x", "y"});
        PlacementAction a;
        a.id = parse_id(list[i]["id"], where);
        a.v = parse_orientation(list[i]["v"], where + ".v");
        a.x = parse_number(list[i]["x"], where + ".x");
        a.y = parse_number(list[i]["y"], where + ".y");
        seq.actions.push_back(std::move(a));
    }
    return seq;
}

std::string serialize_sequence(const PlacementSequence& s, const Instance& instance) {
    json doc;
    doc["instance-hash"] = instance_hash(instance);
    doc["actions"] = json::array();
    for (const PlacementAction& a : s.actions) {
        doc["actions"].push_back({{"id", a.id},
                                  {"v", a.v == Orientation::kVertical ? 1 : 0},
                                  {"x", number_to_json(a.x)},
                                  {"y", number_to_json(a.y)}});
    }
    return doc.dump(2) + "\n";
}

namespace {

const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
                          "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd"};

std::string dec(const Rational& r) {
    return r.decimal_string(9);
}

}  // namespace

std::string render_svg(const Packing& p) {
    const Dims& c = p.instance().container;
    const Rational longest = max(c.w, c.h);
    const Rational unit = Rational(640) / longest;
    const Rational stroke = longest / Rational(200);

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           dec(c.w * unit) + "\" height=\"" + dec(c.h * unit) + "\" viewBox=\"0 0 " + dec(c.w) +
           " " + dec(c.h) + "\">\n";
    out += "  <rect x=\"0\" y=\"0\" width=\"" + dec(c.w) + "\" height=\"" + dec(c.h) +
           "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" + dec(stroke) + "\"/>\n";
    for (const PlacedRect& r : p.placed()) {
        const Dims& eff = r.effective();
        // SVG y grows downwards; flip each box.
        const Rational y_svg = c.h - r.top();
        const char* fill = kPalette[static_cast<std::size_t>(r.id() - 1) % 10];
        out += "  <rect x=\"" + dec(r.left()) + "\" y=\"" + dec(y_svg) + "\" width=\"" +
               dec(eff.w) + "\" height=\"" + dec(eff.h) + "\" fill=\"" + fill +
               "\" stroke=\"#333333\" stroke-width=\"" + dec(stroke) + "\"/>\n";
        const Rational cx = r.left() + eff.w / Rational(2);
        const Rational cy = c.h - (r.bottom() + eff.h / Rational(2));
        const Rational font = min(eff.w, eff.h) / Rational(2);
        out += "  <text x=\"" + dec(cx) + "\" y=\"" + dec(cy) + "\" font-size=\"" + dec(font) +
               "\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"#000000\">" +
               std::to_string(r.id()) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace blpack

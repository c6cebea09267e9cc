#include <doctest.h>

#include <set>

#include "blpack/corners.hpp"
#include "blpack/relations.hpp"
#include "support.hpp"

using namespace blpack;
using support::at;
using support::demo_instance;
using support::greedy_corpus;
using support::Rng;

namespace {

// Brute-force reference: every integer position where the rectangle fits,
// overlaps nothing, and is blocked both ways after placement.
std::set<std::pair<long long, long long>> integer_corner_reference(const Packing& p,
                                                                   const Dims& dims,
                                                                   Orientation v) {
    std::set<std::pair<long long, long long>> out;
    Dims eff = effective_dims(dims, v);
    long long W = p.instance().container.w.num().to_int64();
    long long H = p.instance().container.h.num().to_int64();
    long long w = eff.w.num().to_int64();
    long long h = eff.h.num().to_int64();
    for (long long x = 0; x + w <= W; ++x) {
        for (long long y = 0; y + h <= H; ++y) {
            PlacedRect probe(999, eff, at(x, y));
            bool overlap = false;
            for (const PlacedRect& r : p.placed()) {
                if (boxes_overlap(probe, r)) overlap = true;
            }
            if (overlap) continue;
            bool down = y == 0;
            bool left = x == 0;
            for (const PlacedRect& r : p.placed()) {
                if (r.top() == Rational(y) && max(r.left(), Rational(x)) < min(r.right(), Rational(x + w))) {
                    down = true;
                }
                if (r.right() == Rational(x) && max(r.bottom(), Rational(y)) < min(r.top(), Rational(y + h))) {
                    left = true;
                }
            }
            if (down && left) out.insert({x, y});
        }
    }
    return out;
}

}  // namespace

TEST_CASE("candidate_grid sizes and membership") {
    Packing empty{demo_instance()};
    auto g0 = candidate_grid(empty);
    REQUIRE(g0.size() == 1);
    CHECK(g0[0].first == Rational(0));
    CHECK(g0[0].second == Rational(0));

    Packing one{demo_instance()};
    one.place(1, at(0, 0));  // 2x3
    auto g1 = candidate_grid(one);
    CHECK(g1.size() == 4);  // {0,2} x {0,3}

    Packing two = one;
    two.place(2, at(2, 0));  // 2x2
    auto g2 = candidate_grid(two);
    CHECK(g2.size() == 9);  // {0,2,4} x {0,2,3}
    std::set<std::pair<std::string, std::string>> points;
    for (const auto& [x, y] : g2) points.insert({x.to_string(), y.to_string()});
    for (const char* x : {"0", "2", "4"}) {
        for (const char* y : {"0", "2", "3"}) {
            CHECK(points.count({x, y}) == 1);
        }
    }
}

TEST_CASE("enumerate_corners on worked examples") {
    Instance ins;
    ins.container = Dims{4, 3};
    ins.rects = {Dims{2, 3}, Dims{2, 2}};
    Packing p(ins);
    p.place(1, at(0, 0));
    auto corners = enumerate_corners(p, Dims{2, 2}, Orientation::kHorizontal);
    REQUIRE(corners.size() == 1);
    CHECK(corners[0].x == Rational(2));
    CHECK(corners[0].y == Rational(0));
    CHECK(corners[0].bottom_support == 0);  // floor
    CHECK(corners[0].left_support == 1);

    Packing two{demo_instance()};
    two.place(1, at(0, 0));
    two.place(2, at(2, 0));
    auto c2 = enumerate_corners(two, Dims{2, 1}, Orientation::kHorizontal);
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].x == Rational(2));
    CHECK(c2[0].y == Rational(2));
    CHECK(c2[0].left_support == 1);
    CHECK(c2[0].bottom_support == 2);

    Packing empty{demo_instance()};
    auto c3 = enumerate_corners(empty, Dims{2, 2}, Orientation::kHorizontal);
    REQUIRE(c3.size() == 1);
    CHECK(c3[0].x == Rational(0));
    CHECK(c3[0].y == Rational(0));
    CHECK(c3[0].left_support == 0);
    CHECK(c3[0].bottom_support == 0);
}

TEST_CASE("an oversized rectangle has no corners") {
    Packing empty{demo_instance()};
    CHECK(enumerate_corners(empty, Dims{5, 1}, Orientation::kHorizontal).empty());
    CHECK(enumerate_corners(empty, Dims{1, 5}, Orientation::kVertical).empty());
}

TEST_CASE("corner-point-only contact creates no corner support") {
    Instance ins;
    ins.container = Dims{4, 4};
    ins.rects = {Dims{2, 2}, Dims{2, 2}};
    Packing p(ins);
    p.place(1, at(0, 0));
    auto corners = enumerate_corners(p, Dims{2, 2}, Orientation::kHorizontal);
    // (2,2) touches rectangle 1 only at a point: blocked on neither axis.
    for (const Corner& c : corners) {
        CHECK(!(c.x == Rational(2) && c.y == Rational(2)));
    }
    REQUIRE(corners.size() == 2);  // (2,0) and (0,2)
    CHECK(corners[0].x == Rational(2));
    CHECK(corners[0].y == Rational(0));
    CHECK(corners[1].x == Rational(0));
    CHECK(corners[1].y == Rational(2));
}

TEST_CASE("corners are sound, complete, grid-bound and ordered") {
    Rng rng(31);
    auto corpus = greedy_corpus(rng, 50, 5, 6, 3);
    for (const Packing& p : corpus) {
        // Random query rectangle.
        Dims query{rng.range(1, 3), rng.range(1, 3)};
        Orientation v = rng.flip() ? Orientation::kVertical : Orientation::kHorizontal;
        auto corners = enumerate_corners(p, query, v);

        // Bound: never more than (k+1)^2.
        std::size_t k = p.size();
        CHECK(corners.size() <= (k + 1) * (k + 1));

        // Grid membership.
        std::set<std::string> xs{"0"}, ys{"0"};
        for (const PlacedRect& r : p.placed()) {
            xs.insert(r.right().to_string());
            ys.insert(r.top().to_string());
        }
        for (const Corner& c : corners) {
            CHECK(xs.count(c.x.to_string()) == 1);
            CHECK(ys.count(c.y.to_string()) == 1);
        }

        // Ordered by (y, x).
        for (std::size_t i = 1; i < corners.size(); ++i) {
            bool ordered = corners[i - 1].y < corners[i].y ||
                           (corners[i - 1].y == corners[i].y && corners[i - 1].x < corners[i].x);
            CHECK(ordered);
        }

        // Soundness: placing at a corner is feasible and single-rect stable.
        Instance extended = p.instance();
        extended.rects.push_back(query);
        int probe_id = extended.size();
        for (const Corner& c : corners) {
            Packing q(extended);
            for (const PlacedRect& r : p.placed()) q.place(r.id(), r.pos());
            q.place(probe_id, Placement{c.x, c.y, v});
            CHECK(is_feasible(q));
            CHECK(is_bl_stable_rect(probe_id, q));
        }

        // Completeness against the integer brute force.
        auto reference = integer_corner_reference(p, query, v);
        std::set<std::pair<long long, long long>> got;
        for (const Corner& c : corners) {
            got.insert({c.x.num().to_int64(), c.y.num().to_int64()});
        }
        CHECK(got == reference);
    }
}

TEST_CASE("corner provenance references an actual support") {
    Rng rng(32);
    auto corpus = greedy_corpus(rng, 30);
    for (const Packing& p : corpus) {
        auto corners = enumerate_corners(p, Dims{1, 1}, Orientation::kHorizontal);
        for (const Corner& c : corners) {
            if (c.left_support == 0) {
                CHECK(c.x.is_zero());
            } else {
                CHECK(p.at(c.left_support).right() == c.x);
            }
            if (c.bottom_support == 0) {
                CHECK(c.y.is_zero());
            } else {
                CHECK(p.at(c.bottom_support).top() == c.y);
            }
        }
    }
}

#pragma once

// Shared fixtures, deterministic random generators and independent oracles
// for the test suites. Everything here is test-only and intentionally avoids
// the library's own code paths where it acts as an oracle.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "blpack/geometry.hpp"
#include "blpack/relations.hpp"
#include "blpack/solver.hpp"

namespace support {

using namespace blpack;

// mt19937_64 raw draws only; std::uniform_int_distribution is not
// reproducible across standard libraries.
struct Rng {
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t below(std::uint64_t n) { return eng() % n; }
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    bool flip() { return (eng() & 1) != 0; }
    std::mt19937_64 eng;
};

// Worked fixture used across the suites: container 4x3 with
//   1: 2x3 at (0,0)   2: 2x2 at (2,0)   3: 2x1 at (2,2)   (all horizontal)
inline Instance demo_instance() {
    Instance ins;
    ins.container = Dims{4, 3};
    ins.rects = {Dims{2, 3}, Dims{2, 2}, Dims{2, 1}};
    return ins;
}

inline Packing demo_packing() {
    Packing p(demo_instance());
    p.place(1, Placement{0, 0, Orientation::kHorizontal});
    p.place(2, Placement{2, 0, Orientation::kHorizontal});
    p.place(3, Placement{2, 2, Orientation::kHorizontal});
    return p;
}

inline Placement at(long long x, long long y,
                    Orientation v = Orientation::kHorizontal) {
    return Placement{x, y, v};
}

// Random integer instance: container up to max_side, up to max_n rectangles
// with dims in [1, max_dim] clamped to the container.
inline Instance random_instance(Rng& rng, int max_n, long long max_side, long long max_dim) {
    Instance ins;
    long long W = rng.range(1, max_side);
    long long H = rng.range(1, max_side);
    ins.container = Dims{W, H};
    int n = static_cast<int>(rng.range(0, max_n));
    for (int i = 0; i < n; ++i) {
        long long w = rng.range(1, std::min(max_dim, W));
        long long h = rng.range(1, std::min(max_dim, H));
        ins.rects.push_back(Dims{w, h});
    }
    return ins;
}

inline std::vector<int> random_order(Rng& rng, int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
        std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    }
    return order;
}

inline std::vector<Orientation> random_orientations(Rng& rng, int n) {
    std::vector<Orientation> v(static_cast<std::size_t>(n));
    for (auto& o : v) o = rng.flip() ? Orientation::kVertical : Orientation::kHorizontal;
    return v;
}

/// Random feasible bottom-left stable packings via the greedy heuristic
/// (retries until `count` packings were produced).
inline std::vector<Packing> greedy_corpus(Rng& rng, int count, int max_n = 6,
                                          long long max_side = 6, long long max_dim = 4) {
    std::vector<Packing> out;
    while (static_cast<int>(out.size()) < count) {
        Instance ins = random_instance(rng, max_n, max_side, max_dim);
        GreedyResult r = solve_greedy(ins, random_order(rng, ins.size()),
                                      random_orientations(rng, ins.size()));
        if (r.packing.has_value()) out.push_back(std::move(*r.packing));
    }
    return out;
}

/// Headroom for moving `id` upwards (dir_up) or rightwards within
/// feasibility, container borders included. Independent of max_slide (which
/// only handles down/left).
inline Rational free_headroom(const Packing& p, int id, bool dir_up) {
    const PlacedRect& rect = p.at(id);
    Rational room = dir_up ? p.instance().container.h - rect.top()
                           : p.instance().container.w - rect.right();
    for (const PlacedRect& j : p.placed()) {
        if (j.id() == id) continue;
        if (dir_up) {
            bool x_overlap = max(rect.left(), j.left()) < min(rect.right(), j.right());
            if (x_overlap && j.bottom() >= rect.top()) {
                room = min(room, j.bottom() - rect.top());
            }
        } else {
            bool y_overlap = max(rect.bottom(), j.bottom()) < min(rect.top(), j.top());
            if (y_overlap && j.left() >= rect.right()) {
                room = min(room, j.left() - rect.right());
            }
        }
    }
    return room;
}

/// Shift random rectangles up/right by random rational fractions of their
/// headroom; the result stays feasible but is usually no longer stable.
inline Packing perturb_up_right(const Packing& p, Rng& rng) {
    Packing out = p;
    static const Rational fractions[] = {Rational(1, 2), Rational(1, 3), Rational(2, 3),
                                         Rational(1), Rational(3, 4)};
    for (const PlacedRect& r : p.placed()) {
        if (rng.flip()) continue;
        bool up = rng.flip();
        Rational room = free_headroom(out, r.id(), up);
        if (!room.is_positive()) continue;
        Rational delta = room * fractions[rng.below(5)];
        Placement pos = out.at(r.id()).pos();
        if (up) {
            pos.y += delta;
        } else {
            pos.x += delta;
        }
        out.move(r.id(), pos);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Independent oracles.

/// Exact fraction on __int128 without any reduction; valid while products
/// stay inside 128 bits. Used to cross-check the big-integer rational path.
struct Frac {
    __int128 num = 0;
    __int128 den = 1;

    static Frac of(long long n, long long d) { return Frac{n, d}; }
    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac{a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return Frac{a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend Frac operator*(const Frac& a, const Frac& b) { return Frac{a.num * b.num, a.den * b.den}; }
    bool positive() const { return (num > 0) == (den > 0) && num != 0; }
};

inline Rational to_rational(const Frac& f) {
    auto to_big = [](__int128 v) {
        bool neg = v < 0;
        unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
        Rational out(0);
        const Rational shift(1LL << 32);
        for (int chunk = 3; chunk >= 0; --chunk) {
            out = out * shift +
                  Rational(static_cast<long long>((mag >> (32 * chunk)) & 0xffffffffull));
        }
        return neg ? -out : out;
    };
    return to_big(f.num) / to_big(f.den);
}

/// Overlap area of boxes given as integer numerators over one common
/// denominator; computed entirely in 128-bit integers.
inline Frac oracle_overlap(long long q, long long ax1, long long ay1, long long ax2, long long ay2,
                           long long bx1, long long by1, long long bx2, long long by2) {
    long long w = std::min(ax2, bx2) - std::max(ax1, bx1);
    long long h = std::min(ay2, by2) - std::max(ay1, by1);
    if (w <= 0 || h <= 0) return Frac{0, 1};
    return Frac{static_cast<__int128>(w) * h, static_cast<__int128>(q) * q};
}

/// Outside-the-container area for a box given in numerators over a common
/// denominator q (container W/q x H/q), in pure 128-bit integers.
inline Frac oracle_outside(long long q, long long W, long long H, long long x1, long long y1,
                           long long x2, long long y2) {
    long long cw = std::min(x2, W) - std::max(x1, 0LL);
    long long ch = std::min(y2, H) - std::max(y1, 0LL);
    __int128 inside = 0;
    if (cw > 0 && ch > 0) inside = static_cast<__int128>(cw) * ch;
    __int128 area = static_cast<__int128>(x2 - x1) * (y2 - y1);
    return Frac{area - inside, static_cast<__int128>(q) * q};
}

/// "j is over i" decided by sampling displacements instead of the closed
/// form: for integer boxes, some positive displacement overlaps iff some
/// half-integer one below a coarse bound does.
inline bool oracle_is_over_integer(const PlacedRect& j, const PlacedRect& i, long long bound) {
    for (long long m = 1; m <= 2 * bound; ++m) {
        Rational d(m, 2);
        PlacedRect moved(i.id(), i.dims(),
                         Placement{i.pos().x, i.pos().y + d, i.pos().v});
        if (boxes_overlap(moved, j)) return true;
    }
    return false;
}

inline bool oracle_is_right_of_integer(const PlacedRect& j, const PlacedRect& i, long long bound) {
    for (long long m = 1; m <= 2 * bound; ++m) {
        Rational d(m, 2);
        PlacedRect moved(i.id(), i.dims(),
                         Placement{i.pos().x + d, i.pos().y, i.pos().v});
        if (boxes_overlap(moved, j)) return true;
    }
    return false;
}

/// Instance scaled by an exact factor (feasibility is scale-invariant).
inline Instance scaled_instance(const Instance& ins, const Rational& s) {
    Instance out;
    out.container = Dims{ins.container.w * s, ins.container.h * s};
    for (const Dims& d : ins.rects) out.rects.push_back(Dims{d.w * s, d.h * s});
    return out;
}

}  // namespace support

#include "blpack/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "blpack/corners.hpp"

namespace blpack {

namespace {

using Clock = std::chrono::steady_clock;

struct SearchShared {
    const Instance& instance;
    const SolveConfig& cfg;
    Clock::time_point deadline;
    bool has_deadline = false;

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> node_limit_hit{false};
    std::atomic<bool> time_limit_hit{false};

    std::mutex mu;
    std::optional<Packing> sat_packing;
    std::optional<PlacementSequence> sat_sequence;
    std::vector<std::size_t> max_corners_by_depth;

    explicit SearchShared(const Instance& inst, const SolveConfig& c) : instance(inst), cfg(c) {
        if (cfg.time_limit_seconds > 0.0) {
            has_deadline = true;
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(cfg.time_limit_seconds));
        }
        max_corners_by_depth.assign(static_cast<std::size_t>(inst.size()) + 1, 0);
    }

    void merge_corner_stats(const std::vector<std::size_t>& local) {
        std::lock_guard<std::mutex> lock(mu);
        for (std::size_t k = 0; k < local.size(); ++k) {
            max_corners_by_depth[k] = std::max(max_corners_by_depth[k], local[k]);
        }
    }

    bool offer_sat(Packing packing, PlacementSequence sequence) {
        std::lock_guard<std::mutex> lock(mu);
        if (sat_packing.has_value()) return false;
        sat_packing = std::move(packing);
        sat_sequence = std::move(sequence);
        return true;
    }
};

struct Candidate {
    int id;
    Orientation v;
};

class Searcher {
public:
    Searcher(SearchShared& shared) : shared_(shared), state_(shared.instance) {
        const Instance& inst = shared.instance;
        used_.assign(static_cast<std::size_t>(inst.size()) + 1, false);
        local_corner_max_.assign(static_cast<std::size_t>(inst.size()) + 1, 0);
        free_area_ = inst.container.area();
        remaining_area_ = inst.total_rect_area();

        // Rectangles in decreasing-area order (lower id first on ties).
        by_area_.resize(static_cast<std::size_t>(inst.size()));
        for (int id = 1; id <= inst.size(); ++id) by_area_[static_cast<std::size_t>(id) - 1] = id;
        std::stable_sort(by_area_.begin(), by_area_.end(), [&](int a, int b) {
            return inst.dims_of(b).area() < inst.dims_of(a).area();
        });
    }

    /// Candidate (rectangle, orientation) branches at the current node.
    std::vector<Candidate> candidates() const {
        const Instance& inst = shared_.instance;
        std::vector<Candidate> out;
        for (int id : by_area_) {
            if (used_[static_cast<std::size_t>(id)]) continue;
            const Dims& d = inst.dims_of(id);
            if (shared_.cfg.duplicate_prune) {
                bool shadowed = false;
                for (int other = 1; other < id; ++other) {
                    if (!used_[static_cast<std::size_t>(other)] && inst.dims_of(other) == d) {
                        shadowed = true;
                        break;
                    }
                }
                if (shadowed) continue;
            }
            out.push_back(Candidate{id, Orientation::kHorizontal});
            // Both orientations of a square occupy the same box.
            if (!(d.w == d.h && shared_.cfg.duplicate_prune)) {
                out.push_back(Candidate{id, Orientation::kVertical});
            }
        }
        return out;
    }

    std::vector<Corner> corners_for(const Candidate& c) {
        auto corners = enumerate_corners(state_, shared_.instance.dims_of(c.id), c.v);
        std::size_t depth = state_.size();
        local_corner_max_[depth] = std::max(local_corner_max_[depth], corners.size());
        return corners;
    }

    void apply(const Candidate& c, const Corner& corner) {
        state_.place(c.id, Placement{corner.x, corner.y, c.v});
        used_[static_cast<std::size_t>(c.id)] = true;
        const Rational a = shared_.instance.dims_of(c.id).area();
        free_area_ -= a;
        remaining_area_ -= a;
        path_.push_back(PlacementAction{c.id, c.v, corner.x, corner.y});
    }

    void undo(const Candidate& c) {
        state_.remove(c.id);
        used_[static_cast<std::size_t>(c.id)] = false;
        const Rational a = shared_.instance.dims_of(c.id).area();
        free_area_ += a;
        remaining_area_ += a;
        path_.pop_back();
    }

    /// Returns true when the subtree was fully exhausted (no SAT below it and
    /// no limit interrupted the search).
    bool dfs() {
        if (shared_.stop.load(std::memory_order_relaxed)) return false;
        const std::uint64_t node = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (shared_.cfg.node_limit != 0 && node > shared_.cfg.node_limit) {
            shared_.node_limit_hit.store(true);
            shared_.stop.store(true);
            return false;
        }
        if (shared_.has_deadline && Clock::now() >= shared_.deadline) {
            shared_.time_limit_hit.store(true);
            shared_.stop.store(true);
            return false;
        }

        if (state_.complete()) {
            if (shared_.offer_sat(state_, PlacementSequence{path_})) {
                shared_.stop.store(true);
            }
            return false;
        }
        if (shared_.cfg.area_prune && free_area_ < remaining_area_) return true;

        bool exhausted = true;
        for (const Candidate& c : candidates()) {
            for (const Corner& corner : corners_for(c)) {
                apply(c, corner);
                exhausted = dfs() && exhausted;
                undo(c);
                if (shared_.stop.load(std::memory_order_relaxed)) return false;
            }
        }
        return exhausted;
    }

    bool run_branch(const Candidate& c, const Corner& corner) {
        apply(c, corner);
        bool exhausted = dfs();
        undo(c);
        return exhausted;
    }

    void flush_stats() { shared_.merge_corner_stats(local_corner_max_); }

    Packing& state() { return state_; }

private:
    SearchShared& shared_;
    Packing state_;
    std::vector<char> used_;
    std::vector<int> by_area_;
    std::vector<PlacementAction> path_;
    std::vector<std::size_t> local_corner_max_;
    Rational free_area_;
    Rational remaining_area_;
};

Verdict finish(SearchShared& shared, bool exhausted) {
    Verdict v;
    v.stats.nodes = shared.nodes.load();
    v.stats.max_corners_by_depth = shared.max_corners_by_depth;
    for (std::size_t c : v.stats.max_corners_by_depth) {
        v.stats.max_corners = std::max(v.stats.max_corners, c);
    }
    if (shared.sat_packing.has_value()) {
        v.outcome = Outcome::kSat;
        v.packing = std::move(shared.sat_packing);
        v.sequence = std::move(shared.sat_sequence);
    } else if (exhausted) {
        v.outcome = Outcome::kUnsat;
    } else {
        v.outcome = Outcome::kUnknown;
        v.unknown_reason = shared.time_limit_hit.load() ? "time-limit" : "node-limit";
    }
    return v;
}

}  // namespace

Verdict solve_exact(const Instance& instance, const SolveConfig& cfg) {
    instance.validate();
    SearchShared shared(instance, cfg);

    if (cfg.deterministic) {
        Searcher searcher(shared);
        bool exhausted = searcher.dfs();
        searcher.flush_stats();
        return finish(shared, exhausted);
    }

    // Root-parallel mode: enumerate the root branches once, then let workers
    // claim them from a shared index. First SAT wins; UNSAT needs every
    // branch exhausted.
    shared.nodes.fetch_add(1);  // the root node itself
    struct RootBranch {
        Candidate c;
        Corner corner;
    };
    std::vector<RootBranch> branches;
    {
        Searcher probe(shared);
        if (probe.state().complete()) {
            shared.offer_sat(probe.state(), PlacementSequence{});
            probe.flush_stats();
            return finish(shared, true);
        }
        for (const Candidate& c : probe.candidates()) {
            for (const Corner& corner : probe.corners_for(c)) {
                branches.push_back(RootBranch{c, corner});
            }
        }
        probe.flush_stats();
    }

    unsigned workers = cfg.workers != 0 ? cfg.workers : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(branches.size())));

    std::atomic<std::size_t> next_branch{0};
    std::atomic<bool> all_exhausted{true};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            Searcher searcher(shared);
            for (;;) {
                std::size_t i = next_branch.fetch_add(1);
                if (i >= branches.size()) break;
                if (shared.stop.load()) {
                    all_exhausted.store(false);
                    break;
                }
                if (!searcher.run_branch(branches[i].c, branches[i].corner)) {
                    all_exhausted.store(false);
                }
            }
            searcher.flush_stats();
        });
    }
    for (auto& t : pool) t.join();

    bool exhausted = all_exhausted.load() && !shared.node_limit_hit.load() &&
                     !shared.time_limit_hit.load() && !shared.sat_packing.has_value();
    return finish(shared, exhausted);
}

GreedyResult solve_greedy(const Instance& instance, const std::vector<int>& order,
                          const std::vector<Orientation>& orientation_by_id) {
    instance.validate();
    if (static_cast<int>(order.size()) != instance.size() ||
        static_cast<int>(orientation_by_id.size()) != instance.size()) {
        throw Error("greedy order/orientations must cover every rectangle exactly once");
    }
    std::vector<char> seen(static_cast<std::size_t>(instance.size()) + 1, false);
    for (int id : order) {
        if (!instance.valid_id(id) || seen[static_cast<std::size_t>(id)]) {
            throw Error("greedy order is not a permutation of the rectangle ids");
        }
        seen[static_cast<std::size_t>(id)] = true;
    }

    GreedyResult result;
    Packing state(instance);
    for (int id : order) {
        Orientation v = orientation_by_id[static_cast<std::size_t>(id) - 1];
        auto corners = enumerate_corners(state, instance.dims_of(id), v);
        if (corners.empty()) {
            result.failed_id = id;
            return result;
        }
        const Corner& c = corners.front();
        state.place(id, Placement{c.x, c.y, v});
        result.sequence.actions.push_back(PlacementAction{id, v, c.x, c.y});
    }
    result.packing = std::move(state);
    return result;
}

namespace {

struct LatticeRect {
    long long w, h;
};

struct LatticeBox {
    long long x1, y1, x2, y2;
    int v;
};

class LatticeSearch {
public:
    LatticeSearch(long long W, long long H, std::vector<LatticeRect> rects)
        : W_(W), H_(H), rects_(std::move(rects)) {
        free_area_ = W_ * H_;
        remaining_ = 0;
        for (const LatticeRect& r : rects_) remaining_ += r.w * r.h;
    }

    bool sat() { return dfs(0); }

private:
    bool dfs(std::size_t i) {
        if (i == rects_.size()) return true;
        if (remaining_ > free_area_) return false;
        const LatticeRect& r = rects_[i];
        const long long area = r.w * r.h;
        for (int v = 0; v < (r.w == r.h ? 1 : 2); ++v) {
            const long long w = v == 0 ? r.w : r.h;
            const long long h = v == 0 ? r.h : r.w;
            if (w > W_ || h > H_) continue;
            for (long long x = 0; x + w <= W_; ++x) {
                for (long long y = 0; y + h <= H_; ++y) {
                    if (!lex_allowed(i, x, y, v)) continue;
                    if (collides(x, y, x + w, y + h)) continue;
                    boxes_.push_back(LatticeBox{x, y, x + w, y + h, v});
                    free_area_ -= area;
                    remaining_ -= area;
                    bool ok = dfs(i + 1);
                    free_area_ += area;
                    remaining_ += area;
                    boxes_.pop_back();
                    if (ok) return true;
                }
            }
        }
        return false;
    }

    /// Identical rectangles are interchangeable: force their placement
    /// tuples (x, y, v) into increasing order to skip permuted duplicates.
    bool lex_allowed(std::size_t i, long long x, long long y, int v) const {
        if (i == 0) return true;
        const LatticeRect& cur = rects_[i];
        for (std::size_t j = i; j-- > 0;) {
            if (rects_[j].w != cur.w || rects_[j].h != cur.h) continue;
            const LatticeBox& prev = boxes_[j];
            if (x != prev.x1) return x > prev.x1;
            if (y != prev.y1) return y > prev.y1;
            return v > prev.v;
        }
        return true;
    }

    bool collides(long long x1, long long y1, long long x2, long long y2) const {
        for (const LatticeBox& b : boxes_) {
            if (x1 < b.x2 && b.x1 < x2 && y1 < b.y2 && b.y1 < y2) return true;
        }
        return false;
    }

    long long W_, H_;
    std::vector<LatticeRect> rects_;
    std::vector<LatticeBox> boxes_;
    long long free_area_;
    long long remaining_;
};

}  // namespace

Outcome oracle_lattice(const Instance& instance) {
    instance.validate();
    if (!instance.is_integer()) {
        throw Error("the lattice oracle only accepts integer instances");
    }
    const long long W = instance.container.w.num().to_int64();
    const long long H = instance.container.h.num().to_int64();
    std::vector<LatticeRect> rects;
    rects.reserve(static_cast<std::size_t>(instance.size()));
    for (const Dims& d : instance.rects) {
        rects.push_back(LatticeRect{d.w.num().to_int64(), d.h.num().to_int64()});
    }
    LatticeSearch search(W, H, std::move(rects));
    return search.sat() ? Outcome::kSat : Outcome::kUnsat;
}

std::uint64_t theorem3_bound(int n) {
    auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
        if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
        return a * b;
    };
    std::uint64_t bound = 1;
    for (int k = 1; k <= n; ++k) {
        bound = sat_mul(bound, static_cast<std::uint64_t>(k));  // n!
        bound = sat_mul(bound, 2);                              // 2^n
        const auto theta = static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k);
        bound = sat_mul(bound, theta);  // prod (k+1)^2 over depths 0..n-1
    }
    return bound;
}

}  // namespace blpack

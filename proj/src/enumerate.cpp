#include "geomet/enumerate.hpp"

#include "geomet/error.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace geomet {

std::vector<Path> all_simple_paths(const Graph& g, Vertex u, Vertex v) {
    std::vector<Path> out;
    std::vector<char> on(g.vertex_count(), 0);
    Path cur{u};
    on[u] = 1;
    auto dfs = [&](auto&& self) -> void {
        Vertex x = cur.back();
        if (x == v) {
            out.push_back(cur);
            return;
        }
        for (Vertex y : g.neighbors(x)) {
            if (on[y]) continue;
            on[y] = 1;
            cur.push_back(y);
            self(self);
            cur.pop_back();
            on[y] = 0;
        }
    };
    dfs(dfs);
    std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

namespace {

// Shared, read-only search space.
struct Space {
    int n = 0;
    std::vector<int> order;                 // branching order of pair indices
    std::vector<std::vector<Path>> cands;   // per pair index
    // per pair, per candidate: forced (pair, candidate) assignments of its proper subpaths
    std::vector<std::vector<std::vector<std::pair<int, int>>>> forced;

    explicit Space(const Graph& g) : n(g.vertex_count()) {
        const int pc = pair_count(n);
        cands.resize(pc);
        forced.resize(pc);
        std::vector<std::map<Path, int>> lookup(pc);
        std::vector<std::vector<int>> dist;
        for (Vertex s = 0; s < n; ++s) dist.push_back(bfs_distances(g, s));
        for (int p = 0; p < pc; ++p) {
            auto [u, v] = pair_at(p, n);
            cands[p] = all_simple_paths(g, u, v);
            for (int c = 0; c < static_cast<int>(cands[p].size()); ++c) lookup[p][cands[p][c]] = c;
            order.push_back(p);
        }
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            auto [au, av] = pair_at(a, n);
            auto [bu, bv] = pair_at(b, n);
            return dist[au][av] < dist[bu][bv];
        });
        for (int p = 0; p < pc; ++p) {
            for (const Path& c : cands[p]) {
                std::vector<std::pair<int, int>> f;
                for (size_t i = 0; i < c.size(); ++i)
                    for (size_t j = i + 1; j < c.size(); ++j) {
                        if (i == 0 && j + 1 == c.size()) continue;
                        Path sub(c.begin() + i, c.begin() + j + 1);
                        if (sub.front() > sub.back()) std::reverse(sub.begin(), sub.end());
                        int q = pair_index(sub.front(), sub.back(), n);
                        f.emplace_back(q, lookup[q].at(sub));
                    }
                forced[p].push_back(std::move(f));
            }
        }
    }
};

class Walker {
public:
    Walker(const Space& s, const Graph& g) : s_(s), g_(g), assign_(pair_count(s.n), -1) {}

    // Explores the subtree where the first pair in order takes candidate
    // `branch` (all branches when branch < 0). Visitor returns false to stop.
    template <class Fn>
    bool run(int branch, Fn&& visit) {
        if (s_.order.empty()) return visit(*this);
        int p0 = s_.order[0];
        const int nc = static_cast<int>(s_.cands[p0].size());
        for (int c = 0; c < nc; ++c) {
            if (branch >= 0 && c != branch) continue;
            size_t mark = trail_.size();
            if (place(p0, c) && !descend(1, visit)) return false;
            undo(mark);
        }
        return true;
    }

    int branch_count() const { return s_.order.empty() ? 1 : static_cast<int>(s_.cands[s_.order[0]].size()); }

    PathSystem build() const {
        std::vector<Path> paths(assign_.size());
        for (size_t p = 0; p < assign_.size(); ++p) paths[p] = s_.cands[p][assign_[p]];
        return PathSystem(g_, std::move(paths));
    }

private:
    const Space& s_;
    const Graph& g_;
    std::vector<int> assign_;
    std::vector<int> trail_;

    bool place(int p, int c) {
        if (assign_[p] >= 0) return assign_[p] == c;
        assign_[p] = c;
        trail_.push_back(p);
        for (auto [q, d] : s_.forced[p][c]) {
            if (assign_[q] < 0) {
                assign_[q] = d;
                trail_.push_back(q);
            } else if (assign_[q] != d) {
                return false;
            }
        }
        return true;
    }

    void undo(size_t mark) {
        while (trail_.size() > mark) {
            assign_[trail_.back()] = -1;
            trail_.pop_back();
        }
    }

    template <class Fn>
    bool descend(size_t k, Fn& visit) {
        while (k < s_.order.size() && assign_[s_.order[k]] >= 0) ++k;
        if (k == s_.order.size()) return visit(*this);
        int p = s_.order[k];
        const int nc = static_cast<int>(s_.cands[p].size());
        for (int c = 0; c < nc; ++c) {
            size_t mark = trail_.size();
            if (place(p, c) && !descend(k + 1, visit)) return false;
            undo(mark);
        }
        return true;
    }
};

void check_input(const Graph& g, const EnumerateOptions& opt) {
    if (!is_connected(g)) fail(ErrorCode::DisconnectedInput, "graph is not connected");
    if (g.vertex_count() > opt.max_vertices && !opt.allow_large)
        fail(ErrorCode::TooLarge, std::to_string(g.vertex_count()) + " vertices exceeds the bound of " +
                                      std::to_string(opt.max_vertices));
}

}  // namespace

std::uint64_t enumerate_consistent_systems(const Graph& g, const EnumerateOptions& opt, const SystemVisitor& visit) {
    check_input(g, opt);
    Space space(g);
    const std::uint64_t limit = opt.limit.value_or(UINT64_MAX);
    std::uint64_t count = 0;
    if (limit == 0) return 0;
    if (opt.jobs <= 1) {
        Walker w(space, g);
        w.run(-1, [&](const Walker& cur) {
            ++count;
            return visit(cur.build()) && count < limit;
        });
        return count;
    }
    // Parallel: buffer each top-level branch, then replay in branch order.
    const int branches = Walker(space, g).branch_count();
    std::vector<std::vector<PathSystem>> buffers(branches);
    std::atomic<int> next{0};
    auto worker = [&] {
        Walker w(space, g);
        for (int b; (b = next.fetch_add(1)) < branches;) {
            w.run(b, [&](const Walker& cur) {
                buffers[b].push_back(cur.build());
                return buffers[b].size() < limit;
            });
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < opt.jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& buf : buffers)
        for (auto& ps : buf) {
            ++count;
            if (!visit(ps) || count >= limit) return count;
        }
    return count;
}

std::uint64_t count_consistent_systems(const Graph& g, const EnumerateOptions& opt) {
    check_input(g, opt);
    Space space(g);
    const std::uint64_t limit = opt.limit.value_or(UINT64_MAX);
    const int branches = Walker(space, g).branch_count();
    std::vector<std::uint64_t> counts(branches, 0);
    std::atomic<int> next{0};
    auto worker = [&] {
        Walker w(space, g);
        for (int b; (b = next.fetch_add(1)) < branches;)
            w.run(b, [&](const Walker&) { return ++counts[b] < limit; });
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < std::max(1, opt.jobs); ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return std::min(total, limit);
}

std::vector<PathSystem> all_consistent_systems(const Graph& g, const EnumerateOptions& opt) {
    std::vector<PathSystem> out;
    enumerate_consistent_systems(g, opt, [&](const PathSystem& ps) {
        out.push_back(ps);
        return true;
    });
    return out;
}

SearchOutcome find_first_system(const Graph& g, const EnumerateOptions& opt,
                                const std::function<bool(const PathSystem&)>& pred) {
    check_input(g, opt);
    Space space(g);
    const std::uint64_t limit = opt.limit.value_or(UINT64_MAX);
    SearchOutcome out;
    if (opt.jobs <= 1) {
        Walker w(space, g);
        bool stopped_by_limit = false;
        w.run(-1, [&](const Walker& cur) {
            if (out.visited >= limit) {
                stopped_by_limit = true;
                return false;
            }
            ++out.visited;
            PathSystem ps = cur.build();
            if (pred(ps)) {
                out.hit = std::move(ps);
                return false;
            }
            return true;
        });
        out.exhausted = !out.hit && !stopped_by_limit;
        return out;
    }
    const int branches = Walker(space, g).branch_count();
    std::atomic<int> next{0};
    std::atomic<int> best_branch{branches};
    std::atomic<std::uint64_t> visited{0};
    std::atomic<bool> limit_hit{false};
    std::vector<std::optional<PathSystem>> hits(branches);
    auto worker = [&] {
        Walker w(space, g);
        for (int b; (b = next.fetch_add(1)) < branches;) {
            if (b > best_branch.load() || limit_hit.load()) continue;
            w.run(b, [&](const Walker& cur) {
                if (b > best_branch.load() || limit_hit.load()) return false;
                if (visited.fetch_add(1) >= limit) {
                    limit_hit = true;
                    return false;
                }
                PathSystem ps = cur.build();
                if (pred(ps)) {
                    hits[b] = ps;
                    int cur = best_branch.load();
                    while (b < cur && !best_branch.compare_exchange_weak(cur, b)) {
                    }
                    return false;
                }
                return true;
            });
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < opt.jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    out.visited = std::min<std::uint64_t>(visited.load(), limit);
    // After a limit stop, earlier branches may be incomplete; a hit is still a valid witness.
    int b = best_branch.load();
    if (b < branches) out.hit = hits[b];
    out.exhausted = !out.hit && !limit_hit.load();
    return out;
}

}  // namespace geomet

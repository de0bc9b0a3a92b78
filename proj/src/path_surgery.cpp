#include "polymerlab/path_surgery.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <unordered_map>
#include <unordered_set>

namespace polymerlab::surgery {

namespace {

// ---------------------------------------------------------------- segments

enum class Entry { none, from_left, from_below };
enum class Exit { none, to_right, to_up };

struct CommonSegment {
    Entry entry_p, entry_q;
    Exit exit_p, exit_q;
};

// Maximal common segments of two monotone paths. Common vertices that are
// grid-adjacent are consecutive on both paths, so segments can be read off by
// walking one path and tracking positions on the other.
std::vector<CommonSegment> common_segments(const LatticePath& p, const LatticePath& q) {
    std::unordered_map<Vertex, size_t> qpos;
    for (size_t i = 0; i < q.verts().size(); ++i) qpos[q.verts()[i]] = i;

    std::vector<CommonSegment> out;
    const auto& pv = p.verts();
    size_t i = 0;
    while (i < pv.size()) {
        auto it = qpos.find(pv[i]);
        if (it == qpos.end()) {
            ++i;
            continue;
        }
        size_t pi = i, qi = it->second;
        size_t plast = pi, qlast = qi;
        while (plast + 1 < pv.size() && qlast + 1 < q.verts().size() &&
               pv[plast + 1] == q.verts()[qlast + 1])
            ++plast, ++qlast;

        CommonSegment seg;
        auto entry_of = [](const std::vector<Vertex>& verts, size_t first) {
            if (first == 0) return Entry::none;
            return verts[first - 1].x + 1 == verts[first].x ? Entry::from_left : Entry::from_below;
        };
        auto exit_of = [](const std::vector<Vertex>& verts, size_t last) {
            if (last + 1 == verts.size()) return Exit::none;
            return verts[last + 1].x == verts[last].x + 1 ? Exit::to_right : Exit::to_up;
        };
        seg.entry_p = entry_of(pv, pi);
        seg.exit_p = exit_of(pv, plast);
        seg.entry_q = entry_of(q.verts(), qi);
        seg.exit_q = exit_of(q.verts(), qlast);
        out.push_back(seg);
        i = plast + 1;
    }
    return out;
}

bool through_horizontally(Entry e, Exit x) { return e == Entry::from_left && x == Exit::to_right; }
bool through_vertically(Entry e, Exit x) { return e == Entry::from_below && x == Exit::to_up; }

}  // namespace

bool paths_intersect(const LatticePath& p, const LatticePath& q) {
    const LatticePath& small = p.verts().size() <= q.verts().size() ? p : q;
    const LatticePath& big = p.verts().size() <= q.verts().size() ? q : p;
    for (const Vertex& v : small.verts())
        if (big.contains(v)) return true;
    return false;
}

bool is_crossing(const LatticePath& p, const LatticePath& q) {
    for (const CommonSegment& s : common_segments(p, q)) {
        if (through_horizontally(s.entry_p, s.exit_p) && through_vertically(s.entry_q, s.exit_q))
            return true;
        if (through_vertically(s.entry_p, s.exit_p) && through_horizontally(s.entry_q, s.exit_q))
            return true;
    }
    return false;
}

bool is_proper(const LatticePath& p, const LatticePath& q) {
    if (!paths_intersect(p, q)) return true;  // vacuous: properness needs a shared vertex
    return !p.contains(q.start()) && !p.contains(q.end()) && !q.contains(p.start()) &&
           !q.contains(p.end());
}

PathOrdering path_order(const LatticePath& p, const LatticePath& q) {
    if (p == q) return PathOrdering::equal;
    bool p_above = false, q_above = false;
    for (const Vertex& a : p.verts())
        for (const Vertex& b : q.verts()) {
            if (northwest_of(a, b)) p_above = true;
            else if (northwest_of(b, a)) q_above = true;
            if (p_above && q_above) return PathOrdering::incomparable;
        }
    if (p_above) return PathOrdering::first_above;
    if (q_above) return PathOrdering::second_above;
    return PathOrdering::incomparable;
}

bool within_distance(const Vertex& v, const LatticePath& path, int r) {
    for (const Vertex& w : path.verts())
        if (l1_distance(v, w) <= r) return true;
    return false;
}

// ------------------------------------------------------------------ min path

LatticePath min_path(Vertex s, Vertex t, const std::set<GridEdge>& edges) {
    if (t.x < s.x || t.y < s.y) throw std::invalid_argument("terminal not reachable");
    std::unordered_map<Vertex, bool> reach;
    auto can_reach = [&](auto&& self, Vertex v) -> bool {
        if (v == t) return true;
        if (v.x > t.x || v.y > t.y) return false;
        auto it = reach.find(v);
        if (it != reach.end()) return it->second;
        bool ok = (edges.count(right_edge(v)) && self(self, Vertex{v.x + 1, v.y})) ||
                  (edges.count(up_edge(v)) && self(self, Vertex{v.x, v.y + 1}));
        reach[v] = ok;
        return ok;
    };
    if (!can_reach(can_reach, s)) throw std::runtime_error("endpoints disconnected in edge set");

    std::vector<Vertex> verts{s};
    Vertex at = s;
    while (!(at == t)) {
        Vertex r{at.x + 1, at.y}, u{at.x, at.y + 1};
        if (edges.count(right_edge(at)) && can_reach(can_reach, r)) at = r;
        else if (edges.count(up_edge(at)) && can_reach(can_reach, u)) at = u;
        else throw AlgorithmicFailure("greedy walk stuck despite reachability");
        verts.push_back(at);
    }
    return LatticePath(std::move(verts));
}

// ------------------------------------------------------------------- uncross

namespace {

// stable order restoration: no later path strictly southeast of an earlier
// one; Kahn topological sort over the dominance relation, earliest-input-first
std::vector<int> dominance_sort(const std::vector<LatticePath>& paths) {
    int k = int(paths.size());
    // edge a -> b: a must precede b (b strictly northwest of a)
    std::vector<std::vector<int>> succ(k);
    std::vector<int> indeg(k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (a == b) continue;
            if (path_order(paths[b], paths[a]) == PathOrdering::first_above) {
                succ[a].push_back(b);
                ++indeg[b];
            }
        }
    std::vector<int> order;
    std::vector<bool> done(k, false);
    for (int step = 0; step < k; ++step) {
        int pick = -1;
        for (int i = 0; i < k; ++i)
            if (!done[i] && indeg[i] == 0) {
                pick = i;
                break;
            }
        if (pick < 0) throw AlgorithmicFailure("dominance relation has a cycle");
        done[pick] = true;
        order.push_back(pick);
        for (int b : succ[pick]) --indeg[b];
    }
    return order;
}

bool index_order_ok(const std::vector<LatticePath>& paths) {
    for (size_t j = 0; j < paths.size(); ++j)
        for (size_t l = j + 1; l < paths.size(); ++l)
            if (path_order(paths[j], paths[l]) == PathOrdering::first_above) return false;
    return true;
}

}  // namespace

PathTuple uncross(const PathTuple& tuple, int n) {
    int k = tuple.k();
    auto fail = [&](const std::string& what) {
        return AlgorithmicFailure(what + "; input " + tuple_to_json(tuple));
    };
    std::unordered_map<Vertex, int> terminal_label;
    for (int j = 0; j < int(tuple.terminals().size()); ++j)
        terminal_label[tuple.terminals()[j]] = j;

    // zero-length paths carry no edges; set them aside and slot them back in
    std::vector<std::pair<LatticePath, int>> degenerate;
    std::map<GridEdge, int> left;
    std::vector<Vertex> starts_left;
    std::unordered_set<Vertex> ends_left;
    for (int i = 0; i < k; ++i) {
        const LatticePath& p = tuple.path(i);
        if (p.edge_count() == 0) {
            degenerate.emplace_back(p, tuple.sigma(i));
            continue;
        }
        for (const GridEdge& e : p.edges()) ++left[e];
        starts_left.push_back(p.start());
        ends_left.insert(p.end());
    }

    std::vector<std::pair<LatticePath, int>> extracted;
    while (!starts_left.empty()) {
        std::unordered_set<Vertex> used;
        for (const auto& [e, c] : left) {
            used.insert(e.tail);
            used.insert(e.head);
        }
        // candidate starts: the southeast diagonal ray is free of used vertices
        int best = -1;
        for (int i = 0; i < int(starts_left.size()); ++i) {
            const Vertex s = starts_left[i];
            bool free_ray = true;
            for (Vertex v{s.x + 1, s.y - 1}; in_grid(v, n); v = {v.x + 1, v.y - 1})
                if (used.count(v)) {
                    free_ray = false;
                    break;
                }
            if (free_ray && (best < 0 || s.x + s.y > starts_left[best].x + starts_left[best].y))
                best = i;
        }
        if (best < 0) throw fail("no start with a free southeast ray");
        Vertex at = starts_left[best];
        starts_left.erase(starts_left.begin() + best);

        // southeast-most remaining edge per antidiagonal strip
        std::map<int, GridEdge> lowest;
        for (const auto& [e, c] : left) {
            int strip = e.tail.x + e.tail.y;
            auto it = lowest.find(strip);
            auto se_key = [](const GridEdge& e2) {
                return std::pair<int, int>(e2.tail.x - e2.tail.y, e2.head.x - e2.head.y);
            };
            if (it == lowest.end() || se_key(e) > se_key(it->second)) {
                if (it == lowest.end()) lowest.emplace(strip, e);
                else it->second = e;
            }
        }

        // follow the strip-lowest edges until none leaves the current vertex
        std::vector<Vertex> walk{at};
        for (;;) {
            auto it = lowest.find(at.x + at.y);
            if (it == lowest.end()) break;
            const GridEdge e = it->second;  // by value: the map is edited below
            if (!(e.tail == at)) break;
            auto cnt = left.find(e);
            if (--cnt->second == 0) {
                left.erase(cnt);
                // recompute this strip's lowest edge
                lowest.erase(it);
                auto se_key = [](const GridEdge& e2) {
                    return std::pair<int, int>(e2.tail.x - e2.tail.y, e2.head.x - e2.head.y);
                };
                GridEdge best_e{{0, 0}, {0, 0}};
                bool have = false;
                for (const auto& [e2, c2] : left) {
                    if (e2.tail.x + e2.tail.y != at.x + at.y) continue;
                    if (!have || se_key(e2) > se_key(best_e)) {
                        best_e = e2;
                        have = true;
                    }
                }
                if (have) lowest.emplace(at.x + at.y, best_e);
            }
            at = e.head;
            walk.push_back(at);
        }
        if (!ends_left.count(at))
            throw fail("extracted walk did not stop at a terminal at (" + std::to_string(at.x) + "," + std::to_string(at.y) + ")");
        ends_left.erase(at);
        extracted.emplace_back(LatticePath(std::move(walk)), terminal_label.at(at));
    }
    if (!left.empty()) throw fail("edges left over after extraction");

    // degenerate paths go to the earliest slot the index order allows
    for (const auto& [z, label] : degenerate) {
        int lo = 0, hi = int(extracted.size());
        for (int i = 0; i < int(extracted.size()); ++i) {
            PathOrdering o = path_order(z, extracted[i].first);
            if (o == PathOrdering::first_above) lo = std::max(lo, i + 1);
            if (o == PathOrdering::second_above) hi = std::min(hi, i);
        }
        if (lo > hi) throw fail("no order-consistent slot for a degenerate path");
        extracted.insert(extracted.begin() + lo, {z, label});
    }

    std::vector<LatticePath> paths;
    std::vector<int> sigma;
    for (auto& [p, label] : extracted) {
        paths.push_back(std::move(p));
        sigma.push_back(label);
    }
    PathTuple out(std::move(paths), tuple.terminals(), std::move(sigma));
    if (!index_order_ok(out.paths())) {
        std::vector<int> order = dominance_sort(out.paths());
        out.apply_order(order);
    }
    return out;
}

namespace {

// uncross, then pin the already-separated suffix paths back onto the top
// indices so the stage invariants keep referring to the same slots
PathTuple uncross_keep_suffix(const PathTuple& tuple, int n, int suffix) {
    PathTuple out = uncross(tuple, n);
    if (suffix == 0) return out;
    int k = tuple.k();
    std::vector<int> suffix_pos;
    std::vector<bool> taken(k, false);
    for (int s = k - suffix; s < k; ++s) {
        int found = -1;
        for (int i = 0; i < k; ++i)
            if (!taken[i] && out.path(i) == tuple.path(s)) {
                found = i;
                break;
            }
        if (found < 0) throw AlgorithmicFailure("separated path not reproduced by uncross");
        taken[found] = true;
        suffix_pos.push_back(found);
    }
    std::vector<int> perm;
    for (int i = 0; i < k; ++i)
        if (!taken[i]) perm.push_back(i);
    for (int i : suffix_pos) perm.push_back(i);
    out.apply_order(perm);
    if (!index_order_ok(out.paths()))
        throw AlgorithmicFailure("suffix pinning broke the index order");
    return out;
}

}  // namespace

// ---------------------------------------------------------------- conditions

int start_order(const PathTuple& tuple) {
    std::unordered_set<Vertex> starts;
    for (int i = 0; i < tuple.k(); ++i) starts.insert(tuple.start(i));
    int m = 1;
    while (starts.count(Vertex{1, m})) ++m;
    return m;
}

int terminal_order(const PathTuple& tuple, int n) {
    std::unordered_set<Vertex> ends;
    for (int i = 0; i < tuple.k(); ++i) ends.insert(tuple.end(i));
    int m = n;
    while (ends.count(Vertex{n, m})) --m;
    return m;
}

bool at_corner_spec(const PathTuple& tuple, int n) {
    return start_order(tuple) == tuple.k() + 1 && terminal_order(tuple, n) == n - tuple.k();
}

ConditionReport check_conditions(const StageContext& ctx, const PathTuple& tuple, int stage,
                                 int budget) {
    ConditionReport rep;
    int k = tuple.k();
    auto fail = [&](TupleCondition c, std::string detail) {
        rep.ok = false;
        rep.failed_condition = int(c);
        rep.detail = std::move(detail);
        return rep;
    };

    // (1) top `stage` paths intersect nothing
    for (int j = k - stage; j < k; ++j)
        for (int l = 0; l < k; ++l)
            if (l != j && paths_intersect(tuple.path(j), tuple.path(l)))
                return fail(TupleCondition::cleaned_suffix_disjoint,
                            "separated path " + std::to_string(j) + " meets path " +
                                std::to_string(l));

    // (2) no later path strictly southeast of an earlier one
    for (int j = 0; j < k; ++j)
        for (int l = j + 1; l < k; ++l)
            if (path_order(tuple.path(j), tuple.path(l)) == PathOrdering::first_above)
                return fail(TupleCondition::index_order_consistent,
                            "path " + std::to_string(j) + " dominates later path " +
                                std::to_string(l));

    std::set<GridEdge> ref_edges = ctx.reference.edge_set();
    std::set<GridEdge> now_edges = tuple.edge_set();
    std::set<GridEdge> lost, symdiff;
    std::set_difference(ref_edges.begin(), ref_edges.end(), now_edges.begin(), now_edges.end(),
                        std::inserter(lost, lost.begin()));
    std::set_symmetric_difference(ref_edges.begin(), ref_edges.end(), now_edges.begin(),
                                  now_edges.end(), std::inserter(symdiff, symdiff.begin()));
    rep.edges_lost = int(lost.size());

    // (3) bounded loss against the round reference
    if (rep.edges_lost > budget)
        return fail(TupleCondition::bounded_edge_loss,
                    "lost " + std::to_string(rep.edges_lost) + " edges, budget " +
                        std::to_string(budget));

    // (4) edits and intersections stay near the corridor
    int radius = 5 * (stage + 1);
    for (const GridEdge& e : symdiff)
        if (!within_distance(e.tail, ctx.tau, radius) || !within_distance(e.head, ctx.tau, radius))
            return fail(TupleCondition::edits_local_to_corridor, "edited edge far from corridor");
    for (int j = 0; j < k; ++j)
        for (int l = j + 1; l < k; ++l) {
            const LatticePath& small =
                tuple.path(j).verts().size() <= tuple.path(l).verts().size() ? tuple.path(j)
                                                                             : tuple.path(l);
            const LatticePath& big =
                tuple.path(j).verts().size() <= tuple.path(l).verts().size() ? tuple.path(l)
                                                                             : tuple.path(j);
            for (const Vertex& v : small.verts())
                if (big.contains(v) && !within_distance(v, ctx.tau, radius))
                    return fail(TupleCondition::edits_local_to_corridor,
                                "intersection far from corridor");
        }
    rep.symdiff_pieces = int(decompose_into_paths(symdiff).size());
    if (rep.symdiff_pieces > budget)
        return fail(TupleCondition::edits_local_to_corridor,
                    "symmetric difference needs " + std::to_string(rep.symdiff_pieces) +
                        " pieces");

    // (5) column-one coverage
    for (int j = 1; j <= ctx.n; ++j) {
        int c = tuple.paths_through({1, j});
        if (j <= ctx.m && c != 1)
            return fail(TupleCondition::first_column_coverage,
                        "(1," + std::to_string(j) + ") covered " + std::to_string(c) + " times");
        if (j > ctx.m && c > 1)
            return fail(TupleCondition::first_column_coverage,
                        "(1," + std::to_string(j) + ") covered " + std::to_string(c) + " times");
    }
    return rep;
}

namespace {

void require_conditions(const StageContext& ctx, const PathTuple& tuple, int stage, int budget,
                        const char* where) {
    ConditionReport rep = check_conditions(ctx, tuple, stage, budget);
    if (!rep.ok)
        throw ContractError(std::string(where) + ": condition " +
                                std::to_string(rep.failed_condition) + " failed: " + rep.detail,
                            rep.failed_condition);
}

// deterministic relocation target: free vertex near the corridor, southeast
// of the displaced path, preferring vertices off both horizontal boundary
// bands, then the most southeast choice
std::optional<Vertex> relocation_target(const PathTuple& tuple, const LatticePath& displaced,
                                        const StageContext& ctx, int radius) {
    std::optional<Vertex> best, best_far;
    auto better = [](const Vertex& a, const Vertex& b) {
        if (a.x - a.y != b.x - b.y) return a.x - a.y > b.x - b.y;
        return a.x < b.x;
    };
    for (int x = 1; x <= ctx.n; ++x)
        for (int y = 1; y <= ctx.n; ++y) {
            Vertex v{x, y};
            if (!within_distance(v, ctx.tau, radius)) continue;
            if (tuple.paths_through(v) > 0) continue;
            if (path_order(displaced, LatticePath::single(v)) != PathOrdering::first_above)
                continue;
            bool far = y > ctx.k && y <= ctx.n - ctx.k;
            if (far && (!best_far || better(v, *best_far))) best_far = v;
            if (!best || better(v, *best)) best = v;
        }
    return best_far ? best_far : best;
}

// restore the index order among the first `prefix` paths, keeping input
// order among incomparable ones
void restore_prefix_order(PathTuple& tuple, int prefix) {
    std::vector<LatticePath> head(tuple.paths().begin(), tuple.paths().begin() + prefix);
    if (index_order_ok(head)) return;
    std::vector<int> order = dominance_sort(head);
    std::vector<int> perm;
    for (int i : order) perm.push_back(i);
    for (int i = prefix; i < tuple.k(); ++i) perm.push_back(i);
    tuple.apply_order(perm);
}

}  // namespace

PathTuple clean_proper(const PathTuple& tuple, const StageContext& ctx, int stage, int budget) {
    require_conditions(ctx, tuple, stage, budget, "clean_proper precondition");
    for (int j = 0; j < tuple.k(); ++j)
        for (int l = j + 1; l < tuple.k(); ++l)
            if (is_crossing(tuple.path(j), tuple.path(l)))
                throw ContractError("clean_proper needs a noncrossing tuple");

    PathTuple out = tuple;
    int prefix = std::max(0, ctx.k - stage);
    for (int round = 0; round <= 2 * ctx.k + 2; ++round) {
        int offender = -1, host = -1;
        bool fix_start = true;
        for (int jp = 0; jp < out.k() && offender < 0; ++jp)
            for (int j = 0; j < out.k() && offender < 0; ++j) {
                if (j == jp || !paths_intersect(out.path(jp), out.path(j))) continue;
                if (out.path(j).contains(out.start(jp))) {
                    offender = jp;
                    host = j;
                    fix_start = true;
                } else if (out.path(j).contains(out.end(jp))) {
                    offender = jp;
                    host = j;
                    fix_start = false;
                }
            }
        if (offender < 0) break;
        (void)host;
        if (out.start(offender).x == 1)
            throw AlgorithmicFailure("column-one start found on another path");

        const LatticePath& p = out.path(offender);
        int found = -1;
        if (fix_start) {
            for (int i = 0; i < int(p.verts().size()); ++i)
                if (!out.covers_vertex(p.verts()[i], offender)) {
                    found = i;
                    break;
                }
            if (found == 0) throw AlgorithmicFailure("offending start reported clean");
            if (found > 0) {
                out.move_endpoints(offender, p.suffix_from(found));
            } else {
                auto v = relocation_target(out, p, ctx, 5 * (stage + 1));
                if (!v) throw AlgorithmicFailure("no relocation target near corridor");
                out.move_endpoints(offender, LatticePath::single(*v));
            }
        } else {
            for (int i = int(p.verts().size()) - 1; i >= 0; --i)
                if (!out.covers_vertex(p.verts()[i], offender)) {
                    found = i;
                    break;
                }
            if (found == int(p.verts().size()) - 1)
                throw AlgorithmicFailure("offending terminal reported clean");
            if (found >= 0) {
                out.move_endpoints(offender, p.prefix_to(found));
            } else {
                auto v = relocation_target(out, p, ctx, 5 * (stage + 1));
                if (!v) throw AlgorithmicFailure("no relocation target near corridor");
                out.move_endpoints(offender, LatticePath::single(*v));
            }
        }
        restore_prefix_order(out, prefix);
    }
    for (int j = 0; j < out.k(); ++j)
        for (int l = j + 1; l < out.k(); ++l)
            if (!is_proper(out.path(j), out.path(l)))
                throw AlgorithmicFailure("improper pair left after cleaning");
    return out;
}

PathTuple push_away(const PathTuple& tuple, const StageContext& ctx, int stage, int budget) {
    require_conditions(ctx, tuple, stage, budget, "push_away precondition");
    int k = tuple.k();
    int pivot = k - stage - 1;  // zero-based
    if (pivot < 0) return tuple;
    for (int j = 0; j < k; ++j)
        for (int l = j + 1; l < k; ++l) {
            if (!is_proper(tuple.path(j), tuple.path(l)))
                throw ContractError("push_away needs properly intersecting paths");
            if (is_crossing(tuple.path(j), tuple.path(l)))
                throw ContractError("push_away needs a noncrossing tuple");
        }

    PathTuple out = tuple;
    const LatticePath& piv = out.path(pivot);
    // pivot shifted one down and one right, boundary-touching edges dropped
    std::set<GridEdge> shifted;
    for (const GridEdge& e : piv.edges()) {
        if (e.tail.y == 1 || e.head.y == 1 || e.tail.x == ctx.n || e.head.x == ctx.n) continue;
        shifted.insert({{e.tail.x + 1, e.tail.y - 1}, {e.head.x + 1, e.head.y - 1}});
    }

    for (int j = 0; j < pivot; ++j) {
        if (!paths_intersect(out.path(j), piv)) continue;
        std::set<GridEdge> pool = shifted;
        for (const GridEdge& e : out.path(j).edges()) pool.insert(e);
        LatticePath rerouted = min_path(out.start(j), out.end(j), pool);
        if (paths_intersect(rerouted, piv))
            throw AlgorithmicFailure("pushed path still meets the pivot; stage " +
                                     std::to_string(stage) + " input " + tuple_to_json(tuple));
        out.set_path(j, rerouted);
    }
    require_conditions(ctx, out, stage + 1, budget, "push_away postcondition");
    return out;
}

// ------------------------------------------------------------ the pipeline

namespace {

void run_stage_pipeline(PathTuple& tuple, const StageContext& ctx, int budget) {
    for (int i = 0; i < ctx.k; ++i) {
        tuple = uncross_keep_suffix(tuple, ctx.n, i);
        tuple = clean_proper(tuple, ctx, i, budget);
        tuple = push_away(tuple, ctx, i, budget);
    }
    require_conditions(ctx, tuple, ctx.k, budget, "stage pipeline postcondition");
}

// straight corridor: right along row m, then up the target column
LatticePath corridor_path(Vertex from, Vertex to) {
    std::vector<Vertex> verts{from};
    Vertex at = from;
    while (at.x < to.x) verts.push_back(at = {at.x + 1, at.y});
    while (at.y < to.y) verts.push_back(at = {at.x, at.y + 1});
    return LatticePath(std::move(verts));
}

Vertex reflect_vertex(const Vertex& v, int n) { return {n + 1 - v.x, n + 1 - v.y}; }

LatticePath reflect_path(const LatticePath& p, int n) {
    std::vector<Vertex> verts;
    verts.reserve(p.verts().size());
    for (auto it = p.verts().rbegin(); it != p.verts().rend(); ++it)
        verts.push_back(reflect_vertex(*it, n));
    return LatticePath(std::move(verts));
}

// 180-degree rotation swaps the roles of starts and terminals
PathTuple reflect_tuple(const PathTuple& tuple, int n) {
    std::vector<LatticePath> paths;
    std::vector<Vertex> terms;
    std::vector<int> sigma;
    for (int i = 0; i < tuple.k(); ++i) {
        paths.push_back(reflect_path(tuple.path(i), n));
        terms.push_back(reflect_vertex(tuple.start(i), n));
        sigma.push_back(i);
    }
    PathTuple out(std::move(paths), std::move(terms), std::move(sigma));
    if (!index_order_ok(out.paths())) out.apply_order(dominance_sort(out.paths()));
    return out;
}

// Column one is a single lane: two paths cannot both run through (1,i).
// After a corridor prepend, repeatedly resolve the lowest doubly-covered
// column-one vertex. There the lower path L runs (1,i-1) -> (1,i) and the
// upper path U starts at (1,i); whichever of the two continuations leaves
// the column sooner is detoured through column two (or truncated at
// (1,i-1) if it never leaves), and the other keeps the column run. Endpoint
// labels follow the rerouted tails.
void fix_column_coverage(PathTuple& tuple, int n, int floor_y) {
    int k = tuple.k();
    for (int guard = 0; guard <= k + 2; ++guard) {
        int i = 0;
        for (int y = floor_y + 1; y <= n && i == 0; ++y)
            if (tuple.paths_through({1, y}) >= 2) i = y;
        if (i == 0) return;
        if (guard == k + 2) throw AlgorithmicFailure("column coverage did not settle");
        if (i < 2) throw AlgorithmicFailure("double coverage at the column foot");

        int lower = -1, upper = -1;
        for (int j = 0; j < k; ++j) {
            if (!tuple.path(j).contains({1, i})) continue;
            if (tuple.path(j).contains({1, i - 1})) lower = j;
            else if (tuple.start(j) == Vertex{1, i}) upper = j;
        }
        if (lower < 0 || upper < 0)
            throw AlgorithmicFailure("unexpected column coverage pattern");

        const LatticePath L = tuple.path(lower);
        const LatticePath U = tuple.path(upper);
        size_t l_at = 0;
        while (!(L.verts()[l_at] == Vertex{1, i})) ++l_at;
        LatticePath rest_L = L.suffix_from(l_at);  // both rest_L and U start at (1,i)
        LatticePath head_L = L.prefix_to(l_at - 1);

        auto column_run = [](const LatticePath& p) {
            size_t r = 0;
            while (r + 1 < p.verts().size() && p.verts()[r + 1].x == 1) ++r;
            return r;  // index of last column-one vertex of the initial run
        };
        size_t run_rest = column_run(rest_L), run_u = column_run(U);
        bool reroute_u = run_u <= run_rest;  // shorter run leaves the column
        const LatticePath& stay = reroute_u ? rest_L : U;
        const LatticePath& move = reroute_u ? U : rest_L;
        size_t move_run = reroute_u ? run_u : run_rest;

        LatticePath col_path = stay;
        LatticePath off_path = head_L;
        bool off_terminal_replaced = false;
        if (move_run + 1 < move.verts().size()) {
            // move exits at (1, y_exit) -> (2, y_exit); detour via column two
            int y_exit = move.verts()[move_run].y;
            LatticePath detour = corridor_path({1, i - 1}, {2, y_exit});
            off_path = concatenate(head_L, concatenate(detour, move.suffix_from(move_run + 1)));
        } else {
            off_terminal_replaced = true;  // move never leaves column one
        }

        // col keeps the label of the path whose tail it carries; off gets the
        // other label (with its terminal rewritten when truncated)
        int label_col = reroute_u ? tuple.sigma(lower) : tuple.sigma(upper);
        int label_off = reroute_u ? tuple.sigma(upper) : tuple.sigma(lower);
        std::vector<LatticePath> paths = tuple.paths();
        std::vector<int> sigma = tuple.sigma();
        std::vector<Vertex> terms = tuple.terminals();
        paths[upper] = col_path;
        sigma[upper] = label_col;
        paths[lower] = off_path;
        sigma[lower] = label_off;
        if (off_terminal_replaced) terms[label_off] = off_path.end();
        tuple = PathTuple(std::move(paths), std::move(terms), std::move(sigma));
    }
}

// One rerooting round: connect the lowest missing corner start (1,m) through
// a simple corridor to some non-corner start, then restore disjointness.
void reroot_round(PathTuple& tuple, int n, SurgeryReport& report, int budget) {
    int k = tuple.k();
    int m = start_order(tuple);
    if (m > k) throw AlgorithmicFailure("reroot called with starts already in place");

    auto in_corner = [&](const Vertex& s) { return s.x == 1 && s.y <= k; };

    // candidate whose corridor disturbs the fewest foreign endpoints
    int pick = -1, pick_cost = 0;
    for (int j = 0; j < k; ++j) {
        const Vertex s = tuple.start(j);
        if (in_corner(s) || s.y < m) continue;
        LatticePath tau = corridor_path({1, m}, s);
        int cost = 0;
        for (int l = 0; l < k; ++l) {
            if (l == j) continue;
            if (tau.contains(tuple.start(l))) cost += 2;
            if (tau.contains(tuple.end(l))) cost += 2;
            if (paths_intersect(tau, tuple.path(l))) cost += 1;
        }
        if (pick < 0 || cost < pick_cost || (cost == pick_cost && s < tuple.start(pick))) {
            pick = j;
            pick_cost = cost;
        }
    }
    if (pick < 0) throw AlgorithmicFailure("no reroot candidate start");

    StageContext ctx;
    ctx.reference = tuple;
    ctx.n = n;
    ctx.k = k;

    LatticePath corridor = corridor_path({1, m}, tuple.start(pick));
    tuple.move_endpoints(pick, concatenate(corridor, tuple.path(pick)));
    fix_column_coverage(tuple, n, m - 1);

    // a vertical corridor's repairs can reach the top of the occupied column
    // run; extend the reference corridor so the locality accounting holds
    ctx.tau = corridor;
    if (corridor.end().x == 1) {
        int top = corridor.end().y;
        while (top < n && tuple.paths_through({1, top + 1}) >= 1) ++top;
        ctx.tau = corridor_path({1, m}, {1, top});
    }
    report.neighborhoods.push_back(ctx.tau);

    ctx.m = start_order(tuple) - 1;
    run_stage_pipeline(tuple, ctx, budget);
    if (start_order(tuple) <= m) throw AlgorithmicFailure("reroot round made no progress");
}

// boundary pass, start side: move non-corner starts off rows 1..k
void clear_boundary_starts(PathTuple& tuple, int n, SurgeryReport& report, int budget) {
    int k = tuple.k();
    auto offenders = [&]() {
        std::vector<int> idx;
        for (int j = 0; j < k; ++j) {
            const Vertex s = tuple.start(j);
            if (s.y <= k && s.x != 1) idx.push_back(j);
        }
        return idx;
    };
    for (int guard = 0; guard <= k + 1; ++guard) {
        std::vector<int> off = offenders();
        if (off.empty()) return;
        if (guard == k + 1) throw AlgorithmicFailure("boundary clearing did not settle");
        int level = n;
        for (int j : off) level = std::min(level, tuple.start(j).y);
        std::vector<int> row;
        for (int j : off)
            if (tuple.start(j).y == level) row.push_back(j);
        std::sort(row.begin(), row.end(),
                  [&](int a, int b) { return tuple.start(a).x < tuple.start(b).x; });
        int rightmost = row.back();

        StageContext ctx;
        ctx.reference = tuple;
        ctx.n = n;
        ctx.k = k;
        ctx.tau = corridor_path({1, level}, tuple.start(rightmost));
        report.neighborhoods.push_back(ctx.tau);

        auto advance_to_level = [&](int j, int target_level) {
            const LatticePath& p = tuple.path(j);
            int at = -1;
            for (int i = 0; i < int(p.verts().size()); ++i)
                if (p.verts()[i].y == target_level) {
                    at = i;
                    break;
                }
            if (at >= 0) {
                tuple.move_endpoints(j, p.suffix_from(at));
                return;
            }
            // park the pair on a free vertex away from both boundary bands
            std::optional<Vertex> best;
            int best_margin = -1;
            for (int x = 1; x <= n; ++x)
                for (int y = 1; y <= n; ++y) {
                    Vertex v{x, y};
                    if (tuple.paths_through(v) > 0) continue;
                    int margin = std::min(std::min(x - 1, n - x), std::min(y - 1, n - y));
                    if (margin > best_margin ||
                        (margin == best_margin && best && v < *best)) {
                        best = v;
                        best_margin = margin;
                    }
                }
            if (!best) throw AlgorithmicFailure("no free vertex to park a path");
            tuple.move_endpoints(j, LatticePath::single(*best));
        };

        for (int j : row)
            if (j != rightmost) advance_to_level(j, level + 1);
        for (int j = 0; j < k; ++j)
            if (j != rightmost && tuple.start(j) == Vertex{1, level}) advance_to_level(j, level + 1);
        tuple.move_endpoints(rightmost, concatenate(ctx.tau, tuple.path(rightmost)));
        fix_column_coverage(tuple, n, level - 1);

        ctx.m = start_order(tuple) - 1;
        run_stage_pipeline(tuple, ctx, budget);
    }
}

int count_removed_edges(const PathTuple& before, const PathTuple& after) {
    std::set<GridEdge> a = before.edge_set(), b = after.edge_set();
    std::set<GridEdge> lost;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(lost, lost.begin()));
    return int(lost.size());
}

std::vector<LatticePath> symdiff_decomposition(const PathTuple& before, const PathTuple& after) {
    std::set<GridEdge> a = before.edge_set(), b = after.edge_set(), d;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::inserter(d, d.begin()));
    return decompose_into_paths(d);
}

}  // namespace

std::pair<PathTuple, SurgeryReport> clear_boundary(const PathTuple& tuple, int n) {
    tuple.validate(n);
    SurgeryReport report;
    report.input = tuple;
    PathTuple out = tuple;
    int budget = kUnlimitedBudget;

    clear_boundary_starts(out, n, report, budget);
    // terminal side by symmetry: rotate the grid half a turn
    out = reflect_tuple(out, n);
    {
        SurgeryReport mirrored;
        clear_boundary_starts(out, n, mirrored, budget);
        for (const LatticePath& tau : mirrored.neighborhoods)
            report.neighborhoods.push_back(reflect_path(tau, n));
    }
    out = reflect_tuple(out, n);

    report.output = out;
    report.removed_edges = count_removed_edges(tuple, out);
    report.sym_diff_paths = symdiff_decomposition(tuple, out);
    return {out, report};
}

std::pair<PathTuple, SurgeryReport> lift_to_corner(const PathTuple& tuple, int n) {
    tuple.validate(n);
    if (!tuple.vertex_disjoint())
        throw ContractError("lift_to_corner needs a non-intersecting tuple");
    int k = tuple.k();
    SurgeryReport report;
    report.input = tuple;

    if (k == 1) {
        // single path: any fixed simple connectors do
        LatticePath p = tuple.path(0);
        if (!(p.start() == Vertex{1, 1})) p = concatenate(corridor_path({1, 1}, p.start()), p);
        if (!(p.end() == Vertex{n, n})) p = concatenate(p, corridor_path(p.end(), {n, n}));
        PathTuple out = PathTuple::from_paths({p});
        report.output = out;
        report.rounds = 1;
        report.removed_edges = count_removed_edges(tuple, out);
        report.sym_diff_paths = symdiff_decomposition(tuple, out);
        return {out, report};
    }

    PathTuple out = tuple;
    int budget = kUnlimitedBudget;
    while (!at_corner_spec(out, n)) {
        if (report.rounds >= 2 * k)
            throw AlgorithmicFailure("corner rerooting exceeded its round budget");
        {
            auto [cleared, sub] = clear_boundary(out, n);
            out = cleared;
            for (const auto& tau : sub.neighborhoods) report.neighborhoods.push_back(tau);
        }
        if (at_corner_spec(out, n)) break;
        if (start_order(out) <= k) {
            reroot_round(out, n, report, budget);
            report.trace.push_back({"start side", report.neighborhoods.back(),
                                    count_removed_edges(tuple, out)});
        } else {
            out = reflect_tuple(out, n);
            SurgeryReport mirrored;
            reroot_round(out, n, mirrored, budget);
            out = reflect_tuple(out, n);
            for (const auto& tau : mirrored.neighborhoods)
                report.neighborhoods.push_back(reflect_path(tau, n));
            report.trace.push_back({"terminal side", report.neighborhoods.back(),
                                    count_removed_edges(tuple, out)});
        }
        ++report.rounds;
    }

    // canonical order: starts (1,1)..(1,k); disjointness forces the identity
    // pairing with (n,n-k+1)..(n,n)
    std::vector<int> perm(k);
    std::vector<std::pair<int, int>> by_row;
    for (int i = 0; i < k; ++i) by_row.emplace_back(out.start(i).y, i);
    std::sort(by_row.begin(), by_row.end());
    for (int i = 0; i < k; ++i) perm[i] = by_row[i].second;
    out.apply_order(perm);
    std::vector<LatticePath> paths = out.paths();
    for (int i = 0; i < k; ++i) {
        if (!(paths[i].start() == Vertex{1, i + 1}) ||
            !(paths[i].end() == Vertex{n, n - k + 1 + i}))
            throw AlgorithmicFailure("corner tuple endpoints are misaligned");
    }
    out = PathTuple::from_paths(std::move(paths));
    if (!out.vertex_disjoint()) throw AlgorithmicFailure("final tuple is not disjoint");

    report.output = out;
    report.removed_edges = count_removed_edges(tuple, out);
    report.sym_diff_paths = symdiff_decomposition(tuple, out);
    return {out, report};
}

// ------------------------------------------------------------------- JSON

std::string tuple_to_json(const PathTuple& tuple) {
    nlohmann::json j;
    j["k"] = tuple.k();
    j["paths"] = nlohmann::json::array();
    for (int i = 0; i < tuple.k(); ++i) {
        nlohmann::json verts = nlohmann::json::array();
        for (const Vertex& v : tuple.path(i).verts()) verts.push_back({v.x, v.y});
        j["paths"].push_back(verts);
    }
    nlohmann::json terms = nlohmann::json::array();
    for (const Vertex& t : tuple.terminals()) terms.push_back({t.x, t.y});
    j["terminals"] = terms;
    j["sigma"] = tuple.sigma();
    return j.dump();
}

std::string report_to_json(const SurgeryReport& report) {
    nlohmann::json j;
    j["input"] = nlohmann::json::parse(tuple_to_json(report.input));
    j["output"] = nlohmann::json::parse(tuple_to_json(report.output));
    j["removed_edges"] = report.removed_edges;
    j["rounds"] = report.rounds;
    j["sym_diff_path_count"] = report.sym_diff_paths.size();
    auto path_json = [](const LatticePath& p) {
        nlohmann::json verts = nlohmann::json::array();
        for (const Vertex& v : p.verts()) verts.push_back({v.x, v.y});
        return verts;
    };
    j["sym_diff_paths"] = nlohmann::json::array();
    for (const auto& p : report.sym_diff_paths) j["sym_diff_paths"].push_back(path_json(p));
    j["neighborhoods"] = nlohmann::json::array();
    for (const auto& p : report.neighborhoods) j["neighborhoods"].push_back(path_json(p));
    return j.dump();
}

}  // namespace polymerlab::surgery

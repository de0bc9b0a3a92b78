#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "polymerlab/path_surgery.hpp"
#include "polymerlab/rng.hpp"

using namespace polymerlab;
using namespace polymerlab::surgery;

namespace {

LatticePath mk(std::initializer_list<std::pair<int, int>> pts) {
    std::vector<Vertex> v;
    for (auto [x, y] : pts) v.push_back({x, y});
    return LatticePath(std::move(v));
}

bool tuple_noncrossing(const PathTuple& t) {
    for (int i = 0; i < t.k(); ++i)
        for (int j = i + 1; j < t.k(); ++j)
            if (is_crossing(t.path(i), t.path(j))) return false;
    return true;
}

bool index_order_holds(const PathTuple& t) {
    for (int i = 0; i < t.k(); ++i)
        for (int j = i + 1; j < t.k(); ++j)
            if (path_order(t.path(i), t.path(j)) == PathOrdering::first_above) return false;
    return true;
}

// every monotone path between every endpoint pair of [1,n]^2
std::vector<LatticePath> all_paths_upto(int n) {
    std::vector<LatticePath> out;
    for (int x1 = 1; x1 <= n; ++x1)
        for (int y1 = 1; y1 <= n; ++y1)
            for (int x2 = x1; x2 <= n; ++x2)
                for (int y2 = y1; y2 <= n; ++y2)
                    for (auto& p : enumerate_paths({x1, y1}, {x2, y2})) out.push_back(p);
    return out;
}

// random tuple with distinct starts and terminals, intersections allowed
PathTuple random_any_tuple(int n, int k, rng::Stream& s) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<LatticePath> paths;
        std::set<Vertex> starts, ends;
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            Vertex a{1 + int(s.next_u64() % n), 1 + int(s.next_u64() % n)};
            Vertex b{a.x + int(s.next_u64() % (n - a.x + 1)),
                     a.y + int(s.next_u64() % (n - a.y + 1))};
            if (!starts.insert(a).second || !ends.insert(b).second) {
                ok = false;
                break;
            }
            paths.push_back(random_path(a, b, s));
        }
        if (ok) return PathTuple::from_paths(std::move(paths));
    }
    throw std::runtime_error("sampling failed");
}

void check_uncross_contract(const PathTuple& in, int n) {
    PathTuple out = uncross(in, n);
    out.validate(n);
    CHECK(out.edge_multiset() == in.edge_multiset());
    CHECK(tuple_noncrossing(out));
    CHECK(index_order_holds(out));
    // endpoint sets survive
    auto starts_of = [](const PathTuple& t) {
        std::set<Vertex> s;
        for (int i = 0; i < t.k(); ++i) s.insert(t.start(i));
        return s;
    };
    auto ends_of = [](const PathTuple& t) {
        std::set<Vertex> s;
        for (int i = 0; i < t.k(); ++i) s.insert(t.end(i));
        return s;
    };
    CHECK(starts_of(out) == starts_of(in));
    CHECK(ends_of(out) == ends_of(in));
}

}  // namespace

TEST_CASE("vertex dominance order") {
    CHECK(northwest_of({1, 3}, {2, 1}));
    CHECK(!northwest_of({2, 1}, {1, 3}));
    CHECK(!northwest_of({1, 1}, {1, 3}));  // same column: incomparable
}

TEST_CASE("path order: equal, dominated, incomparable") {
    LatticePath a = mk({{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}});  // hugs upper-left
    LatticePath b = mk({{1, 1}, {2, 1}, {3, 1}, {3, 2}, {3, 3}});  // hugs lower-right
    CHECK(path_order(a, a) == PathOrdering::equal);
    CHECK(path_order(a, b) == PathOrdering::first_above);
    CHECK(path_order(b, a) == PathOrdering::second_above);

    // transversal crossers carry dominating pairs both ways
    LatticePath p = mk({{1, 2}, {2, 2}, {3, 2}});
    LatticePath q = mk({{2, 1}, {2, 2}, {2, 3}});
    CHECK(path_order(p, q) == PathOrdering::incomparable);
}

TEST_CASE("crossing detection on constructed three-by-three cases") {
    // straight transversal cross
    LatticePath h = mk({{1, 2}, {2, 2}, {3, 2}});
    LatticePath v = mk({{2, 1}, {2, 2}, {2, 3}});
    CHECK(is_crossing(h, v));
    CHECK(is_crossing(v, h));

    // touch-and-turn-away: one shared vertex, no crossing, proper
    LatticePath p = mk({{1, 2}, {2, 2}, {2, 3}});
    LatticePath q = mk({{2, 1}, {2, 2}, {3, 2}});
    CHECK(!is_crossing(p, q));
    CHECK(is_proper(p, q));

    // disjoint pair: vacuously proper, never crossing
    LatticePath d1 = mk({{1, 1}, {2, 1}});
    LatticePath d2 = mk({{1, 3}, {2, 3}});
    CHECK(!is_crossing(d1, d2));
    CHECK(is_proper(d1, d2));
    CHECK(!paths_intersect(d1, d2));

    // endpoint resting on the other path: improper
    LatticePath r1 = mk({{1, 2}, {2, 2}, {3, 2}});
    LatticePath r2 = mk({{2, 2}, {2, 3}});
    CHECK(paths_intersect(r1, r2));
    CHECK(!is_proper(r1, r2));
}

TEST_CASE("shared-segment crossings are detected through the overlap") {
    // run together for two edges, then split crosswise
    LatticePath p = mk({{1, 2}, {2, 2}, {3, 2}, {4, 2}});
    LatticePath q = mk({{2, 1}, {2, 2}, {3, 2}, {3, 3}});
    CHECK(is_crossing(p, q));
    // same entry but both exit upward: no crossing
    LatticePath r = mk({{2, 1}, {2, 2}, {3, 2}, {4, 2}, {4, 3}});
    LatticePath s = mk({{1, 2}, {2, 2}, {3, 2}, {3, 3}});
    CHECK(!is_crossing(r, s));
}

TEST_CASE("minimal path: single choice, full grid, crossing union") {
    std::set<GridEdge> one;
    LatticePath p = mk({{1, 1}, {2, 1}, {2, 2}});
    for (auto& e : p.edges()) one.insert(e);
    CHECK(min_path({1, 1}, {2, 2}, one) == p);

    // full grid: the right-then-up staircase is the unique minimum
    int n = 4;
    std::set<GridEdge> full;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            if (x < n) full.insert(right_edge({x, y}));
            if (y < n) full.insert(up_edge({x, y}));
        }
    LatticePath staircase = min_path({1, 1}, {4, 4}, full);
    CHECK(staircase == mk({{1, 1}, {2, 1}, {3, 1}, {4, 1}, {4, 2}, {4, 3}, {4, 4}}));

    // definitional check against exhaustive enumeration
    for (auto& cand : enumerate_paths({1, 1}, {4, 4})) {
        auto o = path_order(cand, staircase);
        CHECK((o == PathOrdering::equal || o == PathOrdering::first_above));
    }

    CHECK_THROWS(min_path({1, 1}, {3, 3}, one));
}

TEST_CASE("minimal path over a union of two crossing paths") {
    LatticePath a = mk({{1, 2}, {2, 2}, {3, 2}, {3, 3}});
    LatticePath b = mk({{2, 1}, {2, 2}, {2, 3}, {3, 3}});
    std::set<GridEdge> pool;
    for (auto& e : a.edges()) pool.insert(e);
    for (auto& e : b.edges()) pool.insert(e);
    LatticePath m = min_path({1, 2}, {3, 3}, pool);
    // enumerate all paths inside the pool by brute force
    std::vector<LatticePath> inside;
    for (auto& cand : enumerate_paths({1, 2}, {3, 3})) {
        bool ok = true;
        for (auto& e : cand.edges())
            if (!pool.count(e)) ok = false;
        if (ok) inside.push_back(cand);
    }
    REQUIRE(!inside.empty());
    for (auto& cand : inside) {
        auto o = path_order(cand, m);
        CHECK((o == PathOrdering::equal || o == PathOrdering::first_above));
    }
}

TEST_CASE("uncross: identity-like on noncrossing tuples, exact on crossers") {
    // already disjoint: multiset unchanged
    PathTuple easy = PathTuple::from_paths(
        {mk({{1, 1}, {2, 1}, {3, 1}}), mk({{1, 3}, {2, 3}, {3, 3}})});
    check_uncross_contract(easy, 3);

    // the transversal cross switches at the crossing
    PathTuple crossed =
        PathTuple::from_paths({mk({{1, 2}, {2, 2}, {3, 2}}), mk({{2, 1}, {2, 2}, {2, 3}})});
    PathTuple out = uncross(crossed, 3);
    CHECK(out.edge_multiset() == crossed.edge_multiset());
    CHECK(tuple_noncrossing(out));
}

TEST_CASE("uncross: exhaustive over all path pairs on the 4x4 grid") {
    auto paths = all_paths_upto(4);
    int checked = 0;
    for (size_t i = 0; i < paths.size(); ++i)
        for (size_t j = 0; j < paths.size(); ++j) {
            if (i == j) continue;
            if (paths[i].start() == paths[j].start() || paths[i].end() == paths[j].end())
                continue;
            PathTuple t = PathTuple::from_paths({paths[i], paths[j]});
            PathTuple out = uncross(t, 4);
            bool same_multiset = out.edge_multiset() == t.edge_multiset();
            bool noncross = tuple_noncrossing(out);
            bool ordered = index_order_holds(out);
            CHECK(same_multiset);
            CHECK(noncross);
            CHECK(ordered);
            if (!(same_multiset && noncross && ordered)) {
                MESSAGE("failing pair ", tuple_to_json(t));
                REQUIRE(false);
            }
            ++checked;
        }
    MESSAGE("checked ", checked, " ordered pairs");
    CHECK(checked > 100000);
}

TEST_CASE("uncross: exhaustive over all triples on the 3x3 grid") {
    auto paths = all_paths_upto(3);
    int checked = 0;
    for (size_t i = 0; i < paths.size(); ++i)
        for (size_t j = i + 1; j < paths.size(); ++j)
            for (size_t l = j + 1; l < paths.size(); ++l) {
                const LatticePath &a = paths[i], &b = paths[j], &c = paths[l];
                if (a.start() == b.start() || a.start() == c.start() || b.start() == c.start())
                    continue;
                if (a.end() == b.end() || a.end() == c.end() || b.end() == c.end()) continue;
                PathTuple t = PathTuple::from_paths({a, b, c});
                PathTuple out = uncross(t, 3);
                CHECK(out.edge_multiset() == t.edge_multiset());
                CHECK(tuple_noncrossing(out));
                CHECK(index_order_holds(out));
                ++checked;
            }
    MESSAGE("checked ", checked, " triples");
    CHECK(checked > 50000);
}

TEST_CASE("uncross: all corner-spec triples on the 5x5 grid across pairings") {
    int n = 5, k = 3;
    std::vector<std::vector<std::vector<LatticePath>>> paths(k);
    for (int i = 0; i < k; ++i) {
        paths[i].resize(k);
        for (int j = 0; j < k; ++j)
            paths[i][j] = enumerate_paths({1, i + 1}, {n, n - k + 1 + j});
    }
    std::vector<int> perm{0, 1, 2};
    long checked = 0;
    do {
        for (const auto& p0 : paths[0][perm[0]])
            for (const auto& p1 : paths[1][perm[1]])
                for (const auto& p2 : paths[2][perm[2]]) {
                    PathTuple t = PathTuple::from_paths({p0, p1, p2});
                    PathTuple out = uncross(t, n);
                    bool ok = out.edge_multiset() == t.edge_multiset() &&
                              tuple_noncrossing(out) && index_order_holds(out);
                    if (!ok) {
                        MESSAGE("failing tuple ", tuple_to_json(t));
                        REQUIRE(ok);
                    }
                    ++checked;
                }
    } while (std::next_permutation(perm.begin(), perm.end()));
    MESSAGE("checked ", checked, " corner tuples");
    CHECK(checked > 100000);
}

TEST_CASE("uncross: randomized tuples up to n = 12") {
    rng::Stream s(0xdecaf);
    for (int c = 0; c < 1000; ++c) {
        int n = 5 + int(s.next_u64() % 8);
        int k = 2 + int(s.next_u64() % 2);
        PathTuple t = random_any_tuple(n, k, s);
        check_uncross_contract(t, n);
    }
}

TEST_CASE("turn counts inside a corridor neighborhood stay bounded in n") {
    // any monotone path inside the radius-12 band of a one-turn path has a
    // bounded number of turns; measure the worst case per grid size
    std::vector<int> worst;
    for (int n : {6, 8, 10}) {
        LatticePath tau = mk({{1, 2}, {2, 2}, {3, 2}});  // short corridor low in the grid
        int bound = 0;
        rng::Stream s(n);
        for (int c = 0; c < 2000; ++c) {
            Vertex a{1 + int(s.next_u64() % n), 1 + int(s.next_u64() % n)};
            Vertex b{a.x + int(s.next_u64() % (n - a.x + 1)),
                     a.y + int(s.next_u64() % (n - a.y + 1))};
            LatticePath p = random_path(a, b, s);
            bool inside = true;
            for (const Vertex& v : p.verts())
                if (!within_distance(v, tau, corridor_radius(2))) inside = false;
            if (inside) bound = std::max(bound, p.turn_count());
        }
        worst.push_back(bound);
    }
    // the bound saturates instead of growing with n
    CHECK(worst[2] <= worst[0] + 2);
}

TEST_CASE("cleaning a tuple with an endpoint resting on another path") {
    // q starts on p's interior; cleaning advances q's start off p
    LatticePath p = mk({{1, 2}, {2, 2}, {3, 2}, {4, 2}});
    LatticePath q = mk({{2, 2}, {2, 3}, {3, 3}, {4, 3}});
    PathTuple t = PathTuple::from_paths({p, q});
    StageContext ctx{t, mk({{1, 2}, {2, 2}, {3, 2}}), 0, 4, 2};
    PathTuple cleaned = clean_proper(t, ctx, 0);
    cleaned.validate(4);
    for (int i = 0; i < cleaned.k(); ++i)
        for (int j = i + 1; j < cleaned.k(); ++j)
            CHECK(is_proper(cleaned.path(i), cleaned.path(j)));
    // only the hanging start moved; at most one edge was abandoned
    auto rep = check_conditions(ctx, cleaned, 0);
    CHECK(rep.ok);
    CHECK(rep.edges_lost <= 1);
}

TEST_CASE("cleaning relocates a fully covered path to a free vertex") {
    // q runs entirely inside p: no free vertex to advance to
    LatticePath p = mk({{1, 2}, {2, 2}, {3, 2}, {4, 2}, {4, 3}});
    LatticePath q = mk({{2, 2}, {3, 2}});
    PathTuple t = PathTuple::from_paths({p, q});
    StageContext ctx{t, mk({{1, 2}, {2, 2}, {3, 2}, {4, 2}}), 0, 4, 2};
    PathTuple cleaned = clean_proper(t, ctx, 0);
    cleaned.validate(4);
    bool has_zero_length = false;
    for (int i = 0; i < cleaned.k(); ++i)
        if (cleaned.path(i).edge_count() == 0) has_zero_length = true;
    CHECK(has_zero_length);
    for (int i = 0; i < cleaned.k(); ++i)
        for (int j = i + 1; j < cleaned.k(); ++j)
            CHECK(!paths_intersect(cleaned.path(i), cleaned.path(j)));
}

TEST_CASE("pushing separates properly touching staircases") {
    // proper intersection in the middle of a 5x5 grid
    LatticePath low = mk({{1, 1}, {2, 1}, {3, 1}, {3, 2}, {3, 3}, {4, 3}, {5, 3}, {5, 4}});
    LatticePath high = mk({{1, 2}, {1, 3}, {2, 3}, {3, 3}, {3, 4}, {4, 4}, {4, 5}, {5, 5}});
    REQUIRE(paths_intersect(low, high));
    REQUIRE(is_proper(low, high));
    REQUIRE(!is_crossing(low, high));
    REQUIRE(path_order(high, low) == PathOrdering::first_above);
    PathTuple t = PathTuple::from_paths({low, high});
    StageContext ctx{t, mk({{1, 3}, {2, 3}, {3, 3}}), 0, 5, 2};
    PathTuple pushed = push_away(t, ctx, 0);
    pushed.validate(5);
    CHECK(!paths_intersect(pushed.path(0), pushed.path(1)));
    CHECK(pushed.path(1) == high);  // the pivot stays put
    auto rep = check_conditions(ctx, pushed, 1);
    CHECK(rep.ok);
}

TEST_CASE("pushing the zigzag family loses a bounded edge count") {
    // two interleaved zigzags touching at every other corner; the touch count
    // grows with n but the loss must not
    std::vector<int> losses;
    for (int n : {5, 6, 8, 10, 12}) {
        std::vector<Vertex> a{{1, 1}}, b{{1, 2}};
        while (true) {
            Vertex va = a.back();
            if (va.x < n) a.push_back({va.x + 1, va.y});
            else break;
            va = a.back();
            if (va.y < n - 1) a.push_back({va.x, va.y + 1});
            else break;
        }
        while (true) {
            Vertex vb = b.back();
            if (vb.x < n) b.push_back({vb.x + 1, vb.y});
            else break;
            vb = b.back();
            if (vb.y < n) b.push_back({vb.x, vb.y + 1});
            else break;
        }
        LatticePath pa(a), pb(b);
        if (!paths_intersect(pa, pb) || is_crossing(pa, pb) || !is_proper(pa, pb)) continue;
        if (path_order(pb, pa) != PathOrdering::first_above) continue;
        PathTuple t = PathTuple::from_paths({pa, pb});
        StageContext ctx{t, pb, 0, n, 2};
        PathTuple pushed = push_away(t, ctx, 0, kUnlimitedBudget);
        std::set<GridEdge> before = t.edge_set(), after = pushed.edge_set(), lost;
        std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                            std::inserter(lost, lost.begin()));
        losses.push_back(int(lost.size()));
        CHECK(!paths_intersect(pushed.path(0), pushed.path(1)));
    }
    REQUIRE(losses.size() >= 3);
    CHECK(losses.back() <= losses.front() + 2);
}

TEST_CASE("push with nothing to do returns the tuple unchanged") {
    PathTuple t = PathTuple::from_paths(
        {mk({{1, 1}, {2, 1}, {3, 1}}), mk({{1, 3}, {2, 3}, {3, 3}})});
    StageContext ctx{t, mk({{1, 1}, {2, 1}}), 0, 3, 2};
    PathTuple out = push_away(t, ctx, 0);
    CHECK(out.path(0) == t.path(0));
    CHECK(out.path(1) == t.path(1));
}

TEST_CASE("boundary clearing is the identity on corner tuples") {
    LatticePath p1 = mk({{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {6, 2}, {6, 3},
                         {6, 4}, {6, 5}});
    LatticePath p2 = mk({{1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 2}, {5, 3}, {5, 4}, {5, 5},
                         {5, 6}, {6, 6}});
    PathTuple corner = PathTuple::from_paths({p1, p2});
    REQUIRE(corner.vertex_disjoint());
    auto [out, rep] = clear_boundary(corner, 6);
    CHECK(rep.removed_edges == 0);
    CHECK(out.path(0) == p1);
    CHECK(out.path(1) == p2);
}

TEST_CASE("boundary clearing moves low starts off the bottom band") {
    // two offenders on level 1; the rightmost gets rerooted at (1,1) through
    // the level corridor, the other advances to level 2
    LatticePath left = mk({{2, 1}, {2, 2}, {2, 3}, {3, 3}, {4, 3}});
    LatticePath right = mk({{4, 1}, {4, 2}, {5, 2}, {6, 2}});
    PathTuple t = PathTuple::from_paths({left, right});
    REQUIRE(t.vertex_disjoint());
    auto [out, rep] = clear_boundary(t, 6);
    out.validate(6);
    CHECK(out.vertex_disjoint());
    for (int i = 0; i < out.k(); ++i) {
        const Vertex s = out.start(i);
        bool corner_start = s.x == 1 && s.y <= 2;
        CHECK((corner_start || s.y >= 3));
    }
    // edits stayed near the bottom band
    for (const auto& piece : rep.sym_diff_paths)
        for (const Vertex& v : piece.verts()) CHECK(v.y <= 2 + 2 * 2);
}

TEST_CASE("boundary clearing handles an occupied corridor root") {
    // (1,1) already starts a path that runs along the bottom ahead of the
    // offender's corridor
    LatticePath rooted = mk({{1, 1}, {2, 1}, {2, 2}, {3, 2}, {4, 2}, {4, 3}});
    LatticePath low = mk({{5, 1}, {6, 1}, {6, 2}});
    PathTuple t = PathTuple::from_paths({rooted, low});
    REQUIRE(t.vertex_disjoint());
    auto [out, rep] = clear_boundary(t, 6);
    out.validate(6);
    CHECK(out.vertex_disjoint());
    bool root_kept = false;
    for (int i = 0; i < out.k(); ++i)
        if (out.start(i) == Vertex{1, 1}) root_kept = true;
    CHECK(root_kept);
    for (int i = 0; i < out.k(); ++i) {
        const Vertex s = out.start(i);
        CHECK((s.x == 1 || s.y >= 3));
    }
}

TEST_CASE("corner lift: order one connects through fixed simple corridors") {
    int n = 5;
    for (int sx = 1; sx <= n; ++sx)
        for (int sy = 1; sy <= n; ++sy)
            for (int tx = sx; tx <= n; ++tx)
                for (int ty = sy; ty <= n; ++ty) {
                    rng::Stream s(uint64_t(sx * 1000 + sy * 100 + tx * 10 + ty));
                    PathTuple t = PathTuple::from_paths(
                        {random_path({sx, sy}, {tx, ty}, s)});
                    auto [out, rep] = lift_to_corner(t, n);
                    out.validate(n);
                    CHECK(out.k() == 1);
                    CHECK(out.start(0) == Vertex{1, 1});
                    CHECK(out.end(0) == Vertex{n, n});
                    CHECK(rep.removed_edges == 0);
                    CHECK(rep.rounds <= 2);
                }
}

TEST_CASE("corner lift: identity on tuples already at the corner spec") {
    LatticePath p1 = mk({{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {6, 2}, {6, 3},
                         {6, 4}, {6, 5}});
    LatticePath p2 = mk({{1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 2}, {5, 3}, {5, 4}, {5, 5},
                         {5, 6}, {6, 6}});
    PathTuple corner = PathTuple::from_paths({p1, p2});
    auto [out, rep] = lift_to_corner(corner, 6);
    CHECK(rep.rounds == 0);
    CHECK(rep.removed_edges == 0);
    CHECK(out.path(0) == p1);
    CHECK(out.path(1) == p2);
}

TEST_CASE("corner lift: random disjoint pairs land on the corner spec") {
    rng::Stream s(0xf00d);
    for (int c = 0; c < 150; ++c) {
        int n = 6 + 2 * int(s.next_u64() % 4);
        PathTuple t = random_disjoint_tuple(n, 2, s);
        auto [out, rep] = lift_to_corner(t, n);
        out.validate(n);
        CHECK(out.vertex_disjoint());
        CHECK(at_corner_spec(out, n));
        CHECK(rep.rounds <= 4);
        CHECK(out.start(0) == Vertex{1, 1});
        CHECK(out.start(1) == Vertex{1, 2});
        CHECK(out.end(0) == Vertex{n, n - 1});
        CHECK(out.end(1) == Vertex{n, n});
    }
}

TEST_CASE("corner lift: removed edges do not grow with the grid") {
    rng::Stream s(0xbead);
    std::map<int, int> worst;
    for (int n : {6, 8, 10, 12})
        for (int c = 0; c < 120; ++c) {
            PathTuple t = random_disjoint_tuple(n, 2, s);
            auto [out, rep] = lift_to_corner(t, n);
            worst[n] = std::max(worst[n], rep.removed_edges);
        }
    MESSAGE("worst removals by size: ", worst[6], " ", worst[8], " ", worst[10], " ", worst[12]);
    CHECK(worst[12] <= worst[6] + 2);
}

TEST_CASE("corner lift: symmetric difference decomposes into corridor pieces") {
    rng::Stream s(0xcafe);
    for (int c = 0; c < 40; ++c) {
        int n = 8;
        PathTuple t = random_disjoint_tuple(n, 2, s);
        auto [out, rep] = lift_to_corner(t, n);
        // each piece lies inside some corridor neighborhood or the boundary band
        for (const auto& piece : rep.sym_diff_paths) {
            bool covered = true;
            for (const Vertex& v : piece.verts()) {
                bool near = v.y <= 2 || v.y >= n - 1;  // boundary bands
                for (const auto& tau : rep.neighborhoods)
                    if (within_distance(v, tau, corridor_radius(2))) near = true;
                if (!near) covered = false;
            }
            CHECK(covered);
        }
    }
}

TEST_CASE("three-path lifts settle on the corner spec") {
    rng::Stream s(0x3333);
    for (int c = 0; c < 25; ++c) {
        int n = 7;
        PathTuple t = random_disjoint_tuple(n, 3, s);
        auto [out, rep] = lift_to_corner(t, n);
        out.validate(n);
        CHECK(out.vertex_disjoint());
        CHECK(at_corner_spec(out, n));
        CHECK(rep.rounds <= 6);
    }
}

TEST_CASE("lift rejects intersecting input") {
    LatticePath a = mk({{1, 2}, {2, 2}, {3, 2}});
    LatticePath b = mk({{2, 1}, {2, 2}, {2, 3}});
    CHECK_THROWS_AS((void)lift_to_corner(PathTuple::from_paths({a, b}), 3), ContractError);
}

TEST_CASE("condition checks name the failing condition") {
    // index order violated: the dominated path is listed second
    LatticePath above = mk({{1, 3}, {2, 3}, {2, 4}});
    LatticePath below = mk({{3, 1}, {4, 1}, {4, 2}});
    PathTuple bad = PathTuple::from_paths({above, below});
    StageContext ctx{bad, mk({{1, 1}, {2, 1}}), 0, 6, 2};
    auto rep = check_conditions(ctx, bad, 0);
    CHECK(!rep.ok);
    CHECK(rep.failed_condition == int(TupleCondition::index_order_consistent));

    PathTuple good = PathTuple::from_paths({below, above});
    CHECK(check_conditions(ctx, good, 0).ok);
}

TEST_CASE("surgery reports serialize") {
    rng::Stream s(0x7777);
    PathTuple t = random_disjoint_tuple(6, 2, s);
    auto [out, rep] = lift_to_corner(t, 6);
    std::string j = report_to_json(rep);
    CHECK(j.find("removed_edges") != std::string::npos);
    CHECK(j.find("neighborhoods") != std::string::npos);
    CHECK(tuple_to_json(out).find("paths") != std::string::npos);
}

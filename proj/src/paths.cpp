#include "polymerlab/paths.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace polymerlab {

LatticePath::LatticePath(std::vector<Vertex> verts) : verts_(std::move(verts)) {
    if (verts_.empty()) throw std::invalid_argument("path needs at least one vertex");
    for (size_t i = 1; i < verts_.size(); ++i) {
        const Vertex &a = verts_[i - 1], &b = verts_[i];
        bool step_right = b.x == a.x + 1 && b.y == a.y;
        bool step_up = b.x == a.x && b.y == a.y + 1;
        if (!step_right && !step_up) throw std::invalid_argument("path steps must go right or up");
    }
}

bool LatticePath::contains(const Vertex& v) const {
    // vertices appear in increasing x+y, one per antidiagonal
    int d = v.x + v.y - (verts_.front().x + verts_.front().y);
    if (d < 0 || d >= int(verts_.size())) return false;
    return verts_[d] == v;
}

std::vector<GridEdge> LatticePath::edges() const {
    std::vector<GridEdge> out;
    out.reserve(edge_count());
    for (size_t i = 1; i < verts_.size(); ++i) out.push_back({verts_[i - 1], verts_[i]});
    return out;
}

int LatticePath::turn_count() const {
    int turns = 0;
    for (size_t i = 1; i + 1 < verts_.size(); ++i) {
        bool in_right = verts_[i].x == verts_[i - 1].x + 1;
        bool out_right = verts_[i + 1].x == verts_[i].x + 1;
        if (in_right != out_right) ++turns;
    }
    return turns;
}

LatticePath LatticePath::suffix_from(size_t index) const {
    return LatticePath(std::vector<Vertex>(verts_.begin() + index, verts_.end()));
}

LatticePath LatticePath::prefix_to(size_t index) const {
    return LatticePath(std::vector<Vertex>(verts_.begin(), verts_.begin() + index + 1));
}

LatticePath concatenate(const LatticePath& a, const LatticePath& b) {
    if (!(a.end() == b.start()))
        throw std::invalid_argument("concatenation endpoints do not meet");
    std::vector<Vertex> v = a.verts_;
    v.insert(v.end(), b.verts_.begin() + 1, b.verts_.end());
    return LatticePath(std::move(v));
}

PathTuple::PathTuple(std::vector<LatticePath> paths, std::vector<Vertex> terminals,
                     std::vector<int> sigma)
    : paths_(std::move(paths)), terminals_(std::move(terminals)), sigma_(std::move(sigma)) {
    if (paths_.size() != terminals_.size() || paths_.size() != sigma_.size())
        throw std::invalid_argument("tuple sizes disagree");
}

PathTuple PathTuple::from_paths(std::vector<LatticePath> paths) {
    std::vector<Vertex> terms;
    std::vector<int> sigma;
    for (size_t i = 0; i < paths.size(); ++i) {
        terms.push_back(paths[i].end());
        sigma.push_back(int(i));
    }
    return PathTuple(std::move(paths), std::move(terms), std::move(sigma));
}

std::vector<Vertex> PathTuple::starts() const {
    std::vector<Vertex> s;
    s.reserve(paths_.size());
    for (const auto& p : paths_) s.push_back(p.start());
    return s;
}

int PathTuple::sigma_sign() const {
    std::vector<bool> seen(sigma_.size(), false);
    int sign = 1;
    for (size_t i = 0; i < sigma_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = size_t(sigma_[j])) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

void PathTuple::set_path(int i, LatticePath p) {
    if (!(p.start() == paths_[i].start()) || !(p.end() == paths_[i].end()))
        throw std::invalid_argument("set_path must keep endpoints");
    paths_[i] = std::move(p);
}

void PathTuple::move_endpoints(int i, LatticePath p) {
    terminals_[sigma_[i]] = p.end();
    paths_[i] = std::move(p);
}

void PathTuple::apply_order(const std::vector<int>& perm) {
    std::vector<LatticePath> np(paths_.size());
    std::vector<int> ns(sigma_.size());
    for (size_t i = 0; i < perm.size(); ++i) {
        np[i] = paths_[perm[i]];
        ns[i] = sigma_[perm[i]];
    }
    paths_ = std::move(np);
    sigma_ = std::move(ns);
}

void PathTuple::validate(int n) const {
    std::unordered_set<Vertex> starts, terms;
    std::vector<bool> hit(sigma_.size(), false);
    for (size_t i = 0; i < paths_.size(); ++i) {
        for (const Vertex& v : paths_[i].verts())
            if (!in_grid(v, n)) throw std::runtime_error("tuple path leaves the grid");
        if (!starts.insert(paths_[i].start()).second)
            throw std::runtime_error("tuple starts are not distinct");
        int s = sigma_[i];
        if (s < 0 || s >= int(sigma_.size()) || hit[s])
            throw std::runtime_error("sigma is not a permutation");
        hit[s] = true;
        if (!(terminals_[s] == paths_[i].end()))
            throw std::runtime_error("terminal label disagrees with path end");
    }
    for (const Vertex& t : terminals_)
        if (!terms.insert(t).second) throw std::runtime_error("tuple terminals are not distinct");
}

std::set<GridEdge> PathTuple::edge_set() const {
    std::set<GridEdge> s;
    for (const auto& p : paths_)
        for (const auto& e : p.edges()) s.insert(e);
    return s;
}

std::map<GridEdge, int> PathTuple::edge_multiset() const {
    std::map<GridEdge, int> m;
    for (const auto& p : paths_)
        for (const auto& e : p.edges()) ++m[e];
    return m;
}

bool PathTuple::vertex_disjoint() const {
    std::unordered_set<Vertex> seen;
    for (const auto& p : paths_)
        for (const Vertex& v : p.verts())
            if (!seen.insert(v).second) return false;
    return true;
}

bool PathTuple::covers_vertex(const Vertex& v, int skip_index) const {
    for (int i = 0; i < k(); ++i)
        if (i != skip_index && paths_[i].contains(v)) return true;
    return false;
}

int PathTuple::paths_through(const Vertex& v) const {
    int c = 0;
    for (const auto& p : paths_)
        if (p.contains(v)) ++c;
    return c;
}

std::vector<LatticePath> enumerate_paths(Vertex u, Vertex v) {
    std::vector<LatticePath> out;
    if (v.x < u.x || v.y < u.y) return out;
    std::vector<Vertex> cur{u};
    auto rec = [&](auto&& self, Vertex at) -> void {
        if (at == v) {
            out.emplace_back(cur);
            return;
        }
        if (at.x < v.x) {
            cur.push_back({at.x + 1, at.y});
            self(self, cur.back());
            cur.pop_back();
        }
        if (at.y < v.y) {
            cur.push_back({at.x, at.y + 1});
            self(self, cur.back());
            cur.pop_back();
        }
    };
    rec(rec, u);
    return out;
}

double count_paths(Vertex u, Vertex v) {
    if (v.x < u.x || v.y < u.y) return 0;
    int dx = v.x - u.x, dy = v.y - u.y;
    double c = 1;
    for (int i = 1; i <= dy; ++i) c = c * (dx + i) / i;
    return c;
}

LatticePath random_path(Vertex u, Vertex v, rng::Stream& stream) {
    if (v.x < u.x || v.y < u.y) throw std::invalid_argument("no monotone path between endpoints");
    std::vector<Vertex> verts{u};
    Vertex at = u;
    while (!(at == v)) {
        if (at.x == v.x) at.y++;
        else if (at.y == v.y) at.x++;
        else {
            // choose right with probability (#paths via right)/(#paths total)
            double via_right = count_paths({at.x + 1, at.y}, v);
            double total = count_paths(at, v);
            if (stream.next_unit() * total < via_right) at.x++;
            else at.y++;
        }
        verts.push_back(at);
    }
    return LatticePath(std::move(verts));
}

PathTuple random_disjoint_tuple(int n, int k, rng::Stream& stream) {
    auto rand_vertex = [&]() -> Vertex {
        return {int(stream.next_u64() % n) + 1, int(stream.next_u64() % n) + 1};
    };
    for (int attempt = 0; attempt < 200000; ++attempt) {
        std::vector<LatticePath> paths;
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            Vertex s = rand_vertex();
            Vertex t{s.x + int(stream.next_u64() % (n - s.x + 1)),
                     s.y + int(stream.next_u64() % (n - s.y + 1))};
            paths.push_back(random_path(s, t, stream));
            for (int j = 0; j + 1 < int(paths.size()) && ok; ++j)
                for (const Vertex& v : paths.back().verts())
                    if (paths[j].contains(v)) {
                        ok = false;
                        break;
                    }
        }
        if (!ok) continue;
        PathTuple t = PathTuple::from_paths(std::move(paths));
        try {
            t.validate(n);
        } catch (const std::exception&) {
            continue;  // duplicate endpoints
        }
        return t;
    }
    throw std::runtime_error("could not sample a disjoint tuple");
}

std::vector<LatticePath> decompose_into_paths(const std::set<GridEdge>& edges) {
    std::set<GridEdge> left = edges;
    std::vector<LatticePath> out;
    while (!left.empty()) {
        GridEdge e = *left.begin();
        left.erase(left.begin());
        std::vector<Vertex> chain{e.tail, e.head};
        // extend forward, preferring right steps for determinism
        for (;;) {
            GridEdge r = right_edge(chain.back()), u = up_edge(chain.back());
            if (left.count(r)) {
                left.erase(r);
                chain.push_back(r.head);
            } else if (left.count(u)) {
                left.erase(u);
                chain.push_back(u.head);
            } else
                break;
        }
        // extend backward
        for (;;) {
            Vertex f = chain.front();
            GridEdge from_left{{f.x - 1, f.y}, f}, from_below{{f.x, f.y - 1}, f};
            if (f.x > 1 && left.count(from_left)) {
                left.erase(from_left);
                chain.insert(chain.begin(), from_left.tail);
            } else if (f.y > 1 && left.count(from_below)) {
                left.erase(from_below);
                chain.insert(chain.begin(), from_below.tail);
            } else
                break;
        }
        out.emplace_back(std::move(chain));
    }
    return out;
}

}  // namespace polymerlab

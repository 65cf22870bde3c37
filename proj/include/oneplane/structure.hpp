// Structural analyzers: hermits, skeletons, nests, K4-subgraphs, exceptional
// edges and the split at an exceptional edge.
//
// A nest <{u,v},{c1,c2}> is a region bounded by the four half-edges c1-u,
// c1-v, c2-u, c2-v whose interior holds nothing except possibly the edge uv.
// In a planarized embedding that is exactly one of two face patterns:
//   case A: a quadrilateral face with corners u, c1, v, c2;
//   case B: a clean edge uv whose two incident faces are the triangles
//           (u, c1, v) and (u, c2, v) with c1 != c2.

#pragma once

#include "maximality.hpp"

#include <array>

namespace oneplane {

// Identity of a crossing that survives passage to sub-drawings: the two
// crossing edges as sorted endpoint-name pairs.
using CrossKey = std::array<std::array<std::string, 2>, 2>;

inline CrossKey cross_key(const Drawing& d, int c) {
    auto epair = [&](int e) {
        std::array<std::string, 2> p{d.vnames[d.edges[e].u], d.vnames[d.edges[e].v]};
        if (p[1] < p[0]) std::swap(p[0], p[1]);
        return p;
    };
    CrossKey k{epair(d.crossings[c].ea), epair(d.crossings[c].eb)};
    if (k[1] < k[0]) std::swap(k[0], k[1]);
    return k;
}

struct NestKey {
    std::array<std::string, 2> verts;
    std::array<CrossKey, 2> crossings;
    auto operator<=>(const NestKey&) const = default;
    std::string str() const {
        auto ck = [](const CrossKey& c) {
            return c[0][0] + "*" + c[0][1] + "x" + c[1][0] + "*" + c[1][1];
        };
        return "{" + verts[0] + "," + verts[1] + "} {" + ck(crossings[0]) + "," + ck(crossings[1]) + "}";
    }
};

struct Nest {
    int u = -1, v = -1;  // supporting vertices, vnames[u] < vnames[v]
    int c1 = -1, c2 = -1; // supporting crossings
    bool contains_edge_uv = false;
    std::vector<int> region_faces;
    NestKey key;
};

inline NestKey make_nest_key(const Drawing& d, int u, int v, int c1, int c2) {
    NestKey k;
    k.verts = {d.vnames[u], d.vnames[v]};
    if (k.verts[1] < k.verts[0]) std::swap(k.verts[0], k.verts[1]);
    k.crossings = {cross_key(d, c1), cross_key(d, c2)};
    if (k.crossings[1] < k.crossings[0]) std::swap(k.crossings[0], k.crossings[1]);
    return k;
}

inline std::vector<Nest> find_nests(const Drawing& d) {
    std::map<NestKey, Nest> found;
    auto add = [&](int u, int v, int c1, int c2, bool has_uv, std::vector<int> faces) {
        Nest n;
        if (d.vnames[v] < d.vnames[u]) std::swap(u, v);
        n.u = u;
        n.v = v;
        n.c1 = c1;
        n.c2 = c2;
        n.contains_edge_uv = has_uv;
        n.region_faces = std::move(faces);
        n.key = make_nest_key(d, u, v, c1, c2);
        found.emplace(n.key, n); // duplicates collapse; cases A and B cannot overlap
    };
    // case A: quadrilateral face u, c, v, c'
    for (const Face& f : d.face_set.faces) {
        if (f.walk.size() != 4) continue;
        std::array<int, 4> ns;
        for (int i = 0; i < 4; ++i) ns[i] = d.tail(f.walk[i]);
        int off = d.is_crossing_node(ns[0]) ? 1 : 0;
        int u = ns[off], v = ns[(off + 2) % 4];
        int x1 = ns[(off + 1) % 4], x2 = ns[(off + 3) % 4];
        if (d.is_crossing_node(u) || d.is_crossing_node(v)) continue;
        if (!d.is_crossing_node(x1) || !d.is_crossing_node(x2)) continue;
        if (u == v || x1 == x2) continue;
        add(u, v, x1 - d.n(), x2 - d.n(), false, {f.id});
    }
    // case B: clean edge whose two faces are triangles (u, c, v), distinct c
    for (int s = 0; s < d.num_segs(); ++s) {
        if (d.segs[s].half >= 0) continue;
        int u = d.segs[s].n0, v = d.segs[s].n1;
        int f1 = d.face_of_dart(2 * s), f2 = d.face_of_dart(2 * s + 1);
        if (f1 == f2) continue;
        auto tri_cross = [&](int fid) -> int {
            const Face& f = d.face_set.faces[fid];
            if (f.walk.size() != 3) return -1;
            int cr = -1;
            for (int dart : f.walk) {
                int t = d.tail(dart);
                if (d.is_crossing_node(t)) {
                    if (cr >= 0) return -1;
                    cr = t - d.n();
                } else if (t != u && t != v) {
                    return -1;
                }
            }
            return cr;
        };
        int c1 = tri_cross(f1), c2 = tri_cross(f2);
        if (c1 < 0 || c2 < 0 || c1 == c2) continue;
        add(u, v, c1, c2, true, {f1, f2});
    }
    std::vector<Nest> out;
    for (auto& [k, n] : found) out.push_back(n);
    return out;
}

inline int nest_count(const Drawing& d) { return int(find_nests(d).size()); }

// ---------------------------------------------------------------------------

struct Hermit {
    int v = -1;
    int n1 = -1, n2 = -1; // neighbors, vnames[n1] < vnames[n2]
};

inline std::vector<Hermit> find_hermits(const Drawing& d) {
    std::vector<Hermit> out;
    std::vector<int> order(d.n());
    for (int i = 0; i < d.n(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d.vnames[a] < d.vnames[b]; });
    for (int v : order) {
        if (d.degree(v) != 2) continue;
        Hermit h;
        h.v = v;
        h.n1 = d.neighbors(v)[0];
        h.n2 = d.neighbors(v)[1];
        if (d.vnames[h.n2] < d.vnames[h.n1]) std::swap(h.n1, h.n2);
        out.push_back(h);
    }
    return out;
}

struct SkeletonResult {
    Drawing skeleton;
    struct Assignment {
        std::string hermit;
        std::array<std::string, 2> neighbors;
        std::optional<NestKey> nest; // host nest in the skeleton, when found
    };
    std::vector<Assignment> hermits;
};

// Single-pass removal of all current hermits. On maximal input the skeleton
// is again maximal with minimum degree >= 3 and each hermit matches one nest
// of the skeleton, injectively; failures of those guarantees are diagnosed.
inline SkeletonResult skeleton(const Drawing& d) {
    auto hs = find_hermits(d);
    SkeletonResult res;
    std::vector<char> keep_v(d.n(), 1), keep_e(d.m(), 1);
    std::vector<char> removed(d.n(), 0);
    for (const auto& h : hs) keep_v[h.v] = 0, removed[h.v] = 1;
    res.skeleton = detail::subdrawing(d, keep_v, keep_e, false);
    auto nests = find_nests(res.skeleton);

    // A dart survives removal when its edge touches no hermit and, if it is a
    // half, its crossing partner touches no hermit either.
    auto survives = [&](int dart) {
        int e = d.dart_edge(dart);
        if (removed[d.edges[e].u] || removed[d.edges[e].v]) return false;
        int c = d.edge_cross[e];
        if (c >= 0) {
            int p = d.crossings[c].ea == e ? d.crossings[c].eb : d.crossings[c].ea;
            if (removed[d.edges[p].u] || removed[d.edges[p].v]) return false;
        }
        return true;
    };
    auto dart_in_skeleton = [&](int dart) -> int {
        int e = res.skeleton.edge_index(d.edges[d.dart_edge(dart)].id);
        int half = d.segs[d.dart_seg(dart)].half;
        for (int s = 0; s < res.skeleton.num_segs(); ++s)
            if (res.skeleton.segs[s].edge == e && res.skeleton.segs[s].half == half)
                return 2 * s + (dart & 1);
        return -1;
    };

    std::map<NestKey, int> used;
    bool all_assigned = true, injective = true;
    for (const auto& h : hs) {
        SkeletonResult::Assignment a;
        a.hermit = d.vnames[h.v];
        a.neighbors = {d.vnames[h.n1], d.vnames[h.n2]};
        // the skeleton face that absorbed the hermit's spot
        int host_face = -1;
        for (int o : d.rot[h.v]) {
            int fid = d.face_of_dart(Drawing::opp(o));
            for (int dart : d.face_set.faces[fid].walk)
                if (survives(dart)) {
                    int sd = dart_in_skeleton(dart);
                    if (sd >= 0) host_face = res.skeleton.face_of_dart(sd);
                    break;
                }
            if (host_face >= 0) break;
        }
        for (const auto& nst : nests) {
            std::array<std::string, 2> vv{res.skeleton.vnames[nst.u], res.skeleton.vnames[nst.v]};
            if (vv != a.neighbors) continue;
            if (host_face >= 0 &&
                std::find(nst.region_faces.begin(), nst.region_faces.end(), host_face) ==
                    nst.region_faces.end())
                continue;
            a.nest = nst.key;
            break;
        }
        if (!a.nest) all_assigned = false;
        else if (used[*a.nest]++) injective = false;
        res.hermits.push_back(std::move(a));
    }
    if (is_maximal(d)) {
        if (!all_assigned || !injective)
            throw InvariantError("input not maximal: hermit/nest matching failed on a maximal drawing");
        for (int v = 0; v < res.skeleton.n(); ++v)
            if (res.skeleton.degree(v) < 3 && res.skeleton.n() > 4)
                throw InvariantError("input not maximal: skeleton has degree < 3");
    }
    return res;
}

// ---------------------------------------------------------------------------

inline std::vector<std::array<int, 4>> find_k4_subgraphs(const Drawing& d) {
    std::set<std::array<int, 4>> out;
    for (int e = 0; e < d.m(); ++e) {
        int u = d.edges[e].u, v = d.edges[e].v;
        std::vector<int> common;
        std::set_intersection(d.neighbors(u).begin(), d.neighbors(u).end(),
                              d.neighbors(v).begin(), d.neighbors(v).end(),
                              std::back_inserter(common));
        for (size_t i = 0; i < common.size(); ++i)
            for (size_t j = i + 1; j < common.size(); ++j)
                if (d.adjacent(common[i], common[j])) {
                    std::array<int, 4> q{u, v, common[i], common[j]};
                    std::sort(q.begin(), q.end());
                    out.insert(q);
                }
    }
    return {out.begin(), out.end()};
}

inline std::vector<int> exceptional_edges(const Drawing& d) {
    auto k4s = find_k4_subgraphs(d);
    std::vector<int> out;
    for (int e = 0; e < d.m(); ++e) {
        int u = d.edges[e].u, v = d.edges[e].v;
        bool covered = false;
        for (const auto& q : k4s)
            if (std::find(q.begin(), q.end(), u) != q.end() &&
                std::find(q.begin(), q.end(), v) != q.end()) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(e);
    }
    return out;
}

struct SplitResult {
    Drawing h1, h2; // a lies in h1, b in h2
    std::string cut_vertex;
};

// Split a hermit-free drawing at an exceptional edge ab: locate the vertex f
// lying on both faces of ab, then cut d - ab at f. The nest decomposition
// Nest(d) = Nest(h1) (+) Nest(h2) is always required to hold.
inline SplitResult split_at_exceptional(const Drawing& d, const std::string& edge_id) {
    int e = d.edge_index(edge_id);
    if (e < 0) throw InvariantError("edge id '" + edge_id + "' not present");
    {
        auto exc = exceptional_edges(d);
        if (std::find(exc.begin(), exc.end(), e) == exc.end())
            throw InvariantError("edge '" + edge_id + "' is not exceptional");
    }
    if (!d.edge_is_clean(e))
        throw InvariantError("input violates maximality or exceptionality premise: exceptional edge is crossed");
    int s = -1;
    for (int si = 0; si < d.num_segs(); ++si)
        if (d.segs[si].edge == e) { s = si; break; }
    int a = d.edges[e].u, b = d.edges[e].v;
    int f1 = d.face_of_dart(2 * s), f2 = d.face_of_dart(2 * s + 1);
    if (f1 == f2)
        throw InvariantError("input violates maximality or exceptionality premise: both sides of the edge on one face");
    std::vector<int> common;
    std::set_intersection(d.face_set.faces[f1].vertex_list.begin(), d.face_set.faces[f1].vertex_list.end(),
                          d.face_set.faces[f2].vertex_list.begin(), d.face_set.faces[f2].vertex_list.end(),
                          std::back_inserter(common));
    std::erase(common, a);
    std::erase(common, b);
    if (common.size() != 1)
        throw InvariantError("input violates maximality or exceptionality premise: no unique cut vertex on both faces");
    int f = common[0];
    // components of (d - ab) - f
    std::vector<int> comp(d.n(), -1);
    int ncomp = 0;
    for (int v0 = 0; v0 < d.n(); ++v0) {
        if (comp[v0] >= 0 || v0 == f) continue;
        std::vector<int> stack{v0};
        comp[v0] = ncomp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : d.neighbors(x)) {
                if (y == f || comp[y] >= 0) continue;
                if ((x == a && y == b) || (x == b && y == a)) continue;
                comp[y] = ncomp;
                stack.push_back(y);
            }
        }
        ++ncomp;
    }
    if (ncomp != 2 || comp[a] == comp[b])
        throw InvariantError("input violates maximality or exceptionality premise: removing the cut vertex does not split a from b");
    std::vector<int> va{f}, vb{f};
    for (int v = 0; v < d.n(); ++v) {
        if (v == f) continue;
        (comp[v] == comp[a] ? va : vb).push_back(v);
    }
    SplitResult res;
    res.h1 = induced_subdrawing_idx(d, va);
    res.h2 = induced_subdrawing_idx(d, vb);
    res.cut_vertex = d.vnames[f];
    // Nest(d) must be the disjoint union of the block nests
    std::set<NestKey> all, n1, n2;
    for (const auto& n : find_nests(d)) all.insert(n.key);
    for (const auto& n : find_nests(res.h1)) n1.insert(n.key);
    for (const auto& n : find_nests(res.h2)) n2.insert(n.key);
    std::set<NestKey> merged = n1;
    for (const auto& k : n2)
        if (!merged.insert(k).second)
            throw InvariantError("nest decomposition failed: nest present in both blocks");
    if (merged != all)
        throw InvariantError("nest decomposition failed: Nest(d) != Nest(H1) + Nest(H2)");
    return res;
}

// ---------------------------------------------------------------------------

inline bool dominating_check(const Drawing& d, const std::string& vertex_id) {
    int v = d.vertex_index(vertex_id);
    if (v < 0) throw InvariantError("vertex id '" + vertex_id + "' not present");
    return int(d.neighbors(v).size()) + 1 == d.n();
}

// Number of edges at w that are clean within the sub-drawing induced by S.
// For maximal d and induced degree >= 3 this is at least 2.
inline int clean_degree_bound(const Drawing& d, const std::vector<std::string>& S,
                              const std::string& w) {
    if (std::find(S.begin(), S.end(), w) == S.end())
        throw InvariantError("w must be a member of S");
    Drawing sub = induced_subdrawing(d, S);
    int wi = sub.vertex_index(w);
    int cnt = 0;
    for (int e = 0; e < sub.m(); ++e)
        if ((sub.edges[e].u == wi || sub.edges[e].v == wi) && sub.edge_is_clean(e)) ++cnt;
    return cnt;
}

// 2-connectivity of the abstract graph (crossings are not cut candidates).
inline bool is_2connected(const Drawing& d) {
    if (d.n() < 3 || !d.connected()) return false;
    // articulation search, iterative lowpoint DFS
    std::vector<int> disc(d.n(), -1), low(d.n(), 0), parent(d.n(), -1);
    int timer = 0;
    std::vector<std::pair<int, size_t>> stack;
    int root_children = 0;
    stack.push_back({0, 0});
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i < d.neighbors(v).size()) {
            int w = d.neighbors(v)[i++];
            if (disc[w] < 0) {
                parent[w] = v;
                if (v == 0) ++root_children;
                disc[w] = low[w] = timer++;
                stack.push_back({w, 0});
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], disc[w]);
            }
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                int p = stack.back().first;
                low[p] = std::min(low[p], low[v]);
                if (p != 0 && low[v] >= disc[p]) return false; // p is articulation
            }
        }
    }
    return root_children <= 1;
}

inline bool is_removable(const Drawing& d, const std::string& edge_id) {
    if (!is_2connected(d)) throw InvariantError("is_removable requires a 2-connected drawing");
    int e = d.edge_index(edge_id);
    if (e < 0) throw InvariantError("edge id '" + edge_id + "' not present");
    return is_2connected(delete_edge(d, edge_id));
}

} // namespace oneplane

// Core data model for 1-plane drawings, represented combinatorially: the
// planarization (vertices plus crossing nodes) carries a rotation system,
// and faces are the orbits of the usual next-dart permutation.
//
// Drawings are immutable values: every mutating operation returns a new
// Drawing and revalidates it. All iteration orders are deterministic.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace oneplane {

struct ParseError : std::runtime_error {
    int line = 0;
    int col = 0;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error("line " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}
};

// Precondition or structural-diagnostic failure of an operation.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A segment is a whole clean edge or one half of a crossed edge.
// half == -1: whole edge; half == 0: the half incident with the edge's
// first-listed endpoint; half == 1: the other half.
struct Segment {
    int edge = -1;
    int half = -1;
    int n0 = -1; // tail node of dart 2*s
    int n1 = -1; // head node of dart 2*s
};

struct Face {
    int id = -1;
    std::vector<int> walk;        // boundary darts, in traversal order
    std::vector<int> vertex_list; // graph vertices on the boundary, deduplicated, sorted
    bool is_true = false;         // every boundary segment belongs to a clean edge
};

struct FaceSet {
    std::vector<Face> faces;
    std::vector<int> dart_face; // dart -> face id
    std::optional<int> outer;   // face id marked as the infinite face, if any
};

class Drawing {
public:
    struct EdgeRec {
        std::string id;
        int u = -1, v = -1; // vertex indices; u is the first-listed endpoint
    };
    struct CrossRec {
        std::string id;
        int ea = -1, eb = -1; // edge indices
    };

    std::vector<std::string> vnames;      // vertex index -> id
    std::vector<EdgeRec> edges;           // edge index -> record
    std::vector<CrossRec> crossings;      // crossing index -> record
    std::vector<std::vector<int>> rot;    // node -> outgoing darts, cyclic
    int outer_dart = -1;                  // a dart on the outer face, or -1

    // derived
    std::vector<int> edge_cross;          // edge -> crossing index or -1
    std::vector<Segment> segs;
    std::vector<int> dart_pos;            // dart -> position within rot[tail(dart)]
    FaceSet face_set;

    int n() const { return int(vnames.size()); }
    int m() const { return int(edges.size()); }
    int num_crossings() const { return int(crossings.size()); }
    int num_nodes() const { return n() + num_crossings(); }
    int num_segs() const { return int(segs.size()); }
    int num_darts() const { return 2 * num_segs(); }

    int cross_node(int c) const { return n() + c; }
    bool is_crossing_node(int node) const { return node >= n(); }

    static int opp(int dart) { return dart ^ 1; }
    int tail(int dart) const { const Segment& s = segs[dart >> 1]; return (dart & 1) ? s.n1 : s.n0; }
    int head(int dart) const { return tail(opp(dart)); }
    int dart_seg(int dart) const { return dart >> 1; }
    int dart_edge(int dart) const { return segs[dart >> 1].edge; }

    bool edge_is_clean(int e) const { return edge_cross[e] < 0; }

    int vertex_index(const std::string& id) const {
        auto it = std::lower_bound(vindex_.begin(), vindex_.end(), std::make_pair(id, -1));
        if (it != vindex_.end() && it->first == id) return it->second;
        return -1;
    }
    int edge_index(const std::string& id) const {
        auto it = eindex_.find(id);
        return it == eindex_.end() ? -1 : it->second;
    }
    int crossing_index(const std::string& id) const {
        auto it = cindex_.find(id);
        return it == cindex_.end() ? -1 : it->second;
    }
    int edge_between(int u, int v) const {
        auto it = pair_edge_.find(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
        return it == pair_edge_.end() ? -1 : it->second;
    }
    bool adjacent(int u, int v) const { return edge_between(u, v) >= 0; }

    int degree(int v) const { return int(rot[v].size()); }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    // Outgoing dart of segment s at node `node`.
    int seg_dart_at(int s, int node) const {
        if (segs[s].n0 == node) return 2 * s;
        if (segs[s].n1 == node) return 2 * s + 1;
        throw InvariantError("segment has no end at node");
    }

    // Next dart in the face walk: the rotation successor of the reversal.
    int face_next(int dart) const {
        int r = opp(dart);
        int h = tail(r);
        int p = dart_pos[r];
        const std::vector<int>& rr = rot[h];
        return rr[(p + 1) % rr.size()];
    }

    int face_of_dart(int dart) const { return face_set.dart_face[dart]; }

    // Construct and validate. `require_connected` is on for parsed input
    // files; sub-drawing operations may legitimately disconnect.
    static Drawing make(std::vector<std::string> vnames,
                        std::vector<EdgeRec> edges,
                        std::vector<CrossRec> crossings,
                        std::vector<std::vector<std::pair<int, int>>> rot_segends,
                        int outer_dart,
                        bool require_connected);

    // Token of the segment end at `node` for rot serialization: "eid" or "eid.k".
    std::string seg_token(int s) const {
        const Segment& sg = segs[s];
        if (sg.half < 0) return edges[sg.edge].id;
        return edges[sg.edge].id + "." + char('0' + sg.half);
    }

    bool connected() const { return components_ == 1; }
    int components() const { return components_; }

private:
    std::vector<std::pair<std::string, int>> vindex_; // sorted (id, index)
    std::map<std::string, int> eindex_;
    std::map<std::string, int> cindex_;
    std::map<std::pair<int, int>, int> pair_edge_;
    std::vector<std::vector<int>> adj_;
    int components_ = 1;

    void build_derived();
    void validate() const;
    void compute_face_set();
    friend Drawing rebuild_drawing(const Drawing& base, std::vector<std::vector<int>> new_rot,
                                   int outer_dart_hint);
};

// ---------------------------------------------------------------------------

inline void Drawing::build_derived() {
    vindex_.clear();
    for (int i = 0; i < n(); ++i) vindex_.push_back({vnames[i], i});
    std::sort(vindex_.begin(), vindex_.end());
    eindex_.clear();
    pair_edge_.clear();
    for (int e = 0; e < m(); ++e) {
        eindex_[edges[e].id] = e;
        int u = edges[e].u, v = edges[e].v;
        pair_edge_[u < v ? std::make_pair(u, v) : std::make_pair(v, u)] = e;
    }
    cindex_.clear();
    for (int c = 0; c < num_crossings(); ++c) cindex_[crossings[c].id] = c;

    edge_cross.assign(m(), -1);
    for (int c = 0; c < num_crossings(); ++c) {
        edge_cross[crossings[c].ea] = c;
        edge_cross[crossings[c].eb] = c;
    }

    segs.clear();
    for (int e = 0; e < m(); ++e) {
        int c = edge_cross[e];
        if (c < 0) {
            segs.push_back({e, -1, edges[e].u, edges[e].v});
        } else {
            segs.push_back({e, 0, edges[e].u, cross_node(c)});
            segs.push_back({e, 1, cross_node(c), edges[e].v});
        }
    }

    adj_.assign(n(), {});
    for (int e = 0; e < m(); ++e) {
        adj_[edges[e].u].push_back(edges[e].v);
        adj_[edges[e].v].push_back(edges[e].u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());

    dart_pos.assign(num_darts(), -1);
    for (int node = 0; node < num_nodes(); ++node)
        for (int p = 0; p < int(rot[node].size()); ++p)
            dart_pos[rot[node][p]] = p;

    // connectivity of the underlying graph
    components_ = 0;
    std::vector<int> seen(n(), 0);
    for (int v0 = 0; v0 < n(); ++v0) {
        if (seen[v0]) continue;
        ++components_;
        std::vector<int> stack{v0};
        seen[v0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v])
                if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
        }
    }
    if (n() == 0) components_ = 0;
}

inline void Drawing::compute_face_set() {
    face_set.faces.clear();
    face_set.dart_face.assign(num_darts(), -1);
    face_set.outer.reset();
    for (int d0 = 0; d0 < num_darts(); ++d0) {
        if (face_set.dart_face[d0] >= 0) continue;
        Face f;
        f.id = int(face_set.faces.size());
        int d = d0;
        do {
            face_set.dart_face[d] = f.id;
            f.walk.push_back(d);
            d = face_next(d);
        } while (d != d0);
        std::set<int> verts;
        f.is_true = true;
        for (int dd : f.walk) {
            if (segs[dd >> 1].half >= 0) f.is_true = false;
            int t = tail(dd);
            if (!is_crossing_node(t)) verts.insert(t);
        }
        f.vertex_list.assign(verts.begin(), verts.end());
        face_set.faces.push_back(std::move(f));
    }
    if (outer_dart >= 0) face_set.outer = face_set.dart_face[outer_dart];
}

inline void Drawing::validate() const {
    // unique, well-formed ids
    {
        std::set<std::string> node_ids;
        for (const auto& nm : vnames)
            if (!node_ids.insert(nm).second) throw InvariantError("duplicate vertex id '" + nm + "'");
        for (const auto& c : crossings)
            if (!node_ids.insert(c.id).second)
                throw InvariantError("crossing id '" + c.id + "' collides with another node id");
        std::set<std::string> eids;
        for (const auto& e : edges)
            if (!eids.insert(e.id).second) throw InvariantError("duplicate edge id '" + e.id + "'");
    }
    // simple graph
    std::set<std::pair<int, int>> pairs;
    for (const auto& e : edges) {
        if (e.u == e.v) throw InvariantError("self-loop on edge '" + e.id + "'");
        auto p = e.u < e.v ? std::make_pair(e.u, e.v) : std::make_pair(e.v, e.u);
        if (!pairs.insert(p).second)
            throw InvariantError("duplicate edge between '" + vnames[e.u] + "' and '" + vnames[e.v] + "'");
    }
    // crossings: each edge crossed at most once, no shared endpoint
    {
        std::vector<int> cnt(m(), 0);
        for (const auto& c : crossings) {
            if (c.ea == c.eb) throw InvariantError("crossing '" + c.id + "' repeats an edge");
            ++cnt[c.ea];
            ++cnt[c.eb];
            const EdgeRec& a = edges[c.ea];
            const EdgeRec& b = edges[c.eb];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
                throw InvariantError("crossing '" + c.id + "': edges share an endpoint");
        }
        for (int e = 0; e < m(); ++e)
            if (cnt[e] > 1) throw InvariantError("edge '" + edges[e].id + "' crossed more than once");
    }
    // rotations: each dart exactly once, at its tail
    {
        std::vector<int> seen(num_darts(), 0);
        for (int node = 0; node < num_nodes(); ++node) {
            for (int d : rot[node]) {
                if (d < 0 || d >= num_darts()) throw InvariantError("rotation references unknown segment end");
                if (tail(d) != node)
                    throw InvariantError("rotation inconsistent with incidence at node index " + std::to_string(node));
                if (seen[d]++)
                    throw InvariantError("segment end listed twice in rotations");
            }
        }
        for (int d = 0; d < num_darts(); ++d)
            if (!seen[d]) throw InvariantError("segment end missing from rotations");
    }
    // vertex degrees; crossing alternation
    for (int v = 0; v < n(); ++v)
        if (int(rot[v].size()) != int(adj_[v].size()))
            throw InvariantError("rotation size mismatch at vertex '" + vnames[v] + "'");
    for (int c = 0; c < num_crossings(); ++c) {
        const std::vector<int>& r = rot[cross_node(c)];
        if (r.size() != 4) throw InvariantError("crossing '" + crossings[c].id + "' does not have 4 segment ends");
        int e0 = dart_edge(r[0]);
        if (dart_edge(r[2]) != e0 || dart_edge(r[1]) == e0 || dart_edge(r[3]) != dart_edge(r[1]))
            throw InvariantError("crossing alternation violated at '" + crossings[c].id + "'");
    }
    // spherical embedding, per component of the planarization
    {
        int nn = num_nodes();
        std::vector<int> comp(nn, -1);
        int ncomp = 0;
        for (int s0 = 0; s0 < nn; ++s0) {
            if (comp[s0] >= 0) continue;
            comp[s0] = ncomp;
            std::vector<int> stack{s0};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int d : rot[x]) {
                    int y = head(d);
                    if (comp[y] < 0) { comp[y] = ncomp; stack.push_back(y); }
                }
            }
            ++ncomp;
        }
        std::vector<int> vcnt(ncomp, 0), ecnt(ncomp, 0), fcnt(ncomp, 0);
        for (int x = 0; x < nn; ++x) ++vcnt[comp[x]];
        for (int s = 0; s < num_segs(); ++s) ++ecnt[comp[segs[s].n0]];
        for (const Face& f : face_set.faces) ++fcnt[comp[tail(f.walk[0])]];
        for (int k = 0; k < ncomp; ++k) {
            int euler = vcnt[k] - ecnt[k] + (ecnt[k] == 0 ? 1 : fcnt[k]);
            if (euler != 2)
                throw InvariantError("non-spherical rotation system (Euler check fails: V-E+F = " +
                                     std::to_string(euler) + ")");
        }
    }
}

inline Drawing Drawing::make(std::vector<std::string> vnames,
                             std::vector<EdgeRec> edges,
                             std::vector<CrossRec> crossings,
                             std::vector<std::vector<std::pair<int, int>>> rot_segends,
                             int outer_dart,
                             bool require_connected) {
    Drawing d;
    d.vnames = std::move(vnames);
    d.edges = std::move(edges);
    d.crossings = std::move(crossings);
    d.outer_dart = outer_dart;
    // temporarily empty rotations so build_derived can size things
    d.rot.assign(d.vnames.size() + d.crossings.size(), {});
    d.build_derived();
    // translate (edge, half) rotation entries into darts
    if (int(rot_segends.size()) != d.num_nodes())
        throw InvariantError("every node must have a rotation");
    std::vector<int> seg_of;
    seg_of.assign(2 * d.m(), -1); // (edge, half+1) -> seg
    for (int s = 0; s < d.num_segs(); ++s) {
        const Segment& sg = d.segs[s];
        seg_of[2 * sg.edge + (sg.half == 1 ? 1 : 0)] = s;
    }
    for (int node = 0; node < d.num_nodes(); ++node) {
        for (auto [e, half] : rot_segends[node]) {
            int c = d.edge_cross[e];
            int s;
            if (c < 0) {
                if (half >= 0) throw InvariantError("half token used for clean edge '" + d.edges[e].id + "'");
                s = seg_of[2 * e];
            } else {
                if (half < 0)
                    throw InvariantError("edge '" + d.edges[e].id + "' is crossed; rotation must name a half");
                s = seg_of[2 * e + half];
            }
            int dart;
            const Segment& sg = d.segs[s];
            if (sg.n0 == node) dart = 2 * s;
            else if (sg.n1 == node) dart = 2 * s + 1;
            else
                throw InvariantError("rotation inconsistent with incidence: segment '" + d.seg_token(s) +
                                     "' has no end at this node");
            d.rot[node].push_back(dart);
        }
    }
    d.dart_pos.assign(d.num_darts(), -1);
    for (int node = 0; node < d.num_nodes(); ++node)
        for (int p = 0; p < int(d.rot[node].size()); ++p)
            d.dart_pos[d.rot[node][p]] = p;
    d.compute_face_set();
    d.validate();
    if (require_connected && d.n() > 0 && !d.connected())
        throw InvariantError("underlying graph is disconnected");
    return d;
}

// Rebuild a drawing that shares `base`'s vertices/edges/crossings but has new
// rotations (given as darts in base's numbering, which is unchanged).
inline Drawing rebuild_drawing(const Drawing& base, std::vector<std::vector<int>> new_rot,
                               int outer_dart_hint) {
    Drawing d;
    d.vnames = base.vnames;
    d.edges = base.edges;
    d.crossings = base.crossings;
    d.rot = std::move(new_rot);
    d.outer_dart = outer_dart_hint;
    d.build_derived();
    d.compute_face_set();
    d.validate();
    return d;
}

// ---------------------------------------------------------------------------
// Operations of the drawing-core module.

inline FaceSet compute_faces(const Drawing& d) { return d.face_set; }

struct EdgePartition {
    std::vector<int> clean;
    std::vector<int> crossing;
};

inline EdgePartition classify_edges(const Drawing& d) {
    EdgePartition p;
    for (int e = 0; e < d.m(); ++e)
        (d.edge_is_clean(e) ? p.clean : p.crossing).push_back(e);
    return p;
}

namespace detail {

// Remove a set of edges (and any vertices in `drop_verts`) from a drawing.
// Crossings on removed edges dissolve; the surviving partner's halves fuse.
inline Drawing subdrawing(const Drawing& d, const std::vector<char>& keep_vertex,
                          const std::vector<char>& keep_edge, bool require_connected) {
    std::vector<std::string> vnames;
    std::vector<int> vmap(d.n(), -1);
    for (int v = 0; v < d.n(); ++v)
        if (keep_vertex[v]) {
            vmap[v] = int(vnames.size());
            vnames.push_back(d.vnames[v]);
        }
    std::vector<Drawing::EdgeRec> edges;
    std::vector<int> emap(d.m(), -1);
    for (int e = 0; e < d.m(); ++e) {
        if (!keep_edge[e]) continue;
        if (!keep_vertex[d.edges[e].u] || !keep_vertex[d.edges[e].v]) continue;
        emap[e] = int(edges.size());
        edges.push_back({d.edges[e].id, vmap[d.edges[e].u], vmap[d.edges[e].v]});
    }
    std::vector<Drawing::CrossRec> crossings;
    std::vector<int> cmap(d.num_crossings(), -1);
    for (int c = 0; c < d.num_crossings(); ++c) {
        if (emap[d.crossings[c].ea] >= 0 && emap[d.crossings[c].eb] >= 0) {
            cmap[c] = int(crossings.size());
            crossings.push_back({d.crossings[c].id, emap[d.crossings[c].ea], emap[d.crossings[c].eb]});
        }
    }
    // rotations: walk old rotations, keep surviving segment ends
    std::vector<std::vector<std::pair<int, int>>> rots(vnames.size() + crossings.size());
    for (int v = 0; v < d.n(); ++v) {
        if (vmap[v] < 0) continue;
        auto& out = rots[vmap[v]];
        for (int dart : d.rot[v]) {
            int e = d.dart_edge(dart);
            if (emap[e] < 0) continue;
            int ne = emap[e];
            bool still_crossed = d.edge_cross[e] >= 0 && cmap[d.edge_cross[e]] >= 0;
            if (!still_crossed) out.push_back({ne, -1});
            else out.push_back({ne, d.segs[d.dart_seg(dart)].half});
        }
    }
    for (int c = 0; c < d.num_crossings(); ++c) {
        if (cmap[c] < 0) continue;
        auto& out = rots[int(vnames.size()) + cmap[c]];
        for (int dart : d.rot[d.cross_node(c)])
            out.push_back({emap[d.dart_edge(dart)], d.segs[d.dart_seg(dart)].half});
    }
    // outer-face tracking: keep the outer dart if its segment survives intact
    int outer = -1;
    if (d.outer_dart >= 0) {
        // re-anchor: walk the outer face, take the first boundary dart whose
        // edge and crossed-status survive unchanged
        int f = d.face_of_dart(d.outer_dart);
        for (int dart : d.face_set.faces[f].walk) {
            int e = d.dart_edge(dart);
            if (emap[e] < 0) continue;
            bool was_crossed = d.edge_cross[e] >= 0;
            bool still_crossed = was_crossed && cmap[d.edge_cross[e]] >= 0;
            if (was_crossed != still_crossed) continue;
            // compute the dart index in the new drawing after construction:
            // identified by (new edge, half, direction); find it below.
            int half = d.segs[d.dart_seg(dart)].half;
            int dir = dart & 1;
            outer = (emap[e] << 3) | ((half + 1) << 1) | dir; // packed; resolved after make
            break;
        }
    }
    Drawing nd = Drawing::make(std::move(vnames), std::move(edges), std::move(crossings),
                               std::move(rots), -1, require_connected);
    if (outer >= 0) {
        int ne = outer >> 3, half = ((outer >> 1) & 3) - 1, dir = outer & 1;
        for (int s = 0; s < nd.num_segs(); ++s)
            if (nd.segs[s].edge == ne && nd.segs[s].half == half)
                return rebuild_drawing(nd, nd.rot, 2 * s + dir);
    }
    return nd;
}

} // namespace detail

inline Drawing delete_edge(const Drawing& d, const std::string& edge_id) {
    int e = d.edge_index(edge_id);
    if (e < 0) throw InvariantError("edge id '" + edge_id + "' not present");
    std::vector<char> kv(d.n(), 1), ke(d.m(), 1);
    ke[e] = 0;
    return detail::subdrawing(d, kv, ke, false);
}

inline Drawing delete_vertex(const Drawing& d, const std::string& vertex_id) {
    int v = d.vertex_index(vertex_id);
    if (v < 0) throw InvariantError("vertex id '" + vertex_id + "' not present");
    std::vector<char> kv(d.n(), 1), ke(d.m(), 1);
    kv[v] = 0;
    return detail::subdrawing(d, kv, ke, false);
}

inline Drawing induced_subdrawing(const Drawing& d, const std::vector<std::string>& vertex_ids) {
    if (vertex_ids.empty()) throw InvariantError("induced_subdrawing: empty vertex set");
    std::vector<char> kv(d.n(), 0), ke(d.m(), 1);
    for (const auto& id : vertex_ids) {
        int v = d.vertex_index(id);
        if (v < 0) throw InvariantError("vertex id '" + id + "' not present");
        kv[v] = 1;
    }
    return detail::subdrawing(d, kv, ke, false);
}

inline Drawing induced_subdrawing_idx(const Drawing& d, const std::vector<int>& verts) {
    if (verts.empty()) throw InvariantError("induced_subdrawing: empty vertex set");
    std::vector<char> kv(d.n(), 0), ke(d.m(), 1);
    for (int v : verts) kv[v] = 1;
    return detail::subdrawing(d, kv, ke, false);
}

} // namespace oneplane

// Drawing-level maximality: a 1-plane drawing is maximal when no edge can be
// added keeping the drawing simple and 1-plane. A new edge either lies inside
// one face (clean kind) or crosses exactly one currently clean edge whose
// endpoints are disjoint from the new pair (crossing kind); these are the only
// two route shapes, so a witness is a constructive refutation of maximality.

#pragma once

#include "io.hpp"

namespace oneplane {

struct InsertionWitness {
    enum Kind { kClean = 0, kCrossing = 1 };
    Kind kind = kClean;
    int u = -1, v = -1;      // vertex indices, vnames[u] < vnames[v]
    int corner_u = -1;       // dart with head u; the new edge leaves u inside this corner
    int corner_v = -1;       // dart with head v
    int crossed_edge = -1;   // crossing kind: the clean edge that will be crossed
    int cross_dart = -1;     // crossing kind: side of the crossed edge facing corner_u
};

namespace detail {

inline void witness_key(const Drawing& d, const InsertionWitness& w,
                        std::vector<std::string>& key) {
    key.clear();
    key.push_back(d.vnames[w.u]);
    key.push_back(d.vnames[w.v]);
    key.push_back(w.kind == InsertionWitness::kClean ? "0" : "1");
    key.push_back(w.crossed_edge < 0 ? "" : d.edges[w.crossed_edge].id);
    key.push_back(std::to_string(w.corner_u));
    key.push_back(std::to_string(w.corner_v));
}

} // namespace detail

inline std::vector<InsertionWitness> insertable_pairs(const Drawing& d) {
    // vertex corners per face, in walk order
    const FaceSet& fs = d.face_set;
    std::vector<std::vector<int>> corners(fs.faces.size()); // darts with vertex head
    for (const Face& f : fs.faces)
        for (int dart : f.walk)
            if (!d.is_crossing_node(d.head(dart))) corners[f.id].push_back(dart);

    std::map<std::pair<int, int>, InsertionWitness> best;
    std::vector<std::string> key, cand_key;
    auto offer = [&](InsertionWitness w) {
        if (d.vnames[w.u] > d.vnames[w.v]) {
            std::swap(w.u, w.v);
            std::swap(w.corner_u, w.corner_v);
            if (w.cross_dart >= 0) w.cross_dart = Drawing::opp(w.cross_dart);
        }
        auto p = std::make_pair(w.u, w.v);
        auto it = best.find(p);
        if (it == best.end()) {
            best.emplace(p, w);
            return;
        }
        detail::witness_key(d, it->second, key);
        detail::witness_key(d, w, cand_key);
        if (cand_key < key) it->second = w;
    };

    // clean kind: two vertex corners of one face
    for (const Face& f : fs.faces) {
        const auto& cs = corners[f.id];
        for (size_t i = 0; i < cs.size(); ++i)
            for (size_t j = 0; j < cs.size(); ++j) {
                if (i == j) continue;
                int u = d.head(cs[i]), v = d.head(cs[j]);
                if (u == v || d.adjacent(u, v)) continue;
                InsertionWitness w;
                w.kind = InsertionWitness::kClean;
                w.u = u;
                w.v = v;
                w.corner_u = cs[i];
                w.corner_v = cs[j];
                offer(w);
            }
    }
    // crossing kind: through a clean edge, endpoints disjoint from the pair
    for (int e = 0; e < d.m(); ++e) {
        if (!d.edge_is_clean(e)) continue;
        int s = -1;
        for (int si = 0; si < d.num_segs(); ++si)
            if (d.segs[si].edge == e) { s = si; break; }
        int a0 = d.edges[e].u, b0 = d.edges[e].v;
        for (int side = 0; side < 2; ++side) {
            int cd = 2 * s + side;
            int fu = d.face_of_dart(cd);
            int fv = d.face_of_dart(Drawing::opp(cd));
            for (int cu : corners[fu]) {
                int u = d.head(cu);
                if (u == a0 || u == b0) continue;
                for (int cv : corners[fv]) {
                    int v = d.head(cv);
                    if (v == a0 || v == b0 || v == u || d.adjacent(u, v)) continue;
                    InsertionWitness w;
                    w.kind = InsertionWitness::kCrossing;
                    w.u = u;
                    w.v = v;
                    w.corner_u = cu;
                    w.corner_v = cv;
                    w.crossed_edge = e;
                    w.cross_dart = cd;
                    offer(w);
                }
            }
        }
    }
    std::vector<InsertionWitness> out;
    out.reserve(best.size());
    std::vector<std::pair<std::vector<std::string>, InsertionWitness>> sorted;
    for (auto& [p, w] : best) {
        detail::witness_key(d, w, key);
        sorted.push_back({key, w});
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [k, w] : sorted) out.push_back(w);
    return out;
}

inline bool is_maximal(const Drawing& d) { return insertable_pairs(d).empty(); }

namespace detail {

inline std::string fresh_edge_id(const Drawing& d, const std::string& base) {
    if (d.edge_index(base) < 0) return base;
    for (int k = 2;; ++k) {
        std::string id = base + "_" + std::to_string(k);
        if (d.edge_index(id) < 0) return id;
    }
}

inline std::string fresh_node_id(const Drawing& d, const std::string& base) {
    if (d.vertex_index(base) < 0 && d.crossing_index(base) < 0) return base;
    for (int k = 2;; ++k) {
        std::string id = base + "_" + std::to_string(k);
        if (d.vertex_index(id) < 0 && d.crossing_index(id) < 0) return id;
    }
}

// Current rotations as (edge, half) lists, the format Drawing::make consumes.
inline std::vector<std::vector<std::pair<int, int>>> rot_segends(const Drawing& d) {
    std::vector<std::vector<std::pair<int, int>>> rots(d.num_nodes());
    for (int node = 0; node < d.num_nodes(); ++node)
        for (int dart : d.rot[node])
            rots[node].push_back({d.dart_edge(dart), d.segs[d.dart_seg(dart)].half});
    return rots;
}

inline int pack_outer(const Drawing& d, int avoid_edge) {
    if (d.outer_dart < 0) return -1;
    int f = d.face_of_dart(d.outer_dart);
    for (int dart : d.face_set.faces[f].walk) {
        if (d.dart_edge(dart) == avoid_edge) continue;
        return (d.dart_edge(dart) << 3) | ((d.segs[d.dart_seg(dart)].half + 1) << 1) | (dart & 1);
    }
    return -1;
}

inline Drawing apply_outer(Drawing nd, int packed) {
    if (packed < 0) return nd;
    int e = packed >> 3, half = ((packed >> 1) & 3) - 1, dir = packed & 1;
    for (int s = 0; s < nd.num_segs(); ++s)
        if (nd.segs[s].edge == e && nd.segs[s].half == half)
            return rebuild_drawing(nd, nd.rot, 2 * s + dir);
    return nd;
}

} // namespace detail

inline Drawing insert_edge(const Drawing& d, const InsertionWitness& w) {
    if (w.u < 0 || w.u >= d.n() || w.v < 0 || w.v >= d.n() || w.u == w.v || d.adjacent(w.u, w.v))
        throw InvariantError("stale witness: pair not insertable");
    if (w.corner_u >= d.num_darts() || w.corner_v >= d.num_darts() ||
        d.head(w.corner_u) != w.u || d.head(w.corner_v) != w.v)
        throw InvariantError("stale witness: corner darts do not match");

    auto rots = detail::rot_segends(d);
    std::vector<Drawing::EdgeRec> edges = d.edges;
    std::vector<Drawing::CrossRec> crossings = d.crossings;
    int ne = int(edges.size());
    std::string eid = detail::fresh_edge_id(d, d.vnames[w.u] + "-" + d.vnames[w.v]);
    edges.push_back({eid, w.u, w.v});

    auto insert_after = [&](int node, int after_dart, std::pair<int, int> entry) {
        auto& r = rots[node];
        int pos = d.dart_pos[after_dart];
        r.insert(r.begin() + pos + 1, entry);
    };

    int packed_outer;
    if (w.kind == InsertionWitness::kClean) {
        if (w.cross_dart >= 0 || w.crossed_edge >= 0) throw InvariantError("stale witness: kind mismatch");
        if (d.face_of_dart(w.corner_u) != d.face_of_dart(w.corner_v))
            throw InvariantError("stale witness: corners not on one face");
        packed_outer = detail::pack_outer(d, -1);
        insert_after(w.u, Drawing::opp(w.corner_u), {ne, -1});
        insert_after(w.v, Drawing::opp(w.corner_v), {ne, -1});
    } else {
        int e0 = w.crossed_edge;
        if (e0 < 0 || e0 >= d.m() || !d.edge_is_clean(e0))
            throw InvariantError("stale witness: crossed edge not clean");
        if (d.dart_edge(w.cross_dart) != e0)
            throw InvariantError("stale witness: cross dart mismatch");
        int a0 = d.edges[e0].u, b0 = d.edges[e0].v;
        if (a0 == w.u || a0 == w.v || b0 == w.u || b0 == w.v)
            throw InvariantError("stale witness: crossed edge shares an endpoint");
        if (d.face_of_dart(w.cross_dart) != d.face_of_dart(w.corner_u) ||
            d.face_of_dart(Drawing::opp(w.cross_dart)) != d.face_of_dart(w.corner_v))
            throw InvariantError("stale witness: faces do not line up");
        packed_outer = detail::pack_outer(d, e0);
        std::string cid = detail::fresh_node_id(d, "x-" + eid);
        int nc = int(crossings.size());
        crossings.push_back({cid, e0, ne});
        // e0 is crossed from now on: its endpoint rotation entries become halves
        for (auto& se : rots[a0])
            if (se.first == e0) se.second = 0;
        for (auto& se : rots[b0])
            if (se.first == e0) se.second = 1;
        // rotation at the new crossing: (toward tail(cross_dart), toward u,
        // toward head(cross_dart), toward v); the opposite parity is a torus.
        int t0 = d.tail(w.cross_dart), h0 = d.head(w.cross_dart);
        std::vector<std::pair<int, int>> cr;
        cr.push_back({e0, t0 == a0 ? 0 : 1});
        cr.push_back({ne, 0});
        cr.push_back({e0, h0 == a0 ? 0 : 1});
        cr.push_back({ne, 1});
        rots.push_back(cr);
        insert_after(w.u, Drawing::opp(w.corner_u), {ne, 0});
        insert_after(w.v, Drawing::opp(w.corner_v), {ne, 1});
    }
    Drawing nd = Drawing::make(d.vnames, std::move(edges), std::move(crossings), std::move(rots),
                               -1, false);
    return detail::apply_outer(std::move(nd), packed_outer);
}

// Repeatedly applies the lexicographically least witness until maximal.
inline Drawing saturate(const Drawing& d0) {
    Drawing d = d0;
    long guard = long(d.n()) * d.n();
    while (true) {
        auto ws = insertable_pairs(d);
        if (ws.empty()) return d;
        d = insert_edge(d, ws.front());
        if (--guard < 0) throw InvariantError("saturate failed to terminate");
    }
}

// Insert a new vertex inside a face, joined to the given boundary corners.
// `corners` are darts of one face, listed in face-walk order; rotation at the
// new vertex follows the reversed walk order so the disk insertion is planar.
inline Drawing add_vertex_in_face(const Drawing& d, const std::string& vertex_id,
                                  const std::vector<int>& corner_darts) {
    if (corner_darts.empty()) throw InvariantError("add_vertex_in_face: no corners");
    int f = d.face_of_dart(corner_darts[0]);
    for (int c : corner_darts)
        if (d.face_of_dart(c) != f || d.is_crossing_node(d.head(c)))
            throw InvariantError("add_vertex_in_face: corners must be vertex corners of one face");
    if (d.vertex_index(vertex_id) >= 0 || d.crossing_index(vertex_id) >= 0)
        throw InvariantError("add_vertex_in_face: id in use");

    int packed_outer = detail::pack_outer(d, -1);
    auto rots = detail::rot_segends(d);
    std::vector<std::string> vnames = d.vnames;
    int nv = int(vnames.size());
    vnames.push_back(vertex_id);
    std::vector<Drawing::EdgeRec> edges = d.edges;
    std::vector<std::pair<int, int>> newrot;
    std::vector<std::tuple<int, int, int>> pending; // (node, pos, edge)
    for (int c : corner_darts) {
        int ne = int(edges.size());
        std::string eid = detail::fresh_edge_id(d, vertex_id + "-" + d.vnames[d.head(c)]);
        for (const auto& er : edges)
            if (er.id == eid) eid = eid + "_" + std::to_string(ne);
        edges.push_back({eid, nv, d.head(c)});
        pending.push_back({d.head(c), d.dart_pos[Drawing::opp(c)], ne});
        newrot.push_back({ne, -1});
    }
    // apply splices back-to-front per node so stored positions stay valid
    std::stable_sort(pending.begin(), pending.end(),
                     [](const auto& a, const auto& b) { return std::get<1>(a) > std::get<1>(b); });
    for (auto& [node, pos, ne] : pending)
        rots[node].insert(rots[node].begin() + pos + 1, {ne, -1});
    std::reverse(newrot.begin(), newrot.end());
    rots.insert(rots.begin() + nv, newrot); // vertex nodes come before crossing nodes
    Drawing nd = Drawing::make(std::move(vnames), std::move(edges), d.crossings, std::move(rots),
                               -1, false);
    return detail::apply_outer(std::move(nd), packed_outer);
}

} // namespace oneplane

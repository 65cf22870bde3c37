// The extremal family H_n: base drawings for n = 5, 6, 7, the local
// structure <(u,w0,w1),(c0,c1)> that the growth operation needs, and the
// insertion phi that adds three vertices and seven edges (one crossing).

#pragma once

#include "structure.hpp"

namespace oneplane {

struct OmegaStructure {
    int u = -1, w0 = -1, w1 = -1; // ordered: u follows w1 on the quad face walk
    int c0 = -1, c1 = -1;         // crossings: c0 on the quad, c1 on edge u-w0
    int quad_face = -1;           // face (w1, u, c0, w0)
    int tri_u_face = -1;          // face (u, w1, c1)
    int tri_w0_face = -1;         // face (w0, w1, c1)
};

// All occurrences of the local structure: w1 of degree 3 adjacent to u, w0
// and one outside vertex; the third edge crosses u-w0 at c1; around w1 the
// faces are the two triangles through c1 and a quadrilateral through a
// second crossing c0.
inline std::vector<OmegaStructure> find_omega(const Drawing& d) {
    std::vector<OmegaStructure> out;
    for (int w1 = 0; w1 < d.n(); ++w1) {
        if (d.degree(w1) != 3) continue;
        const auto& nb = d.neighbors(w1);
        for (int ti = 0; ti < 3; ++ti) {
            int t = nb[ti];
            int p = nb[(ti + 1) % 3], q = nb[(ti + 2) % 3];
            int e_uw0 = d.edge_between(p, q);
            if (e_uw0 < 0) continue;
            int e_third = d.edge_between(w1, t);
            int c1 = d.edge_cross[e_third];
            if (c1 < 0) continue;
            const auto& cr = d.crossings[c1];
            if ((cr.ea == e_third ? cr.eb : cr.ea) != e_uw0) continue;
            if (d.edge_cross[d.edge_between(w1, p)] >= 0 || d.edge_cross[d.edge_between(w1, q)] >= 0)
                continue;
            // classify the three faces at w1
            int quad = -1, tri_p = -1, tri_q = -1, c0 = -1;
            bool ok = true;
            for (int dart : d.rot[w1]) {
                int fid = d.face_of_dart(Drawing::opp(dart));
                const Face& f = d.face_set.faces[fid];
                std::set<int> corner_nodes;
                for (int dd : f.walk) corner_nodes.insert(d.tail(dd));
                int c1node = d.cross_node(c1);
                if (f.walk.size() == 3 && corner_nodes.count(c1node)) {
                    if (corner_nodes.count(p) && corner_nodes.count(w1)) tri_p = fid;
                    else if (corner_nodes.count(q) && corner_nodes.count(w1)) tri_q = fid;
                    else ok = false;
                } else if (f.walk.size() == 4 && corner_nodes.count(p) && corner_nodes.count(q) &&
                           corner_nodes.count(w1)) {
                    for (int nodex : corner_nodes)
                        if (d.is_crossing_node(nodex)) c0 = nodex - d.n();
                    quad = fid;
                } else {
                    ok = false;
                }
            }
            if (!ok || quad < 0 || tri_p < 0 || tri_q < 0 || c0 < 0 || c0 == c1) continue;
            // orient: u is the vertex corner right after w1 on the quad walk
            const Face& qf = d.face_set.faces[quad];
            int u = -1;
            for (int i = 0; i < 4; ++i)
                if (d.tail(qf.walk[i]) == w1) u = d.tail(qf.walk[(i + 1) % 4]);
            if (u != p && u != q) continue; // the successor corner must be u or w0
            int w0 = (u == p) ? q : p;
            OmegaStructure om;
            om.u = u;
            om.w0 = w0;
            om.w1 = w1;
            om.c0 = c0;
            om.c1 = c1;
            om.quad_face = quad;
            om.tri_u_face = (u == p) ? tri_p : tri_q;
            om.tri_w0_face = (u == p) ? tri_q : tri_p;
            out.push_back(om);
        }
    }
    std::sort(out.begin(), out.end(), [&](const OmegaStructure& a, const OmegaStructure& b) {
        return std::make_tuple(d.vnames[a.w1], d.vnames[a.u]) <
               std::make_tuple(d.vnames[b.w1], d.vnames[b.u]);
    });
    return out;
}

struct PhiResult {
    Drawing drawing;
    std::array<std::string, 3> new_vertices; // w2, a, b
    // the structure the insertion creates: <(u, w1, w2), (c1, c2)>
    std::array<std::string, 3> next_omega;   // (u, w0, w1) of the new structure
};

// Insert three vertices and seven edges into the structure D:
//   a  -> the quadrilateral face, joined to u and w0;
//   b  -> the triangle (w0, w1, c1), joined to w0 and w1;
//   w2 -> the triangle (u, w1, c1), joined to u, w1, and to w0 by the one
//         new crossing edge, which crosses u-w1.
inline PhiResult phi(const Drawing& d, const OmegaStructure& om) {
    // staleness check: the structure must be one of find_omega(d)
    {
        bool found = false;
        for (const auto& o : find_omega(d))
            found = found || (o.u == om.u && o.w0 == om.w0 && o.w1 == om.w1 && o.c0 == om.c0 &&
                              o.c1 == om.c1 && o.quad_face == om.quad_face);
        if (!found) throw InvariantError("phi: not a current Omega-structure of the drawing");
    }
    auto corner_in = [](const Drawing& dr, int fid, int vertex) {
        for (int dart : dr.face_set.faces[fid].walk)
            if (dr.head(dart) == vertex) return dart;
        throw InvariantError("phi: expected corner missing");
    };
    std::string id_a = detail::fresh_node_id(d, "a");
    std::string id_b = detail::fresh_node_id(d, "b");
    std::string id_w2 = detail::fresh_node_id(d, "w2");
    std::string nm_u = d.vnames[om.u], nm_w0 = d.vnames[om.w0], nm_w1 = d.vnames[om.w1];

    // a into the quad face
    Drawing d1 = add_vertex_in_face(d, id_a,
                                    {corner_in(d, om.quad_face, om.u), corner_in(d, om.quad_face, om.w0)});
    auto vi = [&](const Drawing& dr, const std::string& nm) { return dr.vertex_index(nm); };
    // b into the triangle (w0, w1, c1): identify it again by its corners.
    // Crossing indices are stable across add_vertex_in_face, so c1 pins the
    // face even when other {w0,w1}-triangles exist elsewhere.
    auto find_face = [&](const Drawing& dr, std::vector<std::string> vs, int need_cross,
                         size_t walk_len) {
        for (const Face& f : dr.face_set.faces) {
            if (f.walk.size() != walk_len) continue;
            std::set<int> verts, crs;
            for (int dart : f.walk) {
                int t2 = dr.tail(dart);
                if (dr.is_crossing_node(t2)) crs.insert(t2 - dr.n());
                else verts.insert(t2);
            }
            if (need_cross >= 0 && (crs.size() != 1 || !crs.count(need_cross))) continue;
            if (need_cross < 0 && !crs.empty()) continue;
            bool all = verts.size() == vs.size();
            for (auto& nm : vs) all = all && verts.count(vi(dr, nm));
            if (all) return f.id;
        }
        throw InvariantError("phi: host face not found");
    };
    int fb = find_face(d1, {nm_w0, nm_w1}, om.c1, 3);
    Drawing d2 = add_vertex_in_face(d1, id_b, {corner_in(d1, fb, vi(d1, nm_w0)), corner_in(d1, fb, vi(d1, nm_w1))});
    int fa = find_face(d2, {nm_u, nm_w1}, om.c1, 3);
    Drawing d3 = add_vertex_in_face(d2, id_w2, {corner_in(d2, fa, vi(d2, nm_u)), corner_in(d2, fa, vi(d2, nm_w1))});
    // the crossing edge w2-w0 through u-w1
    int e_uw1 = d3.edge_between(vi(d3, nm_u), vi(d3, nm_w1));
    int seg = -1;
    for (int si = 0; si < d3.num_segs(); ++si)
        if (d3.segs[si].edge == e_uw1) seg = si;
    InsertionWitness w;
    w.kind = InsertionWitness::kCrossing;
    w.crossed_edge = e_uw1;
    int w2i = vi(d3, id_w2), w0i = vi(d3, nm_w0);
    // side of u-w1 facing the new triangle (u, w1, w2)
    int ftri = find_face(d3, {nm_u, nm_w1, id_w2}, -1, 3);
    w.cross_dart = d3.face_of_dart(2 * seg) == ftri ? 2 * seg : 2 * seg + 1;
    if (d3.face_of_dart(w.cross_dart) != ftri) throw InvariantError("phi: crossing side not found");
    w.corner_u = corner_in(d3, ftri, w2i);
    w.corner_v = corner_in(d3, d3.face_of_dart(Drawing::opp(w.cross_dart)), w0i);
    w.u = w2i;
    w.v = w0i;
    if (d3.vnames[w.u] > d3.vnames[w.v]) {
        std::swap(w.u, w.v);
        std::swap(w.corner_u, w.corner_v);
        w.cross_dart = Drawing::opp(w.cross_dart);
    }
    PhiResult res{insert_edge(d3, w), {id_w2, id_a, id_b}, {nm_u, nm_w1, id_w2}};
    if (res.drawing.n() != d.n() + 3 || res.drawing.m() != d.m() + 7 ||
        res.drawing.num_crossings() != d.num_crossings() + 1)
        throw InvariantError("phi: size bookkeeping failed");
    if (is_maximal(d) && !is_maximal(res.drawing))
        throw InvariantError("phi did not preserve maximality");
    return res;
}

// Canonical 1PL encodings of the drawings of order 5, 6, 7 that seed the
// family; committed verbatim as golden fixture files as well.
inline const char* base_fixture_text(int n) {
    static const char* h5 =
        "v p\nv q\nv u\nv w0\nv w1\n"
        "e e1 u w0\ne e2 u w1\ne e3 u p\ne e4 u q\ne e5 w0 w1\ne e6 w0 p\ne e7 w0 q\ne e8 p q\ne e9 w1 p\n"
        "x x0 e4 e6\nx x1 e9 e1\n"
        "rot u e1.0 e3 e4.0 e2\nrot w0 e1.1 e5 e6.0 e7\nrot p e8 e6.1 e3 e9.1\nrot q e7 e4.1 e8\n"
        "rot w1 e5 e9.0 e2\nrot x0 e6.0 e4.0 e6.1 e4.1\nrot x1 e1.1 e9.1 e1.0 e9.0\nouter 3\n";
    static const char* h6 =
        "v h\nv p\nv q\nv u\nv w0\nv w1\n"
        "e e1 u w0\ne e2 u w1\ne e3 u p\ne e4 u q\ne e5 w0 w1\ne e6 w0 p\ne e7 w0 q\ne e8 p q\ne e9 w1 p\n"
        "e e10 h u\ne e11 h p\n"
        "x x0 e4 e6\nx x1 e9 e1\n"
        "rot u e1.0 e3 e10 e4.0 e2\nrot w0 e1.1 e5 e6.0 e7\nrot p e8 e6.1 e11 e3 e9.1\nrot q e7 e4.1 e8\n"
        "rot w1 e5 e9.0 e2\nrot h e10 e11\nrot x0 e6.0 e4.0 e6.1 e4.1\nrot x1 e1.1 e9.1 e1.0 e9.0\nouter 3\n";
    static const char* h7 =
        "v h\nv p\nv q\nv u\nv w0\nv w1\nv y\n"
        "e e1 u w0\ne e2 u w1\ne e3 u p\ne e4 u q\ne e5 w0 w1\ne e6 w0 p\ne e7 w0 q\ne e8 p q\ne e9 w1 p\n"
        "e e10 h u\ne e11 h p\ne e12 p y\ne e13 q y\ne e14 w0 y\n"
        "x x0 e4 e6\nx x1 e9 e1\n"
        "rot u e1.0 e3 e10 e4.0 e2\nrot w0 e1.1 e5 e6.0 e7 e14\nrot p e8 e6.1 e11 e3 e9.1 e12\n"
        "rot q e7 e4.1 e8 e13\nrot w1 e5 e9.0 e2\nrot h e10 e11\nrot y e14 e13 e12\n"
        "rot x0 e6.0 e4.0 e6.1 e4.1\nrot x1 e1.1 e9.1 e1.0 e9.0\nouter 3\n";
    switch (n) {
        case 5: return h5;
        case 6: return h6;
        case 7: return h7;
        default: throw InvariantError("base_fixture: n must be 5, 6 or 7");
    }
}

inline Drawing base_fixture(int n) { return parse_drawing(base_fixture_text(n)); }

inline int hn_size_formula(int n) { return (7 * n + 2) / 3 - 3; } // ceil(7n/3) - 3

// H_n: start from the base of the same residue class and apply phi; each
// application uses the structure created by the previous one.
inline Drawing build_Hn(int n) {
    if (n < 5) throw InvariantError("build_Hn: n must be at least 5");
    int base = 5 + (n - 5) % 3;
    Drawing d = base_fixture(base);
    std::optional<std::array<std::string, 3>> chain;
    while (d.n() < n) {
        auto oms = find_omega(d);
        if (oms.empty()) throw InvariantError("build_Hn: no Omega-structure available");
        const OmegaStructure* pick = &oms.front();
        if (chain) {
            for (const auto& o : oms)
                if (d.vnames[o.u] == (*chain)[0] && d.vnames[o.w0] == (*chain)[1] &&
                    d.vnames[o.w1] == (*chain)[2])
                    pick = &o;
        }
        PhiResult r = phi(d, *pick);
        chain = r.next_omega;
        d = std::move(r.drawing);
    }
    if (d.m() != hn_size_formula(n)) throw InvariantError("build_Hn: size formula violated");
    return d;
}

} // namespace oneplane

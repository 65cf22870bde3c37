// 1PL drawing file format.
//
//   v <id>                    vertex
//   e <eid> <u> <v>           edge (unordered pair; the first endpoint names half-0)
//   x <cid> <eid1> <eid2>     crossing between two edges
//   rot <node-id> <tok> ...   cyclic rotation; tok = <eid> or <eid>.0 / <eid>.1
//   outer <face-index>        optional; face indices follow the documented
//                             traversal order (darts scanned by edge order)
//
// '#' starts a comment. Canonical output: ids sorted lexicographically,
// each rotation rotated to start at its smallest token, LF line endings,
// single spaces, no trailing whitespace.

#pragma once

#include <cctype>
#include <tuple>

#include "drawing.hpp"

namespace oneplane {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline bool valid_id(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c == '.' || c == '#' || std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace detail

inline Drawing parse_drawing(const std::string& text) {
    struct RawRot {
        std::string node;
        std::vector<std::string> toks;
        int line;
    };
    std::vector<std::pair<std::string, int>> vlines;
    std::vector<std::tuple<std::string, std::string, std::string, int>> elines;
    std::vector<std::tuple<std::string, std::string, std::string, int>> xlines;
    std::vector<RawRot> rlines;
    int outer_index = -1, outer_line = -1;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        auto need = [&](size_t k) {
            if (toks.size() != k)
                throw ParseError("'" + kw + "' expects " + std::to_string(k - 1) + " fields", lineno, 1);
        };
        if (kw == "v") {
            need(2);
            if (!detail::valid_id(toks[1])) throw ParseError("bad vertex id '" + toks[1] + "'", lineno, 3);
            vlines.push_back({toks[1], lineno});
        } else if (kw == "e") {
            need(4);
            for (int i = 1; i <= 3; ++i)
                if (!detail::valid_id(toks[i])) throw ParseError("bad id '" + toks[i] + "'", lineno, 3);
            elines.push_back({toks[1], toks[2], toks[3], lineno});
        } else if (kw == "x") {
            need(4);
            xlines.push_back({toks[1], toks[2], toks[3], lineno});
        } else if (kw == "rot") {
            if (toks.size() < 2) throw ParseError("'rot' expects a node id", lineno, 1);
            RawRot r;
            r.node = toks[1];
            r.toks.assign(toks.begin() + 2, toks.end());
            r.line = lineno;
            rlines.push_back(std::move(r));
        } else if (kw == "outer") {
            need(2);
            try {
                outer_index = std::stoi(toks[1]);
            } catch (...) {
                throw ParseError("bad face index '" + toks[1] + "'", lineno, 7);
            }
            outer_line = lineno;
        } else {
            throw ParseError("unknown directive '" + kw + "'", lineno, 1);
        }
    }

    std::vector<std::string> vnames;
    std::map<std::string, int> vidx;
    for (auto& [id, ln] : vlines) {
        if (vidx.count(id)) throw ParseError("duplicate vertex id '" + id + "'", ln, 3);
        vidx[id] = int(vnames.size());
        vnames.push_back(id);
    }
    std::vector<Drawing::EdgeRec> edges;
    std::map<std::string, int> eidx;
    for (auto& [id, su, sv, ln] : elines) {
        if (eidx.count(id)) throw ParseError("duplicate edge id '" + id + "'", ln, 3);
        auto iu = vidx.find(su), iv = vidx.find(sv);
        if (iu == vidx.end()) throw ParseError("unknown vertex id '" + su + "'", ln, 1);
        if (iv == vidx.end()) throw ParseError("unknown vertex id '" + sv + "'", ln, 1);
        eidx[id] = int(edges.size());
        edges.push_back({id, iu->second, iv->second});
    }
    std::vector<Drawing::CrossRec> crossings;
    std::map<std::string, int> cidx;
    for (auto& [id, sa, sb, ln] : xlines) {
        if (cidx.count(id) || vidx.count(id))
            throw ParseError("duplicate or colliding crossing id '" + id + "'", ln, 3);
        auto ia = eidx.find(sa), ib = eidx.find(sb);
        if (ia == eidx.end()) throw ParseError("unknown edge id '" + sa + "'", ln, 1);
        if (ib == eidx.end()) throw ParseError("unknown edge id '" + sb + "'", ln, 1);
        cidx[id] = int(crossings.size());
        crossings.push_back({id, ia->second, ib->second});
    }
    int nn = int(vnames.size()) + int(crossings.size());
    std::vector<std::vector<std::pair<int, int>>> rots(nn);
    std::vector<int> have(nn, 0);
    for (const auto& r : rlines) {
        int node;
        if (auto it = vidx.find(r.node); it != vidx.end()) node = it->second;
        else if (auto it2 = cidx.find(r.node); it2 != cidx.end()) node = int(vnames.size()) + it2->second;
        else throw ParseError("unknown node id '" + r.node + "'", r.line, 5);
        if (have[node]++) throw ParseError("second rotation for node '" + r.node + "'", r.line, 1);
        for (const auto& tok : r.toks) {
            std::string eid = tok;
            int half = -1;
            auto dot = tok.find('.');
            if (dot != std::string::npos) {
                eid = tok.substr(0, dot);
                std::string h = tok.substr(dot + 1);
                if (h == "0") half = 0;
                else if (h == "1") half = 1;
                else throw ParseError("bad half suffix in token '" + tok + "'", r.line, 1);
            }
            auto it = eidx.find(eid);
            if (it == eidx.end()) throw ParseError("unknown edge id in token '" + tok + "'", r.line, 1);
            rots[node].push_back({it->second, half});
        }
    }
    for (int x = 0; x < nn; ++x)
        if (!have[x]) throw ParseError("missing rot line for a node", lineno, 1);

    Drawing d;
    try {
        d = Drawing::make(std::move(vnames), std::move(edges), std::move(crossings),
                          std::move(rots), -1, true);
    } catch (const InvariantError& e) {
        throw ParseError(e.what(), lineno, 1);
    }
    if (outer_index >= 0) {
        if (outer_index >= int(d.face_set.faces.size()))
            throw ParseError("outer face index out of range", outer_line, 7);
        int dart = d.face_set.faces[outer_index].walk[0];
        d = rebuild_drawing(d, d.rot, dart);
    }
    return d;
}

// Reorder a drawing into canonical id order (sorted vertices/edges/crossings,
// rotations rotated to start at their smallest token). Embedding unchanged.
inline Drawing canonical_reorder(const Drawing& d) {
    std::vector<int> vorder(d.n()), eorder(d.m()), corder(d.num_crossings());
    for (int i = 0; i < d.n(); ++i) vorder[i] = i;
    for (int i = 0; i < d.m(); ++i) eorder[i] = i;
    for (int i = 0; i < d.num_crossings(); ++i) corder[i] = i;
    std::sort(vorder.begin(), vorder.end(), [&](int a, int b) { return d.vnames[a] < d.vnames[b]; });
    std::sort(eorder.begin(), eorder.end(), [&](int a, int b) { return d.edges[a].id < d.edges[b].id; });
    std::sort(corder.begin(), corder.end(),
              [&](int a, int b) { return d.crossings[a].id < d.crossings[b].id; });
    std::vector<int> vmap(d.n()), emap(d.m()), cmap(d.num_crossings());
    for (int i = 0; i < d.n(); ++i) vmap[vorder[i]] = i;
    for (int i = 0; i < d.m(); ++i) emap[eorder[i]] = i;
    for (int i = 0; i < d.num_crossings(); ++i) cmap[corder[i]] = i;

    std::vector<std::string> vnames(d.n());
    for (int i = 0; i < d.n(); ++i) vnames[i] = d.vnames[vorder[i]];
    std::vector<Drawing::EdgeRec> edges(d.m());
    for (int i = 0; i < d.m(); ++i) {
        const auto& e = d.edges[eorder[i]];
        edges[i] = {e.id, vmap[e.u], vmap[e.v]};
    }
    std::vector<Drawing::CrossRec> crossings(d.num_crossings());
    for (int i = 0; i < d.num_crossings(); ++i) {
        const auto& c = d.crossings[corder[i]];
        crossings[i] = {c.id, emap[c.ea], emap[c.eb]};
    }
    std::vector<std::vector<std::pair<int, int>>> rots(d.num_nodes());
    auto rot_of = [&](int old_node) -> std::vector<std::pair<int, int>> {
        std::vector<std::pair<int, int>> out;
        for (int dart : d.rot[old_node])
            out.push_back({emap[d.dart_edge(dart)], d.segs[d.dart_seg(dart)].half});
        return out;
    };
    for (int i = 0; i < d.n(); ++i) rots[i] = rot_of(vorder[i]);
    for (int i = 0; i < d.num_crossings(); ++i) rots[d.n() + i] = rot_of(d.cross_node(corder[i]));
    // rotate each list to start at its smallest token
    auto tok_of = [&](std::pair<int, int> se) {
        return se.second < 0 ? edges[se.first].id : edges[se.first].id + "." + char('0' + se.second);
    };
    for (auto& r : rots) {
        if (r.empty()) continue;
        int best = 0;
        for (int i = 1; i < int(r.size()); ++i)
            if (tok_of(r[i]) < tok_of(r[best])) best = i;
        std::rotate(r.begin(), r.begin() + best, r.end());
    }
    int outer = -1;
    if (d.outer_dart >= 0) {
        int e = d.dart_edge(d.outer_dart);
        int half = d.segs[d.dart_seg(d.outer_dart)].half;
        int dir = d.outer_dart & 1;
        outer = (emap[e] << 3) | ((half + 1) << 1) | dir;
    }
    Drawing nd = Drawing::make(std::move(vnames), std::move(edges), std::move(crossings),
                               std::move(rots), -1, false);
    if (outer >= 0) {
        int ne = outer >> 3, half = ((outer >> 1) & 3) - 1, dir = outer & 1;
        for (int s = 0; s < nd.num_segs(); ++s)
            if (nd.segs[s].edge == ne && nd.segs[s].half == half)
                return rebuild_drawing(nd, nd.rot, 2 * s + dir);
    }
    return nd;
}

inline std::string serialize_drawing(const Drawing& d0) {
    Drawing d = canonical_reorder(d0);
    std::ostringstream out;
    for (const auto& v : d.vnames) out << "v " << v << "\n";
    for (const auto& e : d.edges) out << "e " << e.id << " " << d.vnames[e.u] << " " << d.vnames[e.v] << "\n";
    for (const auto& c : d.crossings)
        out << "x " << c.id << " " << d.edges[c.ea].id << " " << d.edges[c.eb].id << "\n";
    for (int node = 0; node < d.num_nodes(); ++node) {
        out << "rot " << (node < d.n() ? d.vnames[node] : d.crossings[node - d.n()].id);
        for (int dart : d.rot[node]) out << " " << d.seg_token(d.dart_seg(dart));
        out << "\n";
    }
    if (d.outer_dart >= 0) out << "outer " << d.face_of_dart(d.outer_dart) << "\n";
    return out.str();
}

inline std::string canonical_text(const Drawing& d) { return serialize_drawing(d); }

inline bool same_drawing(const Drawing& a, const Drawing& b) {
    return canonical_text(a) == canonical_text(b);
}

} // namespace oneplane

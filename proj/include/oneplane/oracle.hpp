// Brute-force machinery, independent of the analytic path: exhaustive
// enumeration of maximal drawings at small order, recomputation of the
// minimum size m(n), and a from-first-principles maximality decider that
// shares no face or witness code with the fast path.

#pragma once

#include <atomic>
#include <bit>
#include <fstream>
#include <functional>
#include <mutex>
#include <thread>

#include "extension.hpp"

namespace oneplane {

// --- canonical form of the planarized embedding ----------------------------
// Rooted-map normal form: for every root dart and both orientations, label
// nodes in discovery order while reading rotations from the entry dart, and
// keep the lexicographically least trace. Mirror images coincide.

inline std::string embedding_canonical_form(const Drawing& d) {
    int nd = d.num_darts();
    if (nd == 0) return "trivial:" + std::to_string(d.n());
    int nn = d.num_nodes();
    std::string best;
    std::vector<int> node_label(nn);
    std::vector<int> entry(nn);
    std::vector<int> order;
    for (int root = 0; root < nd; ++root) {
        for (int orient = 0; orient < 2; ++orient) {
            std::fill(node_label.begin(), node_label.end(), -1);
            order.clear();
            std::string trace;
            trace.reserve(nd * 3 + nn);
            int start = d.tail(root);
            node_label[start] = 0;
            entry[start] = root;
            order.push_back(start);
            for (size_t qi = 0; qi < order.size(); ++qi) {
                int node = order[qi];
                trace += d.is_crossing_node(node) ? 'X' : 'V';
                const auto& r = d.rot[node];
                int deg = int(r.size());
                int p0 = d.dart_pos[entry[node]];
                for (int i = 0; i < deg; ++i) {
                    int dart = r[(p0 + (orient ? deg - i : i)) % deg];
                    int h = d.head(dart);
                    if (node_label[h] < 0) {
                        node_label[h] = int(order.size());
                        entry[h] = Drawing::opp(dart);
                        order.push_back(h);
                    }
                    trace += std::to_string(node_label[h]);
                    trace += ',';
                }
                trace += ';';
            }
            if (best.empty() || trace < best) best = std::move(trace);
        }
    }
    return best;
}

// Canonical form of the underlying abstract graph, by exhaustive relabeling.
inline std::string graph_canonical_form(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<uint64_t> adj(n, 0);
    for (auto [u, v] : edges) {
        adj[u] |= 1ull << v;
        adj[v] |= 1ull << u;
    }
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::string best;
    do {
        std::string s(size_t(n) * n, '0');
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (adj[perm[i]] >> perm[j] & 1) s[size_t(i) * n + j] = '1';
        if (best.empty() || s < best) best = std::move(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline std::string underlying_canonical_form(const Drawing& d) {
    std::vector<std::pair<int, int>> es;
    for (const auto& e : d.edges) es.push_back({e.u, e.v});
    return graph_canonical_form(d.n(), es);
}

// --- independent maximality decider -----------------------------------------
// Re-derives the face structure by walking rotation predecessors (the mirror
// convention of the fast path) and tries every route shape from scratch.

inline bool brute_maximality(const Drawing& d) {
    int nd = d.num_darts();
    std::vector<int> orbit(nd, -1);
    int nfaces = 0;
    for (int d0 = 0; d0 < nd; ++d0) {
        if (orbit[d0] >= 0) continue;
        int t = d0;
        do {
            orbit[t] = nfaces;
            int r = Drawing::opp(t);
            int h = d.tail(r);
            const auto& rr = d.rot[h];
            int p = 0;
            while (rr[p] != r) ++p;
            t = rr[(p + int(rr.size()) - 1) % rr.size()];
        } while (t != d0);
        ++nfaces;
    }
    std::vector<std::vector<int>> face_vertices(nfaces);
    for (int t = 0; t < nd; ++t) {
        int x = d.tail(t);
        if (!d.is_crossing_node(x)) face_vertices[orbit[t]].push_back(x);
    }
    for (auto& fv : face_vertices) {
        std::sort(fv.begin(), fv.end());
        fv.erase(std::unique(fv.begin(), fv.end()), fv.end());
    }
    // clean route: two vertices of a common face
    for (const auto& fv : face_vertices)
        for (size_t i = 0; i < fv.size(); ++i)
            for (size_t j = i + 1; j < fv.size(); ++j)
                if (!d.adjacent(fv[i], fv[j])) return false;
    // crossing route: through an uncrossed edge, from one side to the other
    for (int s = 0; s < d.num_segs(); ++s) {
        if (d.segs[s].half >= 0) continue;
        int a = d.segs[s].n0, b = d.segs[s].n1;
        const auto& f1 = face_vertices[orbit[2 * s]];
        const auto& f2 = face_vertices[orbit[2 * s + 1]];
        for (int u : f1) {
            if (u == a || u == b) continue;
            for (int v : f2) {
                if (v == a || v == b || v == u) continue;
                if (!d.adjacent(u, v)) return false;
            }
        }
    }
    return true;
}

// --- exhaustive enumeration --------------------------------------------------

struct OracleOptions {
    bool k4_filter = true;     // crossing pairs must induce K4 (necessary for maximal drawings)
    bool clean_filter = true;  // clean edges must form a spanning 2-connected subgraph
    bool face_filter = true;   // prune embeddings whose faces carry non-adjacent vertex pairs
    int min_edges = -1;
    int max_edges = -1;
    bool allow_large = false;  // gate for n == 7
    int jobs = 1;
    std::string checkpoint;    // resumable progress file, empty disables
};

struct EnumeratedDrawing {
    Drawing drawing;
    std::string embedding_form;
    std::string graph_form;
};

struct EnumResult {
    std::vector<EnumeratedDrawing> drawings; // sorted by (edges, embedding form)
    int min_edges = -1;
    int graph_classes = 0;            // distinct underlying graphs
    int min_edge_graph_classes = 0;   // distinct underlying graphs of minimum size
};

namespace detail {

struct RawPlan {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> matching; // crossing edge pairs
    // derived
    int nodes = 0, nsegs = 0;
    std::vector<int> seg_tail, seg_head, seg_edge;
    std::vector<std::vector<int>> ends; // node -> outgoing darts (base order)
    std::vector<uint64_t> adj;
};

inline RawPlan make_plan(int n, const std::vector<std::pair<int, int>>& edges,
                         const std::vector<std::pair<int, int>>& matching) {
    RawPlan p;
    p.n = n;
    p.edges = edges;
    p.matching = matching;
    int m = int(edges.size());
    std::vector<int> cross_of(m, -1);
    for (int c = 0; c < int(matching.size()); ++c) {
        cross_of[matching[c].first] = c;
        cross_of[matching[c].second] = c;
    }
    p.nodes = n + int(matching.size());
    p.ends.assign(p.nodes, {});
    for (int e = 0; e < m; ++e) {
        auto [u, v] = edges[e];
        if (cross_of[e] < 0) {
            int s = p.nsegs++;
            p.seg_tail.push_back(u);
            p.seg_head.push_back(v);
            p.seg_edge.push_back(e);
            p.ends[u].push_back(2 * s);
            p.ends[v].push_back(2 * s + 1);
        } else {
            int cn = n + cross_of[e];
            int s0 = p.nsegs++;
            p.seg_tail.push_back(u);
            p.seg_head.push_back(cn);
            p.seg_edge.push_back(e);
            p.ends[u].push_back(2 * s0);
            int s1 = p.nsegs++;
            p.seg_tail.push_back(cn);
            p.seg_head.push_back(v);
            p.seg_edge.push_back(e);
            p.ends[cn].push_back(2 * s0 + 1);
            p.ends[cn].push_back(2 * s1);
            p.ends[v].push_back(2 * s1 + 1);
        }
    }
    p.adj.assign(n, 0);
    for (auto [u, v] : edges) {
        p.adj[u] |= 1ull << v;
        p.adj[v] |= 1ull << u;
    }
    return p;
}

// Enumerate rotation systems of the plan; call sink for each spherical one.
// Rotations are odometer-driven: vertices permute all ends but the first,
// crossings flip between their two transversal orders.
inline void enumerate_rotations(const RawPlan& p, const std::function<void(const std::vector<std::vector<int>>&)>& sink) {
    int nn = p.nodes;
    std::vector<std::vector<int>> rot(nn);
    // crossings: ends arrive as (a0-in, a1-out, b... ) build alternating base
    std::vector<std::vector<int>> vperm(nn); // permutable tail per vertex
    for (int x = 0; x < nn; ++x) {
        rot[x] = p.ends[x];
        if (x >= p.n) {
            // order the four crossing darts as (e1h0, e2h0, e1h1, e2h1)
            auto& r = rot[x];
            std::sort(r.begin(), r.end());
            std::swap(r[1], r[2]); // segments of one edge are adjacent ids
        } else {
            std::sort(rot[x].begin(), rot[x].end());
        }
    }
    int ndarts = 2 * p.nsegs;
    std::vector<int> succ(ndarts), tail_of(ndarts);
    for (int s = 0; s < p.nsegs; ++s) {
        tail_of[2 * s] = p.seg_tail[s];
        tail_of[2 * s + 1] = p.seg_head[s];
    }
    std::vector<int> face_seen(ndarts, 0);
    int stamp = 0;

    // recursive odometer over nodes
    std::function<void(int)> rec = [&](int x) {
        if (x == nn) {
            for (int node = 0; node < nn; ++node) {
                auto& r = rot[node];
                int k = int(r.size());
                for (int i = 0; i < k; ++i) succ[r[i]] = r[(i + 1) % k];
            }
            ++stamp;
            int faces = 0;
            for (int d0 = 0; d0 < ndarts; ++d0) {
                if (face_seen[d0] == stamp) continue;
                int t = d0;
                do {
                    face_seen[t] = stamp;
                    t = succ[t ^ 1];
                } while (t != d0);
                ++faces;
            }
            if (p.nodes - p.nsegs + faces == 2) sink(rot);
            return;
        }
        auto& r = rot[x];
        if (x >= p.n) {
            rec(x + 1);
            std::swap(r[1], r[3]);
            rec(x + 1);
            std::swap(r[1], r[3]);
            return;
        }
        if (r.size() <= 2) {
            rec(x + 1);
            return;
        }
        std::vector<int> base(r.begin() + 1, r.end());
        std::sort(base.begin(), base.end());
        do {
            std::copy(base.begin(), base.end(), r.begin() + 1);
            rec(x + 1);
        } while (std::next_permutation(base.begin(), base.end()));
        std::copy(base.begin(), base.end(), r.begin() + 1);
    };
    rec(0);
}

// Raw maximality test on a rotation system of the plan; mirrors the fast
// path's route logic without Drawing overhead.
inline bool raw_maximal(const RawPlan& p, const std::vector<std::vector<int>>& rot,
                        bool face_filter_only = false) {
    int ndarts = 2 * p.nsegs;
    std::vector<int> succ(ndarts);
    for (int node = 0; node < p.nodes; ++node) {
        const auto& r = rot[node];
        int k = int(r.size());
        for (int i = 0; i < k; ++i) succ[r[i]] = r[(i + 1) % k];
    }
    std::vector<int> orbit(ndarts, -1);
    int nfaces = 0;
    for (int d0 = 0; d0 < ndarts; ++d0) {
        if (orbit[d0] >= 0) continue;
        int t = d0;
        do {
            orbit[t] = nfaces;
            t = succ[t ^ 1];
        } while (t != d0);
        ++nfaces;
    }
    std::vector<uint64_t> face_verts(nfaces, 0);
    for (int s = 0; s < p.nsegs; ++s) {
        if (p.seg_tail[s] < p.n) face_verts[orbit[2 * s]] |= 1ull << p.seg_tail[s];
        if (p.seg_head[s] < p.n) face_verts[orbit[2 * s + 1]] |= 1ull << p.seg_head[s];
    }
    // a face with two non-adjacent vertices admits a clean insertion
    for (int f = 0; f < nfaces; ++f) {
        uint64_t fv = face_verts[f];
        for (uint64_t rest = fv; rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            if (fv & ~p.adj[u] & ~(1ull << u)) return false;
        }
    }
    if (face_filter_only) return true;
    // crossing routes through uncrossed edges
    for (int s = 0; s < p.nsegs; ++s) {
        int e = p.seg_edge[s];
        if (p.seg_tail[s] >= p.n || p.seg_head[s] >= p.n) continue; // a half
        uint64_t f1 = face_verts[orbit[2 * s]] & ~(1ull << p.seg_tail[s]) & ~(1ull << p.seg_head[s]);
        uint64_t f2 = face_verts[orbit[2 * s + 1]] & ~(1ull << p.seg_tail[s]) & ~(1ull << p.seg_head[s]);
        (void)e;
        for (uint64_t r1 = f1; r1;) {
            int u = std::countr_zero(r1);
            r1 &= r1 - 1;
            uint64_t targets = f2 & ~p.adj[u] & ~(1ull << u);
            if (targets) return false;
        }
    }
    return true;
}

inline Drawing plan_to_drawing(const RawPlan& p, const std::vector<std::vector<int>>& rot) {
    auto pad = [](int k) {
        std::string s = std::to_string(k);
        return s.size() < 2 ? "0" + s : s;
    };
    std::vector<std::string> vnames;
    for (int v = 0; v < p.n; ++v) vnames.push_back("v" + pad(v));
    std::vector<Drawing::EdgeRec> edges;
    for (int e = 0; e < int(p.edges.size()); ++e)
        edges.push_back({"e" + pad(e), p.edges[e].first, p.edges[e].second});
    std::vector<Drawing::CrossRec> crossings;
    for (int c = 0; c < int(p.matching.size()); ++c)
        crossings.push_back({"c" + pad(c), p.matching[c].first, p.matching[c].second});
    std::vector<int> first_seg(p.edges.size(), -1);
    for (int s = 0; s < p.nsegs; ++s)
        if (first_seg[p.seg_edge[s]] < 0) first_seg[p.seg_edge[s]] = s;
    std::vector<std::vector<std::pair<int, int>>> rots(p.nodes);
    for (int node = 0; node < p.nodes; ++node)
        for (int dart : rot[node]) {
            int s = dart >> 1;
            int e = p.seg_edge[s];
            int half = -1;
            if (p.seg_tail[s] >= p.n || p.seg_head[s] >= p.n) half = (s == first_seg[e]) ? 0 : 1;
            rots[node].push_back({e, half});
        }
    return Drawing::make(std::move(vnames), std::move(edges), std::move(crossings), std::move(rots),
                         -1, true);
}

inline bool graph_connected_mindeg2(int n, const std::vector<uint64_t>& adj) {
    for (int v = 0; v < n; ++v)
        if (std::popcount(adj[v]) < 2) return false;
    uint64_t seen = 1, frontier = 1;
    while (frontier) {
        uint64_t next = 0;
        for (uint64_t f = frontier; f;) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1ull << n) - 1;
}

inline bool spanning_2connected(int n, const std::vector<std::pair<int, int>>& edges,
                                const std::vector<char>& keep) {
    std::vector<std::vector<int>> g(n);
    for (int e = 0; e < int(edges.size()); ++e)
        if (keep[e]) {
            g[edges[e].first].push_back(edges[e].second);
            g[edges[e].second].push_back(edges[e].first);
        }
    for (int v = 0; v < n; ++v)
        if (g[v].size() < 2) return false;
    // articulation check
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    int timer = 0, root_children = 0;
    std::vector<std::pair<int, size_t>> st;
    st.push_back({0, 0});
    disc[0] = low[0] = timer++;
    while (!st.empty()) {
        auto& [v, i] = st.back();
        if (i < g[v].size()) {
            int w = g[v][i++];
            if (disc[w] < 0) {
                parent[w] = v;
                if (v == 0) ++root_children;
                disc[w] = low[w] = timer++;
                st.push_back({w, 0});
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], disc[w]);
            }
        } else {
            st.pop_back();
            if (!st.empty()) {
                int pv = st.back().first;
                low[pv] = std::min(low[pv], low[v]);
                if (pv != 0 && low[v] >= disc[pv]) return false;
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (disc[v] < 0) return false;
    return root_children <= 1;
}

} // namespace detail

// All maximal 1-plane drawings of order n up to combinatorial isomorphism of
// the planarized embedding.
inline EnumResult enumerate_maximal(int n, OracleOptions opts = {}) {
    if (n < 4) throw InvariantError("enumerate_maximal: n must be at least 4");
    if (n > 7 || (n == 7 && !opts.allow_large))
        throw InvariantError("enumerate_maximal: n > 6 requires the long-run option (n <= 7)");
    int full = n * (n - 1) / 2;
    int emax = opts.max_edges >= 0 ? opts.max_edges : (n >= 5 ? std::min(full, 4 * n - 8) : full);
    int emin = opts.min_edges >= 0 ? opts.min_edges : n; // min degree 2 forces >= n
    emax = std::min(emax, full);

    // underlying graphs up to isomorphism
    std::vector<std::pair<int, int>> all_pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.push_back({u, v});
    std::map<std::string, std::vector<std::pair<int, int>>> reps; // canonical -> edge list
    for (uint64_t mask = 0; mask < (1ull << full); ++mask) {
        int e = std::popcount(mask);
        if (e < emin || e > emax) continue;
        std::vector<std::pair<int, int>> edges;
        std::vector<uint64_t> adj(n, 0);
        for (int i = 0; i < full; ++i)
            if (mask >> i & 1) {
                edges.push_back(all_pairs[i]);
                adj[all_pairs[i].first] |= 1ull << all_pairs[i].second;
                adj[all_pairs[i].second] |= 1ull << all_pairs[i].first;
            }
        if (!detail::graph_connected_mindeg2(n, adj)) continue;
        reps.emplace(graph_canonical_form(n, edges), edges);
    }
    std::vector<std::vector<std::pair<int, int>>> classes;
    for (auto& [k, v] : reps) classes.push_back(v);
    std::stable_sort(classes.begin(), classes.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });

    // checkpoint support: finished classes and their survivors are replayed
    std::set<int> done;
    std::vector<std::vector<EnumeratedDrawing>> per_class(classes.size());
    if (!opts.checkpoint.empty()) {
        std::ifstream in(opts.checkpoint);
        std::string line;
        while (std::getline(in, line)) {
            if (line.rfind("done ", 0) == 0) {
                done.insert(std::stoi(line.substr(5)));
            } else if (line.rfind("hit ", 0) == 0) {
                auto sp = line.find(' ', 4);
                int ci = std::stoi(line.substr(4, sp - 4));
                std::string text = line.substr(sp + 1);
                for (auto& ch : text)
                    if (ch == '|') ch = '\n';
                EnumeratedDrawing ed;
                ed.drawing = parse_drawing(text);
                ed.embedding_form = embedding_canonical_form(ed.drawing);
                ed.graph_form = underlying_canonical_form(ed.drawing);
                if (ci >= 0 && ci < int(per_class.size())) per_class[ci].push_back(std::move(ed));
            }
        }
    }
    std::mutex ckpt_mutex;
    std::ofstream ckpt;
    if (!opts.checkpoint.empty()) ckpt.open(opts.checkpoint, std::ios::app);

    std::atomic<size_t> next_class{0};
    std::mutex error_mutex;
    std::string first_error;
    auto worker = [&]() {
        while (true) {
            size_t ci = next_class.fetch_add(1);
            if (ci >= classes.size()) return;
            if (done.count(int(ci))) continue;
            {
                std::lock_guard<std::mutex> lk(error_mutex);
                if (!first_error.empty()) return;
            }
            const auto& edges = classes[ci];
            int m = int(edges.size());
            std::vector<uint64_t> adj(n, 0);
            for (auto [u, v] : edges) {
                adj[u] |= 1ull << v;
                adj[v] |= 1ull << u;
            }
            // crossable pairs
            std::vector<std::pair<int, int>> pairs;
            for (int e1 = 0; e1 < m; ++e1)
                for (int e2 = e1 + 1; e2 < m; ++e2) {
                    auto [a, b] = edges[e1];
                    auto [c, cc] = edges[e2];
                    if (a == c || a == cc || b == c || b == cc) continue;
                    if (opts.k4_filter) {
                        bool k4 = (adj[a] >> b & 1) && (adj[a] >> c & 1) && (adj[a] >> cc & 1) &&
                                  (adj[b] >> c & 1) && (adj[b] >> cc & 1) && (adj[c] >> cc & 1);
                        if (!k4) continue;
                    }
                    pairs.push_back({e1, e2});
                }
            std::map<std::string, EnumeratedDrawing> found;
            // matchings over pairs (each edge crossed at most once)
            std::vector<std::pair<int, int>> matching;
            std::vector<char> used(m, 0);
            std::function<void(size_t)> rec_match = [&](size_t pi) {
                // complete matchings are consumed here before extending
                {
                    std::vector<char> keep(m, 1);
                    for (auto [e1, e2] : matching) keep[e1] = keep[e2] = 0;
                    bool admissible =
                        !opts.clean_filter || detail::spanning_2connected(n, edges, keep);
                    if (admissible) {
                        auto plan = detail::make_plan(n, edges, matching);
                        detail::enumerate_rotations(plan, [&](const std::vector<std::vector<int>>& rot) {
                            if (opts.face_filter && !detail::raw_maximal(plan, rot, true)) return;
                            if (!detail::raw_maximal(plan, rot, false)) return;
                            Drawing dr = detail::plan_to_drawing(plan, rot);
                            if (!is_maximal(dr))
                                throw InvariantError("oracle: raw and fast maximality disagree");
                            EnumeratedDrawing ed;
                            ed.embedding_form = embedding_canonical_form(dr);
                            ed.graph_form = underlying_canonical_form(dr);
                            ed.drawing = std::move(dr);
                            found.emplace(ed.embedding_form, std::move(ed));
                        });
                    }
                }
                for (size_t i = pi; i < pairs.size(); ++i) {
                    auto [e1, e2] = pairs[i];
                    if (used[e1] || used[e2]) continue;
                    used[e1] = used[e2] = 1;
                    matching.push_back(pairs[i]);
                    rec_match(i + 1);
                    matching.pop_back();
                    used[e1] = used[e2] = 0;
                }
            };
            try {
                rec_match(0);
            } catch (const std::exception& ex) {
                std::lock_guard<std::mutex> lk(error_mutex);
                if (first_error.empty()) first_error = ex.what();
                return;
            }
            for (auto& [k, ed] : found) per_class[ci].push_back(std::move(ed));
            if (ckpt.is_open()) {
                std::lock_guard<std::mutex> lk(ckpt_mutex);
                for (const auto& ed : per_class[ci]) {
                    std::string text = canonical_text(ed.drawing);
                    for (auto& ch : text)
                        if (ch == '\n') ch = '|';
                    ckpt << "hit " << ci << " " << text << "\n";
                }
                ckpt << "done " << ci << "\n";
                ckpt.flush();
            }
        }
    };
    int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> ts;
        for (int j = 0; j < jobs; ++j) ts.emplace_back(worker);
        for (auto& t : ts) t.join();
    }
    if (!first_error.empty()) throw InvariantError(first_error);

    EnumResult res;
    for (auto& bucket : per_class)
        for (auto& ed : bucket) res.drawings.push_back(std::move(ed));
    std::sort(res.drawings.begin(), res.drawings.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.drawing.m(), a.embedding_form) <
               std::make_pair(b.drawing.m(), b.embedding_form);
    });
    std::set<std::string> gforms, min_gforms;
    for (const auto& ed : res.drawings) {
        gforms.insert(ed.graph_form);
        if (res.min_edges < 0 || ed.drawing.m() < res.min_edges) res.min_edges = ed.drawing.m();
    }
    for (const auto& ed : res.drawings)
        if (ed.drawing.m() == res.min_edges) min_gforms.insert(ed.graph_form);
    res.graph_classes = int(gforms.size());
    res.min_edge_graph_classes = int(min_gforms.size());
    return res;
}

// Minimum size of a maximal drawing of order n: ascending edge scan with an
// early stop once some edge count admits a maximal drawing.
inline int m_of_n(int n, OracleOptions opts = {}) {
    if (n < 4) throw InvariantError("m_of_n: n must be at least 4");
    int full = n * (n - 1) / 2;
    int emax = opts.max_edges >= 0 ? opts.max_edges : (n >= 5 ? std::min(full, 4 * n - 8) : full);
    for (int e = n; e <= emax; ++e) {
        OracleOptions o = opts;
        o.min_edges = e;
        o.max_edges = e;
        if (!o.checkpoint.empty()) o.checkpoint += "." + std::to_string(e);
        EnumResult r = enumerate_maximal(n, o);
        if (!r.drawings.empty()) return e;
    }
    throw InvariantError("m_of_n: no maximal drawing found in the edge range");
}

// Deterministic pseudo-random spherical drawing: a labeled tree with shuffled
// rotations. Any rotation system of a tree is spherical, so this always
// yields a valid (far from maximal) drawing to saturate.
inline Drawing random_tree_drawing(int n, unsigned seed) {
    if (n < 2) throw InvariantError("random_tree_drawing: n must be at least 2");
    std::mt19937 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        int parent = int(rng() % unsigned(v));
        edges.push_back({parent, v});
    }
    auto pad = [](int k) {
        std::string s = std::to_string(k);
        return s.size() < 2 ? "0" + s : s;
    };
    std::vector<std::string> vnames;
    for (int v = 0; v < n; ++v) vnames.push_back("v" + pad(v));
    std::vector<Drawing::EdgeRec> ers;
    for (int e = 0; e < int(edges.size()); ++e)
        ers.push_back({"e" + pad(e), edges[e].first, edges[e].second});
    std::vector<std::vector<std::pair<int, int>>> rots(n);
    for (int e = 0; e < int(edges.size()); ++e) {
        rots[edges[e].first].push_back({e, -1});
        rots[edges[e].second].push_back({e, -1});
    }
    for (auto& r : rots) std::shuffle(r.begin(), r.end(), rng);
    return Drawing::make(std::move(vnames), std::move(ers), {}, std::move(rots), -1, true);
}

} // namespace oneplane

// K4-extension machinery: link classification, the strong/weak/micro
// priority rule with the face-consecutiveness refinement for micro links,
// sequence generation, removability, first-appearance indices, per-step
// density checks, and the lower-bound certificate
//   e(G) >= 7/3 n(G) + 1/3 nest(G) - 3
// for maximal drawings whose edges all lie in K4-subgraphs, assembled into
// the full bound e(G) >= ceil(7n/3) - 3 by hermit stripping and splitting
// at exceptional edges.

#pragma once

#include <random>

#include "family.hpp"

namespace oneplane {

struct K4Link {
    enum Kind { kStrong = 3, kWeak = 2, kMicro = 1 };
    std::array<int, 4> verts{};  // sorted vertex indices, inducing K4
    Kind kind = kStrong;
    // micro only, filled when the step is applied:
    bool simple = false;
    std::vector<int> extra_edges; // E(G_i) \ (E(G_{i-1}) u E(F_i))
    // provenance of a micro candidate (rule M*): the anchor edge u-x
    int anchor_u = -1, anchor_x = -1;
};

inline bool induces_k4(const Drawing& d, const std::array<int, 4>& q) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!d.adjacent(q[i], q[j])) return false;
    return true;
}

inline K4Link classify_link(const Drawing& d, const std::set<int>& current,
                            std::array<int, 4> F) {
    std::sort(F.begin(), F.end());
    if (!induces_k4(d, F)) throw InvariantError("classify_link: vertex set does not induce K4");
    int inter = 0;
    for (int v : F) inter += current.count(v);
    if (inter < 1 || inter > 3)
        throw InvariantError("classify_link: intersection with current set must be 1, 2 or 3");
    K4Link l;
    l.verts = F;
    l.kind = inter == 3 ? K4Link::kStrong : inter == 2 ? K4Link::kWeak : K4Link::kMicro;
    return l;
}

namespace detail {

inline std::vector<std::array<int, 4>> k4s_through_edge(const Drawing& d, int u, int x) {
    std::vector<std::array<int, 4>> out;
    std::vector<int> common;
    std::set_intersection(d.neighbors(u).begin(), d.neighbors(u).end(),
                          d.neighbors(x).begin(), d.neighbors(x).end(), std::back_inserter(common));
    for (size_t i = 0; i < common.size(); ++i)
        for (size_t j = i + 1; j < common.size(); ++j)
            if (d.adjacent(common[i], common[j])) {
                std::array<int, 4> q{u, x, common[i], common[j]};
                std::sort(q.begin(), q.end());
                out.push_back(q);
            }
    return out;
}

} // namespace detail

// Candidate links from `current` under the priority rule: all strong links if
// any exist, else all weak links, else the micro links admissible through the
// face-consecutiveness refinement. Micro admissibility: a vertex u of the
// current set has a neighbor x outside it such that the segments of u-x and
// u-w at u (w another neighbor of u inside) are consecutive in the rotation
// at u; if u-x is crossed the link is the K4 on the crossing pair, otherwise
// any K4 through u-x qualifies.
inline std::vector<K4Link> swm_star_links(const Drawing& d, const std::set<int>& current) {
    if (int(current.size()) >= d.n())
        throw InvariantError("swm_star_links: current set must be a proper subset");
    if (int(current.size()) < 4) throw InvariantError("swm_star_links: current set too small");
    auto k4s = find_k4_subgraphs(d);
    std::vector<K4Link> strong, weak;
    for (const auto& q : k4s) {
        int inter = 0;
        for (int v : q) inter += current.count(v);
        if (inter == 3 || inter == 2) {
            K4Link l;
            l.verts = q;
            l.kind = inter == 3 ? K4Link::kStrong : K4Link::kWeak;
            (inter == 3 ? strong : weak).push_back(l);
        }
    }
    if (!strong.empty()) return strong;
    if (!weak.empty()) return weak;

    std::set<std::array<int, 4>> seen;
    std::vector<K4Link> micro;
    for (int u : current) {
        for (size_t i = 0; i < d.rot[u].size(); ++i) {
            int o1 = d.rot[u][i];
            int o2 = d.rot[u][(i + 1) % d.rot[u].size()];
            for (int swap = 0; swap < 2; ++swap) {
                int ex = d.dart_edge(swap ? o2 : o1);
                int ew = d.dart_edge(swap ? o1 : o2);
                if (ex == ew) continue;
                int x = d.edges[ex].u == u ? d.edges[ex].v : d.edges[ex].u;
                int w = d.edges[ew].u == u ? d.edges[ew].v : d.edges[ew].u;
                if (current.count(x) || !current.count(w)) continue;
                int c = d.edge_cross[ex];
                std::vector<std::array<int, 4>> cands;
                if (c >= 0) {
                    int pe = d.crossings[c].ea == ex ? d.crossings[c].eb : d.crossings[c].ea;
                    std::array<int, 4> q{u, x, d.edges[pe].u, d.edges[pe].v};
                    std::sort(q.begin(), q.end());
                    if (!induces_k4(d, q))
                        throw InvariantError(
                            "crossing pair does not induce K4; input violates maximality premise");
                    cands.push_back(q);
                } else {
                    cands = detail::k4s_through_edge(d, u, x);
                }
                for (const auto& q : cands) {
                    int inter = 0;
                    for (int v : q) inter += current.count(v);
                    if (inter != 1)
                        throw InvariantError(
                            "micro candidate meets the current set in more than one vertex although "
                            "no strong or weak link exists");
                    if (!seen.insert(q).second) continue;
                    K4Link l;
                    l.verts = q;
                    l.kind = K4Link::kMicro;
                    l.anchor_u = u;
                    l.anchor_x = x;
                    micro.push_back(l);
                }
            }
        }
    }
    return micro;
}

struct ExtensionStep {
    K4Link link;
    std::vector<int> added;       // vertices added at this step
    int delta_edges = 0;
    std::vector<NestKey> new_nests;
    long slack_thirds = 0;        // 3*delta_e - (7*delta_n + |new_nests|)
};

struct ExtensionSequence {
    std::vector<int> seed;              // sorted vertex indices, induces K4
    std::vector<ExtensionStep> steps;
    std::vector<std::set<int>> stages;  // vertex sets of G_0 .. G_N
    std::map<int, int> vertex_od;       // vertex -> first stage index
};

inline int od_vertex(const ExtensionSequence& seq, int v) {
    auto it = seq.vertex_od.find(v);
    if (it == seq.vertex_od.end()) throw InvariantError("od: vertex not in the sequence");
    return it->second;
}

inline int od_edge(const ExtensionSequence& seq, int u, int v) {
    return std::max(od_vertex(seq, u), od_vertex(seq, v));
}

struct SequencePolicy {
    bool proof_mode = false; // weak-link preference for edges outside any K4 of the stage
    unsigned rand_seed = 0;  // 0: lexicographic least; else seeded choice
};

// Build the K4-extension sequence from `seed` to the full drawing, applying
// the priority rule at every step. Records per step the added vertices, the
// edge increment and the nests created.
inline ExtensionSequence build_sequence(const Drawing& d, std::array<int, 4> seed,
                                        SequencePolicy policy = {}) {
    std::sort(seed.begin(), seed.end());
    if (!induces_k4(d, seed)) throw InvariantError("build_sequence: seed does not induce K4");
    if (!exceptional_edges(d).empty())
        throw InvariantError("build_sequence: some edge lies in no K4-subgraph");
    ExtensionSequence seq;
    seq.seed.assign(seed.begin(), seed.end());
    std::set<int> current(seed.begin(), seed.end());
    seq.stages.push_back(current);
    for (int v : current) seq.vertex_od[v] = 0;

    Drawing gi = induced_subdrawing_idx(d, {seed.begin(), seed.end()});
    auto nests_of = [&](const Drawing& dr) {
        std::set<NestKey> ks;
        for (const auto& n : find_nests(dr)) ks.insert(n.key);
        return ks;
    };
    std::set<NestKey> prev_nests = nests_of(gi);
    int prev_edges = gi.m();

    std::mt19937 rng(policy.rand_seed);
    while (int(current.size()) < d.n()) {
        auto cands = swm_star_links(d, current);
        if (cands.empty()) throw InvariantError("build_sequence: no candidate link");
        if (policy.proof_mode && cands.front().kind == K4Link::kWeak) {
            // if some stage edge lies in no K4 of the stage, prefer weak links
            // whose one old edge is such an edge
            std::set<std::pair<int, int>> covered_d;
            for (const auto& q : find_k4_subgraphs(gi))
                for (int i = 0; i < 4; ++i)
                    for (int j = i + 1; j < 4; ++j) {
                        int a = d.vertex_index(gi.vnames[q[i]]);
                        int b = d.vertex_index(gi.vnames[q[j]]);
                        covered_d.insert({std::min(a, b), std::max(a, b)});
                    }
            bool has_uncovered = false;
            for (int e = 0; e < gi.m(); ++e) {
                int a = d.vertex_index(gi.vnames[gi.edges[e].u]);
                int b = d.vertex_index(gi.vnames[gi.edges[e].v]);
                if (!covered_d.count({std::min(a, b), std::max(a, b)})) has_uncovered = true;
            }
            if (has_uncovered) {
                std::vector<K4Link> filt;
                for (const auto& l : cands) {
                    std::vector<int> old_vs;
                    for (int v : l.verts)
                        if (current.count(v)) old_vs.push_back(v);
                    if (old_vs.size() == 2 &&
                        !covered_d.count({std::min(old_vs[0], old_vs[1]), std::max(old_vs[0], old_vs[1])}))
                        filt.push_back(l);
                }
                if (!filt.empty()) cands = std::move(filt);
            }
        }
        auto name_key = [&](const K4Link& l) {
            std::array<std::string, 4> k;
            for (int i = 0; i < 4; ++i) k[i] = d.vnames[l.verts[i]];
            std::sort(k.begin(), k.end());
            return k;
        };
        int pick = 0;
        if (policy.rand_seed != 0) {
            pick = int(rng() % cands.size());
        } else {
            for (int i = 1; i < int(cands.size()); ++i)
                if (name_key(cands[i]) < name_key(cands[pick])) pick = i;
        }
        ExtensionStep step;
        step.link = cands[pick];
        for (int v : step.link.verts)
            if (!current.count(v)) step.added.push_back(v);
        std::set<int> next = current;
        for (int v : step.added) next.insert(v);
        Drawing gnext = induced_subdrawing_idx(d, {next.begin(), next.end()});
        step.delta_edges = gnext.m() - prev_edges;
        auto nn = nests_of(gnext);
        for (const auto& k : nn)
            if (!prev_nests.count(k)) step.new_nests.push_back(k);
        step.slack_thirds = 3L * step.delta_edges - (7L * int(step.added.size()) + long(step.new_nests.size()));
        if (step.link.kind == K4Link::kMicro) {
            // extra edges: edges of G_i outside G_{i-1} and outside the link
            std::set<std::pair<int, int>> fedges;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    fedges.insert({std::min(step.link.verts[i], step.link.verts[j]),
                                   std::max(step.link.verts[i], step.link.verts[j])});
            for (int e = 0; e < gnext.m(); ++e) {
                int a = d.vertex_index(gnext.vnames[gnext.edges[e].u]);
                int b = d.vertex_index(gnext.vnames[gnext.edges[e].v]);
                auto pr = std::make_pair(std::min(a, b), std::max(a, b));
                if (current.count(pr.first) && current.count(pr.second)) continue;
                if (fedges.count(pr)) continue;
                step.link.extra_edges.push_back(d.edge_between(pr.first, pr.second));
            }
            step.link.simple = step.link.extra_edges.size() == 1;
        }
        for (int v : step.added) seq.vertex_od[v] = int(seq.stages.size());
        seq.stages.push_back(next);
        seq.steps.push_back(std::move(step));
        current = std::move(next);
        prev_nests = std::move(nn);
        prev_edges = gnext.m();
        gi = std::move(gnext);
    }
    return seq;
}

// ---------------------------------------------------------------------------
// Per-sequence property battery. Every failed check comes back as a named
// violation; an empty result means the sequence satisfies all step laws.

struct SequenceViolation {
    std::string check;
    std::string detail;
};

inline std::vector<SequenceViolation> check_sequence(const Drawing& d, const ExtensionSequence& seq) {
    std::vector<SequenceViolation> out;
    auto fail = [&](const std::string& check, const std::string& detail) {
        out.push_back({check, detail});
    };
    int N = int(seq.steps.size());
    std::vector<Drawing> stage_dr;
    for (const auto& st : seq.stages)
        stage_dr.push_back(induced_subdrawing_idx(d, {st.begin(), st.end()}));

    auto removable_in = [&](const Drawing& g, int du, int dv) {
        int e = g.edge_between(g.vertex_index(d.vnames[du]), g.vertex_index(d.vnames[dv]));
        return is_removable(g, g.edges[e].id);
    };
    auto edge_pairs_of = [&](const Drawing& g) {
        std::set<std::pair<int, int>> ps;
        for (int e = 0; e < g.m(); ++e) {
            int a = d.vertex_index(g.vnames[g.edges[e].u]);
            int b = d.vertex_index(g.vnames[g.edges[e].v]);
            ps.insert({std::min(a, b), std::max(a, b)});
        }
        return ps;
    };
    auto cuts = [&](const Drawing& g, int ds, int dt) {
        // does removing {s,t} disconnect the abstract graph?
        int s = g.vertex_index(d.vnames[ds]), t = g.vertex_index(d.vnames[dt]);
        if (s < 0 || t < 0) return false;
        if (g.n() - 2 <= 1) return false;
        int start = -1;
        for (int v = 0; v < g.n() && start < 0; ++v)
            if (v != s && v != t) start = v;
        std::vector<char> seen(g.n(), 0);
        seen[s] = seen[t] = 1;
        std::vector<int> stack{start};
        seen[start] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (!seen[w]) { seen[w] = 1; stack.push_back(w); ++cnt; }
        }
        return cnt != g.n() - 2;
    };

    for (int k = 0; k < N; ++k) {
        const ExtensionStep& st = seq.steps[k];
        const std::set<int>& before = seq.stages[k];
        const Drawing& gprev = stage_dr[k];
        const Drawing& gcur = stage_dr[k + 1];
        std::string at = "step " + std::to_string(k + 1);

        if (int(st.added.size()) != 4 - int(st.link.kind))
            fail("added-vertex-count", at + ": kind and added vertices disagree");
        if (!is_2connected(gcur) || (k == 0 && !is_2connected(gprev)))
            fail("two-connected-stages", at + ": stage graph is not 2-connected");

        // priority: no stronger link may have existed
        bool saw_strong = false, saw_weak = false;
        for (const auto& q : find_k4_subgraphs(d)) {
            int inter = 0;
            for (int v : q) inter += before.count(v);
            saw_strong = saw_strong || inter == 3;
            saw_weak = saw_weak || inter == 2;
        }
        if (st.link.kind == K4Link::kWeak && saw_strong)
            fail("link-priority", at + ": weak link chosen while a strong link existed");
        if (st.link.kind == K4Link::kMicro && (saw_strong || saw_weak))
            fail("link-priority", at + ": micro link chosen while a strong or weak link existed");

        // density per kind; uniform form 3*de >= 7*dn + |new nests|
        if (st.slack_thirds < 0)
            fail(st.link.kind == K4Link::kStrong   ? "strong-step-density"
                 : st.link.kind == K4Link::kWeak   ? "weak-step-density"
                                                   : "micro-step-density",
                 at + ": 3*delta_e - (7*delta_n + new_nests) = " + std::to_string(st.slack_thirds));
        if (st.link.kind == K4Link::kWeak) {
            bool eq = st.slack_thirds == 0;
            bool shape = st.delta_edges == 5 && st.new_nests.size() == 1;
            if (eq != shape)
                fail("weak-step-equality",
                     at + ": equality iff delta_e = 5 and one new nest; got delta_e = " +
                         std::to_string(st.delta_edges) + ", nests = " + std::to_string(st.new_nests.size()));
        }
        if (st.link.kind == K4Link::kMicro) {
            if (!st.new_nests.empty()) fail("micro-step-nests", at + ": micro step created a nest");
            if (st.link.extra_edges.empty())
                fail("micro-extra-edges", at + ": micro step added no edge beyond the link");
            bool eq = st.delta_edges == 7;
            if (eq != st.link.simple)
                fail("micro-step-equality", at + ": delta_e = 7 must coincide with a single extra edge");
            if (st.link.simple) {
                if (k + 1 >= N) fail("simple-micro-followup", at + ": simple micro step ends the sequence");
                else if (seq.steps[k + 1].link.kind == K4Link::kMicro)
                    fail("simple-micro-followup", at + ": simple micro step followed by another micro step");
            }
        }

        // removability laws
        auto prev_pairs = edge_pairs_of(gprev);
        std::set<std::pair<int, int>> link_pairs;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                link_pairs.insert({std::min(st.link.verts[i], st.link.verts[j]),
                                   std::max(st.link.verts[i], st.link.verts[j])});
        for (const auto& [a, b] : edge_pairs_of(gcur)) {
            bool in_prev = prev_pairs.count({a, b}) > 0;
            bool in_link = link_pairs.count({a, b}) > 0;
            bool rem = removable_in(gcur, a, b);
            if (!in_prev && in_link && !rem)
                fail("new-link-edge-removable",
                     at + ": link edge " + d.vnames[a] + "-" + d.vnames[b] + " is non-removable");
            if (in_prev && removable_in(gprev, a, b) && !rem)
                fail("removability-persists",
                     at + ": edge " + d.vnames[a] + "-" + d.vnames[b] + " lost removability");
            if (!in_prev && !in_link) {
                bool is_extra = false;
                for (int e : st.link.extra_edges)
                    is_extra = is_extra || (std::min(d.edges[e].u, d.edges[e].v) == a &&
                                            std::max(d.edges[e].u, d.edges[e].v) == b);
                bool should_be_nonremovable = st.link.kind == K4Link::kMicro && st.link.simple && is_extra;
                if (rem == should_be_nonremovable)
                    fail("extra-edge-removability",
                         at + ": edge " + d.vnames[a] + "-" + d.vnames[b] +
                             (rem ? " removable but expected the unique non-removable extra edge"
                                  : " non-removable without being the simple-micro extra edge"));
            }
        }

        // fresh cut pairs must come from weak or micro steps
        std::vector<int> cur_vs(seq.stages[k + 1].begin(), seq.stages[k + 1].end());
        for (size_t i = 0; i < cur_vs.size(); ++i)
            for (size_t j = i + 1; j < cur_vs.size(); ++j) {
                int s = cur_vs[i], t = cur_vs[j];
                if (!cuts(gcur, s, t)) continue;
                bool was = before.count(s) && before.count(t) && cuts(gprev, s, t);
                if (was) continue;
                if (st.link.kind == K4Link::kStrong)
                    fail("cut-pair-step-kind", at + ": strong step created cut pair {" + d.vnames[s] +
                                                   "," + d.vnames[t] + "}");
                int inter = int(before.count(s)) + int(before.count(t));
                if (!(inter == 2 || (st.link.kind == K4Link::kMicro && inter == 1)))
                    fail("cut-pair-membership", at + ": fresh cut pair {" + d.vnames[s] + "," +
                                                    d.vnames[t] + "} has the wrong overlap with the stage");
            }
    }

    // non-removable edges arise exactly as simple-micro extra edges
    for (int k = 1; k <= N; ++k) {
        const Drawing& g = stage_dr[k];
        for (const auto& [a, b] : edge_pairs_of(g)) {
            if (removable_in(g, a, b)) continue;
            int i1 = od_edge(seq, a, b);
            bool ok = i1 > 0;
            if (ok) {
                const ExtensionStep& src = seq.steps[i1 - 1];
                ok = src.link.kind == K4Link::kMicro && src.link.simple;
                if (ok) {
                    bool is_extra = false;
                    for (int e : src.link.extra_edges)
                        is_extra = is_extra || (std::min(d.edges[e].u, d.edges[e].v) == a &&
                                                std::max(d.edges[e].u, d.edges[e].v) == b);
                    ok = is_extra;
                }
            }
            if (!ok)
                fail("non-removable-provenance",
                     "stage " + std::to_string(k) + ": non-removable edge " + d.vnames[a] + "-" +
                         d.vnames[b] + " did not arise as a simple-micro extra edge");
        }
    }

    // a crossing whose crossed edge predates f forces f removable at od(x)
    for (const auto& cr : d.crossings) {
        for (int flip = 0; flip < 2; ++flip) {
            int exx = flip ? cr.eb : cr.ea;
            int ee = flip ? cr.ea : cr.eb;
            int ode = od_edge(seq, d.edges[ee].u, d.edges[ee].v);
            for (int xpick = 0; xpick < 2; ++xpick) {
                int x = xpick ? d.edges[exx].v : d.edges[exx].u;
                int odx = od_vertex(seq, x);
                if (ode >= odx) continue;
                const Drawing& g = stage_dr[odx];
                for (const auto& [a, b] : edge_pairs_of(g)) {
                    int odf = od_edge(seq, a, b);
                    if (!(ode < odf && odf < odx)) continue;
                    if (!removable_in(g, a, b))
                        fail("crossing-order-removability",
                             "edge " + d.vnames[a] + "-" + d.vnames[b] +
                                 " must be removable at the arrival of " + d.vnames[x]);
                }
            }
        }
    }

    // before each strong step, the two forbidden local patterns must be absent
    for (int k = 0; k < N; ++k) {
        if (seq.steps[k].link.kind != K4Link::kStrong) continue;
        const std::set<int>& gi_set = seq.stages[k];
        const Drawing& g = stage_dr[k];
        int x = seq.steps[k].added[0];
        // crossings x-c over a non-removable stage edge a-b
        std::vector<std::pair<int, int>> hits; // (a,b) edges of G_i crossed by an x-c edge
        for (const auto& cr : d.crossings) {
            for (int flip = 0; flip < 2; ++flip) {
                int exc = flip ? cr.eb : cr.ea;
                int eab = flip ? cr.ea : cr.eb;
                int c = -1;
                if (d.edges[exc].u == x) c = d.edges[exc].v;
                if (d.edges[exc].v == x) c = d.edges[exc].u;
                if (c < 0 || !gi_set.count(c)) continue;
                int a = d.edges[eab].u, b = d.edges[eab].v;
                if (!gi_set.count(a) || !gi_set.count(b)) continue;
                if (!removable_in(g, a, b)) hits.push_back({std::min(a, b), std::max(a, b)});
            }
        }
        std::sort(hits.begin(), hits.end());
        hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
        if (hits.size() >= 2)
            fail("pre-strong-pattern-1",
                 "step " + std::to_string(k + 1) +
                     ": two non-removable stage edges are crossed from the incoming vertex");
        // 3-cycle a,b,c with ab non-removable, {a,c},{b,c} cut pairs, xc crossing ab
        for (const auto& cr : d.crossings) {
            for (int flip = 0; flip < 2; ++flip) {
                int exc = flip ? cr.eb : cr.ea;
                int eab = flip ? cr.ea : cr.eb;
                int c = -1;
                if (d.edges[exc].u == x) c = d.edges[exc].v;
                if (d.edges[exc].v == x) c = d.edges[exc].u;
                if (c < 0 || !gi_set.count(c)) continue;
                int a = d.edges[eab].u, b = d.edges[eab].v;
                if (!gi_set.count(a) || !gi_set.count(b)) continue;
                if (!d.adjacent(a, c) || !d.adjacent(b, c)) continue;
                if (removable_in(g, a, b)) continue;
                auto gcuts = [&](int p, int q) { return cuts(g, p, q); };
                if (gcuts(a, c) && gcuts(b, c))
                    fail("pre-strong-pattern-2",
                         "step " + std::to_string(k + 1) + ": forbidden 3-cycle pattern at {" +
                             d.vnames[a] + "," + d.vnames[b] + "," + d.vnames[c] + "}");
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lower-bound certificate.

struct BoundNode {
    int n = 0, e = 0;          // sub-drawing, hermits included
    int hermits = 0;
    int skel_n = 0, skel_e = 0;
    bool leaf = true;
    bool k4_leaf = false;      // complete block on 4 vertices
    int nest = 0;              // leaf: nests of the skeleton
    long slack_thirds = 0;     // leaf: 3*skel_e - (7*skel_n + nest - 9)
    std::string split_edge, cut_vertex; // internal node
    std::vector<BoundNode> children;
};

struct BoundCertificate {
    std::string input;   // canonical text of the checked drawing
    BoundNode root;
    int n = 0, e = 0;
    int bound = 0;       // ceil(7n/3) - 3
    bool verdict = false;
};

namespace detail {

inline BoundNode verify_bound_node(const Drawing& d, int depth) {
    if (depth > 64) throw InvariantError("verify_bound: split recursion too deep");
    if (!is_maximal(d))
        throw InvariantError("verify_bound: sub-drawing is not maximal; input violates maximality premise");
    BoundNode node;
    node.n = d.n();
    node.e = d.m();
    SkeletonResult sk = skeleton(d);
    node.hermits = int(sk.hermits.size());
    node.skel_n = sk.skeleton.n();
    node.skel_e = sk.skeleton.m();
    if (node.n != node.skel_n + node.hermits || node.e != node.skel_e + 2 * node.hermits)
        throw InvariantError("verify_bound: hermit bookkeeping failed; input violates maximality premise");
    if (node.skel_n < 4) throw InvariantError("verify_bound: skeleton smaller than K4");
    if (node.skel_n == 4) {
        if (node.skel_e != 6 || node.hermits != 0)
            throw InvariantError("verify_bound: order-4 block is not a bare K4");
        node.k4_leaf = true;
        node.nest = 0;
        node.slack_thirds = 3L * node.skel_e - (7L * node.skel_n - 10); // = 0
        return node;
    }
    auto exc = exceptional_edges(sk.skeleton);
    if (exc.empty()) {
        node.nest = nest_count(sk.skeleton);
        if (node.nest < node.hermits)
            throw InvariantError("verify_bound: fewer skeleton nests than hermits");
        node.slack_thirds = 3L * node.skel_e - (7L * node.skel_n + node.nest - 9);
        if (node.slack_thirds < 0)
            throw InvariantError(
                "verify_bound: leaf density bound violated (counterexample candidate, treat as a bug)");
        return node;
    }
    // split at the lexicographically least exceptional edge
    int pick = exc[0];
    auto ekey = [&](int e) {
        auto a = sk.skeleton.vnames[sk.skeleton.edges[e].u];
        auto b = sk.skeleton.vnames[sk.skeleton.edges[e].v];
        if (b < a) std::swap(a, b);
        return std::make_pair(a, b);
    };
    for (int e : exc)
        if (ekey(e) < ekey(pick)) pick = e;
    node.leaf = false;
    node.split_edge = sk.skeleton.edges[pick].id;
    SplitResult sp = split_at_exceptional(sk.skeleton, node.split_edge);
    node.cut_vertex = sp.cut_vertex;
    // hand every hermit back to the block owning its nest
    std::set<NestKey> nests1;
    for (const auto& nst : find_nests(sp.h1)) nests1.insert(nst.key);
    std::vector<std::string> v1, v2;
    for (const auto& nm : sp.h1.vnames) v1.push_back(nm);
    for (const auto& nm : sp.h2.vnames) v2.push_back(nm);
    for (const auto& a : sk.hermits) {
        if (!a.nest) throw InvariantError("verify_bound: hermit without a host nest");
        (nests1.count(*a.nest) ? v1 : v2).push_back(a.hermit);
    }
    BoundNode c1 = verify_bound_node(induced_subdrawing(d, v1), depth + 1);
    BoundNode c2 = verify_bound_node(induced_subdrawing(d, v2), depth + 1);
    if (c1.n + c2.n - 1 != node.n || c1.e + c2.e + 1 != node.e)
        throw InvariantError("verify_bound: split bookkeeping failed");
    if (c1.k4_leaf && c2.k4_leaf)
        throw InvariantError(
            "verify_bound: both blocks are bare K4s; input violates maximality premise");
    node.children.push_back(std::move(c1));
    node.children.push_back(std::move(c2));
    return node;
}

// guaranteed lower bound for 3*e(node), from leaf inequalities alone
inline long bound_guarantee_thirds(const BoundNode& nd) {
    if (nd.k4_leaf) return 7L * 4 - 10;
    if (nd.leaf) return 7L * nd.n - 9;
    return bound_guarantee_thirds(nd.children[0]) + bound_guarantee_thirds(nd.children[1]) + 3;
}

} // namespace detail

inline BoundCertificate verify_bound(const Drawing& d) {
    if (d.n() < 5)
        throw InvariantError("verify_bound: defined for order at least 5 (order <= 4 is complete)");
    if (!is_maximal(d)) throw InvariantError("verify_bound: input drawing is not maximal");
    BoundCertificate cert;
    cert.input = canonical_text(d);
    cert.n = d.n();
    cert.e = d.m();
    cert.bound = hn_size_formula(d.n());
    cert.root = detail::verify_bound_node(d, 0);
    cert.verdict = cert.e >= cert.bound && 3L * cert.e >= detail::bound_guarantee_thirds(cert.root);
    return cert;
}

// Arithmetic re-validation from the certificate fields alone.
inline bool validate_certificate(const BoundCertificate& cert) {
    bool ok = true;
    std::vector<const BoundNode*> stack{&cert.root};
    while (!stack.empty()) {
        const BoundNode* nd = stack.back();
        stack.pop_back();
        if (nd->k4_leaf) {
            ok = ok && nd->n == 4 && nd->e == 6 && nd->hermits == 0 && nd->nest == 0;
            continue;
        }
        if (nd->leaf) {
            ok = ok && nd->n == nd->skel_n + nd->hermits && nd->e == nd->skel_e + 2 * nd->hermits;
            ok = ok && nd->skel_n >= 5 && nd->nest >= nd->hermits;
            ok = ok && nd->slack_thirds == 3L * nd->skel_e - (7L * nd->skel_n + nd->nest - 9);
            ok = ok && nd->slack_thirds >= 0;
            continue;
        }
        ok = ok && nd->children.size() == 2;
        if (nd->children.size() == 2) {
            ok = ok && nd->n == nd->children[0].n + nd->children[1].n - 1;
            ok = ok && nd->e == nd->children[0].e + nd->children[1].e + 1;
            ok = ok && !(nd->children[0].k4_leaf && nd->children[1].k4_leaf);
            for (const auto& c : nd->children) stack.push_back(&c);
        }
    }
    ok = ok && 3L * cert.e >= detail::bound_guarantee_thirds(cert.root);
    ok = ok && cert.bound == (7 * cert.n + 2) / 3 - 3;
    ok = ok && cert.verdict == (cert.e >= cert.bound);
    return ok;
}

} // namespace oneplane

#pragma once

// Kauffman bracket and the writhe-normalized Jones polynomial.
//
// Conventions, locked by the reference trefoil reproducing the printed
// polynomial -t^-4+t^-3+t^-1:
//   * A-smoothing of X(a,b,c,d) joins (a,b) and (c,d); B joins (a,d),(b,c).
//   * loop value delta = -A^2 - A^-2, applied per loop beyond the first.
//   * J = (-A)^{-3w} <K> with t = A^-4.
//
// bracket_oracle enumerates all 2^n smoothing states and is the correctness
// reference. bracket_fast processes crossings one at a time, keeping a map
// from boundary matchings (pairings of open arc ends) to coefficient
// polynomials; the crossing order is chosen greedily to keep the open
// boundary narrow. Ordering affects speed only, never the value.

#include "knotinv/diagram.hpp"
#include "knotinv/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

namespace knotinv {

struct BracketPoly {
    LaurentPoly p;  // variable A

    friend bool operator==(const BracketPoly& x, const BracketPoly& y) { return x.p == y.p; }

    std::string str() const { return p.str('A'); }
};

inline const LaurentPoly& bracket_delta() {
    static const LaurentPoly d = LaurentPoly::from_terms({{2, -1}, {-2, -1}});
    return d;
}

namespace detail {

// Exact division by delta; the accumulated state sum always carries one
// factor of delta per closed loop, and the bracket normalizes one away.
inline LaurentPoly divide_by_delta(LaurentPoly p) {
    LaurentPoly q;
    const LaurentPoly& d = bracket_delta();
    long long budget = p.is_zero() ? 0 : (p.max_exp() - p.min_exp()) / 2 + 2;
    while (!p.is_zero()) {
        if (--budget < 0) throw internal_error("bracket: state sum not divisible by delta");
        long long e = p.max_exp();
        BigInt c = -p.coeff(e);  // leading coefficient of delta is -1 at A^2
        q.add_term(e - 2, c);
        p = p - d.shifted(e - 2).scaled(c);
    }
    return q;
}

}  // namespace detail

// Full 2^n state sum. Exponential; intended as an oracle for small diagrams
// (n <= 14 or so).
inline BracketPoly bracket_oracle(const PlanarDiagram& d) {
    if (d.is_unknot()) return BracketPoly{LaurentPoly::constant(1)};
    const auto& cr = d.crossings();
    const int n = static_cast<int>(cr.size());
    const int arcs = 2 * n;

    std::vector<LaurentPoly> delta_pow(static_cast<size_t>(n) + 2);
    delta_pow[0] = LaurentPoly::constant(1);
    for (size_t k = 1; k < delta_pow.size(); ++k)
        delta_pow[k] = delta_pow[k - 1] * bracket_delta();

    LaurentPoly total;
    for (std::uint32_t state = 0; state < (1u << n); ++state) {
        detail::UnionFind uf(arcs + 1);
        int a_count = 0;
        for (int i = 0; i < n; ++i) {
            const auto& t = cr[static_cast<size_t>(i)].arc;
            if (state & (1u << i)) {  // B-smoothing: (a,d),(b,c)
                uf.unite(static_cast<int>(t[0]), static_cast<int>(t[3]));
                uf.unite(static_cast<int>(t[1]), static_cast<int>(t[2]));
            } else {  // A-smoothing: (a,b),(c,d)
                uf.unite(static_cast<int>(t[0]), static_cast<int>(t[1]));
                uf.unite(static_cast<int>(t[2]), static_cast<int>(t[3]));
                ++a_count;
            }
        }
        int loops = 0;
        for (int v = 1; v <= arcs; ++v)
            if (uf.find(v) == v) ++loops;
        total = total + delta_pow[static_cast<size_t>(loops - 1)].shifted(2 * a_count - n);
    }
    return BracketPoly{total};
}

namespace detail {

// One boundary state: a perfect matching on the currently open arc labels,
// stored as a flat sorted (lo,hi) pair list so it can key a map.
using MatchKey = std::vector<long long>;

struct StepResult {
    MatchKey key;
    int loops = 0;
};

// Other-occurrence table: for each arc label, the one or two crossings where
// it appears.
struct ArcUses {
    std::vector<std::array<int, 2>> use;  // crossing indices, -1 if unused

    ArcUses(const std::vector<Crossing>& cr, long long arcs)
        : use(static_cast<size_t>(arcs) + 1, {-1, -1}) {
        for (size_t i = 0; i < cr.size(); ++i)
            for (long long v : cr[i].arc) {
                auto& u = use[static_cast<size_t>(v)];
                (u[0] < 0 ? u[0] : u[1]) = static_cast<int>(i);
            }
    }

    // The crossing holding the other occurrence of this arc. Only meaningful
    // when the two occurrences sit on different crossings.
    int other(long long arc, int self) const {
        const auto& u = use[static_cast<size_t>(arc)];
        return u[0] == self ? u[1] : u[0];
    }

    bool both_here(long long arc, int self) const {
        const auto& u = use[static_cast<size_t>(arc)];
        return u[0] == self && u[1] == self;
    }
};

// Merge one smoothed crossing into a boundary matching. Nodes are the four
// crossing ports plus open arc ends; every node has degree <= 2, so the
// union of matching edges, smoothing arcs and arc identifications splits
// into paths (their endpoints form the new matching) and cycles (closed
// loops). Ports are numbered -1..-4 to keep them distinct from arc labels.
inline StepResult merge_crossing(const MatchKey& key, const Crossing& cx, int self,
                                 const ArcUses& uses, const std::vector<char>& processed,
                                 bool b_smoothing) {
    // Edges, each listed once. Node encoding: ports are -1..-4, arcs > 0.
    std::vector<std::pair<long long, long long>> edges;
    auto port = [](int slot) { return static_cast<long long>(-(slot + 1)); };
    if (b_smoothing) {
        edges.push_back({port(0), port(3)});
        edges.push_back({port(1), port(2)});
    } else {
        edges.push_back({port(0), port(1)});
        edges.push_back({port(2), port(3)});
    }
    std::vector<char> self_arc_done(4, 0);
    std::vector<long long> new_end_label(4, 0);
    for (int slot = 0; slot < 4; ++slot) {
        long long arc = cx.arc[static_cast<size_t>(slot)];
        if (uses.both_here(arc, self)) {
            if (!self_arc_done[static_cast<size_t>(slot)]) {
                // connect the two slots carrying the same arc
                for (int s2 = slot + 1; s2 < 4; ++s2)
                    if (cx.arc[static_cast<size_t>(s2)] == arc) {
                        edges.push_back({port(slot), port(s2)});
                        self_arc_done[static_cast<size_t>(s2)] = 1;
                        break;
                    }
            }
        } else if (processed[static_cast<size_t>(uses.other(arc, self))]) {
            edges.push_back({port(slot), arc});  // closes onto an open end
        } else {
            new_end_label[static_cast<size_t>(slot)] = arc;  // becomes a new open end
        }
    }
    // Matching edges among open ends (lazily: only those reachable matter,
    // but listing them all keeps the walk straightforward).
    for (size_t i = 0; i + 1 < key.size(); i += 2) edges.push_back({key[i], key[i + 1]});

    std::unordered_map<long long, std::vector<int>> adj;
    adj.reserve(edges.size() * 2);
    for (int ei = 0; ei < static_cast<int>(edges.size()); ++ei) {
        adj[edges[static_cast<size_t>(ei)].first].push_back(ei);
        adj[edges[static_cast<size_t>(ei)].second].push_back(ei);
    }

    auto end_label = [&](long long node) -> long long {
        if (node > 0) return node;
        long long lbl = new_end_label[static_cast<size_t>(-node - 1)];
        if (lbl == 0) throw internal_error("bracket: interior node treated as endpoint");
        return lbl;
    };

    StepResult out;
    std::vector<char> edge_used(edges.size(), 0);
    std::vector<std::pair<long long, long long>> pairs;

    // Walk open paths from each degree-1 node.
    for (const auto& [node, inc] : adj) {
        if (inc.size() != 1) continue;
        int e0 = inc[0];
        if (edge_used[static_cast<size_t>(e0)]) continue;
        long long cur = node;
        int via = e0;
        for (;;) {
            edge_used[static_cast<size_t>(via)] = 1;
            const auto& ed = edges[static_cast<size_t>(via)];
            long long nxt = ed.first == cur ? ed.second : ed.first;
            const auto& ninc = adj[nxt];
            if (ninc.size() == 1) {
                pairs.push_back({end_label(node), end_label(nxt)});
                break;
            }
            via = (ninc[0] == via) ? ninc[1] : ninc[0];
            cur = nxt;
        }
    }
    // Remaining unused edges belong to cycles: each cycle is a closed loop.
    for (int ei = 0; ei < static_cast<int>(edges.size()); ++ei) {
        if (edge_used[static_cast<size_t>(ei)]) continue;
        ++out.loops;
        int via = ei;
        long long cur = edges[static_cast<size_t>(ei)].first;
        for (;;) {
            edge_used[static_cast<size_t>(via)] = 1;
            const auto& ed = edges[static_cast<size_t>(via)];
            long long nxt = ed.first == cur ? ed.second : ed.first;
            const auto& ninc = adj[nxt];
            via = (ninc[0] == via) ? ninc[1] : ninc[0];
            cur = nxt;
            if (!edge_used[static_cast<size_t>(via)]) continue;
            break;
        }
    }

    for (auto& pr : pairs)
        if (pr.first > pr.second) std::swap(pr.first, pr.second);
    std::sort(pairs.begin(), pairs.end());
    out.key.reserve(pairs.size() * 2);
    for (const auto& pr : pairs) {
        out.key.push_back(pr.first);
        out.key.push_back(pr.second);
    }
    return out;
}

}  // namespace detail

// Boundary-state transfer computation of the bracket; same value as
// bracket_oracle on every diagram.
inline BracketPoly bracket_fast(const PlanarDiagram& d) {
    if (d.is_unknot()) return BracketPoly{LaurentPoly::constant(1)};
    const auto& cr = d.crossings();
    const int n = static_cast<int>(cr.size());
    detail::ArcUses uses(cr, d.arc_count());

    std::vector<char> processed(static_cast<size_t>(n), 0);
    std::map<detail::MatchKey, LaurentPoly> states;
    states[{}] = LaurentPoly::constant(1);

    for (int step = 0; step < n; ++step) {
        // Greedy: take the crossing sharing the most arcs with the boundary.
        int best = -1, best_score = -1;
        for (int i = 0; i < n; ++i) {
            if (processed[static_cast<size_t>(i)]) continue;
            int score = 0;
            for (long long arc : cr[static_cast<size_t>(i)].arc) {
                if (uses.both_here(arc, i)) continue;
                if (processed[static_cast<size_t>(uses.other(arc, i))]) ++score;
            }
            if (score > best_score) {
                best_score = score;
                best = i;
            }
        }
        std::map<detail::MatchKey, LaurentPoly> next;
        for (const auto& [key, coef] : states) {
            for (int smooth = 0; smooth < 2; ++smooth) {
                detail::StepResult r = detail::merge_crossing(
                    key, cr[static_cast<size_t>(best)], best, uses, processed, smooth == 1);
                LaurentPoly contrib = coef.shifted(smooth == 1 ? -1 : +1);
                for (int l = 0; l < r.loops; ++l) contrib = contrib * bracket_delta();
                LaurentPoly& slot = next[r.key];
                slot = slot + contrib;
            }
        }
        processed[static_cast<size_t>(best)] = 1;
        states = std::move(next);
    }

    if (states.size() != 1 || states.begin()->first != detail::MatchKey{})
        throw internal_error("bracket: boundary did not close");
    return BracketPoly{detail::divide_by_delta(states.begin()->second)};
}

// Writhe-normalized bracket with t = A^-4 substituted. For any valid knot
// diagram the normalized exponents are multiples of 4; anything else signals
// a sign-convention bug upstream.
inline LaurentPoly jones(const PlanarDiagram& d) {
    if (d.is_unknot()) return LaurentPoly::constant(1);
    BracketPoly b = bracket_fast(d);
    long long w = d.writhe();
    LaurentPoly f = b.p.shifted(-3 * w);
    if (mod_euclid(w, 2) == 1) f = -f;
    LaurentPoly j;
    for (const auto& [e, c] : f.terms()) {
        if (mod_euclid(e, 4) != 0)
            throw internal_error("jones: normalized bracket exponent " + std::to_string(e) +
                                 " not divisible by 4");
        j.add_term(-e / 4, c);
    }
    return j;
}

}  // namespace knotinv

#include "gsp/cut.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <optional>

namespace gsp {

namespace {

// Exact verification needs fourth powers of the total weight inside 128-bit
// integers, and side-weight products inside 64 bits for the ratio.
constexpr long long kMaxTotalWeight = 3'000'000'000ll;

void require_ratio_scale(const SearchInstance& g) {
    if (g.total_weight() > kMaxTotalWeight)
        throw TooLarge("total weight too large for exact ratio arithmetic");
}

int128 side_product(long long s, long long t, long long x) {
    return static_cast<int128>(s + t) * (s + x - t);
}

// ratio a_cost/a_prod < b_cost/b_prod, exactly.
bool ratio_less(long long a_cost, int128 a_prod, long long b_cost, int128 b_prod) {
    return static_cast<int128>(a_cost) * b_prod < static_cast<int128>(b_cost) * a_prod;
}

struct SplitPick {
    long long t = 0;        // weight of side A's components
    int128 product = 0;     // (w(S)+t) * (w(S)+X-t)
};

// Best achievable side-A weight over nonempty proper component subsets, with
// component 0 pinned to side B. cw holds component weights; s = w(S).
// Product is maximized by the achievable t nearest X/2; equal products pick
// the smaller t.
std::optional<SplitPick> best_split_weight(const std::vector<long long>& cw, long long s) {
    const int p = static_cast<int>(cw.size());
    if (p < 2) return std::nullopt;
    long long x = 0;
    for (long long w : cw) x += w;
    bool has_zero_item = false;
    for (int i = 1; i < p; ++i) has_zero_item |= cw[i] == 0;
    // Achievable subset sums of cw[1..p-1] as a bitset.
    std::vector<uint64_t> reach((x >> 6) + 1, 0);
    reach[0] = 1;
    for (int i = 1; i < p; ++i) {
        long long sh = cw[i];
        if (sh == 0) continue;
        for (long long b = x - sh; b >= 0; --b)
            if ((reach[b >> 6] >> (b & 63)) & 1) reach[(b + sh) >> 6] |= 1ull << ((b + sh) & 63);
    }
    auto valid = [&](long long t) {
        if (t < 0 || t > x) return false;
        if (!((reach[t >> 6] >> (t & 63)) & 1)) return false;
        return t > 0 || has_zero_item;  // t = 0 needs a zero-weight component
    };
    long long lo = -1, hi = -1;
    for (long long t = x / 2; t >= 0; --t)
        if (valid(t)) {
            lo = t;
            break;
        }
    for (long long t = x / 2 + 1; t <= x; ++t)
        if (valid(t)) {
            hi = t;
            break;
        }
    if (lo < 0 && hi < 0) return std::nullopt;
    SplitPick pick;
    if (lo < 0 || (hi >= 0 && side_product(s, hi, x) > side_product(s, lo, x)))
        pick.t = hi;
    else
        pick.t = lo;
    pick.product = side_product(s, pick.t, x);
    return pick;
}

// Recovers a concrete component subset for side A of weight t (pinning
// component 0 to side B), preferring to leave components out.
std::vector<int> split_members(const std::vector<long long>& cw, long long t) {
    const int p = static_cast<int>(cw.size());
    if (t == 0) {
        for (int i = 1; i < p; ++i)
            if (cw[i] == 0) return {i};
        internal_check(false, "no zero-weight component for an empty-weight side");
    }
    long long x = 0;
    for (int i = 1; i < p; ++i) x += cw[i];
    std::vector<std::vector<char>> reach(p, std::vector<char>(x + 1, 0));
    reach[0][0] = 1;
    for (int i = 1; i < p; ++i)
        for (long long v = 0; v <= x; ++v)
            reach[i][v] = reach[i - 1][v] || (v >= cw[i] && reach[i - 1][v - cw[i]]);
    internal_check(reach[p - 1][t], "side weight not reachable during reconstruction");
    std::vector<int> members;
    long long rem = t;
    for (int i = p - 1; i >= 1; --i)
        if (!reach[i - 1][rem]) {
            members.push_back(i);
            rem -= cw[i];
        }
    internal_check(rem == 0 && !members.empty(), "bad subset-sum reconstruction");
    std::reverse(members.begin(), members.end());
    return members;
}

VertexCut finish_cut(const SearchInstance& g, const VertexSet& sep,
                     const std::vector<InducedSubgraph>& comps, const std::vector<int>& a_members) {
    VertexCut cut;
    cut.s = sep;
    cut.a = VertexSet(g.n);
    cut.b = VertexSet(g.n);
    std::vector<char> in_a(comps.size(), 0);
    for (int i : a_members) in_a[i] = 1;
    for (size_t i = 0; i < comps.size(); ++i)
        (in_a[i] ? cut.a : cut.b) |= comps[i].vertices;
    long long wa = g.weight_of(cut.a), wb = g.weight_of(cut.b), ws = g.weight_of(cut.s);
    // Heavier side first; on equal weights the side holding the lowest vertex.
    if (wa < wb || (wa == wb && cut.b.first() < cut.a.first())) std::swap(cut.a, cut.b);
    cut.cut_cost = g.cost_of(cut.s);
    long long prod = (g.weight_of(cut.a) + ws) * (g.weight_of(cut.b) + ws);
    cut.ratio = Rat(cut.cut_cost, prod);
    return cut;
}

// Packs the components of g - sep onto two sides with maximal side-weight
// product; nullopt when fewer than two components exist.
std::optional<VertexCut> cut_for_separator(const SearchInstance& g, const VertexSet& sep) {
    auto comps = components(g, sep, VertexSet::all(g.n));
    if (comps.size() < 2) return std::nullopt;
    std::vector<long long> cw(comps.size());
    for (size_t i = 0; i < comps.size(); ++i) cw[i] = comps[i].weight();
    auto pick = best_split_weight(cw, g.weight_of(sep));
    if (!pick) return std::nullopt;
    return finish_cut(g, sep, comps, split_members(cw, pick->t));
}

bool cut_better(const VertexCut& cand, const VertexCut& best) {
    int128 cand_prod = static_cast<int128>(cand.ratio.den);
    int128 best_prod = static_cast<int128>(best.ratio.den);
    if (ratio_less(cand.ratio.num, cand_prod, best.ratio.num, best_prod)) return true;
    if (ratio_less(best.ratio.num, best_prod, cand.ratio.num, cand_prod)) return false;
    if (cand.cut_cost != best.cut_cost) return cand.cut_cost < best.cut_cost;
    return lex_less(cand.s, best.s);
}

}  // namespace

bool cut_valid(const SearchInstance& g, const VertexCut& cut) {
    if (cut.a.universe() != g.n || cut.s.universe() != g.n || cut.b.universe() != g.n)
        return false;
    if (cut.a.empty() || cut.b.empty()) return false;
    if (cut.a.count() + cut.s.count() + cut.b.count() != g.n) return false;
    if (!((cut.a | cut.s | cut.b) == VertexSet::all(g.n))) return false;
    for (int u : cut.a)
        for (int v : g.adj[u])
            if (cut.b.test(v)) return false;
    return true;
}

VertexCut cut_exact(const SearchInstance& g) {
    if (g.n < 2) throw NoCut("cut needs at least two vertices");
    if (g.n > 18) throw TooLarge("exact cut is limited to 18 vertices");
    require_ratio_scale(g);
    const int n = g.n;
    std::vector<uint32_t> am(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.adj[u]) am[u] |= 1u << v;
    const uint32_t full = (1u << n) - 1;

    bool found = false;
    long long best_cost = 0;
    int128 best_prod = 1;
    VertexSet best_set(n);

    std::vector<long long> cw;
    for (uint32_t S = 0;; ++S) {
        uint32_t rest = full & ~S;
        cw.clear();
        while (rest) {
            uint32_t frontier = rest & (~rest + 1), comp = 0;
            while (frontier) {
                comp |= frontier;
                uint32_t grow = 0;
                for (uint32_t m = frontier; m; m &= m - 1) grow |= am[std::countr_zero(m)];
                frontier = grow & rest & ~comp;
            }
            long long w = 0;
            for (uint32_t m = comp; m; m &= m - 1) w += g.weight[std::countr_zero(m)];
            cw.push_back(w);
            rest &= ~comp;
        }
        if (cw.size() >= 2) {
            long long s_weight = 0, s_cost = 0;
            for (uint32_t m = S; m; m &= m - 1) {
                int v = std::countr_zero(m);
                s_weight += g.weight[v];
                s_cost += g.cost[v];
            }
            if (auto pick = best_split_weight(cw, s_weight)) {
                bool take = !found;
                if (found && ratio_less(s_cost, pick->product, best_cost, best_prod)) take = true;
                if (found && !take &&
                    !ratio_less(best_cost, best_prod, s_cost, pick->product)) {
                    // equal ratio: smaller separator cost, then lexicographic
                    if (s_cost < best_cost) take = true;
                    if (s_cost == best_cost) {
                        VertexSet cand(n);
                        for (uint32_t m = S; m; m &= m - 1) cand.add(std::countr_zero(m));
                        if (lex_less(cand, best_set)) take = true;
                    }
                }
                if (take) {
                    found = true;
                    best_cost = s_cost;
                    best_prod = pick->product;
                    best_set = VertexSet(n);
                    for (uint32_t m = S; m; m &= m - 1) best_set.add(std::countr_zero(m));
                }
            }
        }
        if (S == full) break;
    }
    if (!found) throw NoCut("no vertex cut with two nonempty sides exists");
    auto cut = cut_for_separator(g, best_set);
    internal_check(cut.has_value(), "winning separator lost its components");
    internal_check(cut->cut_cost == best_cost, "cut reconstruction cost mismatch");
    return *cut;
}

VertexCut cut_heuristic(const SearchInstance& g, uint64_t seed) {
    if (g.n < 2) throw NoCut("cut needs at least two vertices");
    require_ratio_scale(g);
    const int n = g.n;
    std::optional<VertexCut> best;
    auto offer = [&](const VertexSet& sep) {
        if (auto cut = cut_for_separator(g, sep))
            if (!best || cut_better(*cut, *best)) best = std::move(cut);
    };

    // Family 1: single-vertex separators.
    for (int v = 0; v < n; ++v) offer(VertexSet::of(n, {v}));

    // Family 2: breadth-first layers from a few seeded sources. Edges never
    // skip a layer, so each middle layer separates lower from upper layers.
    std::mt19937_64 rng(seed);
    std::vector<int> sources{0};
    for (int i = 0; i < 3; ++i) {
        int s = static_cast<int>(rand_below(rng, n));
        if (std::find(sources.begin(), sources.end(), s) == sources.end()) sources.push_back(s);
    }
    for (int s : sources) {
        std::vector<int> dist(n, -1);
        std::vector<int> bfs{s};
        dist[s] = 0;
        int max_dist = 0;
        for (size_t i = 0; i < bfs.size(); ++i)
            for (int v : g.adj[bfs[i]])
                if (dist[v] < 0) {
                    dist[v] = dist[bfs[i]] + 1;
                    max_dist = std::max(max_dist, dist[v]);
                    bfs.push_back(v);
                }
        for (int layer = 1; layer < max_dist; ++layer) {
            VertexSet sep(n);
            for (int v = 0; v < n; ++v)
                if (dist[v] == layer) sep.add(v);
            offer(sep);
        }
    }

    // Family 3: everything except the first nonadjacent pair. Exists exactly
    // when the graph is not complete, so NoCut means complete here.
    [&] {
        for (int u = 0; u < n; ++u) {
            VertexSet non = VertexSet::all(n);
            non.remove(u);
            for (int v : g.adj[u]) non.remove(v);
            int v = non.next(u);
            if (v >= 0) {
                VertexSet sep = VertexSet::all(n);
                sep.remove(u);
                sep.remove(v);
                offer(sep);
                return;
            }
        }
    }();

    if (!best) throw NoCut("no vertex cut with two nonempty sides exists");
    return *best;
}

VertexCut solve_cut(const SearchInstance& g, const CutSolver& solver) {
    if (solver.kind == CutSolver::Kind::exact) {
        if (g.n > solver.exact_limit) throw TooLarge("instance exceeds the exact cut limit");
        return cut_exact(g);
    }
    return cut_heuristic(g, solver.seed);
}

std::pair<VertexSet, VertexSet> lambda_partition(const SearchInstance& g,
                                                 const VertexSet& separator) {
    require_ratio_scale(g);
    const long long total = g.total_weight();
    auto comps = components(g, separator, VertexSet::all(g.n));
    for (const auto& h : comps)
        if (2 * h.weight() > total)
            throw PreconditionViolated("component heavier than half the graph");

    std::vector<int> idx(comps.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int x, int y) {
        long long wx = comps[x].weight(), wy = comps[y].weight();
        if (wx != wy) return wx > wy;  // descending weight
        return x < y;                  // then ascending minimum vertex id
    });
    VertexSet a(g.n), b(g.n);
    long long wa = 0, wb = 0;
    for (int i : idx) {
        if (wb < wa) {
            b |= comps[i].vertices;
            wb += comps[i].weight();
        } else {  // ties go to the first side
            a |= comps[i].vertices;
            wa += comps[i].weight();
        }
    }
    if (wb > wa || (wa == wb && !b.empty() && (a.empty() || b.first() < a.first()))) {
        std::swap(a, b);
        std::swap(wa, wb);
    }

    // (6 + 2*sqrt(5)) * w(A+S) * w(B+S) >= w(G)^2, verified exactly:
    // either 6p already covers w^2, or square the surd term.
    const long long ws = g.weight_of(separator);
    const int128 prod = static_cast<int128>(wa + ws) * (wb + ws);
    const int128 w2 = static_cast<int128>(total) * total;
    bool holds = 6 * prod >= w2;
    if (!holds) {
        const int128 gap = w2 - 6 * prod;
        holds = gap * gap <= 20 * prod * prod;
    }
    internal_check(holds, "balanced partition missed its product bound");
    return {a, b};
}

}  // namespace gsp

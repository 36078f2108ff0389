#include "gsp/separator.hpp"

#include <bit>
#include <limits>
#include <tuple>

namespace gsp {

namespace {

constexpr long long INF = std::numeric_limits<long long>::max() / 4;

long long sat_add(long long a, long long b) { return (a >= INF || b >= INF) ? INF : a + b; }

SeparatorResult assemble(const SearchInstance& g, VertexSet separator) {
    SeparatorResult r;
    r.separator_cost = g.cost_of(separator);
    r.components = components(g, separator, VertexSet::all(g.n));
    r.separator = std::move(separator);
    return r;
}

}  // namespace

SeparatorResult separator_exact(const SearchInstance& t, long long k, SeparatorDpStats* stats) {
    if (!t.is_tree()) throw NotATree("separator_exact expects a tree instance");
    if (k < 0) throw InvalidParams("separator threshold must be >= 0");
    const int n = t.n;
    if (t.total_weight() <= k) return assemble(t, VertexSet(n));  // empty S is optimal

    // Root at vertex 0; BFS order gives parents before children.
    std::vector<int> par(n, -1), order;
    order.reserve(n);
    order.push_back(0);
    {
        std::vector<char> seen(n, 0);
        seen[0] = 1;
        for (size_t i = 0; i < order.size(); ++i)
            for (int v : t.adj[order[i]])
                if (!seen[v]) {
                    seen[v] = 1;
                    par[v] = order[i];
                    order.push_back(v);
                }
    }
    std::vector<std::vector<int>> ch(n);
    for (int v = 0; v < n; ++v)
        if (par[v] >= 0) ch[par[v]].push_back(v);  // ascending, since v grows over adj scans
    for (auto& c : ch) std::sort(c.begin(), c.end());

    // closed[v]: best cost for v's subtree with v in S. open[v][w]: best cost
    // with v out of S and its still-open component weighing exactly w <= k.
    // pick[v][i][w] records, for the prefix ending at child i, whether that
    // child went into S (-1) or stayed open contributing weight j (>= 0);
    // -2 marks unreachable states.
    std::vector<long long> closed(n), best(n), best_open_w(n, -1);
    std::vector<char> best_is_closed(n, 1);
    std::vector<std::vector<long long>> open(n);
    std::vector<std::vector<std::vector<int32_t>>> pick(n);

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        const long long wv = t.weight[v];
        const auto& kids = ch[v];
        if (kids.empty()) {
            open[v].assign(k + 1, INF);
            if (wv <= k) open[v][wv] = 0;
            closed[v] = t.cost[v];
        } else {
            std::vector<long long> cur(k + 1, INF);
            pick[v].resize(kids.size());
            {
                // First child c1: the open component so far is {v} itself, so
                // weight w < w(v) is impossible; at w == w(v) the child is
                // either closed or open with a weight-zero component; above
                // that, c1's open component supplies the difference.
                int c1 = kids[0];
                auto& pk = pick[v][0];
                pk.assign(k + 1, -2);
                for (long long w = wv; w <= k; ++w) {
                    if (w == wv) {
                        long long open0 = open[c1][0];
                        if (closed[c1] <= open0) {
                            cur[w] = closed[c1];
                            pk[w] = -1;
                        } else {
                            cur[w] = open0;
                            pk[w] = 0;
                            if (stats) ++stats->zero_weight_open_child_wins;
                        }
                    } else if (open[c1][w - wv] < INF) {
                        cur[w] = open[c1][w - wv];
                        pk[w] = static_cast<int32_t>(w - wv);
                    }
                }
            }
            for (size_t i = 1; i < kids.size(); ++i) {
                int c = kids[i];
                std::vector<long long> nxt(k + 1, INF);
                auto& pk = pick[v][i];
                pk.assign(k + 1, -2);
                for (long long w = 0; w <= k; ++w) {
                    long long b = sat_add(cur[w], closed[c]);
                    int32_t p = b < INF ? -1 : -2;
                    for (long long j = 0; j <= w; ++j) {
                        long long cand = sat_add(cur[w - j], open[c][j]);
                        if (cand < b) {
                            b = cand;
                            p = static_cast<int32_t>(j);
                        }
                    }
                    nxt[w] = b;
                    pk[w] = p;
                }
                cur.swap(nxt);
            }
            open[v] = std::move(cur);
            long long sum = t.cost[v];
            for (int c : kids) sum = sat_add(sum, best[c]);
            closed[v] = sum;
        }
        best[v] = closed[v];
        for (long long w = 0; w <= k; ++w)
            if (open[v][w] < best[v]) {
                best[v] = open[v][w];
                best_is_closed[v] = 0;
                best_open_w[v] = w;
            }
    }

    // Walk the recorded choices from the root down.
    VertexSet S(n);
    std::vector<std::tuple<int, bool, long long>> stack;  // vertex, open?, open weight
    auto push_best = [&](int v) {
        stack.emplace_back(v, !best_is_closed[v], best_is_closed[v] ? 0 : best_open_w[v]);
    };
    push_best(0);
    while (!stack.empty()) {
        auto [v, is_open, w] = stack.back();
        stack.pop_back();
        if (!is_open) {
            S.add(v);
            for (int c : ch[v]) push_best(c);
            continue;
        }
        long long wcur = w;
        for (int i = static_cast<int>(ch[v].size()) - 1; i >= 0; --i) {
            int32_t p = pick[v][i][wcur];
            internal_check(p != -2, "separator dp walked into an unreachable state");
            if (p == -1) {
                stack.emplace_back(ch[v][i], false, 0);
            } else {
                stack.emplace_back(ch[v][i], true, p);
                if (i > 0) wcur -= p;  // stage 0 absorbs w(v) itself
            }
        }
    }

    SeparatorResult r = assemble(t, std::move(S));
    internal_check(r.separator_cost == best[0], "separator dp cost mismatch");
    for (const auto& H : r.components)
        internal_check(H.weight() <= k, "separator dp produced an overweight component");
    return r;
}

SeparatorResult separator_fptas(const SearchInstance& t, const Rat& alpha, const Rat& delta,
                                SeparatorDpStats* stats) {
    if (!t.is_tree()) throw NotATree("separator_fptas expects a tree instance");
    if (alpha.num <= alpha.den) throw InvalidParams("alpha must be > 1");
    if (!delta.positive()) throw InvalidParams("delta must be > 0");
    const long long W = t.total_weight();
    if (W < 1) throw InvalidParams("total weight must be >= 1");
    const int n = t.n;

    // Scale factor K = delta * w(T) / (n * alpha), kept as an exact fraction.
    const int128 k_num = static_cast<int128>(delta.num) * W * alpha.den;
    const int128 k_den = static_cast<int128>(delta.den) * n * alpha.num;

    SeparatorResult r;
    if (k_num <= k_den) {
        // K <= 1: rounding would change nothing, solve at threshold w(T)/alpha.
        long long k = static_cast<long long>(static_cast<int128>(W) * alpha.den / alpha.num);
        r = separator_exact(t, k, stats);
    } else {
        SearchInstance scaled = t;
        for (int v = 0; v < n; ++v)
            scaled.weight[v] =
                static_cast<long long>(static_cast<int128>(t.weight[v]) * k_den / k_num);
        // Scaled threshold floor(w'(T)/alpha') collapses to floor(n/delta).
        long long k = static_cast<long long>(static_cast<int128>(n) * delta.den / delta.num);
        r = separator_exact(scaled, k, stats);
        r.separator_cost = t.cost_of(r.separator);
        r.components = components(t, r.separator, VertexSet::all(n));
    }
    for (const auto& H : r.components)
        internal_check(static_cast<int128>(H.weight()) * alpha.num * delta.den <=
                           static_cast<int128>(delta.den + delta.num) * W * alpha.den,
                       "relaxed separator exceeded its component bound");
    return r;
}

SeparatorResult separator_bruteforce(const SearchInstance& g, long long k) {
    if (g.n > 20) throw TooLarge("brute-force separator is limited to 20 vertices");
    if (k < 0) throw InvalidParams("separator threshold must be >= 0");
    const int n = g.n;
    std::vector<uint32_t> am(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.adj[u]) am[u] |= 1u << v;
    const uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    long long best_cost = -1;
    uint32_t best_mask = 0;
    for (uint32_t S = 0;; ++S) {
        long long cost = 0;
        for (uint32_t m = S; m; m &= m - 1) cost += g.cost[std::countr_zero(m)];
        if (best_cost < 0 || cost < best_cost) {
            bool ok = true;
            uint32_t rest = full & ~S;
            while (rest && ok) {
                uint32_t frontier = rest & (~rest + 1), comp = 0;
                while (frontier) {
                    comp |= frontier;
                    uint32_t grow = 0;
                    for (uint32_t m = frontier; m; m &= m - 1) grow |= am[std::countr_zero(m)];
                    frontier = grow & rest & ~comp;
                }
                long long w = 0;
                for (uint32_t m = comp; m; m &= m - 1) w += g.weight[std::countr_zero(m)];
                ok = w <= k;
                rest &= ~comp;
            }
            if (ok) {
                best_cost = cost;
                best_mask = S;
            }
        }
        if (S == full) break;
    }
    VertexSet sep(n);
    for (uint32_t m = best_mask; m; m &= m - 1) sep.add(std::countr_zero(m));
    return assemble(g, std::move(sep));
}

}  // namespace gsp

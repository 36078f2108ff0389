#include "gsp/instance.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace gsp {

SearchInstance::SearchInstance(int n_, const std::vector<std::pair<int, int>>& edges,
                               std::vector<long long> cost_, std::vector<long long> weight_)
    : n(n_), adj(n_ > 0 ? n_ : 0), cost(std::move(cost_)), weight(std::move(weight_)) {
    if (n < 1) throw ValidationError("instance needs at least one vertex");
    if (static_cast<int>(cost.size()) != n) throw ValidationError("cost array length != n");
    if (static_cast<int>(weight.size()) != n) throw ValidationError("weight array length != n");
    for (long long c : cost)
        if (c < 0) throw ValidationError("negative cost");
    for (long long w : weight)
        if (w < 0) throw ValidationError("negative weight");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw ValidationError("edge endpoint out of range");
        if (u == v) throw ValidationError("self-loop");
        if (u > v) throw ValidationError("edge not listed as u < v");
        if (!seen.insert({u, v}).second) throw ValidationError("duplicate edge");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
}

int SearchInstance::edge_count() const {
    size_t deg = 0;
    for (const auto& a : adj) deg += a.size();
    return static_cast<int>(deg / 2);
}

std::vector<std::pair<int, int>> SearchInstance::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;  // already sorted: u ascending, adj[u] ascending
}

long long SearchInstance::total_weight() const {
    long long s = 0;
    for (long long w : weight) s += w;
    return s;
}

long long SearchInstance::total_cost() const {
    long long s = 0;
    for (long long c : cost) s += c;
    return s;
}

long long SearchInstance::weight_of(const VertexSet& s) const {
    long long acc = 0;
    for (int v : s) acc += weight[v];
    return acc;
}

long long SearchInstance::cost_of(const VertexSet& s) const {
    long long acc = 0;
    for (int v : s) acc += cost[v];
    return acc;
}

bool SearchInstance::is_connected() const {
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int found = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++found;
                stack.push_back(v);
            }
    }
    return found == n;
}

void SearchInstance::require_valid_toplevel() const {
    if (!is_connected()) throw Disconnected("instance graph is not connected");
    if (total_weight() < 1) throw ValidationError("total weight must be at least 1");
}

std::vector<InducedSubgraph> components(const SearchInstance& g, const VertexSet& removed,
                                        const VertexSet& within) {
    std::vector<InducedSubgraph> out;
    VertexSet eligible = within - removed;
    VertexSet seen(g.n);
    for (int s : eligible) {
        if (seen.test(s)) continue;
        VertexSet comp(g.n);
        std::vector<int> stack{s};
        comp.add(s);
        seen.add(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.adj[u])
                if (eligible.test(v) && !comp.test(v)) {
                    comp.add(v);
                    seen.add(v);
                    stack.push_back(v);
                }
        }
        out.push_back(InducedSubgraph{&g, comp});
    }
    return out;  // ascending minimum vertex id, by scan order
}

VertexSet neighbors_of_subgraph(const SearchInstance& g, const VertexSet& sub) {
    VertexSet out(g.n);
    for (int u : sub)
        for (int v : g.adj[u])
            if (!sub.test(v)) out.add(v);
    return out;
}

std::pair<SearchInstance, std::vector<int>> extract_instance(const SearchInstance& g,
                                                             const VertexSet& vs) {
    std::vector<int> new_to_old = vs.to_vector();
    std::vector<int> old_to_new(g.n, -1);
    for (size_t i = 0; i < new_to_old.size(); ++i) old_to_new[new_to_old[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    std::vector<long long> cost, weight;
    for (int u : new_to_old) {
        cost.push_back(g.cost[u]);
        weight.push_back(g.weight[u]);
        for (int v : g.adj[u])
            if (vs.test(v) && u < v) edges.emplace_back(old_to_new[u], old_to_new[v]);
    }
    return {SearchInstance(static_cast<int>(new_to_old.size()), edges, cost, weight), new_to_old};
}

// --- JSON -------------------------------------------------------------------

using nlohmann::json;

static json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

SearchInstance load_instance(const std::string& json_text) {
    json j = parse_json(json_text);
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j.contains("cost") ||
        !j.contains("weight"))
        throw ParseError("instance JSON must have fields n, edges, cost, weight");
    if (!j["n"].is_number_integer() || !j["edges"].is_array() || !j["cost"].is_array() ||
        !j["weight"].is_array())
        throw ParseError("instance JSON field has wrong type");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("edge entries must be integer pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    auto read_ints = [](const json& arr, const char* what) {
        std::vector<long long> out;
        for (const auto& x : arr) {
            if (!x.is_number_integer()) throw ParseError(std::string(what) + " entries must be integers");
            out.push_back(x.get<long long>());
        }
        return out;
    };
    SearchInstance g(n, edges, read_ints(j["cost"], "cost"), read_ints(j["weight"], "weight"));
    g.require_valid_toplevel();
    return g;
}

SearchInstance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return load_instance(buf.str());
}

std::string save_instance(const SearchInstance& g) {
    json j;
    j["n"] = g.n;
    j["edges"] = json::array();
    for (auto [u, v] : g.edge_list()) j["edges"].push_back(json::array({u, v}));
    j["cost"] = g.cost;
    j["weight"] = g.weight;
    return j.dump() + "\n";
}

void save_instance_file(const SearchInstance& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << save_instance(g);
}

// --- generators ---------------------------------------------------------------

static std::vector<long long> draw_values(std::mt19937_64& rng, int n, long long maxv) {
    if (maxv < 1) throw InvalidParams("max value must be >= 1");
    std::vector<long long> out(n);
    for (auto& x : out) x = 1 + static_cast<long long>(rand_below(rng, maxv));
    return out;
}

SearchInstance gen_random_tree(int n, long long max_cost, long long max_weight, uint64_t seed) {
    if (n < 1) throw InvalidParams("n must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        int parent = static_cast<int>(rand_below(rng, v));
        edges.emplace_back(parent, v);
    }
    auto cost = draw_values(rng, n, max_cost);
    auto weight = draw_values(rng, n, max_weight);
    SearchInstance g(n, edges, cost, weight);
    g.require_valid_toplevel();
    return g;
}

SearchInstance gen_random_graph(int n, const Rat& edge_prob, long long max_cost,
                                long long max_weight, uint64_t seed) {
    if (n < 1) throw InvalidParams("n must be >= 1");
    if (edge_prob.num < 0 || edge_prob.num > edge_prob.den)
        throw InvalidParams("edge probability must be in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<long long>(rand_below(rng, edge_prob.den)) < edge_prob.num)
                edges.emplace_back(u, v);
    auto cost = draw_values(rng, n, max_cost);
    auto weight = draw_values(rng, n, max_weight);
    SearchInstance g(n, edges, cost, weight);
    if (!g.is_connected()) {
        auto comps = components(g, VertexSet(g.n), VertexSet::all(g.n));
        for (size_t i = 1; i < comps.size(); ++i) {
            int a = comps[i - 1].vertices.first();
            int b = comps[i].vertices.first();
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(edges.begin(), edges.end());
        g = SearchInstance(n, edges, cost, weight);
    }
    g.require_valid_toplevel();
    return g;
}

HardnessReduction hardness_reduction(const SearchInstance& t, long long budget) {
    if (!t.is_tree()) throw NotATree("hardness reduction expects a tree instance");
    if (budget < 0) throw InvalidParams("budget must be >= 0");
    auto tree_edges = t.edge_list();
    int m = static_cast<int>(tree_edges.size());
    std::vector<std::pair<int, int>> edges;
    std::vector<long long> cost(t.n + m), weight(t.n + m);
    for (int v = 0; v < t.n; ++v) {
        cost[v] = budget + 1;
        weight[v] = t.weight[v];
    }
    for (int j = 0; j < m; ++j) {
        int mid = t.n + j;
        cost[mid] = 1;
        weight[mid] = 0;
        edges.emplace_back(tree_edges[j].first, mid);
        edges.emplace_back(tree_edges[j].second, mid);
    }
    std::sort(edges.begin(), edges.end());
    HardnessReduction out{SearchInstance(t.n + m, edges, cost, weight),
                          budget + t.total_weight() * (budget + 1)};
    out.instance.require_valid_toplevel();
    return out;
}

}  // namespace gsp

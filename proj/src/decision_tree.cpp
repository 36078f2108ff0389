#include "gsp/decision_tree.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gsp {

DecisionTree DecisionTree::from_parent_array(int root, std::vector<int> parent) {
    DecisionTree d;
    d.root = root;
    d.parent = std::move(parent);
    return d;
}

std::vector<std::vector<int>> DecisionTree::children() const {
    std::vector<std::vector<int>> ch(parent.size());
    for (size_t v = 0; v < parent.size(); ++v)
        if (parent[v] >= 0) ch[parent[v]].push_back(static_cast<int>(v));
    // ascending already (v grows), kept explicit for clarity
    for (auto& c : ch) std::sort(c.begin(), c.end());
    return ch;
}

using nlohmann::json;

DecisionTree load_decision_tree(const std::string& json_text) {
    json j = json::parse(json_text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    if (!j.is_object() || !j.contains("root") || !j.contains("parent"))
        throw ParseError("decision tree JSON must have fields root, parent");
    if (!j["root"].is_number_integer() || !j["parent"].is_array())
        throw ParseError("decision tree JSON field has wrong type");
    DecisionTree d;
    d.root = j["root"].get<int>();
    for (const auto& p : j["parent"]) {
        if (p.is_null())
            d.parent.push_back(-1);
        else if (p.is_number_integer())
            d.parent.push_back(p.get<int>());
        else
            throw ParseError("parent entries must be integers or null");
    }
    return d;
}

DecisionTree load_decision_tree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return load_decision_tree(buf.str());
}

std::string save_decision_tree(const DecisionTree& d) {
    json j;
    j["root"] = d.root;
    j["parent"] = json::array();
    for (int p : d.parent)
        if (p < 0)
            j["parent"].push_back(nullptr);
        else
            j["parent"].push_back(p);
    return j.dump() + "\n";
}

void save_decision_tree_file(const DecisionTree& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << save_decision_tree(d);
}

// Checks the parent array is a single rooted tree over exactly the vertex
// range of g; returns depth-ordered vertices (parents before children).
static std::vector<int> check_shape(const SearchInstance& g, const DecisionTree& d) {
    if (static_cast<int>(d.parent.size()) != g.n)
        throw InvalidTree("parent array length != n");
    if (d.root < 0 || d.root >= g.n) throw InvalidTree("root out of range");
    if (d.parent[d.root] != -1) throw InvalidTree("root must have null parent");
    for (int v = 0; v < g.n; ++v) {
        if (v == d.root) continue;
        if (d.parent[v] == -1) throw InvalidTree("second root at vertex " + std::to_string(v));
        if (d.parent[v] < 0 || d.parent[v] >= g.n)
            throw InvalidTree("parent out of range at vertex " + std::to_string(v));
    }
    // BFS from the root over child lists; anything unreached sits on a cycle.
    auto ch = d.children();
    std::vector<int> order{d.root};
    for (size_t i = 0; i < order.size(); ++i)
        for (int c : ch[order[i]]) order.push_back(c);
    if (static_cast<int>(order.size()) != g.n)
        throw InvalidTree("parent array contains a cycle");
    return order;
}

CandidateMap validate(const SearchInstance& g, const DecisionTree& d) {
    auto order = check_shape(g, d);
    auto ch = d.children();
    CandidateMap cm;
    cm.candidate.assign(g.n, VertexSet(g.n));
    cm.candidate[d.root] = VertexSet::all(g.n);
    for (int q : order) {
        const VertexSet& cand = cm.candidate[q];
        if (ch[q].empty()) continue;
        auto comps = components(g, VertexSet::of(g.n, {q}), cand);
        std::vector<char> claimed(comps.size(), 0);
        for (int u : ch[q]) {
            int home = -1;
            for (size_t i = 0; i < comps.size(); ++i)
                if (comps[i].vertices.test(u)) {
                    home = static_cast<int>(i);
                    break;
                }
            if (home < 0)
                throw InvalidTree("child " + std::to_string(u) +
                                  " is outside every response component of its parent");
            if (claimed[home])
                throw InvalidTree("children of " + std::to_string(q) +
                                  " share a response component");
            claimed[home] = 1;
            cm.candidate[u] = comps[home].vertices;
        }
    }
    return cm;
}

long long cost_pathsum(const SearchInstance& g, const DecisionTree& d) {
    auto order = check_shape(g, d);
    std::vector<long long> path_cost(g.n, 0);
    long long total = 0;
    for (int v : order) {
        path_cost[v] = (v == d.root ? 0 : path_cost[d.parent[v]]) + g.cost[v];
        total += g.weight[v] * path_cost[v];
    }
    return total;
}

long long cost_contribution(const SearchInstance& g, const DecisionTree& d) {
    CandidateMap cm = validate(g, d);
    long long total = 0;
    for (int v = 0; v < g.n; ++v) total += g.weight_of(cm.candidate[v]) * g.cost[v];
    return total;
}

std::vector<int> query_sequence(const SearchInstance& g, const DecisionTree& d, int target) {
    if (target < 0 || target >= g.n) throw UnknownVertex("target out of range");
    if (static_cast<int>(d.parent.size()) != g.n)
        throw InvalidTree("parent array length != n");
    std::vector<int> rev;
    int v = target;
    for (int steps = 0; v != -1; ++steps) {
        if (steps > g.n || v < -1 || v >= g.n) throw InvalidTree("broken parent chain");
        rev.push_back(v);
        v = d.parent[v];
    }
    if (rev.back() != d.root) throw InvalidTree("target does not reach the root");
    std::reverse(rev.begin(), rev.end());
    return rev;
}

LevelFamily levels(const SearchInstance& g, const DecisionTree& d) {
    CandidateMap cm = validate(g, d);
    LevelFamily lf;
    lf.g = &g;
    lf.candidate_weight.resize(g.n);
    for (int v = 0; v < g.n; ++v) lf.candidate_weight[v] = g.weight_of(cm.candidate[v]);
    return lf;
}

}  // namespace gsp

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gsp {

// Fixed-universe vertex set backed by machine words: one word covers the
// exact-solver range (n <= 64), larger universes fall back to the same code
// over a longer word vector. Iteration is always in ascending vertex order,
// which is what makes every algorithm in this library deterministic.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    static VertexSet all(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.add(v);
        return s;
    }
    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
    void add(int v) { w_[v >> 6] |= 1ull << (v & 63); }
    void remove(int v) { w_[v >> 6] &= ~(1ull << (v & 63)); }

    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }

    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool subset_of(const VertexSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // Lowest vertex, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }
    // Lowest vertex strictly above `v`, or -1.
    int next(int v) const {
        int i = (v + 1) >> 6;
        if (i >= static_cast<int>(w_.size())) return -1;
        uint64_t w = w_[i] & (~0ull << ((v + 1) & 63));
        while (true) {
            if (w) return i * 64 + std::countr_zero(w);
            if (++i >= static_cast<int>(w_.size())) return -1;
            w = w_[i];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    struct iterator {
        const VertexSet* s;
        int v;
        int operator*() const { return v; }
        iterator& operator++() {
            v = s->next(v);
            return *this;
        }
        bool operator!=(const iterator& o) const { return v != o.v; }
    };
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

// Ascending-vertex-sequence order ("{0,5} < {1,2}"); ties broken by the
// shorter set. Used for deterministic tie-breaking among equal-cost sets.
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
    int x = a.first(), y = b.first();
    while (x >= 0 && y >= 0) {
        if (x != y) return x < y;
        x = a.next(x);
        y = b.next(y);
    }
    return y >= 0;  // a ran out first -> proper prefix -> smaller
}

}  // namespace gsp

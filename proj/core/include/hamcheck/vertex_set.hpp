#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace hamcheck {

// Set of vertex ids over a fixed universe 0..n-1, stored as a bitset.
// Iteration is always in ascending id order.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : n_(universe), words_((universe + 63) / 64, 0) {
        assert(universe >= 0);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int w = 0; w < static_cast<int>(s.words_.size()); ++w)
            s.words_[w] = ~0ULL;
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        assert(v >= 0 && v < n_);
        return (words_[v >> 6] >> (v & 63)) & 1ULL;
    }

    void insert(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] |= 1ULL << (v & 63);
    }

    void erase(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] &= ~(1ULL << (v & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& subtract(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    bool operator==(const VertexSet& o) const = default;

    // First member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    // Smallest member strictly greater than v, or -1.
    int next(int v) const {
        assert(v >= 0 && v < n_);
        int i = v >> 6;
        std::uint64_t w = words_[i] & ~((2ULL << (v & 63)) - 1);
        while (true) {
            if (w) return static_cast<int>(i * 64 + std::countr_zero(w));
            if (++i >= static_cast<int>(words_.size())) return -1;
            w = words_[i];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

private:
    void trim() {
        if (n_ % 64 != 0 && !words_.empty())
            words_.back() &= (1ULL << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace hamcheck

#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

namespace roman {

/// Fixed-width set of integers over a universe 0..n-1, backed by 64-bit words.
/// The width is fixed at construction; all set operations require operands of
/// the same width.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe_size)
        : n_bits_(universe_size), words_((universe_size + 63) / 64, 0) {
        assert(universe_size >= 0);
    }

    static VertexSet full(int universe_size) {
        VertexSet s(universe_size);
        for (auto& w : s.words_) w = ~0ull;
        s.trim();
        return s;
    }

    int universe_size() const { return n_bits_; }

    bool contains(int v) const {
        assert(v >= 0 && v < n_bits_);
        return (words_[v >> 6] >> (v & 63)) & 1ull;
    }

    void add(int v) {
        assert(v >= 0 && v < n_bits_);
        words_[v >> 6] |= 1ull << (v & 63);
    }

    void remove(int v) {
        assert(v >= 0 && v < n_bits_);
        words_[v >> 6] &= ~(1ull << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    /// Smallest member, or -1 if the set is empty.
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_bits_ == o.n_bits_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_bits_ == o.n_bits_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    /// Removes every member of `o` from this set.
    VertexSet& subtract(const VertexSet& o) {
        assert(n_bits_ == o.n_bits_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

    bool intersects(const VertexSet& o) const {
        assert(n_bits_ == o.n_bits_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    static int intersection_count(const VertexSet& a, const VertexSet& b) {
        assert(a.n_bits_ == b.n_bits_);
        int c = 0;
        for (size_t i = 0; i < a.words_.size(); ++i)
            c += std::popcount(a.words_[i] & b.words_[i]);
        return c;
    }

    template <class F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                int v = int(i * 64 + std::countr_zero(w));
                f(v);
                w &= w - 1;
            }
        }
    }

    std::span<const uint64_t> words() const { return words_; }

    bool operator==(const VertexSet&) const = default;

private:
    void trim() {
        if (n_bits_ % 64 != 0 && !words_.empty())
            words_.back() &= (1ull << (n_bits_ % 64)) - 1;
    }

    int n_bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace roman

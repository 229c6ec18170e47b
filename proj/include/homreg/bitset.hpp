#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace homreg {

using Word = std::uint64_t;

inline int words_for(int n) { return (n + 63) / 64; }

// Dynamically sized bitset over a fixed universe {0..n-1}.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), w_(words_for(n), 0) {}
    VertexSet(int n, const Word* words) : n_(n), w_(words, words + words_for(n)) {}

    int universe() const { return n_; }
    bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
    void set(int v) { w_[v >> 6] |= Word{1} << (v & 63); }
    void reset(int v) { w_[v >> 6] &= ~(Word{1} << (v & 63)); }
    void flip(int v) { w_[v >> 6] ^= Word{1} << (v & 63); }
    void fill()
    {
        for (auto& x : w_) x = ~Word{0};
        trim();
    }

    int count() const
    {
        int c = 0;
        for (Word x : w_) c += std::popcount(x);
        return c;
    }
    bool empty() const
    {
        for (Word x : w_)
            if (x) return false;
        return true;
    }

    // First member >= from, or -1.
    int next(int from) const
    {
        if (from >= n_) return -1;
        int wi = from >> 6;
        Word x = w_[wi] & (~Word{0} << (from & 63));
        while (true) {
            if (x) return wi * 64 + std::countr_zero(x);
            if (++wi >= static_cast<int>(w_.size())) return -1;
            x = w_[wi];
        }
    }
    int first() const { return next(0); }

    std::vector<int> members() const
    {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }

    VertexSet& operator&=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    bool operator==(const VertexSet& o) const = default;

    const Word* data() const { return w_.data(); }
    Word* data() { return w_.data(); }
    int num_words() const { return static_cast<int>(w_.size()); }

private:
    void trim()
    {
        if (n_ & 63) w_.back() &= (Word{1} << (n_ & 63)) - 1;
    }
    int n_ = 0;
    std::vector<Word> w_;
};

inline int popcount_and(const Word* a, const Word* b, int words)
{
    int c = 0;
    for (int i = 0; i < words; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

} // namespace homreg

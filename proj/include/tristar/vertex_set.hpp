#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tristar {

using Vertex = int;

/// Dense bit-vector over vertices 0..n-1. Unions and counts run word-parallel.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64, 0) {}

    int universe() const { return n_; }

    void insert(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] |= bit(v); }
    void erase(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] &= ~bit(v); }
    bool contains(Vertex v) const { return (words_[static_cast<std::size_t>(v) >> 6] & bit(v)) != 0; }

    int count() const
    {
        int total = 0;
        for (std::uint64_t w : words_)
            total += std::popcount(w);
        return total;
    }

    bool empty() const
    {
        for (std::uint64_t w : words_)
            if (w != 0)
                return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    /// Removes every member of o.
    VertexSet& subtract(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// |a ∪ b| without materializing the union.
    static int union_count(const VertexSet& a, const VertexSet& b)
    {
        int total = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            total += std::popcount(a.words_[i] | b.words_[i]);
        return total;
    }
    static int union_count(const VertexSet& a, const VertexSet& b, const VertexSet& c)
    {
        int total = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            total += std::popcount(a.words_[i] | b.words_[i] | c.words_[i]);
        return total;
    }

    /// Members in increasing order.
    std::vector<Vertex> members() const
    {
        std::vector<Vertex> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
        return out;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (static_cast<unsigned>(v) & 63u); }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace tristar

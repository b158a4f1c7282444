#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace bhx {

using Vertex = std::uint32_t;

/// Fixed-capacity bit set over vertex ids 0..capacity-1.
class VertexSet
{
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

    auto capacity() const -> std::size_t { return capacity_; }

    auto contains(Vertex v) const -> bool { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    auto count() const -> std::size_t
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    auto empty() const -> bool
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    auto intersection_count(const VertexSet & other) const -> std::size_t
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    auto operator&=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    auto operator|=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    /// Removes every member of `other`.
    auto subtract(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    /// Calls f(v) for every member in increasing order.
    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                auto b = static_cast<unsigned>(std::countr_zero(w));
                f(static_cast<Vertex>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    auto to_vector() const -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

private:
    std::size_t capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

inline auto operator&(VertexSet a, const VertexSet & b) -> VertexSet
{
    a &= b;
    return a;
}

} // namespace bhx

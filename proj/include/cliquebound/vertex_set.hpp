#pragma once

#include <bit>
#include <cstdint>
#include <iterator>
#include <vector>

namespace cliquebound {

using Vertex = int;

/// A subset of {0, ..., 63} packed into one machine word.
class VertexSet {
public:
    using Word = std::uint64_t;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Word bits) : bits_(bits) {}

    static constexpr VertexSet single(Vertex v) { return VertexSet(Word{1} << v); }

    /// {0, ..., n-1}
    static constexpr VertexSet first(int n) {
        return VertexSet(n >= 64 ? ~Word{0} : (Word{1} << n) - 1);
    }

    constexpr Word bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    constexpr Vertex least() const { return std::countr_zero(bits_); }

    constexpr void insert(Vertex v) { bits_ |= Word{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(Word{1} << v); }

    constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
    /// Set difference.
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;
    constexpr auto operator<=>(const VertexSet&) const = default;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        constexpr iterator() = default;
        constexpr explicit iterator(Word rest) : rest_(rest) {}
        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto old = *this; ++*this; return old; }
        constexpr bool operator==(const iterator&) const = default;

    private:
        Word rest_ = 0;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

private:
    Word bits_ = 0;
};

} // namespace cliquebound

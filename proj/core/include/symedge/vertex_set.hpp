#pragma once

#include <bit>
#include <cassert>
#include <cstdint>

namespace symedge {

/// Set of 1-based vertex labels stored as a 64-bit mask (bit v-1 <=> vertex v).
/// Everything in this library works on at most 64 vertices/variables.
class VertexSet {
public:
    constexpr VertexSet() = default;

    static constexpr VertexSet from_bits(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }

    static constexpr VertexSet single(int v) { return from_bits(bit(v)); }

    /// {1, 2, ..., n}
    static constexpr VertexSet first_n(int n) {
        return from_bits(n >= 64 ? ~0ull : (1ull << n) - 1);
    }

    constexpr bool contains(int v) const { return (bits_ & bit(v)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr VertexSet& add(int v) {
        bits_ |= bit(v);
        return *this;
    }
    constexpr VertexSet& remove(int v) {
        bits_ &= ~bit(v);
        return *this;
    }

    constexpr VertexSet with(int v) const { return from_bits(bits_ | bit(v)); }
    constexpr VertexSet without(int v) const { return from_bits(bits_ & ~bit(v)); }

    /// Smallest label in the set; set must be nonempty.
    constexpr int front() const {
        assert(!empty());
        return std::countr_zero(bits_) + 1;
    }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr std::uint64_t bits() const { return bits_; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
        return from_bits(a.bits_ | b.bits_);
    }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
        return from_bits(a.bits_ & b.bits_);
    }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
        return from_bits(a.bits_ & ~b.bits_);
    }
    friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint64_t rest_;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    static constexpr std::uint64_t bit(int v) {
        assert(v >= 1 && v <= 64);
        return 1ull << (v - 1);
    }

    std::uint64_t bits_ = 0;
};

}  // namespace symedge

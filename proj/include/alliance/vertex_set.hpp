#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "alliance/errors.hpp"

namespace alliance {

// Subset of the vertices 0..n-1 of a fixed-order graph, stored as a 64-bit
// mask. All solver-facing graphs fit (graph6 short form tops out at n = 62).
class VertexSet {
public:
    static constexpr int max_universe = 64;

    VertexSet() = default;

    explicit VertexSet(int universe) : n_(check_universe(universe)) {}

    static VertexSet all(int universe) {
        VertexSet s(universe);
        s.bits_ = full_mask(universe);
        return s;
    }

    static VertexSet from_bits(int universe, std::uint64_t bits) {
        VertexSet s(universe);
        if ((bits & ~full_mask(universe)) != 0)
            throw std::out_of_range("VertexSet: bits outside universe");
        s.bits_ = bits;
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members) s.add(v);
        return s;
    }

    int universe() const { return n_; }
    std::uint64_t bits() const { return bits_; }

    bool contains(int v) const { return v >= 0 && v < n_ && (bits_ >> v & 1u) != 0; }

    VertexSet& add(int v) {
        check_member(v);
        bits_ |= std::uint64_t{1} << v;
        return *this;
    }

    VertexSet& remove(int v) {
        check_member(v);
        bits_ &= ~(std::uint64_t{1} << v);
        return *this;
    }

    int count() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }

    bool is_subset_of(const VertexSet& other) const { return (bits_ & ~other.bits_) == 0; }

    VertexSet complement() const { return from_bits(n_, ~bits_ & full_mask(n_)); }

    friend VertexSet operator|(const VertexSet& a, const VertexSet& b) {
        return from_bits(a.n_, a.bits_ | b.bits_);
    }
    friend VertexSet operator&(const VertexSet& a, const VertexSet& b) {
        return from_bits(a.n_, a.bits_ & b.bits_);
    }
    friend VertexSet operator-(const VertexSet& a, const VertexSet& b) {
        return from_bits(a.n_, a.bits_ & ~b.bits_);
    }

    bool operator==(const VertexSet&) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        std::uint64_t rest = bits_;
        while (rest != 0) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            f(v);
        }
    }

    static std::uint64_t full_mask(int n) {
        if (n <= 0) return 0;
        if (n >= 64) return ~std::uint64_t{0};
        return (~std::uint64_t{0}) >> (64 - n);
    }

private:
    static int check_universe(int n) {
        if (n < 0 || n > max_universe)
            throw UnsupportedSize("VertexSet universe must be within 0..64, got " + std::to_string(n));
        return n;
    }
    void check_member(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("VertexSet: vertex " + std::to_string(v) + " outside universe " +
                                    std::to_string(n_));
    }

    std::uint64_t bits_ = 0;
    int n_ = 0;
};

}  // namespace alliance

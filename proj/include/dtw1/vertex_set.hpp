#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace dtw1 {

/// Largest digraph order supported by the bitmask representation.
inline constexpr int kMaxVertices = 64;

/// A set of vertex ids in [0, 64), stored as a bitmask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) insert(v);
    }

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static VertexSet from_vector(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr int min() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }
    constexpr int max() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

    void insert(int v) {
        if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex id out of range");
        bits_ |= std::uint64_t{1} << v;
    }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr auto operator<=>(const VertexSet&) const = default;

    /// Lexicographic comparison of the sorted element lists.
    friend bool lex_less(VertexSet a, VertexSet b) {
        while (!a.empty() && !b.empty()) {
            int x = a.min(), y = b.min();
            if (x != y) return x < y;
            a.erase(x);
            b.erase(y);
        }
        return a.empty() && !b.empty();
    }

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t b) : b_(b) {}
        constexpr int operator*() const { return std::countr_zero(b_); }
        constexpr iterator& operator++() { b_ &= b_ - 1; return *this; }
        constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator&) const = default;
    private:
        std::uint64_t b_ = 0;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }

private:
    std::uint64_t bits_ = 0;
};

/// Calls f(subset) for every subset of `ground` with exactly `k` elements, in
/// lexicographic order of the sorted element lists. Stops early when f returns true.
template <class F>
bool for_each_subset_of_size(VertexSet ground, int k, F&& f) {
    std::vector<int> elems = ground.to_vector();
    int n = static_cast<int>(elems.size());
    if (k > n || k < 0) return false;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        VertexSet s;
        for (int i : idx) s.insert(elems[i]);
        if (f(s)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Calls f for every subset of `ground` with at most `k` elements, by increasing size.
template <class F>
bool for_each_subset_up_to(VertexSet ground, int k, F&& f) {
    for (int s = 0; s <= k; ++s)
        if (for_each_subset_of_size(ground, s, f)) return true;
    return false;
}

}  // namespace dtw1

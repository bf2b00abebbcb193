#ifndef IMTL_WORLD_SET_HPP
#define IMTL_WORLD_SET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace imtl {

using World = std::size_t;

/// Upper bound on the number of worlds of any model handled by the library.
inline constexpr std::size_t kMaxWorlds = 64;

/// A set of worlds drawn from 0..kMaxWorlds-1, stored as a single bitset.
///
/// Complement is always taken relative to an explicit universe size, since
/// the set itself does not know how many worlds its enclosing model has.
class WorldSet {
public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = World;
        using difference_type = std::ptrdiff_t;
        using pointer = const World*;
        using reference = World;

        const_iterator() = default;
        explicit const_iterator(std::uint64_t rest) : rest_(rest) {}

        World operator*() const { return static_cast<World>(std::countr_zero(rest_)); }
        const_iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        const_iterator operator++(int) {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const const_iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr WorldSet() = default;
    WorldSet(std::initializer_list<World> worlds) {
        for (World w : worlds) insert(w);
    }

    static constexpr WorldSet from_bits(std::uint64_t bits) {
        WorldSet s;
        s.bits_ = bits;
        return s;
    }
    static WorldSet full(std::size_t n) {
        check_size(n);
        return from_bits(n == kMaxWorlds ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static WorldSet singleton(World w) {
        WorldSet s;
        s.insert(w);
        return s;
    }
    static WorldSet from_vector(const std::vector<World>& worlds) {
        WorldSet s;
        for (World w : worlds) s.insert(w);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

    bool contains(World w) const { return w < kMaxWorlds && ((bits_ >> w) & 1U) != 0; }
    void insert(World w) {
        check_world(w);
        bits_ |= std::uint64_t{1} << w;
    }
    void erase(World w) {
        check_world(w);
        bits_ &= ~(std::uint64_t{1} << w);
    }
    void flip(World w) {
        check_world(w);
        bits_ ^= std::uint64_t{1} << w;
    }

    constexpr bool subset_of(WorldSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(WorldSet other) const { return (bits_ & other.bits_) != 0; }

    /// True iff every member is below n.
    bool within(std::size_t n) const { return subset_of(full(n)); }

    WorldSet complement(std::size_t n) const { return from_bits(~bits_ & full(n).bits_); }

    constexpr WorldSet& operator|=(WorldSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr WorldSet& operator&=(WorldSet o) {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr WorldSet& operator-=(WorldSet o) {
        bits_ &= ~o.bits_;
        return *this;
    }
    friend constexpr WorldSet operator|(WorldSet a, WorldSet b) { return a |= b; }
    friend constexpr WorldSet operator&(WorldSet a, WorldSet b) { return a &= b; }
    friend constexpr WorldSet operator-(WorldSet a, WorldSet b) { return a -= b; }

    friend constexpr bool operator==(WorldSet, WorldSet) = default;

    const_iterator begin() const { return const_iterator(bits_); }
    const_iterator end() const { return const_iterator(0); }

    std::vector<World> to_vector() const { return {begin(), end()}; }

    /// "{0,2,5}"
    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (World w : *this) {
            if (!first) out += ',';
            out += std::to_string(w);
            first = false;
        }
        return out + "}";
    }

private:
    static void check_world(World w) {
        if (w >= kMaxWorlds) throw std::out_of_range("world index " + std::to_string(w) + " exceeds capacity");
    }
    static void check_size(std::size_t n) {
        if (n > kMaxWorlds) throw std::out_of_range("world count " + std::to_string(n) + " exceeds capacity");
    }

    std::uint64_t bits_ = 0;
};

/// Canonical order: by cardinality, then lexicographically by sorted member list.
inline bool canonical_less(WorldSet a, WorldSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end(); ++ia, ++ib) {
        if (*ia != *ib) return *ia < *ib;
    }
    return false;
}

/// Calls fn(sub) for every subset of `set`, in increasing bit-pattern order.
template <typename Fn>
void for_each_subset(WorldSet set, Fn&& fn) {
    const std::uint64_t mask = set.bits();
    std::uint64_t sub = 0;
    while (true) {
        fn(WorldSet::from_bits(sub));
        if (sub == mask) break;
        sub = (sub - mask) & mask;
    }
}

}  // namespace imtl

#endif  // IMTL_WORLD_SET_HPP

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace propdiv {

// Hard cap: coalition sets are 32-bit masks and several operations
// enumerate all 2^n subsets.
inline constexpr int k_max_players = 16;

// A coalition is a set of player indices 0..n-1 stored as a bitmask.
// Bit i set <=> player i is a member.
class Coalition {
public:
    constexpr Coalition() : bits_(0) {}
    constexpr explicit Coalition(std::uint32_t bits) : bits_(bits) {}

    static constexpr Coalition empty() { return Coalition(0); }
    static constexpr Coalition singleton(int i) { return Coalition(std::uint32_t{1} << i); }
    static constexpr Coalition full(int n) {
        return Coalition(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
    }
    static Coalition of(std::initializer_list<int> members) {
        std::uint32_t b = 0;
        for (int i : members) b |= std::uint32_t{1} << i;
        return Coalition(b);
    }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool is_empty() const { return bits_ == 0; }
    constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
    int size() const { return std::popcount(bits_); }

    constexpr Coalition unite(Coalition o) const { return Coalition(bits_ | o.bits_); }
    constexpr Coalition intersect(Coalition o) const { return Coalition(bits_ & o.bits_); }
    constexpr Coalition minus(Coalition o) const { return Coalition(bits_ & ~o.bits_); }
    constexpr Coalition complement(int n) const { return full(n).minus(*this); }
    constexpr bool subset_of(Coalition o) const { return (bits_ & o.bits_) == bits_; }

    constexpr Coalition with(int i) const { return Coalition(bits_ | (std::uint32_t{1} << i)); }
    constexpr Coalition without(int i) const { return Coalition(bits_ & ~(std::uint32_t{1} << i)); }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = 0; i < 32; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    friend constexpr bool operator==(Coalition a, Coalition b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator<(Coalition a, Coalition b) { return a.bits_ < b.bits_; }

private:
    std::uint32_t bits_;
};

} // namespace propdiv

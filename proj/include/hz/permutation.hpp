#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hz/kernels.hpp"

namespace hz {

inline constexpr int kMaxDegree = static_cast<int>(kernels::kLanes);

/// Integer partition mu |- n, parts sorted descending.
class Partition {
  public:
    Partition() = default;
    /// Sorts the parts; throws DomainError on a non-positive part.
    explicit Partition(std::vector<int> parts);

    const std::vector<int> &parts() const noexcept { return parts_; }
    int size() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    /// "(2,1,1)".
    std::string to_string() const;

    /// All partitions of n in reverse lexicographic order ((n) first).
    static std::vector<Partition> all(int n);

    friend auto operator<=>(const Partition &, const Partition &) = default;
    friend bool operator==(const Partition &, const Partition &) = default;

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Permutation of {1..n}, n <= 16, stored as 0-based images padded with the
/// identity up to 16 lanes so the shuffle kernels apply directly.
///
/// Composition is apply-right-first everywhere: (p∘q)(x) = p(q(x)).
class Permutation {
  public:
    using Lanes = std::array<std::uint8_t, kernels::kLanes>;

    /// Identity of degree 0.
    Permutation() {
        for (std::size_t i = 0; i < lanes_.size(); ++i) {
            lanes_[i] = static_cast<std::uint8_t>(i);
        }
    }

    static Permutation identity(int n);
    /// One-line notation on {1..n}: images[i-1] = p(i).
    static Permutation from_one_line(std::span<const int> images);
    /// Product of disjoint cycles written on {1..n}, e.g. {{1,2},{3,4}}.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>> &cycles);
    static Permutation transposition(int n, int a, int b);
    /// The long cycle (1 2 ... n).
    static Permutation long_cycle(int n);
    static Permutation from_lanes(int n, const Lanes &lanes);

    int degree() const noexcept { return n_; }
    /// p(x) for x in {1..n}.
    int operator()(int x) const { return lanes_[x - 1] + 1; }
    const Lanes &lanes() const noexcept { return lanes_; }
    const std::uint8_t *data() const noexcept { return lanes_.data(); }

    std::vector<int> one_line() const;
    Permutation inverse() const;
    int cycle_count() const { return kernels::cycle_count(lanes_.data(), n_); }
    Partition cycle_type() const;
    bool is_identity() const;
    /// Disjoint-cycle notation with fixed points omitted; "()" for the identity.
    std::string to_string() const;

    friend bool operator==(const Permutation &a, const Permutation &b) {
        return a.n_ == b.n_ && a.lanes_ == b.lanes_;
    }
    friend auto operator<=>(const Permutation &a, const Permutation &b) {
        if (auto c = a.n_ <=> b.n_; c != 0) {
            return c;
        }
        return a.lanes_ <=> b.lanes_;
    }

    std::size_t hash() const noexcept {
        std::uint64_t lo, hi;
        std::memcpy(&lo, lanes_.data(), 8);
        std::memcpy(&hi, lanes_.data() + 8, 8);
        std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL;
        h ^= (hi + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2)) * 0xC2B2AE3D27D4EB4FULL;
        return static_cast<std::size_t>(h ^ (h >> 29) ^ n_);
    }

  private:
    Lanes lanes_{};
    std::uint8_t n_ = 0;
};

struct PermutationHash {
    std::size_t operator()(const Permutation &p) const noexcept { return p.hash(); }
};

/// p∘q: apply q first. Throws DomainError on degree mismatch.
Permutation compose(const Permutation &p, const Permutation &q);

/// Visits all n! permutations of {1..n} in lexicographic one-line order.
void for_each_permutation(int n, const std::function<void(const Permutation &)> &visit);

} // namespace hz

template <>
struct std::hash<hz::Permutation> {
    std::size_t operator()(const hz::Permutation &p) const noexcept { return p.hash(); }
};

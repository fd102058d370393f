#pragma once

// Byte-shuffle kernels for permutations of degree <= 16.
//
// A permutation is stored as 16 bytes of 0-based images, padded with the
// identity past its degree. Composition p∘q (apply q first) is then
// out[i] = p[q[i]], a single table lookup per lane: pshufb on x86,
// vqtbl1q on AArch64. Every variant must agree bit for bit with the scalar
// reference; tests/unit/test_kernels.cpp checks this for each ISA the host
// supports.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace hz::kernels {

inline constexpr std::size_t kLanes = 16;

enum class Isa { scalar, ssse3, avx2, neon };

struct KernelTable {
    Isa isa;
    /// out = p∘q.
    void (*compose)(const std::uint8_t *p, const std::uint8_t *q, std::uint8_t *out);
    /// outs[j] = p∘qs[j] for `count` contiguous 16-byte blocks.
    void (*compose_left_batch)(const std::uint8_t *p, const std::uint8_t *qs, std::uint8_t *outs,
                               std::size_t count);
    /// outs[j] = ps[j]∘q.
    void (*compose_right_batch)(const std::uint8_t *ps, const std::uint8_t *q, std::uint8_t *outs,
                                std::size_t count);
};

std::string_view isa_name(Isa isa);

/// ISAs usable on this host, scalar first.
std::vector<Isa> supported_isas();

/// Kernel table for a specific ISA; throws hz::Error when the host lacks it.
const KernelTable &table_for(Isa isa);

/// Best table for the host, chosen once. HZ_FORCE_ISA=scalar|ssse3|avx2|neon overrides.
const KernelTable &active();

/// Number of cycles of a permutation of degree n (padding lanes ignored).
int cycle_count(const std::uint8_t *p, int n);

namespace detail {
extern const KernelTable scalar_table;
#if defined(__x86_64__) || defined(__i386__)
extern const KernelTable ssse3_table;
extern const KernelTable avx2_table;
#endif
#if defined(__aarch64__)
extern const KernelTable neon_table;
#endif
} // namespace detail

} // namespace hz::kernels

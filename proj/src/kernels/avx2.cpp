#include "hz/kernels.hpp"

#include <immintrin.h>

namespace hz::kernels {

namespace {

// vpshufb shuffles within each 128-bit lane, so one 256-bit register holds two
// independent 16-byte permutations.

__attribute__((target("avx2"))) void compose(const std::uint8_t *p, const std::uint8_t *q, std::uint8_t *out) {
    const __m128i vp = _mm_loadu_si128(reinterpret_cast<const __m128i *>(p));
    const __m128i vq = _mm_loadu_si128(reinterpret_cast<const __m128i *>(q));
    _mm_storeu_si128(reinterpret_cast<__m128i *>(out), _mm_shuffle_epi8(vp, vq));
}

__attribute__((target("avx2"))) void compose_left_batch(const std::uint8_t *p, const std::uint8_t *qs,
                                                         std::uint8_t *outs, std::size_t count) {
    const __m256i vp = _mm256_broadcastsi128_si256(_mm_loadu_si128(reinterpret_cast<const __m128i *>(p)));
    std::size_t j = 0;
    for (; j + 2 <= count; j += 2) {
        const __m256i vq = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(qs + j * kLanes));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(outs + j * kLanes), _mm256_shuffle_epi8(vp, vq));
    }
    if (j < count) {
        compose(p, qs + j * kLanes, outs + j * kLanes);
    }
}

__attribute__((target("avx2"))) void compose_right_batch(const std::uint8_t *ps, const std::uint8_t *q,
                                                          std::uint8_t *outs, std::size_t count) {
    const __m256i vq = _mm256_broadcastsi128_si256(_mm_loadu_si128(reinterpret_cast<const __m128i *>(q)));
    std::size_t j = 0;
    for (; j + 2 <= count; j += 2) {
        const __m256i vp = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(ps + j * kLanes));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(outs + j * kLanes), _mm256_shuffle_epi8(vp, vq));
    }
    if (j < count) {
        compose(ps + j * kLanes, q, outs + j * kLanes);
    }
}

} // namespace

namespace detail {
const KernelTable avx2_table{Isa::avx2, compose, compose_left_batch, compose_right_batch};
}

} // namespace hz::kernels

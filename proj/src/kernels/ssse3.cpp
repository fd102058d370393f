#include "hz/kernels.hpp"

#include <immintrin.h>

namespace hz::kernels {

namespace {

__attribute__((target("ssse3"))) void compose(const std::uint8_t *p, const std::uint8_t *q, std::uint8_t *out) {
    const __m128i vp = _mm_loadu_si128(reinterpret_cast<const __m128i *>(p));
    const __m128i vq = _mm_loadu_si128(reinterpret_cast<const __m128i *>(q));
    _mm_storeu_si128(reinterpret_cast<__m128i *>(out), _mm_shuffle_epi8(vp, vq));
}

__attribute__((target("ssse3"))) void compose_left_batch(const std::uint8_t *p, const std::uint8_t *qs,
                                                          std::uint8_t *outs, std::size_t count) {
    const __m128i vp = _mm_loadu_si128(reinterpret_cast<const __m128i *>(p));
    for (std::size_t j = 0; j < count; ++j) {
        const __m128i vq = _mm_loadu_si128(reinterpret_cast<const __m128i *>(qs + j * kLanes));
        _mm_storeu_si128(reinterpret_cast<__m128i *>(outs + j * kLanes), _mm_shuffle_epi8(vp, vq));
    }
}

__attribute__((target("ssse3"))) void compose_right_batch(const std::uint8_t *ps, const std::uint8_t *q,
                                                           std::uint8_t *outs, std::size_t count) {
    const __m128i vq = _mm_loadu_si128(reinterpret_cast<const __m128i *>(q));
    for (std::size_t j = 0; j < count; ++j) {
        const __m128i vp = _mm_loadu_si128(reinterpret_cast<const __m128i *>(ps + j * kLanes));
        _mm_storeu_si128(reinterpret_cast<__m128i *>(outs + j * kLanes), _mm_shuffle_epi8(vp, vq));
    }
}

} // namespace

namespace detail {
const KernelTable ssse3_table{Isa::ssse3, compose, compose_left_batch, compose_right_batch};
}

} // namespace hz::kernels

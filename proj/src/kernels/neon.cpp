#include "hz/kernels.hpp"

#include <arm_neon.h>

namespace hz::kernels {

namespace {

void compose(const std::uint8_t *p, const std::uint8_t *q, std::uint8_t *out) {
    vst1q_u8(out, vqtbl1q_u8(vld1q_u8(p), vld1q_u8(q)));
}

void compose_left_batch(const std::uint8_t *p, const std::uint8_t *qs, std::uint8_t *outs, std::size_t count) {
    const uint8x16_t vp = vld1q_u8(p);
    for (std::size_t j = 0; j < count; ++j) {
        vst1q_u8(outs + j * kLanes, vqtbl1q_u8(vp, vld1q_u8(qs + j * kLanes)));
    }
}

void compose_right_batch(const std::uint8_t *ps, const std::uint8_t *q, std::uint8_t *outs, std::size_t count) {
    const uint8x16_t vq = vld1q_u8(q);
    for (std::size_t j = 0; j < count; ++j) {
        vst1q_u8(outs + j * kLanes, vqtbl1q_u8(vld1q_u8(ps + j * kLanes), vq));
    }
}

} // namespace

namespace detail {
const KernelTable neon_table{Isa::neon, compose, compose_left_batch, compose_right_batch};
}

} // namespace hz::kernels

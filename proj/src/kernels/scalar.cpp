#include "hz/kernels.hpp"

namespace hz::kernels {

namespace {

void compose(const std::uint8_t *p, const std::uint8_t *q, std::uint8_t *out) {
    for (std::size_t i = 0; i < kLanes; ++i) {
        out[i] = p[q[i] & 0x0F];
    }
}

void compose_left_batch(const std::uint8_t *p, const std::uint8_t *qs, std::uint8_t *outs, std::size_t count) {
    for (std::size_t j = 0; j < count; ++j) {
        compose(p, qs + j * kLanes, outs + j * kLanes);
    }
}

void compose_right_batch(const std::uint8_t *ps, const std::uint8_t *q, std::uint8_t *outs, std::size_t count) {
    for (std::size_t j = 0; j < count; ++j) {
        compose(ps + j * kLanes, q, outs + j * kLanes);
    }
}

} // namespace

int cycle_count(const std::uint8_t *p, int n) {
    std::uint32_t seen = 0;
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
        if (seen & (1U << i)) {
            continue;
        }
        ++cycles;
        for (int j = i; !(seen & (1U << j)); j = p[j]) {
            seen |= 1U << j;
        }
    }
    return cycles;
}

namespace detail {
const KernelTable scalar_table{Isa::scalar, compose, compose_left_batch, compose_right_batch};
}

} // namespace hz::kernels

#include <cstdlib>
#include <string>

#include "hz/errors.hpp"
#include "hz/kernels.hpp"

namespace hz::kernels {

std::string_view isa_name(Isa isa) {
    switch (isa) {
    case Isa::scalar:
        return "scalar";
    case Isa::ssse3:
        return "ssse3";
    case Isa::avx2:
        return "avx2";
    case Isa::neon:
        return "neon";
    }
    return "unknown";
}

std::vector<Isa> supported_isas() {
    std::vector<Isa> out{Isa::scalar};
#if defined(__x86_64__) || defined(__i386__)
    __builtin_cpu_init();
    if (__builtin_cpu_supports("ssse3")) {
        out.push_back(Isa::ssse3);
    }
    if (__builtin_cpu_supports("avx2")) {
        out.push_back(Isa::avx2);
    }
#endif
#if defined(__aarch64__)
    out.push_back(Isa::neon);
#endif
    return out;
}

const KernelTable &table_for(Isa isa) {
    for (const Isa s : supported_isas()) {
        if (s != isa) {
            continue;
        }
        switch (isa) {
        case Isa::scalar:
            return detail::scalar_table;
#if defined(__x86_64__) || defined(__i386__)
        case Isa::ssse3:
            return detail::ssse3_table;
        case Isa::avx2:
            return detail::avx2_table;
#endif
#if defined(__aarch64__)
        case Isa::neon:
            return detail::neon_table;
#endif
        default:
            break;
        }
    }
    throw Error("kernel ISA '" + std::string(isa_name(isa)) + "' not supported on this host");
}

namespace {

const KernelTable &select() {
    const auto isas = supported_isas();
    if (const char *forced = std::getenv("HZ_FORCE_ISA")) {
        for (const Isa isa : isas) {
            if (isa_name(isa) == forced) {
                return table_for(isa);
            }
        }
    }
    return table_for(isas.back());
}

} // namespace

const KernelTable &active() {
    static const KernelTable &table = select();
    return table;
}

} // namespace hz::kernels

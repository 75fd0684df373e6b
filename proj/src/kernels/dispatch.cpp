#include "ccral/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace ccral::kernels {

namespace {

const Ops* resolve(Variant v) {
    switch (v) {
        case Variant::scalar:
            return &scalar::ops;
        case Variant::avx2:
#if CCRAL_KERNELS_X86
            if (cpu_has_avx2()) return &avx2::ops;
#endif
            return &scalar::ops;
        case Variant::auto_detect:
        default:
#if CCRAL_KERNELS_X86
            if (cpu_has_avx2()) return &avx2::ops;
#endif
            return &scalar::ops;
    }
}

Variant env_variant() {
    const char* s = std::getenv("CCRAL_KERNELS");
    if (s == nullptr) return Variant::auto_detect;
    if (std::strcmp(s, "scalar") == 0) return Variant::scalar;
    if (std::strcmp(s, "avx2") == 0) return Variant::avx2;
    return Variant::auto_detect;
}

std::atomic<const Ops*> g_active{nullptr};

}  // namespace

const Ops& active() {
    const Ops* ops = g_active.load(std::memory_order_acquire);
    if (ops == nullptr) {
        ops = resolve(env_variant());
        g_active.store(ops, std::memory_order_release);
    }
    return *ops;
}

void force(Variant v) { g_active.store(resolve(v), std::memory_order_release); }

}  // namespace ccral::kernels

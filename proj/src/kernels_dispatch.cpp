#include "qjoin/kernels.hpp"
#include "qjoin/error.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace qjoin::kern {

#ifdef QJOIN_HAVE_AVX2
const Ops* avx2_ops_impl();
#endif

const Ops* avx2_ops() {
#ifdef QJOIN_HAVE_AVX2
#if defined(__GNUC__) || defined(__clang__)
    if (__builtin_cpu_supports("avx2")) return avx2_ops_impl();
#endif
#endif
    return nullptr;
}

namespace {

const Ops* pick_auto() {
    if (const Ops* avx2 = avx2_ops()) return avx2;
    return &scalar_ops();
}

const Ops* pick_named(const char* name) {
    if (std::strcmp(name, "scalar") == 0) return &scalar_ops();
    if (std::strcmp(name, "avx2") == 0) {
        const Ops* avx2 = avx2_ops();
        if (!avx2) throw InvalidArgument("avx2 kernels unavailable on this CPU/build");
        return avx2;
    }
    if (std::strcmp(name, "auto") == 0) return pick_auto();
    throw InvalidArgument(std::string("unknown kernel backend: ") + name);
}

std::atomic<const Ops*> g_active{nullptr};

} // namespace

const Ops& active() {
    const Ops* ops = g_active.load(std::memory_order_acquire);
    if (!ops) {
        const char* env = std::getenv("QJOIN_SIMD");
        ops = env ? pick_named(env) : pick_auto();
        g_active.store(ops, std::memory_order_release);
    }
    return *ops;
}

void force_backend(const char* name) {
    g_active.store(pick_named(name), std::memory_order_release);
}

} // namespace qjoin::kern

#pragma once

#include <cstddef>

// Vector kernels used by the dense symmetric eigensolver and the matrix
// helpers built on it. A scalar reference implementation always exists;
// an AVX2 variant is selected at runtime when the CPU supports it.
//
// rot: plane rotation of two contiguous rows,
//        x'[i] = c*x[i] - s*y[i],  y'[i] = s*x[i] + c*y[i]
// dot: inner product (lane reassociation allowed, so results may differ
//      from scalar by rounding)
// axpy: y[i] += a*x[i]
// scale_add: y[i] = a*x[i] + b*y[i]

namespace qjoin::kern {

struct Ops {
    void (*rot)(double* x, double* y, std::size_t n, double c, double s);
    double (*dot)(const double* x, const double* y, std::size_t n);
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    void (*scale_add)(double a, const double* x, double b, double* y, std::size_t n);
    const char* name;
};

const Ops& scalar_ops();

// AVX2 implementation, or nullptr when not compiled in / not supported.
const Ops* avx2_ops();

// The backend in use. Honors QJOIN_SIMD=scalar|avx2|auto on first use.
const Ops& active();

// Force a backend by name ("scalar", "avx2", "auto"). Throws on an
// unavailable backend. Intended for tests and benchmarking.
void force_backend(const char* name);

} // namespace qjoin::kern

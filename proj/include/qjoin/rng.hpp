#pragma once

#include "qjoin/matrix.hpp"

#include <cstdint>
#include <vector>

namespace qjoin {

// Counter-based generator (SplitMix64 over a (seed, stream, counter) triple).
// Every random choice in the library flows from one user seed through
// derive() chains, so sub-tasks are reproducible independently of each other
// and of evaluation order.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {}

    // Independent child generator for a named sub-task.
    Rng derive(std::uint64_t substream) const;

    std::uint64_t next_u64();
    double uniform();                       // [0, 1)
    double uniform(double lo, double hi);   // [lo, hi)
    double gaussian();                      // Box-Muller, platform-independent
    int uniform_int(int lo, int hi);        // inclusive bounds

    std::vector<double> gaussian_vector(int n);
    std::vector<double> unit_vector(int n);

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Haar-ish random orthogonal matrix: Householder QR of a Gaussian matrix with
// the R-diagonal sign correction.
Matrix random_orthogonal(int n, Rng& rng);

} // namespace qjoin

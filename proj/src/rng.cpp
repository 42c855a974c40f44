#include "qjoin/rng.hpp"

#include "qjoin/error.hpp"

#include <cmath>

namespace qjoin {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t mix3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return splitmix64(splitmix64(splitmix64(a) ^ b) ^ c);
}

} // namespace

Rng Rng::derive(std::uint64_t substream) const {
    return Rng(seed_, splitmix64(stream_ ^ (substream + 0x632be59bd9b4e019ULL)));
}

std::uint64_t Rng::next_u64() { return mix3(seed_, stream_, counter_++); }

double Rng::uniform() {
    // 53 random bits into [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

int Rng::uniform_int(int lo, int hi) {
    if (hi < lo) throw InvalidArgument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
}

std::vector<double> Rng::gaussian_vector(int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = gaussian();
    return v;
}

std::vector<double> Rng::unit_vector(int n) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<double> v = gaussian_vector(n);
        double norm2 = 0.0;
        for (double x : v) norm2 += x * x;
        if (norm2 < 1e-24) continue;
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& x : v) x *= inv;
        return v;
    }
    throw NonConvergence("unit_vector: degenerate gaussian draws", 0.0, 0.0);
}

Matrix random_orthogonal(int n, Rng& rng) {
    if (n <= 0) throw InvalidArgument("random_orthogonal: n must be positive");
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = rng.gaussian();

    // Householder QR of a; accumulate Q explicitly.
    Matrix q = Matrix::identity(n);
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int col = 0; col < n; ++col) {
        double norm2 = 0.0;
        for (int i = col; i < n; ++i) norm2 += a(i, col) * a(i, col);
        const double norm = std::sqrt(norm2);
        if (norm < 1e-300) continue;
        const double alpha = a(col, col) >= 0 ? -norm : norm;
        double vnorm2 = 0.0;
        for (int i = col; i < n; ++i) {
            v[static_cast<std::size_t>(i)] = a(i, col) - (i == col ? alpha : 0.0);
            vnorm2 += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
        }
        if (vnorm2 < 1e-300) continue;
        const double beta = 2.0 / vnorm2;
        // a <- H a, q <- q H with H = I - beta v v^T
        for (int j = col; j < n; ++j) {
            double dotv = 0.0;
            for (int i = col; i < n; ++i) dotv += v[static_cast<std::size_t>(i)] * a(i, j);
            dotv *= beta;
            for (int i = col; i < n; ++i) a(i, j) -= dotv * v[static_cast<std::size_t>(i)];
        }
        for (int i = 0; i < n; ++i) {
            double dotv = 0.0;
            for (int j = col; j < n; ++j) dotv += q(i, j) * v[static_cast<std::size_t>(j)];
            dotv *= beta;
            for (int j = col; j < n; ++j) q(i, j) -= dotv * v[static_cast<std::size_t>(j)];
        }
    }
    // Fix the sign convention so the distribution is symmetric.
    for (int j = 0; j < n; ++j) {
        if (a(j, j) < 0.0)
            for (int i = 0; i < n; ++i) q(i, j) = -q(i, j);
    }
    return q;
}

} // namespace qjoin

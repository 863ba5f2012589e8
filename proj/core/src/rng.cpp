#include "eigenflow/rng.hpp"

#include "eigenflow/errors.hpp"

#include <cmath>
#include <numbers>

namespace eigenflow {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

RngHandle RngHandle::derived(std::uint64_t substream) const {
    return RngHandle{seed, splitmix64(stream ^ splitmix64(substream + 0x6a09e667f3bcc909ULL))};
}

Rng::Rng(RngHandle handle) : handle_(handle) {
    const std::uint64_t a = splitmix64(handle.seed);
    const std::uint64_t b = splitmix64(a ^ splitmix64(handle.stream));
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    engine_.seed(seq);
}

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

ComplexScalar Rng::complex_normal() {
    // Polar form of the exp(-|z|^2)/pi law: |z|^2 ~ Exp(1), arg uniform.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-std::log(u1));
    return ComplexScalar(r * std::cos(2.0 * std::numbers::pi * u2),
                         r * std::sin(2.0 * std::numbers::pi * u2));
}

ComplexMatrix sample_gaussian_matrix(Eigen::Index rows, Eigen::Index cols,
                                     const ComplexMatrix& center, double sigma, Rng& rng) {
    if (center.rows() != rows || center.cols() != cols) {
        throw DimensionError("sample_gaussian_matrix: center shape mismatch");
    }
    if (!(sigma > 0.0)) {
        throw DimensionError("sample_gaussian_matrix: sigma must be positive");
    }
    ComplexMatrix out(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            out(i, j) = center(i, j) + sigma * rng.complex_normal();
        }
    }
    return out;
}

ComplexMatrix sample_gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    ComplexMatrix out(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            out(i, j) = rng.complex_normal();
        }
    }
    return out;
}

ComplexMatrix sample_truncated_gaussian_matrix(Eigen::Index rows, Eigen::Index cols,
                                               const ComplexMatrix& center, double sigma,
                                               double radius, Rng& rng) {
    if (!(radius > 0.0)) {
        throw DimensionError("sample_truncated_gaussian_matrix: radius must be positive");
    }
    for (;;) {
        ComplexMatrix a = sample_gaussian_matrix(rows, cols, center, sigma, rng);
        if ((a - center).norm() <= radius) return a;
    }
}

ComplexVector sample_gaussian_vector(Eigen::Index size, Rng& rng) {
    ComplexVector out(size);
    for (Eigen::Index i = 0; i < size; ++i) out(i) = rng.complex_normal();
    return out;
}

}  // namespace eigenflow

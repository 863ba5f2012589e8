#pragma once

#include "eigenflow/types.hpp"

#include <cstdint>
#include <random>

namespace eigenflow {

// Identifies a reproducible random stream. Equal handles yield bit-identical
// sample sequences; distinct stream ids give independent streams for the
// same seed, so parallel trials can each own a derived handle.
struct RngHandle {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    RngHandle derived(std::uint64_t substream) const;
    bool operator==(const RngHandle&) const = default;
};

class Rng {
  public:
    explicit Rng(RngHandle handle);
    Rng(std::uint64_t seed, std::uint64_t stream = 0) : Rng(RngHandle{seed, stream}) {}

    const RngHandle& handle() const { return handle_; }
    Rng derive(std::uint64_t substream) const { return Rng(handle_.derived(substream)); }

    std::uint64_t next_u64() { return engine_(); }
    // Uniform on [0, 1), 53-bit resolution.
    double uniform();
    // Standard real normal N(0, 1).
    double normal();
    // Standard complex normal: density exp(-|z|^2)/pi, i.e. re and im are
    // independent N(0, 1/2).
    ComplexScalar complex_normal();

  private:
    RngHandle handle_;
    std::mt19937_64 engine_;
};

// Entrywise independent N_C(center_ij, sigma^2); re/im parts each carry
// variance sigma^2/2.
ComplexMatrix sample_gaussian_matrix(Eigen::Index rows, Eigen::Index cols,
                                     const ComplexMatrix& center, double sigma, Rng& rng);

// Centered unit-variance convenience overload (Ginibre for square shapes).
ComplexMatrix sample_gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);

// Rejection-sampled Gaussian conditioned on ||A - center||_F <= radius.
ComplexMatrix sample_truncated_gaussian_matrix(Eigen::Index rows, Eigen::Index cols,
                                               const ComplexMatrix& center, double sigma,
                                               double radius, Rng& rng);

ComplexVector sample_gaussian_vector(Eigen::Index size, Rng& rng);

}  // namespace eigenflow

#pragma once

#include <cstdint>

namespace minsky {

// splitmix64 step: advances the state and returns the next output.
// Also the seed-mixing function for ensemble runs.
std::uint64_t splitmix64(std::uint64_t& state);

// First splitmix64 output of the stream seeded with base ^ index; gives every
// ensemble run its own reproducible seed.
std::uint64_t mix_seed(std::uint64_t base_seed, std::uint64_t run_index);

// xoshiro256++ generator, seeded from four splitmix64 outputs so that any
// 64-bit seed (including 0) yields a valid nonzero state. Bit-reproducible
// across platforms.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed);

    std::uint64_t next();

    // Uniform on the open interval (0, 1): ((next() >> 11) + 0.5) * 2^-53.
    double uniform01();

    // Standard normal variate via the inverse CDF.
    double normal();

private:
    std::uint64_t state_[4];
};

// Inverse of the standard normal CDF (Wichura's AS241 PPND16 approximation,
// accurate to ~1e-16 on (0,1)). Throws DomainError outside (0,1).
double normal_icdf(double p);

}  // namespace minsky

#pragma once

#include <cstdint>

namespace vqx {

// Deterministic random source (xoshiro256** seeded through splitmix64).
// Instances are never shared between threads; independent streams are
// obtained with child(), which depends only on the construction seed and
// the stream index, not on how many values were drawn so far.
class Rng {
  public:
    explicit Rng(uint64_t seed);

    uint64_t next_u64();

    // uniform on [0, 1)
    double uniform();
    // uniform on [a, b)
    double uniform(double a, double b);
    // standard normal (Box-Muller)
    double normal();
    // unbiased integer in [0, n)
    uint64_t uniform_int(uint64_t n);

    uint64_t seed() const { return seed_; }
    Rng child(uint64_t stream) const;

    static uint64_t derive_seed(uint64_t master, uint64_t stream);

  private:
    uint64_t seed_;
    uint64_t state_[4];
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

} // namespace vqx

#ifndef POLYMERLAB_RNG_HPP
#define POLYMERLAB_RNG_HPP

#include <cstdint>

namespace polymerlab::rng {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Key derivation: mixes a master seed with coordinate words. Streams derived
// from distinct coordinates are independent for sampling purposes and do not
// depend on evaluation order, so parallel replicas reproduce exactly.
inline uint64_t derive_key(uint64_t master, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
    uint64_t s = master;
    uint64_t k = splitmix64(s);
    s = k ^ (a * 0x9e3779b97f4a7c15ull);
    k = splitmix64(s);
    s = k ^ (b * 0xc2b2ae3d27d4eb4full);
    k = splitmix64(s);
    s = k ^ (c * 0x165667b19e3779f9ull);
    return splitmix64(s);
}

// Unbounded deterministic stream seeded by a derived key.
class Stream {
  public:
    explicit Stream(uint64_t key) : state_(key) {}

    uint64_t next_u64() { return splitmix64(state_); }

    // uniform on (0,1)
    double next_unit() {
        return (double(next_u64() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    }

    double next_normal();                 // standard normal, polar method
    double next_gamma(double shape);      // Gamma(shape, 1)
    double next_inverse_gamma(double shape) { return 1.0 / next_gamma(shape); }

  private:
    uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0;
};

}  // namespace polymerlab::rng

#endif

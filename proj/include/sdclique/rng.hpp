#ifndef SDCLIQUE_RNG_HPP
#define SDCLIQUE_RNG_HPP

#include <cstdint>
#include <random>

namespace sdc {

/// splitmix64 finalizer; used to derive independent per-run seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t run_seed(std::uint64_t seed, std::uint64_t run) {
  return mix64(mix64(seed) ^ mix64(run + 0x632be59bd9b4e019ULL));
}

/// mt19937_64 has a fully specified output sequence, so together with the
/// hand-rolled conversion below draws are identical on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on the open interval (0,1).
  double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % bound;
  }

  double operator()() { return uniform(); }

private:
  std::mt19937_64 engine_;
};

} // namespace sdc

#endif // SDCLIQUE_RNG_HPP

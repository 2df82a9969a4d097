#ifndef RSEDA_RNG_HPP
#define RSEDA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace rseda {

/// Deterministic random stream. Wraps mt19937_64 but generates uniforms and
/// normals itself so that identical seeds give bit-identical streams on any
/// platform (std::uniform_real_distribution and std::normal_distribution are
/// implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; the second deviate of each pair is
  /// cached, so draws come in a fixed order regardless of call sites.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace rseda

#endif  // RSEDA_RNG_HPP

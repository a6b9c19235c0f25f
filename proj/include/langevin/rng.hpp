#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace langevin {

// Philox4x32-10 counter-based generator. Each (key, counter) pair maps to an
// independent 128-bit block, so parallel chains can draw from disjoint
// streams without shared state and any draw can be recomputed from its
// coordinates alone.
struct Philox4x32 {
  static std::array<std::uint32_t, 4> block(std::uint64_t key,
                                            std::uint32_t c0, std::uint32_t c1,
                                            std::uint32_t c2, std::uint32_t c3) {
    std::uint32_t k0 = static_cast<std::uint32_t>(key);
    std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
    std::uint32_t x0 = c0, x1 = c1, x2 = c2, x3 = c3;
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = 0xD2511F53ull * x0;
      const std::uint64_t p1 = 0xCD9E8D57ull * x2;
      const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      x0 = hi1 ^ x1 ^ k0;
      x1 = lo1;
      x2 = hi0 ^ x3 ^ k1;
      x3 = lo0;
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    return {x0, x1, x2, x3};
  }
};

// Standard-normal stream keyed by (seed, chain). A draw is addressed by
// (step, coord, slot); each address yields one Box-Muller pair.
class GaussianStream {
 public:
  GaussianStream(std::uint64_t seed, std::uint64_t chain) : seed_(seed), chain_(chain) {}

  std::pair<double, double> normal_pair(std::uint64_t step, std::uint32_t coord,
                                        std::uint32_t slot) const {
    const auto r = Philox4x32::block(seed_, static_cast<std::uint32_t>(step),
                                     static_cast<std::uint32_t>(step >> 32) ^ slot,
                                     coord, static_cast<std::uint32_t>(chain_));
    const double u1 = uniform53(r[0], r[1]);
    const double u2 = uniform53(r[2], r[3]);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.283185307179586476925287 * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

  double normal(std::uint64_t step, std::uint32_t coord, std::uint32_t slot) const {
    return normal_pair(step, coord, slot).first;
  }

 private:
  // 53-bit uniform in the open interval (0, 1).
  static double uniform53(std::uint32_t a, std::uint32_t b) {
    const std::uint64_t v = (static_cast<std::uint64_t>(a) << 32) | b;
    return (static_cast<double>(v >> 11) + 0.5) * (1.0 / 9007199254740992.0);
  }

  std::uint64_t seed_;
  std::uint64_t chain_;
};

}  // namespace langevin

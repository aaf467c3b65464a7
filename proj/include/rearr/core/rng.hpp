#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Dense>
#include <Eigen/Geometry>

namespace rearr {

// Mixes a (seed, stream) pair into a fresh 64-bit seed so that parallel
// workers get independent, reproducible streams.
inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Seeded RNG wrapper. All sampling goes through hand-rolled transforms of
// mt19937_64 output so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), gen_(seed) {}

  uint64_t seed() const { return seed_; }

  Rng derive(uint64_t stream) const { return Rng(mix_seed(seed_, stream)); }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * (1.0 / 9007199254740992.0);
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  uint64_t uniform_index(uint64_t n) {
    return n == 0 ? 0 : static_cast<uint64_t>(uniform() * static_cast<double>(n)) % n;
  }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(uniform_index(static_cast<uint64_t>(hi - lo + 1)));
  }

  // Standard normal via Box-Muller with one cached value.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * M_PI * u2;
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
  }

  Eigen::Vector3d normal3() {
    Eigen::Vector3d v;
    v.x() = normal();
    v.y() = normal();
    v.z() = normal();
    return v;
  }

  // Uniform over SO(3) (Shoemake's subgroup algorithm).
  Eigen::Quaterniond uniform_quaternion() {
    const double u1 = uniform(), u2 = uniform(), u3 = uniform();
    const double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
    return Eigen::Quaterniond(a * std::sin(2 * M_PI * u2), a * std::cos(2 * M_PI * u2),
                              b * std::sin(2 * M_PI * u3), b * std::cos(2 * M_PI * u3))
        .normalized();
  }

  // Uniform inside the ball of given radius.
  Eigen::Vector3d uniform_in_ball(double radius) {
    while (true) {
      Eigen::Vector3d p(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
      if (p.squaredNorm() <= 1.0) return p * radius;
    }
  }

  Eigen::Vector3d uniform_unit_vector() {
    while (true) {
      Eigen::Vector3d p(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
      const double n2 = p.squaredNorm();
      if (n2 > 1e-12 && n2 <= 1.0) return p / std::sqrt(n2);
    }
  }

 private:
  uint64_t seed_ = 0;
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace rearr

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace poromesh {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Thrown on invalid user input (config files, parameter sets, bad meshes).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a solver cannot converge; carries enough context for the
// caller to decide on time step cuts or abort.
struct SolverError : std::runtime_error {
  explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

// Levi-Civita double contraction E:(a (x) b) = a x b appears all over the
// model equations; plain cross products are used directly.  The helper below
// builds the skew matrix S(a) with S(a)*b = a x b.
inline Mat3 skew(const Vec3& a) {
  Mat3 s;
  s << 0, -a.z(), a.y(), a.z(), 0, -a.x(), -a.y(), a.x(), 0;
  return s;
}

// E : sigma for a second order tensor, (E:s)_i = eps_ijk s_jk.
inline Vec3 axial(const Mat3& s) {
  return Vec3(s(1, 2) - s(2, 1), s(2, 0) - s(0, 2), s(0, 1) - s(1, 0));
}

// Deterministic 64-bit generator.  std::mt19937_64 state transitions are
// fully specified by the standard; the uniform helpers below avoid
// std::uniform_real_distribution whose output is implementation defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  uint64_t next_u64() {
    // xorshift* variant; deterministic across platforms.
    uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545f4914f6cdd1dull;
  }

  // Uniform in [0,1).
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  uint32_t uniform_index(uint32_t n) {
    return n ? uint32_t(next_u64() % n) : 0u;
  }

 private:
  uint64_t state_;
};

// FNV-1a, used for provenance hashes of configs.
inline uint64_t fnv1a(const std::string& data) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string hex64(uint64_t v) {
  char buf[17];
  snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

}  // namespace poromesh

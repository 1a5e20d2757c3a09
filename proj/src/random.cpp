#include "l1sdp/random.hpp"

#include <cmath>
#include <numbers>

namespace l1sdp {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

SymMat random_symmetric(int n, double lo, double hi, SplitMix64& rng) {
  SymMat m(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= j; ++i) m(i, j) = rng.uniform(lo, hi);
  return m;
}

SymMat random_symmetrized(int n, double lo, double hi, SplitMix64& rng) {
  Eigen::MatrixXd full(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) full(i, j) = rng.uniform(lo, hi);
  return SymMat::from_dense(full);
}

}  // namespace l1sdp

#include "frameforge/random.hpp"

namespace frameforge {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Rng make_stream(std::uint64_t seed, std::string_view label) {
  return Rng(splitmix64(seed ^ splitmix64(fnv1a(label))));
}

Vector uniform_vector(Rng& rng, Index n, bool complex) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vector v(n);
  for (Index i = 0; i < n; ++i) {
    const double re = u(rng);
    v[i] = Complex(re, complex ? u(rng) : 0.0);
  }
  return v;
}

Vector random_unit_vector(Rng& rng, Index n, bool complex) {
  std::normal_distribution<double> g;
  Vector v(n);
  for (Index i = 0; i < n; ++i) {
    const double re = g(rng);
    v[i] = Complex(re, complex ? g(rng) : 0.0);
  }
  const double nrm = v.norm();
  return nrm > 0 ? Vector(v / nrm) : v;
}

}  // namespace frameforge

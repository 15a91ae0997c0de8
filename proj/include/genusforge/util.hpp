#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace genusforge {

/// Exact rational with reduced representation; enough arithmetic for the
/// Euler lower-bound computations.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }
  long long ceil() const {
    if (num >= 0) return (num + den - 1) / den;
    return -((-num) / den);
  }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

/// FNV-1a over bytes; used for certificate hashes (stability, not security).
inline uint64_t fnv1a64(const std::string& data) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(uint64_t v);

/// Cyclic-sequence helpers shared by logs and rotations.
template <typename T>
bool cyclic_equal(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const size_t n = a.size();
  for (size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i)
      if (a[(s + i) % n] != b[i]) ok = false;
    if (ok) return true;
  }
  return false;
}

template <typename T>
bool cyclic_contains_run(const std::vector<T>& seq, const std::vector<T>& run) {
  if (run.empty()) return true;
  if (seq.size() < run.size()) return false;
  const size_t n = seq.size();
  for (size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (size_t i = 0; i < run.size() && ok; ++i)
      if (seq[(s + i) % n] != run[i]) ok = false;
    if (ok) return true;
  }
  return false;
}

/// Least rotation under element order; ties broken by subsequent elements.
template <typename T>
std::vector<T> canonical_rotation(const std::vector<T>& seq) {
  if (seq.empty()) return seq;
  const size_t n = seq.size();
  size_t best = 0;
  for (size_t s = 1; s < n; ++s) {
    for (size_t i = 0; i < n; ++i) {
      const T& a = seq[(s + i) % n];
      const T& b = seq[(best + i) % n];
      if (a < b) {
        best = s;
        break;
      }
      if (b < a) break;
    }
  }
  std::vector<T> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = seq[(best + i) % n];
  return out;
}

}  // namespace genusforge

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "gwloc/errors.hpp"

namespace gwloc {

/// Exact rational scalar.  Always canonical: gcd(|num|, den) = 1, den > 0.
/// Backed by GMP; every operation is exact and there is no floating-point
/// mode anywhere in the engine.
class BigRat {
 public:
  BigRat() : v_(0) {}
  BigRat(long n) : v_(n) {}  // NOLINT: implicit by design
  BigRat(long num, long den);
  explicit BigRat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses decimal strings, e.g. ("-4876875", "8").
  static BigRat fromDecimal(const std::string& num, const std::string& den);

  BigRat operator-() const { return BigRat(mpq_class(-v_)); }
  BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
  BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
  BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
  BigRat& operator/=(const BigRat& o);

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigRat& a, const BigRat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const BigRat& a, const BigRat& b) { return a.v_ >= b.v_; }

  bool isZero() const { return sgn(v_) == 0; }
  bool isInteger() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigRat inverse() const;
  BigRat pow(long e) const;  // negative e inverts; throws on 0^-e

  std::string numeratorString() const { return v_.get_num().get_str(); }
  std::string denominatorString() const { return v_.get_den().get_str(); }
  /// "p/q", or just "p" when q = 1.
  std::string str() const;

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

BigRat factorial(long n);
BigRat intPow(long base, long e);

/// Torus weights alpha_0..alpha_n at the n+1 fixed points, specialized to
/// concrete pairwise-distinct rationals.  Identical (n, seed) always
/// reproduces the same assignment.
struct WeightAssignment {
  std::vector<BigRat> alphas;
  std::uint64_t seed = 0;

  int n() const { return static_cast<int>(alphas.size()) - 1; }
  const BigRat& alpha(int i) const { return alphas.at(static_cast<size_t>(i)); }
};

/// Deterministic generic-weight sampling.  Resamples internally until all
/// n+1 values are pairwise distinct; numerators and denominators stay well
/// below 2^31 so downstream products remain small.
WeightAssignment sampleWeights(int n, std::uint64_t seed);

/// The same assignment shifted by a constant: alpha_i -> alpha_i + c.
/// Localization totals must not change under this.
WeightAssignment shiftWeights(const WeightAssignment& w, const BigRat& c);

}  // namespace gwloc

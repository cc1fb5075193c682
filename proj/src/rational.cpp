#include "gwloc/rational.hpp"

#include <random>

namespace gwloc {

BigRat::BigRat(long num, long den) {
  if (den == 0) throw invalid_input("BigRat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

BigRat BigRat::fromDecimal(const std::string& num, const std::string& den) {
  mpz_class n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw invalid_input("BigRat: bad decimal string '" + num + "/" + den + "'");
  if (d == 0) throw invalid_input("BigRat: zero denominator");
  mpq_class q(n);
  q /= mpq_class(d);
  return BigRat(q);
}

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.isZero()) throw invalid_input("BigRat: division by zero");
  v_ /= o.v_;
  return *this;
}

BigRat BigRat::inverse() const {
  if (isZero()) throw invalid_input("BigRat: inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return BigRat(r);
}

BigRat BigRat::pow(long e) const {
  if (e == 0) return BigRat(1);
  const BigRat base = e > 0 ? *this : inverse();
  long k = e > 0 ? e : -e;
  BigRat acc(1), cur = base;
  while (k > 0) {
    if (k & 1) acc *= cur;
    cur *= cur;
    k >>= 1;
  }
  return acc;
}

std::string BigRat::str() const {
  if (isInteger()) return numeratorString();
  return numeratorString() + "/" + denominatorString();
}

BigRat factorial(long n) {
  if (n < 0) throw invalid_input("factorial of negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return BigRat(mpq_class(f));
}

BigRat intPow(long base, long e) {
  return BigRat(base).pow(e);
}

WeightAssignment sampleWeights(int n, std::uint64_t seed) {
  if (n < 1) throw invalid_input("sampleWeights: need n >= 1");
  // mt19937_64 output is fully specified by the standard, so assignments are
  // reproducible across platforms.  Avoid distribution classes for the same
  // reason.
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL +
                      static_cast<std::uint64_t>(n));
  WeightAssignment w;
  w.seed = seed;
  auto draw = [&rng]() {
    long num = static_cast<long>(rng() % 2000001ULL) - 1000000;  // [-1e6, 1e6]
    if (num == 0) num = 1;
    long den = static_cast<long>(rng() % 997ULL) + 1;  // [1, 997]
    return BigRat(num, den);
  };
  while (static_cast<int>(w.alphas.size()) < n + 1) {
    BigRat cand = draw();
    bool clash = false;
    for (const BigRat& a : w.alphas)
      if (a == cand) { clash = true; break; }
    if (!clash) w.alphas.push_back(cand);
  }
  return w;
}

WeightAssignment shiftWeights(const WeightAssignment& w, const BigRat& c) {
  WeightAssignment out = w;
  for (BigRat& a : out.alphas) a += c;
  return out;
}

}  // namespace gwloc

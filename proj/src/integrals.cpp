#include "gwloc/integrals.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace gwloc {

namespace {

long sumExp(const std::vector<long>& e) {
  return std::accumulate(e.begin(), e.end(), 0L);
}

void checkNonNegative(const std::vector<long>& e) {
  for (long a : e)
    if (a < 0) throw invalid_input("psi integral: negative exponent");
}

// Pure-psi genus-one integrals by string/dilaton.  Any balanced exponent
// vector has a 0 or a 1 entry (all entries >= 2 would overshoot the
// dimension), so the recursion always terminates at <psi_1>_{1,1} = 1/24.
BigRat g1Psi(std::vector<long> e);

BigRat g1PsiMemo(const std::vector<long>& sorted);

BigRat g1Psi(std::vector<long> e) {
  const size_t n = e.size();
  if (n == 1) return BigRat(1, 24);  // e == {1}
  auto zero = std::find(e.begin(), e.end(), 0L);
  if (zero != e.end()) {
    // String: remove the zero, lower each remaining exponent in turn.
    std::vector<long> rest;
    rest.reserve(n - 1);
    for (auto it = e.begin(); it != e.end(); ++it)
      if (it != zero) rest.push_back(*it);
    BigRat total(0);
    for (size_t j = 0; j < rest.size(); ++j) {
      if (rest[j] == 0) continue;
      std::vector<long> next = rest;
      --next[j];
      total += g1PsiMemo(next);
    }
    return total;
  }
  // No zero: some exponent equals 1; dilaton scales by 2g-2+(n-1) = n-1.
  auto one = std::find(e.begin(), e.end(), 1L);
  std::vector<long> rest;
  rest.reserve(n - 1);
  for (auto it = e.begin(); it != e.end(); ++it)
    if (it != one) rest.push_back(*it);
  return BigRat(static_cast<long>(n) - 1) * g1PsiMemo(rest);
}

std::map<std::vector<long>, BigRat> g1Cache;
std::mutex g1CacheMutex;

BigRat g1PsiMemo(const std::vector<long>& e) {
  std::vector<long> key = e;
  std::sort(key.begin(), key.end());
  {
    std::lock_guard<std::mutex> lock(g1CacheMutex);
    auto it = g1Cache.find(key);
    if (it != g1Cache.end()) return it->second;
  }
  BigRat v = g1Psi(key);
  std::lock_guard<std::mutex> lock(g1CacheMutex);
  g1Cache.emplace(std::move(key), v);
  return v;
}

}  // namespace

void PsiMonomial::validate() const {
  if (genus != 0 && genus != 1) throw invalid_input("PsiMonomial: genus must be 0 or 1");
  if (lambdaOne && genus != 1)
    throw invalid_input("PsiMonomial: lambda_1 only exists in genus 1");
  checkNonNegative(exponents);
  const long n = static_cast<long>(exponents.size());
  const long degree = sumExp(exponents) + (lambdaOne ? 1 : 0);
  const long dim = genus == 0 ? n - 3 : n;
  if (genus == 0 && n < 3)
    throw invalid_input("PsiMonomial: genus 0 needs >= 3 points");
  if (genus == 1 && n < 1)
    throw invalid_input("PsiMonomial: genus 1 needs >= 1 point");
  if (degree != dim) throw invalid_input("PsiMonomial: dimension mismatch");
}

BigRat psiIntegralG0(const std::vector<long>& exponents) {
  PsiMonomial{0, exponents, false}.validate();
  const long n = static_cast<long>(exponents.size());
  BigRat v = factorial(n - 3);
  for (long a : exponents) v /= factorial(a);
  return v;
}

BigRat psiIntegralG1(const std::vector<long>& exponents, bool withLambdaOne) {
  PsiMonomial{1, exponents, withLambdaOne}.validate();
  const long n = static_cast<long>(exponents.size());
  if (!withLambdaOne) return g1PsiMemo(exponents);
  // lambda_1 * psi monomial reduces to (1/24) times a multinomial; the
  // string/dilaton oracle in the test suite cross-checks this reduction.
  BigRat v = factorial(n - 1) * BigRat(1, 24);
  for (long a : exponents) v /= factorial(a);
  return v;
}

BigRat blowupTangentIntegral(long m, long jPsize) {
  if (m < 1) throw invalid_input("blowupTangentIntegral: need m >= 1");
  if (jPsize < 0) throw invalid_input("blowupTangentIntegral: need |J_P| >= 0");
  return intPow(m, jPsize) * factorial(m - 1) / BigRat(24);
}

}  // namespace gwloc

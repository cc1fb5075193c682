#pragma once

#include <vector>

#include "gwloc/rational.hpp"

namespace gwloc {

/// A psi monomial on a moduli space of curves, with an optional single
/// lambda_1 factor in genus one (the Hodge bundle is a line there, so no
/// higher lambda power is representable).
struct PsiMonomial {
  int genus = 0;                 // 0 or 1
  std::vector<long> exponents;   // one entry per marked point
  bool lambdaOne = false;        // genus 1 only

  /// Throws invalid_input unless the total degree matches the moduli
  /// dimension: sum + (lambdaOne ? 1 : 0) = #points - 3 (genus 0)
  /// or #points (genus 1).
  void validate() const;
};

/// Integral of prod psi_i^{a_i} over the genus-zero space with
/// |exponents| >= 3 points: the multinomial (N-3)! / prod a_i!.
BigRat psiIntegralG0(const std::vector<long>& exponents);

/// Genus-one psi (and lambda_1 psi) integrals, computed by the string and
/// dilaton recursion grounded at <psi_1> = <lambda_1> = 1/24 on the
/// one-pointed space.  Memoized; safe for concurrent callers.
BigRat psiIntegralG1(const std::vector<long>& exponents, bool withLambdaOne);

/// <c_1^{m+|J_P|}(L*)> on the blown-up genus-one curve space:
/// m^{|J_P|} * (m-1)! / 24.
BigRat blowupTangentIntegral(long m, long jPsize);

}  // namespace gwloc

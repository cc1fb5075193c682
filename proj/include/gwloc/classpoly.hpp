#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gwloc/rational.hpp"

namespace gwloc {

/// Ambient ring of an Euler-class computation on one fixed locus: named
/// nilpotent generators (hyperplane class h, blowup line class lam, flag
/// cotangent classes psi_*) each with an individual degree cap.
class NilpotentRing {
 public:
  NilpotentRing() = default;

  /// Returns the generator index.  Cap 0 means the generator is identically
  /// zero (e.g. h on P^0).
  int addGenerator(const std::string& name, int cap);

  int size() const { return static_cast<int>(caps_.size()); }
  int cap(int g) const { return caps_.at(static_cast<size_t>(g)); }
  const std::string& name(int g) const { return names_.at(static_cast<size_t>(g)); }
  int indexOf(const std::string& name) const;  // throws if absent

 private:
  std::vector<std::string> names_;
  std::vector<int> caps_;
};

/// Truncated polynomial in the ring's generators with BigRat coefficients.
/// Monomials exceeding any generator's cap are identically zero; addition
/// and multiplication are exact and truncation-closed.
class NilpotentClassPoly {
 public:
  using Monomial = std::vector<int>;  // one exponent per generator

  explicit NilpotentClassPoly(const NilpotentRing* ring) : ring_(ring) {}

  static NilpotentClassPoly constant(const NilpotentRing* ring, const BigRat& c);
  static NilpotentClassPoly generator(const NilpotentRing* ring, int g);
  /// c + sum coef_i * gen_i (the shape of every Euler factor we build).
  static NilpotentClassPoly linear(const NilpotentRing* ring, const BigRat& c,
                                   const std::vector<std::pair<int, BigRat>>& terms);

  NilpotentClassPoly& operator+=(const NilpotentClassPoly& o);
  NilpotentClassPoly& operator-=(const NilpotentClassPoly& o);
  NilpotentClassPoly& operator*=(const NilpotentClassPoly& o);
  NilpotentClassPoly& operator*=(const BigRat& c);

  friend NilpotentClassPoly operator+(NilpotentClassPoly a, const NilpotentClassPoly& b) { return a += b; }
  friend NilpotentClassPoly operator-(NilpotentClassPoly a, const NilpotentClassPoly& b) { return a -= b; }
  friend NilpotentClassPoly operator*(NilpotentClassPoly a, const NilpotentClassPoly& b) { return a *= b; }
  friend NilpotentClassPoly operator*(NilpotentClassPoly a, const BigRat& c) { return a *= c; }

  /// Multiplicative inverse.  Requires an invertible scalar part; a zero
  /// scalar part means the weight assignment is degenerate for this locus,
  /// so non_generic_weights is thrown.
  NilpotentClassPoly inverse() const;

  bool isZero() const { return terms_.empty(); }
  BigRat scalarPart() const;
  BigRat coefficient(const Monomial& m) const;
  const std::map<Monomial, BigRat>& terms() const { return terms_; }
  const NilpotentRing* ring() const { return ring_; }

  std::string str() const;

 private:
  void addTerm(const Monomial& m, const BigRat& c);

  const NilpotentRing* ring_;
  std::map<Monomial, BigRat> terms_;  // ordered: deterministic iteration
};

}  // namespace gwloc

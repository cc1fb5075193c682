#include "gwloc/classpoly.hpp"

#include <sstream>

#include "gwloc/errors.hpp"

namespace gwloc {

int NilpotentRing::addGenerator(const std::string& name, int cap) {
  if (cap < 0) throw invalid_input("NilpotentRing: negative cap");
  names_.push_back(name);
  caps_.push_back(cap);
  return static_cast<int>(caps_.size()) - 1;
}

int NilpotentRing::indexOf(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  throw invalid_input("NilpotentRing: unknown generator " + name);
}

NilpotentClassPoly NilpotentClassPoly::constant(const NilpotentRing* ring,
                                                const BigRat& c) {
  NilpotentClassPoly p(ring);
  p.addTerm(Monomial(static_cast<size_t>(ring->size()), 0), c);
  return p;
}

NilpotentClassPoly NilpotentClassPoly::generator(const NilpotentRing* ring, int g) {
  NilpotentClassPoly p(ring);
  Monomial m(static_cast<size_t>(ring->size()), 0);
  m.at(static_cast<size_t>(g)) = 1;
  p.addTerm(m, BigRat(1));
  return p;
}

NilpotentClassPoly NilpotentClassPoly::linear(
    const NilpotentRing* ring, const BigRat& c,
    const std::vector<std::pair<int, BigRat>>& terms) {
  NilpotentClassPoly p = constant(ring, c);
  for (const auto& [g, coef] : terms) {
    Monomial m(static_cast<size_t>(ring->size()), 0);
    m.at(static_cast<size_t>(g)) = 1;
    p.addTerm(m, coef);
  }
  return p;
}

void NilpotentClassPoly::addTerm(const Monomial& m, const BigRat& c) {
  if (c.isZero()) return;
  for (int g = 0; g < ring_->size(); ++g)
    if (m[static_cast<size_t>(g)] > ring_->cap(g)) return;  // nilpotent overflow
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

NilpotentClassPoly& NilpotentClassPoly::operator+=(const NilpotentClassPoly& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

NilpotentClassPoly& NilpotentClassPoly::operator-=(const NilpotentClassPoly& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, -c);
  return *this;
}

NilpotentClassPoly& NilpotentClassPoly::operator*=(const NilpotentClassPoly& o) {
  NilpotentClassPoly out(ring_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(ma);
      bool alive = true;
      for (size_t g = 0; g < m.size(); ++g) {
        m[g] += mb[g];
        if (m[g] > ring_->cap(static_cast<int>(g))) { alive = false; break; }
      }
      if (alive) out.addTerm(m, ca * cb);
    }
  terms_.swap(out.terms_);
  return *this;
}

NilpotentClassPoly& NilpotentClassPoly::operator*=(const BigRat& c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

BigRat NilpotentClassPoly::scalarPart() const {
  return coefficient(Monomial(static_cast<size_t>(ring_->size()), 0));
}

BigRat NilpotentClassPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRat(0) : it->second;
}

NilpotentClassPoly NilpotentClassPoly::inverse() const {
  const BigRat c = scalarPart();
  if (c.isZero())
    throw non_generic_weights("Euler-class inversion hit a zero scalar part");
  // Write p = c - N with N nilpotent; then 1/p = (1/c) sum_k (N/c)^k and
  // the series terminates.
  NilpotentClassPoly nilOverC = constant(ring_, c) - *this;
  nilOverC *= c.inverse();
  NilpotentClassPoly acc = constant(ring_, BigRat(1));
  NilpotentClassPoly power = constant(ring_, BigRat(1));
  while (true) {
    power *= nilOverC;
    if (power.isZero()) break;
    acc += power;
  }
  acc *= c.inverse();
  return acc;
}

std::string NilpotentClassPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (size_t g = 0; g < m.size(); ++g)
      if (m[g] > 0) {
        os << "*" << ring_->name(static_cast<int>(g));
        if (m[g] > 1) os << "^" << m[g];
      }
  }
  return os.str();
}

}  // namespace gwloc

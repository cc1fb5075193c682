#include "gwloc/posets.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <sstream>

namespace gwloc {

namespace {

std::string maskStr(std::uint64_t s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int b = 0; b < 64; ++b)
    if (s >> b & 1) {
      if (!first) os << ",";
      os << (b + 1);
      first = false;
    }
  os << "}";
  return os.str();
}

void checkK(int k) {
  if (k < 0 || k > 62) throw invalid_input("mark count must be in [0, 62]");
}

}  // namespace

std::vector<int> markSetToList(MarkSet s) {
  std::vector<int> out;
  for (int b = 0; b < 64; ++b)
    if (s >> b & 1) out.push_back(b + 1);
  return out;
}

MarkSet markSetFromList(const std::vector<int>& marks, int k) {
  checkK(k);
  MarkSet s = 0;
  for (int l : marks) {
    if (l < 1 || l > k) throw invalid_input("mark label out of range");
    s |= MarkSet{1} << (l - 1);
  }
  return s;
}

std::string AdmissibleTriple::str() const {
  std::ostringstream os;
  os << "(" << m << ";" << maskStr(jP) << "," << maskStr(jB) << ")";
  return os.str();
}

std::vector<AdmissibleTriple> enumerateAdmissibleTriples(int d, int k) {
  if (d < 1) throw invalid_input("enumerateAdmissibleTriples: need d >= 1");
  checkK(k);
  const MarkSet full = k == 0 ? 0 : (MarkSet{1} << k) - 1;
  std::vector<AdmissibleTriple> out;
  out.reserve(static_cast<size_t>(d) << k);
  for (int m = 1; m <= d; ++m)
    for (MarkSet jP = 0;; ++jP) {
      jP &= full;
      out.push_back({m, jP, full & ~jP});
      if (jP == full) break;
    }
  return out;
}

bool precedes(const AdmissibleTriple& a, const AdmissibleTriple& b) {
  if (a == b) return false;
  return a.m <= b.m && (a.jP & ~b.jP) == 0;
}

int LinearExtension::position(const AdmissibleTriple& s) const {
  for (size_t i = 0; i < order.size(); ++i)
    if (order[i] == s) return static_cast<int>(i);
  throw invalid_input("triple not in linear extension");
}

std::optional<AdmissibleTriple> LinearExtension::predecessor(
    const AdmissibleTriple& s) const {
  int p = position(s);
  if (p == 0) return std::nullopt;
  return order[static_cast<size_t>(p) - 1];
}

LinearExtension linearExtension(std::vector<AdmissibleTriple> triples) {
  if (triples.empty()) throw invalid_input("linearExtension: empty input");
  // Downward closure: for every element, every subset of J_P at every
  // m' <= m must be present.
  std::set<std::pair<int, MarkSet>> have;
  for (const auto& t : triples) {
    if ((t.jP & t.jB) != 0) throw invalid_input("linearExtension: overlapping marks");
    if (!have.insert({t.m, t.jP}).second)
      throw invalid_input("linearExtension: duplicate triple");
  }
  for (const auto& t : triples)
    for (int m = 1; m <= t.m; ++m)
      for (MarkSet sub = t.jP;; sub = (sub - 1) & t.jP) {
        if (!have.count({m, sub}))
          throw invalid_input("linearExtension: input not downward-closed");
        if (sub == 0) break;
      }
  std::sort(triples.begin(), triples.end(),
            [](const AdmissibleTriple& a, const AdmissibleTriple& b) {
              if (a.m != b.m) return a.m < b.m;
              int pa = std::popcount(a.jP), pb = std::popcount(b.jP);
              if (pa != pb) return pa < pb;
              return a.jP < b.jP;
            });
  return LinearExtension{std::move(triples)};
}

AdmissibleTriple meetUpper(const AdmissibleTriple& a, const AdmissibleTriple& b) {
  if (precedes(a, b) || precedes(b, a) || a == b)
    throw invalid_input("meetUpper: inputs must be incomparable and distinct");
  return {std::min(a.m, b.m), a.jP & b.jP, a.jB | b.jB};
}

std::string CurveSplit::str() const {
  std::ostringstream os;
  os << "(" << maskStr(iP) << ";";
  for (size_t i = 0; i < blocks.size(); ++i)
    os << (i ? "," : "") << maskStr(blocks[i]);
  os << ")";
  return os.str();
}

std::string MapSplit::str() const {
  std::ostringstream os;
  os << "(" << m << ";" << maskStr(jP) << "," << maskStr(jB) << ")";
  return os.str();
}

std::vector<CurveSplit> enumerateCurveSplits(int genus, int iSize, int jSize) {
  if (genus != 0 && genus != 1) throw invalid_input("curve splits: genus must be 0 or 1");
  if (iSize < 0 || jSize < 0 || iSize + jSize > 20)
    throw invalid_input("curve splits: ground set too large");
  const int nTot = iSize + jSize;
  const std::uint64_t iMask = iSize == 0 ? 0 : (std::uint64_t{1} << iSize) - 1;
  const std::uint64_t full = nTot == 0 ? 0 : (std::uint64_t{1} << nTot) - 1;

  std::vector<CurveSplit> out;
  // Recursively partition `rest` into blocks, always seeding each new block
  // with its lowest element so every partition appears exactly once.
  std::function<void(std::uint64_t, std::uint64_t, std::vector<std::uint64_t>&)> rec =
      [&](std::uint64_t iP, std::uint64_t rest, std::vector<std::uint64_t>& blocks) {
        if (rest == 0) {
          if (blocks.empty()) return;                          // K nonempty
          if (genus == 0 &&
              static_cast<int>(blocks.size()) + std::popcount(iP) < 2)
            return;
          CurveSplit cs{iP, blocks};
          std::sort(cs.blocks.begin(), cs.blocks.end());
          out.push_back(std::move(cs));
          return;
        }
        const int low = std::countr_zero(rest);
        const std::uint64_t lowBit = std::uint64_t{1} << low;
        const std::uint64_t others = rest & ~lowBit;
        // Every subset of `others` may join the block seeded by `low`.
        for (std::uint64_t sub = others;; sub = (sub - 1) & others) {
          const std::uint64_t block = lowBit | sub;
          bool ok = std::popcount(block) >= 2;
          if (ok && jSize > 0) ok = (block & iMask) != 0;      // A_g(I,J) variant
          if (ok) {
            blocks.push_back(block);
            rec(iP, rest & ~block, blocks);
            blocks.pop_back();
          }
          if (sub == 0) break;
        }
      };

  for (std::uint64_t iP = 0;; ++iP) {
    iP &= full;
    std::vector<std::uint64_t> blocks;
    rec(iP, full & ~iP, blocks);
    if (iP == full) break;
  }
  std::sort(out.begin(), out.end(), [](const CurveSplit& a, const CurveSplit& b) {
    if (a.iP != b.iP) return a.iP < b.iP;
    return a.blocks < b.blocks;
  });
  return out;
}

bool curveSplitPrecedes(const CurveSplit& a, const CurveSplit& b) {
  if (a == b) return false;
  // Need phi: K_b -> K_a with each block of b inside a block of a.  Blocks
  // of `a` are disjoint, so the witness is unique when it exists.
  for (std::uint64_t blk : b.blocks) {
    bool found = false;
    for (std::uint64_t host : a.blocks)
      if ((blk & ~host) == 0) { found = true; break; }
    if (!found) return false;
  }
  return true;
}

std::vector<MapSplit> enumerateMapSplits(int d, int jSize) {
  if (d < 1) throw invalid_input("enumerateMapSplits: need d >= 1");
  checkK(jSize);
  const MarkSet full = jSize == 0 ? 0 : (MarkSet{1} << jSize) - 1;
  std::vector<MapSplit> out;
  for (int m = 1; m <= d; ++m)
    for (MarkSet jP = 0;; ++jP) {
      jP &= full;
      if (m + std::popcount(jP) >= 2) out.push_back({m, jP, full & ~jP});
      if (jP == full) break;
    }
  return out;
}

bool mapSplitPrecedes(const MapSplit& a, const MapSplit& b) {
  if (a == b) return false;
  return a.m <= b.m && (a.jP & ~b.jP) == 0;
}

}  // namespace gwloc

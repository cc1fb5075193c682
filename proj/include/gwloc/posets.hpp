#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwloc/errors.hpp"

namespace gwloc {

/// Mark sets are bitmasks over {1..k}: bit (l-1) set means mark l.
/// k <= 62 enforced wherever masks are built.
using MarkSet = std::uint64_t;

std::vector<int> markSetToList(MarkSet s);   // 1-based mark labels
MarkSet markSetFromList(const std::vector<int>& marks, int k);

/// sigma = (m; J_P, J_B): index of a boundary stratum.  J_P and J_B
/// partition {1..k}, and 1 <= m <= d for the ambient degree d.
struct AdmissibleTriple {
  int m = 1;
  MarkSet jP = 0;
  MarkSet jB = 0;

  friend bool operator==(const AdmissibleTriple& a, const AdmissibleTriple& b) {
    return a.m == b.m && a.jP == b.jP && a.jB == b.jB;
  }
  std::string str() const;
};

/// All of A_1(d,k), duplicate-free; |result| = d * 2^k.
std::vector<AdmissibleTriple> enumerateAdmissibleTriples(int d, int k);

/// Strict partial order: sigma' != sigma, m' <= m, J_P' subset of J_P.
bool precedes(const AdmissibleTriple& a, const AdmissibleTriple& b);

/// A total order on A_1(d,k) extending the partial order, with the
/// predecessor map sigma -> sigma-1.  Tie-breaking: m ascending, |J_P|
/// ascending, then J_P as a bitmask.  predecessor(0) is the sentinel
/// (no predecessor for sigma_min).
struct LinearExtension {
  std::vector<AdmissibleTriple> order;
  /// Position of sigma in `order`, or throws if absent.
  int position(const AdmissibleTriple& s) const;
  /// Immediate predecessor in the total order; nullopt for sigma_min.
  std::optional<AdmissibleTriple> predecessor(const AdmissibleTriple& s) const;
};

/// Input must be downward-closed under `precedes` (in practice: the full
/// set A_1(d,k)); otherwise throws invalid_input.
LinearExtension linearExtension(std::vector<AdmissibleTriple> triples);

/// The deepest common lower bound of two incomparable triples:
/// (min(m1,m2); J_P1 & J_P2, J_B1 | J_B2).  Throws on comparable inputs.
AdmissibleTriple meetUpper(const AdmissibleTriple& a, const AdmissibleTriple& b);

/// Element of A_g(I) (and of A_g(I,J) when a J-part is present):
/// a distinguished subset I_P plus a multiset of blocks, partitioning the
/// ground set.  Ground-set elements are bit positions 0..N-1.
struct CurveSplit {
  std::uint64_t iP = 0;
  std::vector<std::uint64_t> blocks;  // sorted ascending; all nonempty

  friend bool operator==(const CurveSplit& a, const CurveSplit& b) {
    return a.iP == b.iP && a.blocks == b.blocks;
  }
  std::string str() const;
};

/// Element of A_0(d,J).
struct MapSplit {
  int m = 1;
  MarkSet jP = 0;
  MarkSet jB = 0;

  friend bool operator==(const MapSplit& a, const MapSplit& b) {
    return a.m == b.m && a.jP == b.jP && a.jB == b.jB;
  }
  std::string str() const;
};

/// A_g(I) for a ground set of size iSize: every block has >= 2 elements and
/// there is at least one block; genus 0 additionally needs |K| + |I_P| >= 2.
/// With jSize > 0 the ground set becomes I | J (I = bits 0..iSize-1,
/// J = the next jSize bits) and every block must meet I.
std::vector<CurveSplit> enumerateCurveSplits(int genus, int iSize, int jSize = 0);

/// rho' < rho iff rho' != rho and each block of rho sits inside some block
/// of rho'.
bool curveSplitPrecedes(const CurveSplit& a, const CurveSplit& b);

/// A_0(d,J): m <= d, J_P subset of J, m + |J_P| >= 2.
std::vector<MapSplit> enumerateMapSplits(int d, int jSize);

bool mapSplitPrecedes(const MapSplit& a, const MapSplit& b);

}  // namespace gwloc

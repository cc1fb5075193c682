#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gwloc/posets.hpp"

namespace gwloc {

/// Torus-fixed-locus combinatorics: vertices carry a genus and a fixed-point
/// label, edges carry covering degrees, tails mark points.  Edges form a
/// multiset (parallel edges are needed for the cycle-type genus-one loci);
/// self-loops are impossible since edge endpoints must carry distinct labels.
struct DecoratedGraph {
  struct Edge {
    int u = 0, v = 0;  // vertex indices, u <= v after normalization
    int deg = 1;
  };

  int n = 0;                  // labels live in {0..n}
  int k = 0;                  // number of marks
  std::vector<int> genus;     // per vertex, 0 or 1
  std::vector<int> mu;        // per vertex fixed-point label
  std::vector<Edge> edges;
  std::vector<int> tailAt;    // tailAt[l-1] = vertex of mark l

  int vertexCount() const { return static_cast<int>(mu.size()); }
  int totalDegree() const;
  int firstBetti() const;     // |Edg| - |Ver| + 1 for connected graphs
  bool connected() const;
  int edgeValence(int v) const;
  int tailCount(int v) const;

  /// Throws invalid_input if the structure is malformed (label clash on an
  /// edge, disconnected, bad genus entries, degree <= 0, ...).
  void validate() const;

  /// Isomorphism-class key: lexicographic minimum of the serialized graph
  /// over all vertex relabelings.  Graphs at this engine's scale are tiny,
  /// so the brute-force minimum is fine.
  std::string canonicalEncoding() const;

  /// Decoration-preserving automorphisms, counting permutations of parallel
  /// edges with equal degree (these act on the fixed locus).
  long autOrder() const;

  /// |Aut| * prod_e deg(e): the divisor of this locus' contribution.
  long fullAutFactor() const;
};

/// All genus-zero decorated trees of total degree d with k marks, up to
/// isomorphism, in deterministic (canonical-encoding) order.
std::vector<DecoratedGraph> enumerateGenus0Trees(int n, int d, int k);

/// The genus-one fixed loci lying in the effective part of the moduli
/// space: connected graphs with first Betti number one and all vertex
/// genera zero.  Loci with a contracted genus-one vertex are boundary loci
/// of the desingularization and are indexed by refined trees instead.
std::vector<DecoratedGraph> enumerateEffectiveGenus1Graphs(int n, int d, int k);

/// One branch hanging off a distinguished vertex: the first edge (degree,
/// far label) plus whatever continues beyond, with marks on the far vertex.
/// Children are kept sorted by canonical encoding.
struct TreeBranch {
  int deg = 1;
  int topMu = 0;
  MarkSet marks = 0;                 // marks at the far vertex
  std::vector<TreeBranch> children;  // branches below the far vertex

  int totalDegree() const;
  MarkSet allMarks() const;
  std::string encoding() const;
  long autOrder() const;  // sibling-multiset symmetries, recursively
};

/// Refined decorated rooted tree: the root carries the contracted genus-one
/// part; thick branches share one (degree, label) pair on their first edge;
/// dashed bubbles are degree-zero attachments with their own subtrees.
struct RefinedTree {
  struct Bubble {
    MarkSet marks = 0;                 // marks on the contracted component
    std::vector<TreeBranch> children;  // all topMu != rootMu, >= 1 child
  };

  int n = 0;
  int k = 0;
  int rootMu = 0;
  MarkSet rootMarks = 0;
  int dPlus = 1;                   // common first-edge degree on Edg_+
  int muPlus = 0;                  // common far label on Edg_+
  std::vector<TreeBranch> thick;   // Edg_+ branches (first edge = (dPlus, muPlus))
  std::vector<TreeBranch> solid;   // other solid root branches
  std::vector<Bubble> dashed;      // Ver_0 attachments

  int totalDegree() const;
  int rootEdgeCount() const;       // |Edg(v_0)| = thick + solid + dashed
  std::string encoding() const;
  long autOrder() const;           // |Aut(tree)|
  long fullAutFactor() const;      // |Aut| * prod over non-dashed edges of deg
  void validate() const;           // structural sanity of this representation
};

/// Explicit (Ver, Edg; v_0; Ver_+, Ver_0; mu, deg, eta) form, used by the
/// independent condition checker and by branch extraction.
struct FlatRefinedTree {
  int n = 0, k = 0;
  int root = 0;
  std::vector<int> parent;      // parent[root] = -1
  std::vector<int> mu;          // mu[v] = -1 on Ver_0
  std::vector<int> deg;         // per vertex: degree of the edge to parent; 0 on Ver_0
  std::vector<bool> verPlus;
  std::vector<bool> verZero;
  std::vector<int> tailAt;      // mark l at vertex tailAt[l-1]

  int vertexCount() const { return static_cast<int>(parent.size()); }
  std::vector<int> children(int v) const;
};

FlatRefinedTree flatten(const RefinedTree& t);

/// Checks conditions (i)-(v) of the refined-tree definition literally on
/// the flat form, independent of how the tree was produced.  Returns a
/// human-readable failure reason or the empty string.
std::string checkRefinedConditions(const FlatRefinedTree& f, int d);

/// All refined decorated rooted trees for (n, d, k) up to isomorphism,
/// deterministic order.  Empty for d = 1: the thick edges alone must carry
/// degree at least two.
std::vector<RefinedTree> enumerateRefinedTrees(int n, int d, int k);

/// The decorated graph of a refined tree: Ver_0 collapsed into the root,
/// dashed edges dropped, root genus one.
DecoratedGraph projectTree(const RefinedTree& t);

/// Branches eligible for cutting: every root edge outside Edg_0 and every
/// child edge of a Ver_0 vertex.  The cut adds mark 0 at the cut vertex,
/// which keeps the root's label.
struct BranchCut {
  enum class Kind { Thick, Solid, BubbleChild };
  Kind kind;
  int index;       // index into thick/solid/dashed
  int childIndex;  // for BubbleChild
};

std::vector<BranchCut> eligibleCuts(const RefinedTree& t);

/// The genus-zero decorated graph of one branch; mark 0 is appended as mark
/// k+1 in the graph's tail table (tail index k).  Throws invalid_input for
/// a dashed edge or an edge that is not eligible.
DecoratedGraph branchGraph(const RefinedTree& t, const BranchCut& cut);

/// Same, addressed by an edge of the flat form (parent edge of vertex v).
DecoratedGraph branchGraphByFlatEdge(const RefinedTree& t, int flatVertex);

/// Derived per-tree localization bookkeeping.
struct TreeLocusData {
  AdmissibleTriple sigma;  // (|Edg(v_0)|; J_{v_0}, [k] - J_{v_0})
  int dPlus = 1;
  int muPlus = 0;
  int edgPlusCount = 0;
  int dimPlus = 0;         // |Edg_+| - 2 if dPlus = 1, else |Edg_+| - 1
  int fPrimeRank = 0;      // dimPlus + 1
};

TreeLocusData treeLocusData(const RefinedTree& t);

}  // namespace gwloc

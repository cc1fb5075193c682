#include "gwloc/graphs.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace gwloc {

namespace {

// ---------------------------------------------------------------------------
// DecoratedGraph helpers

struct VertexInvariant {
  int genus;
  int mu;
  MarkSet tails;
  auto operator<=>(const VertexInvariant&) const = default;
};

VertexInvariant invariantOf(const DecoratedGraph& g, int v) {
  MarkSet t = 0;
  for (int l = 0; l < g.k; ++l)
    if (g.tailAt[static_cast<size_t>(l)] == v) t |= MarkSet{1} << l;
  return {g.genus[static_cast<size_t>(v)], g.mu[static_cast<size_t>(v)], t};
}

std::string serializeUnder(const DecoratedGraph& g, const std::vector<int>& newIndex) {
  const int V = g.vertexCount();
  std::vector<int> oldOf(static_cast<size_t>(V));
  for (int v = 0; v < V; ++v) oldOf[static_cast<size_t>(newIndex[static_cast<size_t>(v)])] = v;
  std::ostringstream os;
  os << "V" << V << "|";
  for (int w = 0; w < V; ++w) {
    const int v = oldOf[static_cast<size_t>(w)];
    os << g.genus[static_cast<size_t>(v)] << "." << g.mu[static_cast<size_t>(v)];
    for (int l = 0; l < g.k; ++l)
      if (g.tailAt[static_cast<size_t>(l)] == v) os << "t" << (l + 1);
    os << ";";
  }
  std::vector<std::array<int, 3>> es;
  es.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    int a = newIndex[static_cast<size_t>(e.u)], b = newIndex[static_cast<size_t>(e.v)];
    if (a > b) std::swap(a, b);
    es.push_back({a, b, e.deg});
  }
  std::sort(es.begin(), es.end());
  os << "E";
  for (const auto& e : es) os << e[0] << "-" << e[1] << ":" << e[2] << ",";
  return os.str();
}

// Enumerates all vertex relabelings compatible with the invariant classes
// and feeds them to the callback; returns the number of relabelings.
long forEachClassPerm(const DecoratedGraph& g,
                      const std::function<void(const std::vector<int>&)>& cb) {
  const int V = g.vertexCount();
  std::vector<std::pair<VertexInvariant, int>> tagged;
  tagged.reserve(static_cast<size_t>(V));
  for (int v = 0; v < V; ++v) tagged.push_back({invariantOf(g, v), v});
  std::sort(tagged.begin(), tagged.end());

  std::vector<std::pair<size_t, size_t>> blocks;  // [begin, end) in `tagged`
  for (size_t i = 0; i < tagged.size();) {
    size_t j = i;
    while (j < tagged.size() && tagged[j].first == tagged[i].first) ++j;
    blocks.push_back({i, j});
    i = j;
  }

  std::vector<int> order(static_cast<size_t>(V));
  for (int i = 0; i < V; ++i) order[static_cast<size_t>(i)] = tagged[static_cast<size_t>(i)].second;

  long count = 0;
  std::vector<int> newIndex(static_cast<size_t>(V));
  std::function<void(size_t)> rec = [&](size_t bi) {
    if (bi == blocks.size()) {
      for (int slot = 0; slot < V; ++slot)
        newIndex[static_cast<size_t>(order[static_cast<size_t>(slot)])] = slot;
      cb(newIndex);
      ++count;
      return;
    }
    auto [b, e] = blocks[bi];
    std::sort(order.begin() + static_cast<long>(b), order.begin() + static_cast<long>(e));
    do {
      rec(bi + 1);
    } while (std::next_permutation(order.begin() + static_cast<long>(b),
                                   order.begin() + static_cast<long>(e)));
  };
  rec(0);
  return count;
}

long parallelEdgeFactor(const DecoratedGraph& g) {
  std::map<std::array<int, 3>, long> mult;
  for (const auto& e : g.edges) {
    int a = e.u, b = e.v;
    if (a > b) std::swap(a, b);
    ++mult[{a, b, e.deg}];
  }
  long f = 1;
  for (const auto& [key, m] : mult)
    for (long i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

int DecoratedGraph::totalDegree() const {
  int d = 0;
  for (const auto& e : edges) d += e.deg;
  return d;
}

int DecoratedGraph::firstBetti() const {
  return static_cast<int>(edges.size()) - vertexCount() + 1;
}

bool DecoratedGraph::connected() const {
  const int V = vertexCount();
  if (V == 0) return false;
  std::vector<char> seen(static_cast<size_t>(V), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& e : edges) {
      int other = -1;
      if (e.u == v) other = e.v;
      else if (e.v == v) other = e.u;
      if (other >= 0 && !seen[static_cast<size_t>(other)]) {
        seen[static_cast<size_t>(other)] = 1;
        stack.push_back(other);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

int DecoratedGraph::edgeValence(int v) const {
  int c = 0;
  for (const auto& e : edges) {
    if (e.u == v) ++c;
    if (e.v == v) ++c;
  }
  return c;
}

int DecoratedGraph::tailCount(int v) const {
  int c = 0;
  for (int t : tailAt)
    if (t == v) ++c;
  return c;
}

void DecoratedGraph::validate() const {
  const int V = vertexCount();
  if (V < 1) throw invalid_input("graph: no vertices");
  if (static_cast<int>(genus.size()) != V) throw invalid_input("graph: genus size");
  if (static_cast<int>(tailAt.size()) != k) throw invalid_input("graph: tail size");
  for (int v = 0; v < V; ++v) {
    if (genus[static_cast<size_t>(v)] != 0 && genus[static_cast<size_t>(v)] != 1)
      throw invalid_input("graph: vertex genus must be 0 or 1");
    if (mu[static_cast<size_t>(v)] < 0 || mu[static_cast<size_t>(v)] > n)
      throw invalid_input("graph: vertex label out of range");
  }
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= V || e.v < 0 || e.v >= V)
      throw invalid_input("graph: edge endpoint out of range");
    if (e.u == e.v) throw invalid_input("graph: self-loop");
    if (mu[static_cast<size_t>(e.u)] == mu[static_cast<size_t>(e.v)])
      throw invalid_input("graph: equal labels across an edge");
    if (e.deg < 1) throw invalid_input("graph: nonpositive edge degree");
  }
  for (int t : tailAt)
    if (t < 0 || t >= V) throw invalid_input("graph: tail out of range");
  if (!connected()) throw invalid_input("graph: not connected");
  if (V > 1 && edges.empty()) throw invalid_input("graph: isolated vertices");
}

std::string DecoratedGraph::canonicalEncoding() const {
  std::string best;
  forEachClassPerm(*this, [&](const std::vector<int>& newIndex) {
    std::string s = serializeUnder(*this, newIndex);
    if (best.empty() || s < best) best = std::move(s);
  });
  return best;
}

long DecoratedGraph::autOrder() const {
  std::string best;
  long hits = 0;
  forEachClassPerm(*this, [&](const std::vector<int>& newIndex) {
    std::string s = serializeUnder(*this, newIndex);
    if (best.empty() || s < best) {
      best = std::move(s);
      hits = 1;
    } else if (s == best) {
      ++hits;
    }
  });
  return hits * parallelEdgeFactor(*this);
}

long DecoratedGraph::fullAutFactor() const {
  long f = autOrder();
  for (const auto& e : edges) f *= e.deg;
  return f;
}

// ---------------------------------------------------------------------------
// Enumeration of genus-zero trees and effective genus-one graphs

namespace {

// All labeled trees on V vertices via Pruefer sequences.
std::vector<std::vector<std::pair<int, int>>> labeledTrees(int V) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (V == 1) return out;
  if (V == 2) {
    out.push_back({{0, 1}});
    return out;
  }
  std::vector<int> seq(static_cast<size_t>(V - 2), 0);
  while (true) {
    std::vector<int> degree(static_cast<size_t>(V), 1);
    for (int s : seq) ++degree[static_cast<size_t>(s)];
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg = degree;
    std::set<int> leaves;
    for (int v = 0; v < V; ++v)
      if (deg[static_cast<size_t>(v)] == 1) leaves.insert(v);
    for (int s : seq) {
      int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      edges.push_back({std::min(leaf, s), std::max(leaf, s)});
      if (--deg[static_cast<size_t>(s)] == 1) leaves.insert(s);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.push_back({std::min(a, b), std::max(a, b)});
    out.push_back(std::move(edges));
    // odometer
    int pos = V - 3;
    while (pos >= 0 && seq[static_cast<size_t>(pos)] == V - 1) {
      seq[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++seq[static_cast<size_t>(pos)];
  }
  return out;
}

void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& cb) {
  if (parts == 1) {
    if (total >= 1) {
      cur.push_back(total);
      cb(cur);
      cur.pop_back();
    }
    return;
  }
  for (int first = 1; first + (parts - 1) <= total; ++first) {
    cur.push_back(first);
    compositions(total - first, parts - 1, cur, cb);
    cur.pop_back();
  }
}

// Labels each vertex with a value in {0..n} such that adjacent labels
// differ; prunes early.
void labelAssignments(int V, int n, const std::vector<std::pair<int, int>>& edges,
                      std::vector<int>& mu,
                      const std::function<void(const std::vector<int>&)>& cb) {
  const int v = static_cast<int>(mu.size());
  if (v == V) {
    cb(mu);
    return;
  }
  for (int lab = 0; lab <= n; ++lab) {
    bool ok = true;
    for (const auto& [a, b] : edges) {
      if (b == v && a < v && mu[static_cast<size_t>(a)] == lab) { ok = false; break; }
      if (a == v && b < v && mu[static_cast<size_t>(b)] == lab) { ok = false; break; }
    }
    if (!ok) continue;
    mu.push_back(lab);
    labelAssignments(V, n, edges, mu, cb);
    mu.pop_back();
  }
}

void tailAssignments(int V, int k, std::vector<int>& tails,
                     const std::function<void(const std::vector<int>&)>& cb) {
  if (static_cast<int>(tails.size()) == k) {
    cb(tails);
    return;
  }
  for (int v = 0; v < V; ++v) {
    tails.push_back(v);
    tailAssignments(V, k, tails, cb);
    tails.pop_back();
  }
}

std::vector<DecoratedGraph> dedupSorted(std::map<std::string, DecoratedGraph>& byEnc) {
  std::vector<DecoratedGraph> out;
  out.reserve(byEnc.size());
  for (auto& [enc, g] : byEnc) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::vector<DecoratedGraph> enumerateGenus0Trees(int n, int d, int k) {
  if (d < 1) throw invalid_input("enumerateGenus0Trees: need d >= 1");
  if (n < 1) throw invalid_input("enumerateGenus0Trees: need n >= 1");
  std::map<std::string, DecoratedGraph> byEnc;
  for (int E = 1; E <= d; ++E) {
    const int V = E + 1;
    for (const auto& shape : labeledTrees(V)) {
      std::vector<int> degs;
      compositions(d, E, degs, [&](const std::vector<int>& dd) {
        std::vector<int> mu;
        labelAssignments(V, n, shape, mu, [&](const std::vector<int>& labels) {
          std::vector<int> tails;
          tailAssignments(V, k, tails, [&](const std::vector<int>& tt) {
            DecoratedGraph g;
            g.n = n;
            g.k = k;
            g.genus.assign(static_cast<size_t>(V), 0);
            g.mu = labels;
            g.tailAt = tt;
            for (int i = 0; i < E; ++i)
              g.edges.push_back({shape[static_cast<size_t>(i)].first,
                                 shape[static_cast<size_t>(i)].second,
                                 dd[static_cast<size_t>(i)]});
            byEnc.emplace(g.canonicalEncoding(), std::move(g));
          });
        });
      });
    }
  }
  return dedupSorted(byEnc);
}

std::vector<DecoratedGraph> enumerateEffectiveGenus1Graphs(int n, int d, int k) {
  if (d < 1) throw invalid_input("enumerateEffectiveGenus1Graphs: need d >= 1");
  if (n < 1) throw invalid_input("enumerateEffectiveGenus1Graphs: need n >= 1");
  std::map<std::string, DecoratedGraph> byEnc;
  // A cycle needs E = V edges; degrees sum to d, so V <= d.
  for (int V = 2; V <= d; ++V) {
    const int E = V;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < V; ++u)
      for (int v = u + 1; v < V; ++v) pairs.push_back({u, v});
    // Multisets of E pairs, non-decreasing pair index.
    std::vector<int> pick;
    std::function<void(int)> chooseEdges = [&](int startIdx) {
      if (static_cast<int>(pick.size()) == E) {
        std::vector<std::pair<int, int>> shape;
        for (int pi : pick) shape.push_back(pairs[static_cast<size_t>(pi)]);
        // connectivity with all vertices present
        DecoratedGraph probe;
        probe.n = n;
        probe.k = 0;
        probe.genus.assign(static_cast<size_t>(V), 0);
        probe.mu.assign(static_cast<size_t>(V), 0);
        for (const auto& [a, b] : shape) probe.edges.push_back({a, b, 1});
        bool covers = true;
        for (int v = 0; v < V; ++v)
          if (probe.edgeValence(v) == 0) { covers = false; break; }
        if (!covers || !probe.connected()) return;
        std::vector<int> degs;
        compositions(d, E, degs, [&](const std::vector<int>& dd) {
          std::vector<int> mu;
          labelAssignments(V, n, shape, mu, [&](const std::vector<int>& labels) {
            std::vector<int> tails;
            tailAssignments(V, k, tails, [&](const std::vector<int>& tt) {
              DecoratedGraph g;
              g.n = n;
              g.k = k;
              g.genus.assign(static_cast<size_t>(V), 0);
              g.mu = labels;
              g.tailAt = tt;
              for (int i = 0; i < E; ++i)
                g.edges.push_back({shape[static_cast<size_t>(i)].first,
                                   shape[static_cast<size_t>(i)].second,
                                   dd[static_cast<size_t>(i)]});
              byEnc.emplace(g.canonicalEncoding(), std::move(g));
            });
          });
        });
        return;
      }
      for (int i = startIdx; i < static_cast<int>(pairs.size()); ++i) {
        pick.push_back(i);
        chooseEdges(i);
        pick.pop_back();
      }
    };
    chooseEdges(0);
  }
  return dedupSorted(byEnc);
}

// ---------------------------------------------------------------------------
// Refined decorated rooted trees

int TreeBranch::totalDegree() const {
  int t = deg;
  for (const auto& c : children) t += c.totalDegree();
  return t;
}

MarkSet TreeBranch::allMarks() const {
  MarkSet m = marks;
  for (const auto& c : children) m |= c.allMarks();
  return m;
}

std::string TreeBranch::encoding() const {
  std::ostringstream os;
  os << "(" << deg << "," << topMu << "," << marks << "[";
  for (const auto& c : children) os << c.encoding();
  os << "])";
  return os.str();
}

long TreeBranch::autOrder() const {
  long f = 1;
  for (const auto& c : children) f *= c.autOrder();
  for (size_t i = 0; i < children.size();) {
    size_t j = i;
    const std::string enc = children[i].encoding();
    while (j < children.size() && children[j].encoding() == enc) ++j;
    for (size_t m = 2; m <= j - i; ++m) f *= static_cast<long>(m);
    i = j;
  }
  return f;
}

namespace {

std::string bubbleEncoding(const RefinedTree::Bubble& b) {
  std::ostringstream os;
  os << "{" << b.marks << ":";
  for (const auto& c : b.children) os << c.encoding();
  os << "}";
  return os.str();
}

long multisetFactor(const std::vector<std::string>& encs) {
  long f = 1;
  for (size_t i = 0; i < encs.size();) {
    size_t j = i;
    while (j < encs.size() && encs[j] == encs[i]) ++j;
    for (size_t m = 2; m <= j - i; ++m) f *= static_cast<long>(m);
    i = j;
  }
  return f;
}

int branchDegProduct(const TreeBranch& b) {
  int p = b.deg;
  for (const auto& c : b.children) p *= branchDegProduct(c);
  return p;
}

}  // namespace

int RefinedTree::totalDegree() const {
  int t = 0;
  for (const auto& b : thick) t += b.totalDegree();
  for (const auto& b : solid) t += b.totalDegree();
  for (const auto& bub : dashed)
    for (const auto& c : bub.children) t += c.totalDegree();
  return t;
}

int RefinedTree::rootEdgeCount() const {
  return static_cast<int>(thick.size() + solid.size() + dashed.size());
}

std::string RefinedTree::encoding() const {
  std::ostringstream os;
  os << "R" << rootMu << "m" << rootMarks << "+(" << dPlus << "," << muPlus << ")T[";
  for (const auto& b : thick) os << b.encoding();
  os << "]S[";
  for (const auto& b : solid) os << b.encoding();
  os << "]D[";
  for (const auto& bub : dashed) os << bubbleEncoding(bub);
  os << "]";
  return os.str();
}

long RefinedTree::autOrder() const {
  long f = 1;
  std::vector<std::string> encs;
  for (const auto& b : thick) { f *= b.autOrder(); encs.push_back(b.encoding()); }
  std::sort(encs.begin(), encs.end());
  f *= multisetFactor(encs);
  encs.clear();
  for (const auto& b : solid) { f *= b.autOrder(); encs.push_back(b.encoding()); }
  std::sort(encs.begin(), encs.end());
  f *= multisetFactor(encs);
  encs.clear();
  for (const auto& bub : dashed) {
    for (const auto& c : bub.children) f *= c.autOrder();
    std::vector<std::string> ce;
    for (const auto& c : bub.children) ce.push_back(c.encoding());
    std::sort(ce.begin(), ce.end());
    f *= multisetFactor(ce);
    encs.push_back(bubbleEncoding(bub));
  }
  std::sort(encs.begin(), encs.end());
  f *= multisetFactor(encs);
  return f;
}

long RefinedTree::fullAutFactor() const {
  long f = autOrder();
  for (const auto& b : thick) f *= branchDegProduct(b);
  for (const auto& b : solid) f *= branchDegProduct(b);
  for (const auto& bub : dashed)
    for (const auto& c : bub.children) f *= branchDegProduct(c);
  return f;
}

void RefinedTree::validate() const {
  const std::string why = checkRefinedConditions(flatten(*this), totalDegree());
  if (!why.empty()) throw invalid_input("refined tree: " + why);
}

FlatRefinedTree flatten(const RefinedTree& t) {
  FlatRefinedTree f;
  f.n = t.n;
  f.k = t.k;
  f.root = 0;
  f.parent.push_back(-1);
  f.mu.push_back(t.rootMu);
  f.deg.push_back(0);
  f.verPlus.push_back(false);
  f.verZero.push_back(false);
  f.tailAt.assign(static_cast<size_t>(t.k), -1);
  for (int l : markSetToList(t.rootMarks)) f.tailAt[static_cast<size_t>(l - 1)] = 0;

  std::function<int(const TreeBranch&, int, bool)> addBranch =
      [&](const TreeBranch& b, int parent, bool plus) {
        const int v = f.vertexCount();
        f.parent.push_back(parent);
        f.mu.push_back(b.topMu);
        f.deg.push_back(b.deg);
        f.verPlus.push_back(plus);
        f.verZero.push_back(false);
        for (int l : markSetToList(b.marks)) f.tailAt[static_cast<size_t>(l - 1)] = v;
        for (const auto& c : b.children) addBranch(c, v, false);
        return v;
      };

  for (const auto& b : t.thick) addBranch(b, 0, true);
  for (const auto& b : t.solid) addBranch(b, 0, false);
  for (const auto& bub : t.dashed) {
    const int v = f.vertexCount();
    f.parent.push_back(0);
    f.mu.push_back(-1);
    f.deg.push_back(0);
    f.verPlus.push_back(false);
    f.verZero.push_back(true);
    for (int l : markSetToList(bub.marks)) f.tailAt[static_cast<size_t>(l - 1)] = v;
    for (const auto& c : bub.children) addBranch(c, v, false);
  }
  return f;
}

std::vector<int> FlatRefinedTree::children(int v) const {
  std::vector<int> out;
  for (int w = 0; w < vertexCount(); ++w)
    if (parent[static_cast<size_t>(w)] == v) out.push_back(w);
  return out;
}

std::string checkRefinedConditions(const FlatRefinedTree& f, int d) {
  const int V = f.vertexCount();
  if (V < 1 || f.root != 0 || f.parent[0] != -1) return "malformed root";
  for (int v = 1; v < V; ++v) {
    int p = f.parent[static_cast<size_t>(v)];
    if (p < 0 || p >= V || p >= v) return "malformed parent order";
  }
  for (int v = 0; v < V; ++v) {
    if (f.verPlus[static_cast<size_t>(v)] && f.verZero[static_cast<size_t>(v)])
      return "Ver_+ and Ver_0 intersect";
    if ((f.verPlus[static_cast<size_t>(v)] || f.verZero[static_cast<size_t>(v)]) &&
        f.parent[static_cast<size_t>(v)] != f.root)
      return "Ver_+ or Ver_0 vertex not adjacent to the root";
    if (f.verZero[static_cast<size_t>(v)]) {
      if (f.mu[static_cast<size_t>(v)] != -1) return "mu defined on Ver_0";
    } else {
      if (f.mu[static_cast<size_t>(v)] < 0 || f.mu[static_cast<size_t>(v)] > f.n)
        return "mu out of range";
      if (v != f.root && f.deg[static_cast<size_t>(v)] < 1)
        return "missing degree on a solid edge";
    }
  }
  // degrees only on Edg - Edg_0
  int total = 0;
  for (int v = 1; v < V; ++v)
    if (!f.verZero[static_cast<size_t>(v)]) total += f.deg[static_cast<size_t>(v)];
  if (total != d) return "degree sum mismatch";

  auto valence = [&](int v) {
    int c = v == f.root ? 0 : 1;
    c += static_cast<int>(f.children(v).size());
    for (int t : f.tailAt)
      if (t == v) ++c;
    return c;
  };

  // (i)
  int dPlus = -1, muPlus = -1;
  for (int v = 1; v < V; ++v)
    if (f.verPlus[static_cast<size_t>(v)]) {
      if (dPlus == -1) {
        dPlus = f.deg[static_cast<size_t>(v)];
        muPlus = f.mu[static_cast<size_t>(v)];
      } else if (dPlus != f.deg[static_cast<size_t>(v)] ||
                 muPlus != f.mu[static_cast<size_t>(v)]) {
        return "(i): Edg_+ labels or degrees differ";
      }
    }
  if (dPlus == -1) return "(v): Edg_+ empty";
  // (ii)
  for (int v : f.children(f.root))
    if (!f.verPlus[static_cast<size_t>(v)] && !f.verZero[static_cast<size_t>(v)] &&
        f.mu[static_cast<size_t>(v)] == muPlus && f.deg[static_cast<size_t>(v)] == dPlus)
      return "(ii): Edg_+ not maximal";
  // (iii)
  for (int v = 1; v < V; ++v) {
    if (f.verZero[static_cast<size_t>(v)]) continue;
    const int p = f.parent[static_cast<size_t>(v)];
    const int pLabel = f.verZero[static_cast<size_t>(p)] ? f.mu[static_cast<size_t>(f.root)]
                                                         : f.mu[static_cast<size_t>(p)];
    if (f.mu[static_cast<size_t>(v)] == pLabel)
      return "(iii): consecutive labels equal";
  }
  // (iv)
  for (int v = 1; v < V; ++v)
    if (f.verZero[static_cast<size_t>(v)]) {
      if (f.children(v).empty()) return "(iv): Ver_0 vertex with no child edge";
      if (valence(v) < 3) return "(iv): Ver_0 vertex of valence < 3";
    }
  // (v)
  int plusSum = 0;
  for (int v = 1; v < V; ++v)
    if (f.verPlus[static_cast<size_t>(v)]) plusSum += f.deg[static_cast<size_t>(v)];
  if (plusSum < 2) return "(v): thick degree sum < 2";
  return "";
}

namespace {

// All branches with first edge leaving a vertex labeled parentMu, of total
// degree <= maxDeg, marks ranging over subsets of [k].  Sorted children;
// deterministic order.
std::vector<TreeBranch> branchPool(int n, int k, int parentMu, int maxDeg);

// Enumerates multisets (non-decreasing pool index) of branches with total
// degree <= budget and pairwise-disjoint marks also disjoint from `used`.
void branchMultisets(const std::vector<TreeBranch>& pool, size_t startIdx, int budget,
                     MarkSet used, std::vector<TreeBranch>& cur,
                     const std::function<void(const std::vector<TreeBranch>&, MarkSet)>& cb) {
  cb(cur, used);
  for (size_t i = startIdx; i < pool.size(); ++i) {
    const TreeBranch& b = pool[i];
    if (b.totalDegree() > budget) continue;
    const MarkSet m = b.allMarks();
    if ((m & used) != 0) continue;
    cur.push_back(b);
    branchMultisets(pool, i, budget - b.totalDegree(), used | m, cur, cb);
    cur.pop_back();
  }
}

std::vector<TreeBranch> branchPool(int n, int k, int parentMu, int maxDeg) {
  std::vector<TreeBranch> out;
  if (maxDeg < 1) return out;
  const MarkSet full = k == 0 ? 0 : (MarkSet{1} << k) - 1;
  for (int deg = 1; deg <= maxDeg; ++deg)
    for (int topMu = 0; topMu <= n; ++topMu) {
      if (topMu == parentMu) continue;
      std::vector<TreeBranch> childPool = branchPool(n, k, topMu, maxDeg - deg);
      for (MarkSet marks = 0;; marks = ((marks | ~full) + 1) & full) {
        std::vector<TreeBranch> cur;
        branchMultisets(childPool, 0, maxDeg - deg, marks, cur,
                        [&](const std::vector<TreeBranch>& cs, MarkSet) {
                          TreeBranch b;
                          b.deg = deg;
                          b.topMu = topMu;
                          b.marks = marks;
                          b.children = cs;
                          out.push_back(std::move(b));
                        });
        if (marks == full) break;
      }
    }
  std::sort(out.begin(), out.end(), [](const TreeBranch& a, const TreeBranch& b) {
    return a.encoding() < b.encoding();
  });
  return out;
}

}  // namespace

std::vector<RefinedTree> enumerateRefinedTrees(int n, int d, int k) {
  if (d < 1) throw invalid_input("enumerateRefinedTrees: need d >= 1");
  if (n < 1) throw invalid_input("enumerateRefinedTrees: need n >= 1");
  if (k < 0 || k > 62) throw invalid_input("enumerateRefinedTrees: bad k");
  const MarkSet full = k == 0 ? 0 : (MarkSet{1} << k) - 1;
  std::vector<RefinedTree> out;
  std::set<std::string> seen;

  for (int rootMu = 0; rootMu <= n; ++rootMu) {
    const std::vector<TreeBranch> pool = branchPool(n, k, rootMu, d);
    // Bubbles: marks subset + >= 1 child branch; valence >= 3.
    struct BubbleItem {
      RefinedTree::Bubble bubble;
      int degree;
      MarkSet marks;
      std::string enc;
    };
    std::vector<BubbleItem> bubblePool;
    for (MarkSet bm = 0;; bm = ((bm | ~full) + 1) & full) {
      std::vector<TreeBranch> cur;
      branchMultisets(pool, 0, d, bm, cur, [&](const std::vector<TreeBranch>& cs, MarkSet) {
        if (cs.empty()) return;
        if (1 + static_cast<int>(cs.size()) + std::popcount(bm) < 3) return;
        RefinedTree::Bubble bub{bm, cs};
        int deg = 0;
        MarkSet marks = bm;
        for (const auto& c : cs) {
          deg += c.totalDegree();
          marks |= c.allMarks();
        }
        bubblePool.push_back({bub, deg, marks, bubbleEncoding(bub)});
      });
      if (bm == full) break;
    }
    std::sort(bubblePool.begin(), bubblePool.end(),
              [](const BubbleItem& a, const BubbleItem& b) { return a.enc < b.enc; });

    for (int dPlus = 1; dPlus <= d; ++dPlus)
      for (int muPlus = 0; muPlus <= n; ++muPlus) {
        if (muPlus == rootMu) continue;
        std::vector<TreeBranch> thickPool, solidPool;
        for (const auto& b : pool) {
          if (b.deg == dPlus && b.topMu == muPlus) thickPool.push_back(b);
          else solidPool.push_back(b);
        }
        for (MarkSet rootMarks = 0;; rootMarks = ((rootMarks | ~full) + 1) & full) {
          std::vector<TreeBranch> thick;
          branchMultisets(thickPool, 0, d, rootMarks, thick,
              [&](const std::vector<TreeBranch>& th, MarkSet usedAfterThick) {
            const int t = static_cast<int>(th.size());
            if (t < 1 || t * dPlus < 2) return;  // condition (v)
            int degThick = 0;
            for (const auto& b : th) degThick += b.totalDegree();
            if (degThick > d) return;
            std::vector<TreeBranch> solid;
            branchMultisets(solidPool, 0, d - degThick, usedAfterThick, solid,
                [&](const std::vector<TreeBranch>& so, MarkSet usedAfterSolid) {
              int degSolid = 0;
              for (const auto& b : so) degSolid += b.totalDegree();
              // bubbles: multiset over bubblePool
              std::function<void(size_t, int, MarkSet, std::vector<RefinedTree::Bubble>&)>
                  chooseBubbles = [&](size_t start, int budget, MarkSet used,
                                      std::vector<RefinedTree::Bubble>& bubs) {
                    // Accept when the degree budget is used up exactly and
                    // every mark has found a home.
                    int bubbleDeg = 0;
                    for (const auto& bb : bubs)
                      for (const auto& c : bb.children) bubbleDeg += c.totalDegree();
                    if (degThick + degSolid + bubbleDeg == d && used == full) {
                      RefinedTree tree;
                      tree.n = n;
                      tree.k = k;
                      tree.rootMu = rootMu;
                      tree.rootMarks = rootMarks;
                      tree.dPlus = dPlus;
                      tree.muPlus = muPlus;
                      tree.thick = th;
                      tree.solid = so;
                      tree.dashed = bubs;
                      if (seen.insert(tree.encoding()).second) out.push_back(std::move(tree));
                    }
                    for (size_t i = start; i < bubblePool.size(); ++i) {
                      const auto& item = bubblePool[i];
                      if (item.degree > budget) continue;
                      if ((item.marks & used) != 0) continue;
                      bubs.push_back(item.bubble);
                      chooseBubbles(i, budget - item.degree, used | item.marks, bubs);
                      bubs.pop_back();
                    }
                  };
              std::vector<RefinedTree::Bubble> bubs;
              chooseBubbles(0, d - degThick - degSolid, usedAfterSolid, bubs);
            });
          });
          if (rootMarks == full) break;
        }
      }
  }
  std::sort(out.begin(), out.end(), [](const RefinedTree& a, const RefinedTree& b) {
    return a.encoding() < b.encoding();
  });
  return out;
}

// ---------------------------------------------------------------------------
// Projection, branch graphs, locus data

namespace {

int addBranchToGraph(DecoratedGraph& g, const TreeBranch& b, int attachVertex) {
  const int v = g.vertexCount();
  g.genus.push_back(0);
  g.mu.push_back(b.topMu);
  g.edges.push_back({attachVertex, v, b.deg});
  for (int l : markSetToList(b.marks)) g.tailAt[static_cast<size_t>(l - 1)] = v;
  for (const auto& c : b.children) addBranchToGraph(g, c, v);
  return v;
}

}  // namespace

DecoratedGraph projectTree(const RefinedTree& t) {
  DecoratedGraph g;
  g.n = t.n;
  g.k = t.k;
  g.genus.push_back(1);
  g.mu.push_back(t.rootMu);
  g.tailAt.assign(static_cast<size_t>(t.k), 0);
  for (int l : markSetToList(t.rootMarks)) g.tailAt[static_cast<size_t>(l - 1)] = 0;
  for (const auto& b : t.thick) addBranchToGraph(g, b, 0);
  for (const auto& b : t.solid) addBranchToGraph(g, b, 0);
  for (const auto& bub : t.dashed) {
    // Ver_0 collapses into the root: marks move there, children re-attach.
    for (int l : markSetToList(bub.marks)) g.tailAt[static_cast<size_t>(l - 1)] = 0;
    for (const auto& c : bub.children) addBranchToGraph(g, c, 0);
  }
  g.validate();
  return g;
}

std::vector<BranchCut> eligibleCuts(const RefinedTree& t) {
  std::vector<BranchCut> cuts;
  for (int i = 0; i < static_cast<int>(t.thick.size()); ++i)
    cuts.push_back({BranchCut::Kind::Thick, i, -1});
  for (int i = 0; i < static_cast<int>(t.solid.size()); ++i)
    cuts.push_back({BranchCut::Kind::Solid, i, -1});
  for (int i = 0; i < static_cast<int>(t.dashed.size()); ++i)
    for (int c = 0; c < static_cast<int>(t.dashed[static_cast<size_t>(i)].children.size()); ++c)
      cuts.push_back({BranchCut::Kind::BubbleChild, i, c});
  return cuts;
}

DecoratedGraph branchGraph(const RefinedTree& t, const BranchCut& cut) {
  const TreeBranch* b = nullptr;
  switch (cut.kind) {
    case BranchCut::Kind::Thick:
      if (cut.index < 0 || cut.index >= static_cast<int>(t.thick.size()))
        throw invalid_input("branchGraph: bad thick index");
      b = &t.thick[static_cast<size_t>(cut.index)];
      break;
    case BranchCut::Kind::Solid:
      if (cut.index < 0 || cut.index >= static_cast<int>(t.solid.size()))
        throw invalid_input("branchGraph: bad solid index");
      b = &t.solid[static_cast<size_t>(cut.index)];
      break;
    case BranchCut::Kind::BubbleChild: {
      if (cut.index < 0 || cut.index >= static_cast<int>(t.dashed.size()))
        throw invalid_input("branchGraph: bad bubble index");
      const auto& bub = t.dashed[static_cast<size_t>(cut.index)];
      if (cut.childIndex < 0 || cut.childIndex >= static_cast<int>(bub.children.size()))
        throw invalid_input("branchGraph: bad bubble child index");
      b = &bub.children[static_cast<size_t>(cut.childIndex)];
      break;
    }
  }
  DecoratedGraph g;
  g.n = t.n;
  g.k = t.k + 1;  // the extra mark 0 is stored as mark k+1
  g.genus.push_back(0);
  g.mu.push_back(t.rootMu);  // the cut vertex keeps the root's label
  g.tailAt.assign(static_cast<size_t>(g.k), 0);
  g.tailAt[static_cast<size_t>(t.k)] = 0;  // mark 0 at the cut vertex
  addBranchToGraph(g, *b, 0);
  g.validate();
  return g;
}

DecoratedGraph branchGraphByFlatEdge(const RefinedTree& t, int flatVertex) {
  const FlatRefinedTree f = flatten(t);
  if (flatVertex <= 0 || flatVertex >= f.vertexCount())
    throw invalid_input("branchGraph: no such edge");
  if (f.verZero[static_cast<size_t>(flatVertex)])
    throw invalid_input("branchGraph: dashed edges have no branch graph");
  const int p = f.parent[static_cast<size_t>(flatVertex)];
  if (p != f.root && !f.verZero[static_cast<size_t>(p)])
    throw invalid_input("branchGraph: edge is neither at the root nor at a Ver_0 vertex");
  // Locate the corresponding structured cut by walking the same order as
  // flatten() produced.
  int v = 0;
  std::function<int(const TreeBranch&)> countVerts = [&](const TreeBranch& b) {
    int c = 1;
    for (const auto& ch : b.children) c += countVerts(ch);
    return c;
  };
  for (int i = 0; i < static_cast<int>(t.thick.size()); ++i) {
    v += 1;
    if (v == flatVertex) return branchGraph(t, {BranchCut::Kind::Thick, i, -1});
    v += countVerts(t.thick[static_cast<size_t>(i)]) - 1;
  }
  for (int i = 0; i < static_cast<int>(t.solid.size()); ++i) {
    v += 1;
    if (v == flatVertex) return branchGraph(t, {BranchCut::Kind::Solid, i, -1});
    v += countVerts(t.solid[static_cast<size_t>(i)]) - 1;
  }
  for (int i = 0; i < static_cast<int>(t.dashed.size()); ++i) {
    v += 1;  // the Ver_0 vertex itself
    const auto& bub = t.dashed[static_cast<size_t>(i)];
    for (int c = 0; c < static_cast<int>(bub.children.size()); ++c) {
      v += 1;
      if (v == flatVertex) return branchGraph(t, {BranchCut::Kind::BubbleChild, i, c});
      v += countVerts(bub.children[static_cast<size_t>(c)]) - 1;
    }
  }
  throw invalid_input("branchGraph: edge not eligible");
}

TreeLocusData treeLocusData(const RefinedTree& t) {
  TreeLocusData data;
  data.sigma.m = t.rootEdgeCount();
  data.sigma.jP = t.rootMarks;
  const MarkSet full = t.k == 0 ? 0 : (MarkSet{1} << t.k) - 1;
  data.sigma.jB = full & ~t.rootMarks;
  data.dPlus = t.dPlus;
  data.muPlus = t.muPlus;
  data.edgPlusCount = static_cast<int>(t.thick.size());
  data.dimPlus = t.dPlus == 1 ? data.edgPlusCount - 2 : data.edgPlusCount - 1;
  data.fPrimeRank = data.dimPlus + 1;
  return data;
}

}  // namespace gwloc

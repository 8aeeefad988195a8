#pragma once

#include "qlsc/rootsys.hpp"
#include "qlsc/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qlsc {

enum class EdgeKind { Bruhat, Quantum };
enum class Variant { DualUntwisted, TwistedA2n2 };

struct QbgEdge {
  int source = -1;  // vertex ids
  int target = -1;
  WeylElt source_elt;
  WeylElt target_elt;
  Root label;  // β ∈ Δ⁺∖Δ_S⁺; the edge is labeled by β∨
  EdgeKind kind = EdgeKind::Bruhat;
};

// Total order ≺ on positive (co)roots with β_1 ≻ β_2 ≻ ⋯ ≻ β_N, read off a reduced word of
// w₀ = ⌊w₀⌋·w₀^S.
class ReflectionOrder {
 public:
  ReflectionOrder(int n, const IndexSet& S);

  const std::vector<Root>& sequence() const { return seq_; }  // β_1, …, β_N
  const std::vector<int>& word() const { return word_; }
  int position(const Root& beta) const;  // j with β = β_j
  bool precedes(const Root& a, const Root& b) const { return position(a) > position(b); }  // a ≺ b

 private:
  std::vector<Root> seq_;
  std::vector<int> word_;
  std::map<std::vector<int>, int> pos_;
};

class QbgGraph {
 public:
  QbgGraph(int n, IndexSet S);

  int rank() const { return n_; }
  const IndexSet& S() const { return parabolic_.S(); }
  const ParabolicData& parabolic() const { return parabolic_; }
  const RootSystem& root_system() const { return rs_; }
  const ReflectionOrder& order() const { return order_; }

  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<WeylElt>& vertices() const { return vertices_; }
  const WeylElt& vertex(int id) const { return vertices_[id]; }
  int index_of(const WeylElt& w) const;  // -1 when w ∉ W^S
  const std::vector<QbgEdge>& out_edges(int v) const { return out_[v]; }
  std::vector<QbgEdge> edges() const;
  const QbgEdge* find_edge(int u, int v) const;

  int distance(int u, int v) const { return dist_[u * size() + v]; }

 private:
  int n_;
  RootSystem rs_;
  ParabolicData parabolic_;
  ReflectionOrder order_;
  std::vector<WeylElt> vertices_;
  std::map<WeylElt, int> index_;
  std::vector<std::vector<QbgEdge>> out_;
  std::vector<int> dist_;
};

struct SubgraphFilter {
  Weight lambda;
  Rational b;
  Variant variant = Variant::TwistedA2n2;
};

bool edge_admitted(const Root& label, EdgeKind kind, const SubgraphFilter& filter);
inline bool edge_admitted(const QbgEdge& e, const SubgraphFilter& f) { return edge_admitted(e.label, e.kind, f); }

// Reachability u ⇝ v inside the filtered subgraph (paths of length ≥ 0).
std::vector<std::vector<bool>> filtered_reachability(const QbgGraph& g, const SubgraphFilter& filter);
// Edge-level filtered path search; returns one path (empty vector when u = v) or nullopt.
std::optional<std::vector<QbgEdge>> filtered_path(const QbgGraph& g, int u, int v, const SubgraphFilter& filter);

using Path = std::vector<QbgEdge>;

struct ShortestPathData {
  int length = 0;
  Path path;              // canonical: ≺-lexicographically least among shortest paths
  bool increasing = true;  // whether that path has strictly ≺-increasing labels
  std::vector<int> wt;    // sum of coroots of quantum labels
};

ShortestPathData shortest_path_data(const QbgGraph& g, int u, int v, const ReflectionOrder& order);
ShortestPathData shortest_path_data(const QbgGraph& g, int u, int v);

// All shortest directed paths from u to v.
std::vector<Path> all_shortest_paths(const QbgGraph& g, int u, int v);
// All directed paths u → v with strictly ≺-increasing labels, optionally restricted to labels
// outside Δ_S⁺ for the given S.
std::vector<Path> increasing_paths(const QbgGraph& g, int u, int v, const ReflectionOrder& order,
                                   const IndexSet& excluded_S = {});

std::vector<int> path_wt(const Path& p);
Rational wt_lambda(const QbgGraph& g, int u, int v, const Weight& lambda);
Rational wt_lambda(const QbgGraph& g, const WeylElt& u, const WeylElt& v, const Weight& lambda);

// min(yW_S, <_pivot) in the full graph g (S = ∅), together with the unique label-increasing path
// to the pivot using labels in (Δ⁺∖Δ_S⁺)∨.
struct TiltedMin {
  WeylElt min;
  Path path;
  int path_count = 0;
};
TiltedMin tilted_min(const QbgGraph& full, const WeylElt& y, const WeylElt& pivot, const IndexSet& S,
                     const ReflectionOrder& order);

std::string to_dot(const QbgGraph& g, const SubgraphFilter* filter = nullptr);

}  // namespace qlsc

#pragma once

#include "qlsc/gcharacter.hpp"
#include "qlsc/qbg.hpp"
#include "qlsc/rootsys.hpp"
#include "qlsc/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qlsc {

// (w_1, …, w_s; τ_0, …, τ_s) with w_k ∈ W^{S_λ} and 0 = τ_0 < ⋯ < τ_s = 1.
struct QlsPath {
  std::vector<WeylElt> dirs;
  std::vector<Rational> times;

  int segments() const { return static_cast<int>(dirs.size()); }
  friend bool operator==(const QlsPath&, const QlsPath&) = default;
};

bool operator<(const QlsPath& a, const QlsPath& b);

// Piecewise-linear continuous path from 0 with constant direction d_k on [τ_{k−1}, τ_k].
struct PlcPath {
  std::vector<Weight> dirs;
  std::vector<Rational> times;

  Weight endpoint() const;
  PlcPath normalized() const;  // drop zero-length segments, merge equal adjacent directions
};

enum class OpDirection { E, F };

// Degree statistic conventions for the junction sum Σ_{i=1}^{s−1} (1 − τ_i)·(junction weight).
enum class DegConvention {
  Plain,          // ⟨λ, wt^S(w_{i+1} ⇒ w_i)⟩
  LengthWeighted  // quantum labels β weighted by c_β: ⟨λ, Σ c_β β∨⟩ = 2(λ, Σ β) along the junction path
};

class QlsModel {
 public:
  QlsModel(Weight lambda, Variant variant = Variant::TwistedA2n2);

  const Weight& lambda() const { return lambda_; }
  Variant variant() const { return variant_; }
  int rank() const { return lambda_.rank(); }
  const IndexSet& S() const { return graph_.S(); }
  const QbgGraph& graph() const { return graph_; }
  const RootSystem& root_system() const { return graph_.root_system(); }
  const std::vector<Rational>& candidate_times() const { return candidate_times_; }

  SubgraphFilter filter(const Rational& b) const { return SubgraphFilter{lambda_, b, variant_}; }
  bool reachable(const WeylElt& from, const WeylElt& to, const Rational& b) const;

  // Full membership test: dirs in W^S, adjacent dirs distinct, times strictly increasing from 0 to 1,
  // and condition (C) at every junction.
  bool is_valid(const QlsPath& eta) const;
  // Condition (C′): each junction admits a shortest QBG^S path whose edges are all admitted at τ_i.
  bool check_c_prime(const QlsPath& eta) const;

  std::vector<QlsPath> enumerate() const;  // sorted

  Weight wt(const QlsPath& eta) const;
  Rational deg(const QlsPath& eta, DegConvention convention = DegConvention::LengthWeighted) const;
  GradedCharacter graded_character(DegConvention convention = DegConvention::LengthWeighted) const;
  GradedCharacter graded_character(const std::vector<QlsPath>& paths,
                                   DegConvention convention = DegConvention::LengthWeighted) const;

  PlcPath to_plc(const QlsPath& eta) const;
  QlsPath from_plc(const PlcPath& pi) const;  // normalizes; requires every direction in Wλ

  // Littelmann root operators on I_aff = {0, …, n}; ᾱ_0 = −θ, r_0 = s_θ.
  std::optional<QlsPath> root_op_e(int i, const QlsPath& eta) const;
  std::optional<QlsPath> root_op_f(int i, const QlsPath& eta) const;
  // ẽ†_i, f̃†_i: the operators with step χ_i.
  std::optional<QlsPath> twisted_op(int i, const QlsPath& eta, OpDirection dir) const;
  // (ε, φ); twisted uses the ⌊·/χ_i⌋ normalization.
  std::pair<long long, long long> epsilon_phi(int i, const QlsPath& eta, bool twisted) const;

  QlsPath straight_path(const WeylElt& w) const;  // (w; 0, 1)
  QlsPath highest_path() const { return straight_path(WeylElt::identity(rank())); }

 private:
  int reach_index(const Rational& b) const;

  Weight lambda_;
  Variant variant_;
  QbgGraph graph_;
  std::vector<Rational> candidate_times_;
  std::vector<std::vector<std::vector<bool>>> reach_;  // per candidate time
};

// Height function data of H(t) = ⟨π(t), ᾱ_i∨⟩ at the breakpoints of π.
std::vector<Rational> height_values(const PlcPath& pi, const Root& alpha);

// Generic folding operator with step k on a PLC path; nullopt when the operator is not defined.
std::optional<PlcPath> plc_raise(const PlcPath& pi, const Root& alpha, int k);
std::optional<PlcPath> plc_lower(const PlcPath& pi, const Root& alpha, int k);

struct CrystalArrow {
  int source;
  int target;
  int color;
};

struct CrystalGraph {
  std::vector<QlsPath> vertices;
  std::vector<CrystalArrow> arrows;
  bool closed = true;              // every defined operator image is a vertex
  bool all_reach_highest = true;   // every vertex reaches η_λ by max-operator strings
  bool connected = true;           // underlying undirected graph connected
};

CrystalGraph crystal_graph(const QlsModel& model);
std::string to_dot(const CrystalGraph& g);

std::string to_string(const QlsPath& eta);
std::string to_json(const QlsPath& eta);
QlsPath qls_path_from_json(const std::string& text);

}  // namespace qlsc

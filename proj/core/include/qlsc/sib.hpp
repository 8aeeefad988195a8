#pragma once

#include "qlsc/qls.hpp"
#include "qlsc/rational.hpp"
#include "qlsc/rootsys.hpp"
#include "qlsc/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

// Type C_n side of the twisted affine type A_{2n}^{(2)}: ε-coordinates throughout. The finite
// roots are ±ε_i±ε_j (intermediate, c = 1) and ±2ε_i (long, c = 2); the coroot lattice Q∨ is ℤⁿ.
namespace qlsc {

using Coweight = std::vector<long long>;

enum class DagKind { Standard, Half };

// Standard: α + c_α·a·δ.  Half: ½(α + (2a − 1)δ) with α long.
struct DagAffineRoot {
  std::vector<int> finite;
  long long a = 0;
  DagKind kind = DagKind::Standard;

  long long delta2() const;  // twice the δ-coefficient
  bool is_valid() const;
  bool is_positive() const;
  friend bool operator==(const DagAffineRoot&, const DagAffineRoot&) = default;
};

std::string to_string(const DagAffineRoot& beta);

bool is_cn_long(const std::vector<int>& cn_root);
int cn_c(const std::vector<int>& cn_root);
std::vector<int> cn_rho(int n);  // (n, n−1, …, 1)
std::vector<std::vector<int>> cn_roots(int n);
std::vector<std::vector<int>> cn_positive_roots_S(int n, const IndexSet& S);

// w·t(μ), multiplied by (w₁t(μ₁))(w₂t(μ₂)) = w₁w₂·t(w₂⁻¹μ₁ + μ₂).
struct CAffineElt {
  WeylElt w;
  Coweight mu;

  static CAffineElt identity(int n);
  static CAffineElt translation(const Coweight& mu);
  static CAffineElt finite(const WeylElt& w);
  static CAffineElt reflection(const DagAffineRoot& beta);  // s_α·t(c·a·α∨) or s_α·t((2a−1)α∨)

  int rank() const { return w.rank(); }
  CAffineElt operator*(const CAffineElt& o) const;
  CAffineElt inverse() const;
  // Image of the affine root, as (2·finite, 2·δ-coefficient).
  std::pair<std::vector<long long>, long long> act2(const DagAffineRoot& beta) const;
  bool maps_to_positive(const DagAffineRoot& beta) const;

  friend bool operator==(const CAffineElt&, const CAffineElt&) = default;
  friend auto operator<=>(const CAffineElt&, const CAffineElt&) = default;
};

std::string to_string(const CAffineElt& x);

bool is_s_adjusted(const Coweight& mu, const IndexSet& S);
// x ∈ (W_aff)^S: x sends every positive affine root over Δ_S to a positive root.
bool in_peterson(const CAffineElt& x, const IndexSet& S);

struct SAdjustment {
  Coweight phi;  // φ_S(μ) ∈ Q∨_S
  WeylElt z;     // z_μ ∈ W_S
};

// Exhaustive search over a window of Q∨_S and over W_S; throws unless both answers are unique.
SAdjustment s_adjust(const Coweight& mu, const IndexSet& S);

// w·z_μ·t(μ) with w ∈ W^S and μ S-adjusted.
struct PetersonElt {
  WeylElt w;
  WeylElt z;
  Coweight mu;

  CAffineElt element() const { return CAffineElt{w * z, mu}; }
  friend bool operator==(const PetersonElt&, const PetersonElt&) = default;
  friend auto operator<=>(const PetersonElt&, const PetersonElt&) = default;
};

std::string to_string(const PetersonElt& x);  // "w | z_mu | t(mu)"

PetersonElt peterson_elt(const WeylElt& w, const Coweight& mu, const IndexSet& S);  // w ∈ W^S, μ S-adjusted
PetersonElt peterson_projection(const CAffineElt& x, const IndexSet& S);           // Π^S
PetersonElt decompose_peterson(const CAffineElt& x, const IndexSet& S);            // x already in (W_aff)^S

long long si_length(const CAffineElt& x);  // ℓ(w) + 2⟨ρ, μ⟩ for x = w·t(μ)
inline long long si_length(const PetersonElt& x) { return si_length(x.element()); }

// ⟨xΛ, β∨⟩ for level-zero Λ with finite part λ (ε-coordinates): ⟨w̄λ, α∨⟩, doubled for half roots.
Rational sib_pairing(const CAffineElt& x, const Weight& lambda, const DagAffineRoot& beta);

// Positive affine roots with |a| ≤ bound.
std::vector<DagAffineRoot> positive_dag_roots(int n, long long bound);

struct SibEdge {
  int source = -1;
  int target = -1;  // -1 when the target lies outside the box
  PetersonElt target_elt;
  DagAffineRoot label;
};

struct SibGraph {
  Weight lambda;
  IndexSet S;
  Rational b;
  int box_radius = 0;
  std::vector<PetersonElt> vertices;  // |μ|∞ ≤ box_radius
  std::vector<SibEdge> edges;
  int boundary_edges = 0;

  int index_of(const PetersonElt& x) const;
};

// Edge test of the b-filtered semi-infinite Bruhat graph.
bool is_sib_edge(const PetersonElt& x, const DagAffineRoot& beta, const Weight& lambda, const IndexSet& S,
                 const Rational& b);

SibGraph sib_edges(const Weight& lambda, const Rational& b, int box_radius);

struct SilsPath {
  std::vector<PetersonElt> states;
  std::vector<Rational> times;
};

std::string to_string(const SilsPath& pi);

QlsPath cl_project(const SilsPath& pi);

struct LiftStep {
  int junction = 0;  // i: the step belongs to the path from x_{i+1} to x_i
  EdgeKind kind = EdgeKind::Bruhat;
  Root qbg_label;  // B_n label of the lifted edge
  DagAffineRoot label;
};

struct Lift {
  SilsPath path;
  std::vector<LiftStep> steps;
};

// Junction-by-junction lift with μ_s = 0; throws std::out_of_range when a translation leaves the box.
Lift lift(const QlsModel& qls, const QlsPath& eta, int box_radius);

// Condition (C) checked by search inside the box.
bool is_sils_path(const Weight& lambda, const SilsPath& pi, int box_radius);

std::string to_dot(const SibGraph& g);

}  // namespace qlsc

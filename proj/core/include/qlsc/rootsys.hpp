#pragma once

#include "qlsc/rational.hpp"

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace qlsc {

// A vector in orthogonal e-coordinates with exact rational entries.
class Weight {
 public:
  Weight() = default;
  explicit Weight(int n) : coords_(n, Rational(0)) {}
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  static Weight from_ints(const std::vector<long long>& v);

  int rank() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](int i) const { return coords_[i]; }
  Rational& operator[](int i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a);
  friend Weight operator*(const Rational& s, Weight a);

  bool is_zero() const;
  bool is_integral() const;          // in Q: all-integer coordinates
  bool in_weight_lattice() const;    // all-integer or all-half-integer
  bool is_dominant() const;
  std::vector<long long> to_ints() const;  // requires is_integral()

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

 private:
  std::vector<Rational> coords_;
};

Rational dot(const Weight& a, const Weight& b);
Weight int_weight(const std::vector<int>& v);
std::string to_string(const Weight& w);

enum class LengthClass { Short, Long };

struct Root {
  std::vector<int> coords;

  int rank() const { return static_cast<int>(coords.size()); }
  int support_size() const;
  LengthClass length_class() const { return support_size() == 1 ? LengthClass::Short : LengthClass::Long; }
  bool is_short() const { return support_size() == 1; }
  int c() const { return is_short() ? 1 : 2; }
  bool is_positive() const;  // first nonzero coordinate positive
  Root operator-() const;
  Weight weight() const;
  std::vector<int> coroot() const;  // 2α/(α,α)

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

struct Coroot {
  std::vector<int> coords;
  friend bool operator==(const Coroot&, const Coroot&) = default;
  friend auto operator<=>(const Coroot&, const Coroot&) = default;
};

Coroot coroot_of(const Root& r);
Rational pairing(const Weight& x, const Coroot& c);
Rational pairing(const Weight& x, const Root& beta);  // ⟨x, β∨⟩
int pairing(const Root& a, const Root& beta);         // ⟨a, β∨⟩
std::string to_string(const Root& r);
std::string to_string(const Coroot& c);

// Reflection s_β(x) = x − ⟨x,β∨⟩β.
Weight reflect(const Weight& x, const Root& beta);
Root reflect(const Root& x, const Root& beta);

using IndexSet = std::set<int>;

// Type B_n root system in orthogonal coordinates.
class RootSystem {
 public:
  explicit RootSystem(int n);

  int rank() const { return n_; }
  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& simple_root(int i) const { return simple_.at(i - 1); }  // i in 1..n
  const Root& theta() const { return theta_; }
  // ᾱ_i for i in I_aff = {0,..,n}; ᾱ_0 = −θ.
  Root affine_simple_bar(int i) const;
  int chi(int i) const { return i == n_ ? 2 : 1; }

  Weight rho() const;
  Weight rho_vee() const;
  Weight rho_vee_S(const IndexSet& S) const;
  Weight fundamental_weight(int i) const;

  // Positive roots lying in the span of {α_i : i ∈ S}.
  std::vector<Root> positive_roots_S(const IndexSet& S) const;
  bool in_S_span(const Root& r, const IndexSet& S) const;
  int positive_index(const Root& r) const;  // -1 if not a positive root

  // S_λ = {i : ⟨λ, α_i∨⟩ = 0}.
  IndexSet stabilizer(const Weight& lambda) const;

 private:
  int n_;
  std::vector<Root> roots_;
  std::vector<Root> positive_;
  std::vector<Root> simple_;
  Root theta_;
};

// The dictionary to type C_n. In orthogonal coordinates both ι* and ι act as the identity on
// coordinate vectors; the C_n roots are ±ε_i±ε_j (short) and ±2ε_i (long).
struct CnWeight {
  std::vector<long long> coords;             // ε-coordinates
  std::vector<long long> fundamental_coords;  // ⟨λ†, (α†_i)∨⟩
};

CnWeight iota_star_inverse(const Weight& lambda);
Weight iota_star(const CnWeight& lambda);

// C_n simple root α†_i and its coroot, both in ε-coordinates.
std::vector<int> cn_simple_root(int n, int i);
std::vector<int> cn_simple_coroot(int n, int i);
// ι*(α†) for a C_n root and ι(α†∨) for its coroot, as B_n-side vectors.
std::vector<int> iota_star_root(const std::vector<int>& cn_root);
std::vector<Rational> iota_coroot(const std::vector<int>& cn_coroot);

// B_n root corresponding to a C_n root under ι* up to the factor 2/c: 2ε_i ↔ e_i, ε_i±ε_j ↔ e_i±e_j.
Root b_root_of_cn(const std::vector<int>& cn_root);
std::vector<int> cn_root_of_b(const Root& b_root);
std::vector<int> cn_coroot(const std::vector<int>& cn_root);

}  // namespace qlsc

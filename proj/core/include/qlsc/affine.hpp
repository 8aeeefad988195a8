#pragma once

#include "qlsc/rootsys.hpp"
#include "qlsc/weyl.hpp"

#include <string>
#include <vector>

namespace qlsc {

// ᾱ + dg·δ with dg ∈ c_ᾱℤ.
struct AffineRoot {
  Root finite;
  long long dg = 0;

  bool is_positive() const { return dg > 0 || (dg == 0 && finite.is_positive()); }
  bool is_valid() const { return dg % finite.c() == 0; }
  AffineRoot operator-() const { return AffineRoot{-finite, -dg}; }
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

std::string to_string(const AffineRoot& beta);

// t(trans)·fin acting on level-zero weights by t(x)(y + rδ) = y + (r − 2(x,y))δ.
class AffineWeylElt {
 public:
  AffineWeylElt() = default;
  AffineWeylElt(std::vector<long long> trans, WeylElt fin) : trans_(std::move(trans)), fin_(std::move(fin)) {}
  static AffineWeylElt identity(int n);
  static AffineWeylElt translation(const std::vector<long long>& x);
  static AffineWeylElt finite(const WeylElt& w);
  static AffineWeylElt simple(int n, int i);  // i ∈ {0, …, n}, s_0 = t(θ)s_θ

  int rank() const { return fin_.rank(); }
  const std::vector<long long>& wt() const { return trans_; }
  const WeylElt& dir() const { return fin_; }

  AffineWeylElt operator*(const AffineWeylElt& o) const;
  AffineWeylElt inverse() const;
  AffineRoot act(const AffineRoot& beta) const;

  int length() const;  // #(Δ⁺_aff ∩ u⁻¹Δ⁻_aff)
  bool has_right_descent(int i) const;

  friend bool operator==(const AffineWeylElt&, const AffineWeylElt&) = default;
  friend auto operator<=>(const AffineWeylElt&, const AffineWeylElt&) = default;

 private:
  std::vector<long long> trans_;
  WeylElt fin_;
};

std::string to_string(const AffineWeylElt& u);

AffineRoot affine_simple_root(int n, int i);
// s_{ᾱ+mδ} = t(−(m/c_ᾱ)ᾱ)·s_ᾱ.
AffineWeylElt affine_reflection(const AffineRoot& beta);

// Shortest element of t(μ)W.
AffineWeylElt m_mu(const Weight& mu);
// Reduced word by stripping the smallest right descent.
std::vector<int> affine_reduced_word(const AffineWeylElt& u);
AffineWeylElt affine_from_word(int n, const std::vector<int>& word);
// β_k = s_{ℓ_L}⋯s_{ℓ_{k+1}}α_{ℓ_k}.
std::vector<AffineRoot> alcove_betas(int n, const std::vector<int>& word);

}  // namespace qlsc

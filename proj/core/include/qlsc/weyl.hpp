#pragma once

#include "qlsc/rootsys.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qlsc {

inline constexpr int kMaxRank = 8;

// Signed permutation: w(e_i) = sign(win[i])·e_{|win[i]|}, with 1-based |win[i]|.
class WeylElt {
 public:
  WeylElt() = default;
  static WeylElt identity(int n);
  static WeylElt simple(int n, int i);  // s_i, i in 1..n
  static WeylElt longest(int n);        // w₀ = −id
  static WeylElt from_window(const std::vector<int>& window);
  static WeylElt from_word(int n, const std::vector<int>& word);
  static WeylElt reflection(const Root& beta);

  int rank() const { return n_; }
  int window(int i) const { return win_[i]; }  // 0-based i
  std::vector<int> window_vector() const;
  int length() const { return length_; }

  WeylElt operator*(const WeylElt& o) const;
  WeylElt inverse() const;

  Weight act(const Weight& x) const;
  Root act(const Root& r) const;
  std::vector<int> act(const std::vector<int>& v) const;

  // ℓ(w s_i) < ℓ(w), i.e. w(α_i) is negative.
  bool has_right_descent(int i) const;
  bool has_left_descent(int i) const;

  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.n_ == b.n_ && a.win_ == b.win_; }
  friend std::strong_ordering operator<=>(const WeylElt& a, const WeylElt& b);

 private:
  void recompute_length();

  int n_ = 0;
  int length_ = 0;
  std::array<std::int8_t, kMaxRank> win_{};
};

std::vector<int> reduced_word(const WeylElt& w);
std::string word_string(const std::vector<int>& word);  // "s1.s2.s1", "e" for the empty word
std::string window_string(const WeylElt& w);            // "[2,-1]"
std::string to_string(const WeylElt& w);                // reduced word form

std::vector<WeylElt> all_elements(int n);  // sorted by (length, window)

// Parabolic subgroup data.
class ParabolicData {
 public:
  ParabolicData(int n, IndexSet S);

  int rank() const { return n_; }
  const IndexSet& S() const { return S_; }
  const std::vector<WeylElt>& subgroup() const { return W_S_; }
  const std::vector<WeylElt>& min_reps() const { return W_to_S_; }
  const WeylElt& longest_S() const { return longest_S_; }

  WeylElt min_coset_rep(const WeylElt& w) const;
  bool is_min_rep(const WeylElt& w) const;
  bool in_subgroup(const WeylElt& w) const;

 private:
  int n_;
  IndexSet S_;
  std::vector<WeylElt> W_S_;
  std::vector<WeylElt> W_to_S_;
  WeylElt longest_S_;
};

WeylElt min_coset_rep(const WeylElt& w, const IndexSet& S);

// The unique v(μ) ∈ W^{S_λ} with v(μ)λ = μ.
WeylElt orbit_rep_v(const Weight& lambda, const Weight& mu);
std::vector<Weight> weyl_orbit(const Weight& lambda);  // sorted

bool bruhat_le(const WeylElt& u, const WeylElt& v);

}  // namespace qlsc

#pragma once

#include "qlsc/affine.hpp"
#include "qlsc/gcharacter.hpp"
#include "qlsc/qbg.hpp"
#include "qlsc/qls.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qlsc {

struct AlcovePath {
  std::vector<int> J;  // 0-based, strictly increasing
  std::vector<AffineWeylElt> states;  // z_0, …, z_r
  std::vector<AffineRoot> labels;
  std::vector<bool> quantum;

  const AffineWeylElt& end() const { return states.back(); }
  long long qwt_dg() const;
  friend bool operator==(const AlcovePath& a, const AlcovePath& b) { return a.J == b.J; }
};

// Alcove-path data for a dominant λ ∈ Q: λ_- = w₀λ, the Φ-sorted inversion set of t(λ_-),
// and the word realizing it.
class AlcoveModel {
 public:
  explicit AlcoveModel(Weight lambda);

  const Weight& lambda() const { return lambda_; }
  const Weight& lambda_minus() const { return lambda_minus_; }
  int rank() const { return lambda_.rank(); }
  const IndexSet& S() const { return S_; }
  const ReflectionOrder& order() const { return order_; }
  const QbgGraph& full_graph() const { return full_; }

  const std::vector<AffineRoot>& inversion_set() const { return inversions_; }  // β_1 ≺′ ⋯ ≺′ β_L
  const std::vector<int>& word() const { return word_; }
  const std::vector<Rational>& d_values() const { return d_; }
  int M() const { return M_; }
  Rational d_value(const AffineRoot& beta) const;

  // Reduced word of m_μ with its β list; for μ = λ_- this is the sorted inversion word.
  std::vector<int> reduced_word_m_mu(const Weight& mu) const;
  std::vector<AlcovePath> enumerate_qb(const Weight& mu) const;
  std::vector<AlcovePath> enumerate_qb() const { return enumerate_qb(lambda_minus_); }
  GradedCharacter alcove_character(const Weight& mu) const;
  GradedCharacter symmetric_character() const { return alcove_character(lambda_minus_); }

 private:
  Weight lambda_;
  Weight lambda_minus_;
  IndexSet S_;
  ReflectionOrder order_;
  QbgGraph full_;
  std::vector<AffineRoot> inversions_;
  std::vector<int> word_;
  std::vector<Rational> d_;
  int M_ = 0;
};

// Δ⁺_aff ∩ t(λ_-)⁻¹Δ⁻_aff by direct sign testing on a window, unsorted.
std::vector<AffineRoot> inversion_set_by_window(const Weight& lambda_minus);
// {α + a c_α δ : α ∈ Δ⁻, 0 < a ≤ ⟨λ_-, α∨⟩} sorted by Φ.
std::vector<AffineRoot> sorted_inversion_set(const Weight& lambda, const ReflectionOrder& order);

// The weight- and degree-preserving bijection QB(id; t(λ_-)) → QLS^C(λ) and its inverse.
QlsPath xi_map(const AlcoveModel& os, const QlsModel& qls, const AlcovePath& p);
AlcovePath xi_inverse(const AlcoveModel& os, const QlsModel& qls, const QlsPath& eta);

// Σ over η with i(η) = w_1 ≤ v(μ) in Bruhat order.
GradedCharacter nonsymmetric_filtered_character(const QlsModel& qls, const Weight& mu,
                                                DegConvention convention = DegConvention::LengthWeighted);

std::string to_string(const AlcovePath& p);

}  // namespace qlsc

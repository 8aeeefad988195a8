#pragma once

#include "qlsc/rootsys.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qlsc {

struct CharTerm {
  Weight wt;
  Rational deg;
  long long coeff = 0;
};

// Finitely supported map (q-degree, weight) → integer, kept normalized (no zero coefficients).
class GradedCharacter {
 public:
  using Key = std::pair<Rational, Weight>;

  void add_term(const Weight& wt, const Rational& deg, long long coeff = 1);
  GradedCharacter& operator+=(const GradedCharacter& o);
  friend GradedCharacter operator+(GradedCharacter a, const GradedCharacter& b) { return a += b; }
  GradedCharacter scaled(long long s) const;

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::vector<CharTerm> terms() const;  // sorted by (deg, wt)
  long long coefficient(const Weight& wt, const Rational& deg) const;

  // q = q0 substituted; result indexed by weight.
  std::map<Weight, Rational> specialize_q(const Rational& q0) const;
  long long dimension() const;

  bool degrees_integral() const;
  bool coefficients_positive() const;

  friend bool operator==(const GradedCharacter& a, const GradedCharacter& b) { return a.terms_ == b.terms_; }

 private:
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (a.first != b.first) return a.first < b.first;
      return a.second < b.second;
    }
  };
  std::map<Key, long long, KeyLess> terms_;
};

// First term (in canonical order) where the two characters differ.
std::optional<std::string> first_difference(const GradedCharacter& a, const GradedCharacter& b);

std::string to_text(const GradedCharacter& c);  // "q^k * e^[..] : coeff" lines
std::string to_json(const GradedCharacter& c);
GradedCharacter character_from_json(const std::string& text);

}  // namespace qlsc

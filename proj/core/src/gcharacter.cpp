#include "qlsc/gcharacter.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace qlsc {

void GradedCharacter::add_term(const Weight& wt, const Rational& deg, long long coeff) {
  if (coeff == 0) return;
  Key key{deg, wt};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

GradedCharacter& GradedCharacter::operator+=(const GradedCharacter& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.second, key.first, c);
  return *this;
}

GradedCharacter GradedCharacter::scaled(long long s) const {
  GradedCharacter out;
  if (s == 0) return out;
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, c * s);
  return out;
}

std::vector<CharTerm> GradedCharacter::terms() const {
  std::vector<CharTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.push_back(CharTerm{key.second, key.first, c});
  return out;
}

long long GradedCharacter::coefficient(const Weight& wt, const Rational& deg) const {
  auto it = terms_.find(Key{deg, wt});
  return it == terms_.end() ? 0 : it->second;
}

std::map<Weight, Rational> GradedCharacter::specialize_q(const Rational& q0) const {
  std::map<Weight, Rational> out;
  for (const auto& [key, c] : terms_) {
    if (!is_integer(key.first)) throw std::domain_error("specialize_q needs integral degrees");
    long long k = key.first.numerator();
    Rational p(1);
    if (k >= 0) {
      for (long long i = 0; i < k; ++i) p *= q0;
    } else {
      for (long long i = 0; i < -k; ++i) p /= q0;
    }
    out[key.second] += p * c;
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

long long GradedCharacter::dimension() const {
  long long d = 0;
  for (const auto& [key, c] : terms_) d += c;
  return d;
}

bool GradedCharacter::degrees_integral() const {
  for (const auto& [key, c] : terms_) {
    if (!is_integer(key.first)) return false;
  }
  return true;
}

bool GradedCharacter::coefficients_positive() const {
  for (const auto& [key, c] : terms_) {
    if (c <= 0) return false;
  }
  return true;
}

namespace {

std::string term_string(const CharTerm& t) {
  return "q^" + to_string(t.deg) + " * e^" + to_string(t.wt) + " : " + std::to_string(t.coeff);
}

}  // namespace

std::optional<std::string> first_difference(const GradedCharacter& a, const GradedCharacter& b) {
  GradedCharacter diff = a + b.scaled(-1);
  if (diff.empty()) return std::nullopt;
  CharTerm t = diff.terms().front();
  long long ca = a.coefficient(t.wt, t.deg), cb = b.coefficient(t.wt, t.deg);
  return "q^" + to_string(t.deg) + " * e^" + to_string(t.wt) + " : " + std::to_string(ca) + " vs " +
         std::to_string(cb);
}

std::string to_text(const GradedCharacter& c) {
  std::ostringstream os;
  for (const auto& t : c.terms()) os << term_string(t) << "\n";
  return os.str();
}

std::string to_json(const GradedCharacter& c) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& t : c.terms()) {
    nlohmann::ordered_json term;
    term["wt"] = t.wt.to_ints();
    if (is_integer(t.deg)) {
      term["deg"] = t.deg.numerator();
    } else {
      term["deg"] = to_string(t.deg);
    }
    term["coeff"] = t.coeff;
    terms.push_back(std::move(term));
  }
  nlohmann::ordered_json doc;
  doc["terms"] = std::move(terms);
  return doc.dump();
}

GradedCharacter character_from_json(const std::string& text) {
  auto doc = nlohmann::json::parse(text);
  GradedCharacter c;
  for (const auto& term : doc.at("terms")) {
    Weight wt = Weight::from_ints(term.at("wt").get<std::vector<long long>>());
    const auto& d = term.at("deg");
    Rational deg = d.is_string() ? parse_rational(d.get<std::string>()) : Rational(d.get<long long>());
    c.add_term(wt, deg, term.at("coeff").get<long long>());
  }
  return c;
}

}  // namespace qlsc

#include <doctest.h>

#include "qlsc/macdonald.hpp"
#include "qlsc/qls.hpp"
#include "support/oracle.hpp"

#include <map>

using namespace qlsc;

namespace {

std::vector<oracle::QlsTerm> library_terms(const QlsModel& m) {
  std::vector<oracle::QlsTerm> out;
  for (const auto& eta : m.enumerate()) {
    oracle::QlsTerm t;
    Weight w = m.wt(eta);
    for (const auto& c : w.coords()) t.wt.emplace_back(c.numerator(), c.denominator());
    Rational d = m.deg(eta);
    t.deg = oracle::Frac(d.numerator(), d.denominator());
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool same_terms(const std::vector<oracle::QlsTerm>& a, const std::vector<oracle::QlsTerm>& b) {
  if (a.size() != b.size()) return false;
  for (size_t k = 0; k < a.size(); ++k) {
    if (!(a[k].deg == b[k].deg) || a[k].wt.size() != b[k].wt.size()) return false;
    for (size_t i = 0; i < a[k].wt.size(); ++i) {
      if (!(a[k].wt[i] == b[k].wt[i])) return false;
    }
  }
  return true;
}

std::vector<int> ints(const Weight& w) {
  std::vector<int> v;
  for (auto x : w.to_ints()) v.push_back(static_cast<int>(x));
  return v;
}

}  // namespace

TEST_CASE("path counts") {
  std::map<std::vector<long long>, size_t> expected{
      {{1, 0}, 5}, {{1, 1}, 10}, {{2, 0}, 25}, {{2, 1}, 50}, {{1, 0, 0}, 7}, {{1, 1, 0}, 21}};
  for (const auto& [parts, count] : expected) {
    CHECK(QlsModel(Weight::from_ints(parts)).enumerate().size() == count);
  }
}

TEST_CASE("enumeration, weights and degrees agree with exhaustive search") {
  for (const auto& parts : std::vector<std::vector<long long>>{{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 1}, {1, 0, 0}, {1, 1, 0}}) {
    Weight lambda = Weight::from_ints(parts);
    QlsModel m(lambda);
    CHECK_MESSAGE(same_terms(library_terms(m), oracle::qls_terms(ints(lambda), true)), to_string(lambda));
  }
  QlsModel dual(Weight::from_ints({2, 1}), Variant::DualUntwisted);
  CHECK(same_terms(library_terms(dual), oracle::qls_terms({2, 1}, false)));
  CHECK(dual.enumerate().size() > QlsModel(Weight::from_ints({2, 1})).enumerate().size());
}

TEST_CASE("graded character of the first fundamental shape") {
  QlsModel m(Weight::from_ints({1, 0}));
  GradedCharacter ch = m.graded_character();
  CHECK(ch.size() == 5);
  CHECK(ch.dimension() == 5);
  for (const auto& w : weyl_orbit(Weight::from_ints({1, 0}))) CHECK(ch.coefficient(w, Rational(0)) == 1);
  CHECK(ch.coefficient(Weight(2), Rational(1)) == 1);
  CHECK(ch.coefficient(Weight(2), Rational(0)) == 0);
}

TEST_CASE("membership test rejects malformed paths") {
  QlsModel m(Weight::from_ints({1, 0}));
  WeylElt e = WeylElt::identity(2), s1 = WeylElt::simple(2, 1), s2 = WeylElt::simple(2, 2);
  CHECK(m.is_valid(m.straight_path(e)));
  CHECK_FALSE(m.is_valid(QlsPath{{e}, {Rational(0), Rational(1, 2)}}));
  CHECK_FALSE(m.is_valid(QlsPath{{s2}, {Rational(0), Rational(1)}}));
  CHECK_FALSE(m.is_valid(QlsPath{{s1, s1}, {Rational(0), Rational(1, 2), Rational(1)}}));
  CHECK_FALSE(m.is_valid(QlsPath{{s1, e}, {Rational(0), Rational(1, 2), Rational(1)}}));
  CHECK_FALSE(m.is_valid(QlsPath{{e, s1}, {Rational(0), Rational(1, 3), Rational(1)}}));
}

TEST_CASE("every enumerated path satisfies condition (C')") {
  for (const auto& parts : std::vector<std::vector<long long>>{{2, 1}, {2, 2}, {1, 1, 0}}) {
    QlsModel m(Weight::from_ints(parts));
    for (const auto& eta : m.enumerate()) CHECK(m.check_c_prime(eta));
  }
}

TEST_CASE("length-weighted degree is the one matching the alcove-path side") {
  Weight lambda = Weight::from_ints({3, 1});
  QlsModel m(lambda);
  AlcoveModel os(lambda);
  GradedCharacter target = os.symmetric_character();
  CHECK(m.graded_character(DegConvention::LengthWeighted) == target);
  CHECK_FALSE(m.graded_character(DegConvention::Plain) == target);
}

TEST_CASE("piecewise-linear conversion round trips") {
  QlsModel m(Weight::from_ints({2, 1}));
  for (const auto& eta : m.enumerate()) {
    PlcPath pi = m.to_plc(eta);
    CHECK(pi.endpoint() == m.wt(eta));
    CHECK(m.from_plc(pi) == eta);
  }
}

TEST_CASE("json round trip") {
  QlsModel m(Weight::from_ints({2, 1}));
  for (const auto& eta : m.enumerate()) CHECK(qls_path_from_json(to_json(eta)) == eta);
  CHECK_THROWS(qls_path_from_json("{\"dirs\": 3}"));
}

TEST_CASE("non-dominant or non-root-lattice shapes are rejected") {
  CHECK_THROWS(QlsModel(Weight::from_ints({1, 2})));
  CHECK_THROWS(AlcoveModel(Weight({Rational(1, 2), Rational(1, 2)})));
}

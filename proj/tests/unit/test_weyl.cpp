#include <doctest.h>

#include "qlsc/weyl.hpp"
#include "support/oracle.hpp"

#include <random>

using namespace qlsc;

TEST_CASE("group order and longest element") {
  CHECK(all_elements(2).size() == 8);
  CHECK(all_elements(3).size() == 48);
  CHECK(all_elements(4).size() == 384);
  WeylElt w0 = WeylElt::longest(3);
  CHECK(w0.length() == 9);
  CHECK(w0.act(Weight::from_ints({2, 1, 0})) == Weight::from_ints({-2, -1, 0}));
}

TEST_CASE("lengths and products agree with the signed-permutation oracle") {
  auto W = all_elements(3);
  for (const auto& w : W) CHECK(w.length() == oracle::length(w.window_vector()));
  for (const auto& a : W) {
    for (const auto& b : W) {
      CHECK((a * b).window_vector() == oracle::compose(a.window_vector(), b.window_vector()));
    }
  }
}

TEST_CASE("reduced words have the right length and multiply back") {
  for (const auto& w : all_elements(3)) {
    auto word = reduced_word(w);
    CHECK(static_cast<int>(word.size()) == w.length());
    CHECK(WeylElt::from_word(3, word) == w);
    CHECK(word.size() == oracle::shortest_word(w.window_vector()).size());
  }
  CHECK(word_string({}) == "e");
  CHECK(to_string(WeylElt::simple(2, 1) * WeylElt::simple(2, 2)) == "s1.s2");
}

TEST_CASE("reflections act as reflections") {
  RootSystem rs(3);
  for (const auto& beta : rs.positive_roots()) {
    WeylElt s = WeylElt::reflection(beta);
    CHECK(s.window_vector() == oracle::reflection(beta.coords));
    CHECK(s.act(beta) == -beta);
    CHECK(s * s == WeylElt::identity(3));
    CHECK(s.length() % 2 == 1);
  }
}

TEST_CASE("descents") {
  WeylElt w = WeylElt::from_word(2, {1, 2});
  CHECK(w.has_right_descent(2));
  CHECK_FALSE(w.has_right_descent(1));
  CHECK(w.has_left_descent(1));
  CHECK_FALSE(w.has_left_descent(2));
}

TEST_CASE("Bruhat order agrees with the subword criterion") {
  auto W2 = all_elements(2);
  for (const auto& u : W2) {
    for (const auto& v : W2) CHECK(bruhat_le(u, v) == oracle::bruhat_le(u.window_vector(), v.window_vector()));
  }
  auto W3 = all_elements(3);
  std::mt19937 rng(7);
  std::uniform_int_distribution<size_t> pick(0, W3.size() - 1);
  for (int k = 0; k < 400; ++k) {
    const auto& u = W3[pick(rng)];
    const auto& v = W3[pick(rng)];
    CHECK(bruhat_le(u, v) == oracle::bruhat_le(u.window_vector(), v.window_vector()));
  }
}

TEST_CASE("minimal coset representatives agree with brute-force minimisation") {
  int n = 3;
  for (int mask = 0; mask < (1 << n); ++mask) {
    IndexSet S;
    for (int i = 1; i <= n; ++i) {
      if (mask & (1 << (i - 1))) S.insert(i);
    }
    ParabolicData par(n, S);
    CHECK(par.subgroup().size() * par.min_reps().size() == 48);
    for (const auto& w : all_elements(n)) {
      WeylElt m = par.min_coset_rep(w);
      CHECK(m.window_vector() == oracle::min_coset_rep(w.window_vector(), S));
      CHECK(par.is_min_rep(m));
      CHECK(par.in_subgroup(m.inverse() * w));
    }
  }
}

TEST_CASE("orbits and their minimal representatives") {
  CHECK(weyl_orbit(Weight::from_ints({1, 0})).size() == 4);
  CHECK(weyl_orbit(Weight::from_ints({1, 1})).size() == 4);
  CHECK(weyl_orbit(Weight::from_ints({2, 1})).size() == 8);
  CHECK(weyl_orbit(Weight::from_ints({1, 1, 0})).size() == 12);
  Weight lambda = Weight::from_ints({2, 1, 0});
  for (const auto& mu : weyl_orbit(lambda)) {
    WeylElt v = orbit_rep_v(lambda, mu);
    CHECK(v.act(lambda) == mu);
    CHECK(min_coset_rep(v, {3}) == v);
  }
  CHECK_THROWS(orbit_rep_v(lambda, Weight::from_ints({1, 1, 1})));
}

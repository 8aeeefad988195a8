#include <doctest.h>

#include "qlsc/rootsys.hpp"
#include "support/oracle.hpp"

#include <set>

using namespace qlsc;

TEST_CASE("positive roots agree with the brute-force list") {
  for (int n = 2; n <= 5; ++n) {
    RootSystem rs(n);
    CHECK(rs.roots().size() == static_cast<size_t>(2 * n * n));
    std::set<std::vector<int>> lib, ref;
    for (const auto& r : rs.positive_roots()) lib.insert(r.coords);
    for (const auto& r : oracle::positive_roots(n)) ref.insert(r);
    CHECK(lib == ref);
  }
  CHECK(RootSystem(3).roots().size() == 18);
}

TEST_CASE("simple roots, theta and chi") {
  RootSystem rs(3);
  CHECK(rs.simple_root(1).coords == std::vector<int>{1, -1, 0});
  CHECK(rs.simple_root(3).coords == std::vector<int>{0, 0, 1});
  CHECK(rs.theta().coords == std::vector<int>{1, 0, 0});
  CHECK(rs.theta().is_short());
  CHECK(rs.affine_simple_bar(0) == -rs.theta());
  CHECK(rs.chi(0) == 1);
  CHECK(rs.chi(2) == 1);
  CHECK(rs.chi(3) == 2);
}

TEST_CASE("rho and rho-vee") {
  RootSystem rs(2);
  CHECK(rs.rho_vee() == Weight::from_ints({2, 1}));
  CHECK(rs.rho() == Weight({Rational(3, 2), Rational(1, 2)}));
  CHECK(rs.rho_vee_S({2}) == Weight::from_ints({0, 1}));
  for (int i = 1; i <= 2; ++i) CHECK(pairing(rs.rho(), rs.simple_root(i)) == 1);
}

TEST_CASE("coroots and pairings") {
  Root s{{1, 0}}, l{{1, -1}};
  CHECK(s.c() == 1);
  CHECK(l.c() == 2);
  CHECK(s.coroot() == std::vector<int>{2, 0});
  CHECK(l.coroot() == std::vector<int>{1, -1});
  CHECK(pairing(Weight::from_ints({3, 1}), s) == 6);
  CHECK(pairing(Weight::from_ints({3, 1}), l) == 2);
  CHECK(pairing(l, s) == 2);
  CHECK(pairing(s, l) == 1);
  CHECK(reflect(Weight::from_ints({3, 1}), l) == Weight::from_ints({1, 3}));
  CHECK(reflect(l, s) == Root{{-1, -1}});
}

TEST_CASE("stabilizer of dominant weights") {
  RootSystem rs(3);
  CHECK(rs.stabilizer(Weight::from_ints({1, 0, 0})) == IndexSet{2, 3});
  CHECK(rs.stabilizer(Weight::from_ints({1, 1, 0})) == IndexSet{1, 3});
  CHECK(rs.stabilizer(Weight::from_ints({2, 1, 0})) == IndexSet{3});
  CHECK(rs.stabilizer(Weight::from_ints({1, 1, 1})) == IndexSet{1, 2});
  CHECK(rs.stabilizer(Weight(3)) == IndexSet{1, 2, 3});
}

TEST_CASE("S-span agrees with simple-root coordinates") {
  for (int n = 2; n <= 4; ++n) {
    RootSystem rs(n);
    for (int mask = 0; mask < (1 << n); ++mask) {
      IndexSet S;
      for (int i = 1; i <= n; ++i) {
        if (mask & (1 << (i - 1))) S.insert(i);
      }
      for (const auto& r : rs.roots()) CHECK(rs.in_S_span(r, S) == oracle::in_span(r.coords, S));
    }
  }
}

TEST_CASE("weight lattice predicates") {
  CHECK(Weight::from_ints({2, 1}).is_dominant());
  CHECK_FALSE(Weight::from_ints({1, 2}).is_dominant());
  CHECK_FALSE(Weight::from_ints({1, -1}).is_dominant());
  Weight half({Rational(1, 2), Rational(1, 2)});
  CHECK(half.in_weight_lattice());
  CHECK_FALSE(half.is_integral());
  CHECK_FALSE(Weight({Rational(1, 2), Rational(1)}).in_weight_lattice());
}

TEST_CASE("C_n dictionary is the identity on coordinates") {
  RootSystem rs(3);
  for (const auto& r : rs.roots()) {
    auto c = cn_root_of_b(r);
    CHECK(b_root_of_cn(c) == r);
    int sq = 0;
    for (int x : c) sq += x * x;
    CHECK(sq == (r.is_short() ? 4 : 2));
  }
  CHECK(cn_simple_root(3, 3) == std::vector<int>{0, 0, 2});
  CHECK(cn_simple_coroot(3, 3) == std::vector<int>{0, 0, 1});
  CnWeight c = iota_star_inverse(Weight::from_ints({2, 1, 0}));
  CHECK(c.coords == std::vector<long long>{2, 1, 0});
  CHECK(c.fundamental_coords == std::vector<long long>{1, 1, 0});
  CHECK(iota_star(c) == Weight::from_ints({2, 1, 0}));
}

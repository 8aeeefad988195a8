#include <doctest.h>

#include "qlsc/qls.hpp"
#include "support/properties.hpp"

using namespace qlsc;

TEST_CASE("root operators on the straight path of the first fundamental shape") {
  QlsModel m(Weight::from_ints({1, 0}));
  QlsPath top = m.highest_path();
  auto f1 = m.twisted_op(1, top, OpDirection::F);
  REQUIRE(f1);
  CHECK(*f1 == m.straight_path(WeylElt::simple(2, 1)));
  CHECK_FALSE(m.twisted_op(1, top, OpDirection::E));
  CHECK(m.epsilon_phi(2, top, true) == std::pair<long long, long long>{0, 0});
  CHECK(m.epsilon_phi(1, top, true) == std::pair<long long, long long>{0, 1});
  CHECK(m.twisted_op(0, top, OpDirection::E).has_value());
}

TEST_CASE("doubled node applies the plain operator twice") {
  QlsModel m(Weight::from_ints({1, 1}));
  int n = m.rank();
  for (const auto& eta : m.enumerate()) {
    auto once = m.root_op_f(n, eta);
    auto twice = once ? m.root_op_f(n, *once) : std::nullopt;
    auto twisted = m.twisted_op(n, eta, OpDirection::F);
    CHECK(twisted.has_value() == twice.has_value());
    if (twisted && twice) CHECK(*twisted == *twice);
    auto [eps, phi] = m.epsilon_phi(n, eta, false);
    auto [teps, tphi] = m.epsilon_phi(n, eta, true);
    CHECK(teps == eps / 2);
    CHECK(tphi == phi / 2);
  }
}

TEST_CASE("crystal suite on small shapes") {
  for (const auto& parts : std::vector<std::vector<long long>>{{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {1, 0, 0}, {1, 1, 0}}) {
    auto r = props::crystal_suite(QlsModel(Weight::from_ints(parts)));
    CHECK_MESSAGE(r.ok(), r.summary());
  }
}

TEST_CASE("crystal graph size") {
  CrystalGraph g = crystal_graph(QlsModel(Weight::from_ints({2, 1})));
  CHECK(g.vertices.size() == 50);
  CHECK(g.arrows.size() == 77);
  CHECK(g.closed);
  CHECK(g.connected);
  CHECK(g.all_reach_highest);
  CHECK(to_dot(g).find("digraph") != std::string::npos);
}

TEST_CASE("folding operators on a straight line") {
  PlcPath pi{{Weight::from_ints({1, 0})}, {Rational(0), Rational(1)}};
  Root a1{{1, -1}};
  auto h = height_values(pi, a1);
  CHECK(h.front() == 0);
  CHECK(h.back() == 1);
  auto lowered = plc_lower(pi, a1, 1);
  REQUIRE(lowered);
  CHECK(lowered->endpoint() == Weight::from_ints({0, 1}));
  CHECK_FALSE(plc_raise(pi, a1, 1));
  auto back = plc_raise(*lowered, a1, 1);
  REQUIRE(back);
  CHECK(back->normalized().endpoint() == pi.endpoint());
}

#include <doctest.h>

#include "qlsc/qbg.hpp"
#include "support/oracle.hpp"
#include "support/properties.hpp"

#include <set>

using namespace qlsc;

namespace {

std::vector<IndexSet> subsets(int n) {
  std::vector<IndexSet> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    IndexSet S;
    for (int i = 1; i <= n; ++i) {
      if (mask & (1 << (i - 1))) S.insert(i);
    }
    out.push_back(S);
  }
  return out;
}

}  // namespace

TEST_CASE("edges agree with the brute-force graph for every parabolic subset") {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& S : subsets(n)) {
      QbgGraph g(n, S);
      oracle::Graph ref = oracle::qbg(n, S);
      CHECK(static_cast<size_t>(g.size()) == ref.vertices.size());
      std::vector<oracle::Edge> lib;
      for (const auto& e : g.edges()) {
        lib.push_back({e.source_elt.window_vector(), e.target_elt.window_vector(), e.label.coords,
                       e.kind == EdgeKind::Quantum});
      }
      std::sort(lib.begin(), lib.end());
      CHECK(lib == ref.edges);
    }
  }
}

TEST_CASE("distances agree with breadth-first search in the oracle graph") {
  QbgGraph g(3, {2});
  auto d = oracle::distances(oracle::qbg(3, {2}));
  for (int u = 0; u < g.size(); ++u) {
    for (int v = 0; v < g.size(); ++v) {
      CHECK(g.distance(u, v) == d[g.vertex(u).window_vector()][g.vertex(v).window_vector()]);
    }
  }
}

TEST_CASE("rank two anchors") {
  QbgGraph g(2, {});
  CHECK(g.size() == 8);
  WeylElt w0 = WeylElt::longest(2), s2 = WeylElt::simple(2, 2), e = WeylElt::identity(2);
  const QbgEdge* q = g.find_edge(g.index_of(w0), g.index_of(s2));
  REQUIRE(q != nullptr);
  CHECK(q->kind == EdgeKind::Quantum);
  CHECK(q->label == Root{{1, 0}});
  CHECK(g.distance(g.index_of(e), g.index_of(w0)) == 4);
  CHECK(shortest_path_data(g, g.index_of(e), g.index_of(w0)).wt == std::vector<int>{0, 0});
  CHECK(wt_lambda(g, w0, e, Weight::from_ints({1, 0})) > 0);
}

TEST_CASE("edge admission in the two variants") {
  Weight lambda = Weight::from_ints({1, 0});
  Root theta{{1, 0}}, l{{1, 1}};
  SubgraphFilter twisted{lambda, Rational(1, 2), Variant::TwistedA2n2};
  SubgraphFilter dual{lambda, Rational(1, 2), Variant::DualUntwisted};
  CHECK(edge_admitted(theta, EdgeKind::Quantum, twisted));
  CHECK_FALSE(edge_admitted(theta, EdgeKind::Bruhat, twisted));
  CHECK(edge_admitted(theta, EdgeKind::Bruhat, dual));
  CHECK_FALSE(edge_admitted(l, EdgeKind::Bruhat, SubgraphFilter{lambda, Rational(1, 3), Variant::DualUntwisted}));
  CHECK(edge_admitted(theta, EdgeKind::Bruhat, SubgraphFilter{lambda, Rational(1), Variant::TwistedA2n2}));
}

TEST_CASE("edge admission and reachability agree with the oracle") {
  for (const auto& lambda : props::dominant_shapes(2, 3)) {
    RootSystem rs(2);
    IndexSet S = rs.stabilizer(lambda);
    QbgGraph g(2, S);
    oracle::Graph ref = oracle::qbg(2, S);
    std::vector<int> lam;
    for (auto x : lambda.to_ints()) lam.push_back(static_cast<int>(x));
    for (const auto& b : props::fractions_up_to(6)) {
      for (bool twisted : {false, true}) {
        SubgraphFilter f{lambda, b, twisted ? Variant::TwistedA2n2 : Variant::DualUntwisted};
        for (const auto& e : g.edges()) {
          oracle::Edge oe{e.source_elt.window_vector(), e.target_elt.window_vector(), e.label.coords,
                          e.kind == EdgeKind::Quantum};
          CHECK(edge_admitted(e, f) == oracle::admitted(oe, lam, b.numerator(), b.denominator(), twisted));
        }
        auto reach = filtered_reachability(g, f);
        for (int u = 0; u < g.size(); ++u) {
          for (int v = 0; v < g.size(); ++v) {
            bool want = oracle::reachable(ref, g.vertex(u).window_vector(), g.vertex(v).window_vector(), lam,
                                          b.numerator(), b.denominator(), twisted);
            CHECK(reach[u][v] == want);
            CHECK(filtered_path(g, u, v, f).has_value() == want);
          }
        }
      }
    }
  }
}

TEST_CASE("reflection orders place each sum between its summands") {
  for (int n = 2; n <= 4; ++n) {
    RootSystem rs(n);
    for (const auto& S : subsets(n)) {
      ReflectionOrder order(n, S);
      CHECK(order.sequence().size() == rs.positive_roots().size());
      for (const auto& a : rs.positive_roots()) {
        for (const auto& b : rs.positive_roots()) {
          std::vector<int> sum(n);
          for (int i = 0; i < n; ++i) sum[i] = a.coords[i] + b.coords[i];
          if (rs.positive_index(Root{sum}) < 0) continue;
          int pa = order.position(a), pb = order.position(b), pg = order.position(Root{sum});
          CHECK(((pa < pg && pg < pb) || (pb < pg && pg < pa)));
        }
      }
    }
  }
}

TEST_CASE("canonical shortest path is the unique label-increasing one") {
  QbgGraph g(3, {});
  for (int u = 0; u < g.size(); u += 5) {
    for (int v = 0; v < g.size(); ++v) {
      auto data = shortest_path_data(g, u, v);
      auto inc = increasing_paths(g, u, v, g.order());
      REQUIRE(inc.size() == 1);
      CHECK(data.increasing);
      CHECK(static_cast<int>(data.path.size()) == data.length);
      CHECK(data.path.size() == inc.front().size());
    }
  }
}

TEST_CASE("structural properties in rank two") {
  auto shell = props::shellability(2);
  CHECK_MESSAGE(shell.ok(), shell.summary());
  auto inv = props::involution(2);
  CHECK_MESSAGE(inv.ok(), inv.summary());
  for (const auto& lambda : props::dominant_shapes(2, 2)) {
    auto left = props::left_action(lambda);
    CHECK_MESSAGE(left.ok(), left.summary());
    auto wt = props::wt_independence(lambda);
    CHECK_MESSAGE(wt.ok(), wt.summary());
    for (const auto& b : props::fractions_up_to(4)) {
      auto d = props::diamonds(lambda, b, Variant::TwistedA2n2);
      CHECK_MESSAGE(d.ok(), d.summary());
      auto p = props::projection(lambda, b, Variant::TwistedA2n2);
      CHECK_MESSAGE(p.ok(), p.summary());
    }
  }
}

TEST_CASE("the unweighted quantum sum is not a path invariant but the length-weighted one is") {
  CHECK(props::plain_weight_path_dependent(Weight::from_ints({2, 1})));
  CHECK_FALSE(props::plain_weight_path_dependent(Weight::from_ints({1, 0})));
  CHECK(props::wt_independence(Weight::from_ints({2, 1})).ok());
  CHECK(props::wt_independence(Weight::from_ints({2, 1, 0})).ok());
}

TEST_CASE("tilted minima agree with the brute-force definition") {
  for (const auto& lambda : {Weight::from_ints({1, 0}), Weight::from_ints({1, 1}), Weight::from_ints({1, 0, 0})}) {
    auto r = props::tilted(lambda, props::fractions_up_to(4), Variant::TwistedA2n2);
    CHECK_MESSAGE(r.ok(), r.summary());
    CHECK(r.checked > 0);
  }
}

TEST_CASE("dot output lists every vertex") {
  QbgGraph g(2, {});
  std::string dot = to_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  size_t nodes = 0;
  for (size_t p = dot.find("label="); p != std::string::npos; p = dot.find("label=", p + 1)) ++nodes;
  CHECK(nodes >= 8);
}

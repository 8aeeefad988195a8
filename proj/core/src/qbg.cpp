#include "qlsc/qbg.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qlsc {

ReflectionOrder::ReflectionOrder(int n, const IndexSet& S) {
  ParabolicData par(n, S);
  WeylElt w0 = WeylElt::longest(n);
  WeylElt v = par.min_coset_rep(w0);
  word_ = reduced_word(v);
  auto tail = reduced_word(par.longest_S());
  word_.insert(word_.end(), tail.begin(), tail.end());
  if (static_cast<int>(word_.size()) != n * n) throw std::logic_error("w0 factorization is not length-additive");
  RootSystem rs(n);
  int N = static_cast<int>(word_.size());
  seq_.resize(N);
  WeylElt x = WeylElt::identity(n);
  for (int j = N - 1; j >= 0; --j) {
    seq_[j] = x.act(rs.simple_root(word_[j]));
    x = x * WeylElt::simple(n, word_[j]);
  }
  for (int j = 0; j < N; ++j) pos_[seq_[j].coords] = j + 1;
}

int ReflectionOrder::position(const Root& beta) const {
  auto it = pos_.find(beta.coords);
  if (it == pos_.end()) throw std::out_of_range("root " + to_string(beta) + " is not positive");
  return it->second;
}

QbgGraph::QbgGraph(int n, IndexSet S) : n_(n), rs_(n), parabolic_(n, S), order_(n, S) {
  vertices_ = parabolic_.min_reps();
  for (int i = 0; i < size(); ++i) index_[vertices_[i]] = i;
  Weight rho_diff = rs_.rho_vee() - rs_.rho_vee_S(parabolic_.S());
  out_.resize(size());
  for (int u = 0; u < size(); ++u) {
    const WeylElt& x = vertices_[u];
    for (const auto& beta : rs_.positive_roots()) {
      if (rs_.in_S_span(beta, parabolic_.S())) continue;
      WeylElt y = parabolic_.min_coset_rep(x * WeylElt::reflection(beta));
      Rational drop = 2 * dot(beta.weight(), rho_diff);
      std::optional<EdgeKind> kind;
      if (y.length() == x.length() + 1) {
        kind = EdgeKind::Bruhat;
      } else if (Rational(y.length()) == Rational(x.length()) - drop + 1) {
        kind = EdgeKind::Quantum;
      }
      if (!kind) continue;
      out_[u].push_back(QbgEdge{u, index_.at(y), x, y, beta, *kind});
    }
  }
  int N = size();
  dist_.assign(N * N, -1);
  for (int s = 0; s < N; ++s) {
    std::deque<int> queue{s};
    dist_[s * N + s] = 0;
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (const auto& e : out_[a]) {
        if (dist_[s * N + e.target] < 0) {
          dist_[s * N + e.target] = dist_[s * N + a] + 1;
          queue.push_back(e.target);
        }
      }
    }
  }
}

int QbgGraph::index_of(const WeylElt& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

std::vector<QbgEdge> QbgGraph::edges() const {
  std::vector<QbgEdge> all;
  for (const auto& list : out_) all.insert(all.end(), list.begin(), list.end());
  return all;
}

const QbgEdge* QbgGraph::find_edge(int u, int v) const {
  for (const auto& e : out_[u]) {
    if (e.target == v) return &e;
  }
  return nullptr;
}

bool edge_admitted(const Root& label, EdgeKind kind, const SubgraphFilter& filter) {
  Rational v = filter.b * pairing(filter.lambda, label);
  if (filter.variant == Variant::DualUntwisted || !label.is_short() || kind == EdgeKind::Quantum) {
    return is_integer(v);
  }
  return is_integer(v / 2);
}

std::vector<std::vector<bool>> filtered_reachability(const QbgGraph& g, const SubgraphFilter& filter) {
  int N = g.size();
  std::vector<std::vector<bool>> reach(N, std::vector<bool>(N, false));
  for (int s = 0; s < N; ++s) {
    std::deque<int> queue{s};
    reach[s][s] = true;
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (const auto& e : g.out_edges(a)) {
        if (!reach[s][e.target] && edge_admitted(e, filter)) {
          reach[s][e.target] = true;
          queue.push_back(e.target);
        }
      }
    }
  }
  return reach;
}

std::optional<Path> filtered_path(const QbgGraph& g, int u, int v, const SubgraphFilter& filter) {
  std::vector<const QbgEdge*> via(g.size(), nullptr);
  std::vector<bool> seen(g.size(), false);
  std::deque<int> queue{u};
  seen[u] = true;
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    if (a == v) break;
    for (const auto& e : g.out_edges(a)) {
      if (!seen[e.target] && edge_admitted(e, filter)) {
        seen[e.target] = true;
        via[e.target] = &e;
        queue.push_back(e.target);
      }
    }
  }
  if (!seen[v]) return std::nullopt;
  Path p;
  for (int x = v; x != u; x = via[x]->source) p.push_back(*via[x]);
  std::reverse(p.begin(), p.end());
  return p;
}

std::vector<int> path_wt(const Path& p) {
  std::vector<int> wt;
  for (const auto& e : p) {
    if (wt.empty()) wt.assign(e.label.rank(), 0);
    if (e.kind != EdgeKind::Quantum) continue;
    auto c = e.label.coroot();
    for (size_t i = 0; i < c.size(); ++i) wt[i] += c[i];
  }
  return wt;
}

namespace {

std::vector<const QbgEdge*> sorted_by_order(const QbgGraph& g, int a, const ReflectionOrder& order) {
  std::vector<const QbgEdge*> edges;
  for (const auto& e : g.out_edges(a)) edges.push_back(&e);
  std::sort(edges.begin(), edges.end(), [&](const QbgEdge* x, const QbgEdge* y) {
    return order.position(x->label) > order.position(y->label);
  });
  return edges;
}

}  // namespace

ShortestPathData shortest_path_data(const QbgGraph& g, int u, int v, const ReflectionOrder& order) {
  ShortestPathData out;
  out.length = g.distance(u, v);
  Path current;
  std::function<bool(int, int)> dfs = [&](int a, int last_pos) -> bool {
    if (a == v) return true;
    for (const QbgEdge* e : sorted_by_order(g, a, order)) {
      int p = order.position(e->label);
      if (p >= last_pos) continue;
      if (g.distance(e->target, v) != g.distance(a, v) - 1) continue;
      current.push_back(*e);
      if (dfs(e->target, p)) return true;
      current.pop_back();
    }
    return false;
  };
  if (dfs(u, 1 << 30)) {
    out.path = current;
    out.increasing = true;
  } else {
    out.increasing = false;
    for (int a = u; a != v;) {
      for (const QbgEdge* e : sorted_by_order(g, a, order)) {
        if (g.distance(e->target, v) == g.distance(a, v) - 1) {
          out.path.push_back(*e);
          a = e->target;
          break;
        }
      }
    }
  }
  out.wt = path_wt(out.path);
  if (out.wt.empty()) out.wt.assign(g.rank(), 0);
  return out;
}

ShortestPathData shortest_path_data(const QbgGraph& g, int u, int v) {
  return shortest_path_data(g, u, v, g.order());
}

std::vector<Path> all_shortest_paths(const QbgGraph& g, int u, int v) {
  std::vector<Path> out;
  Path current;
  std::function<void(int)> dfs = [&](int a) {
    if (a == v) {
      out.push_back(current);
      return;
    }
    for (const auto& e : g.out_edges(a)) {
      if (g.distance(e.target, v) != g.distance(a, v) - 1) continue;
      current.push_back(e);
      dfs(e.target);
      current.pop_back();
    }
  };
  dfs(u);
  return out;
}

std::vector<Path> increasing_paths(const QbgGraph& g, int u, int v, const ReflectionOrder& order,
                                   const IndexSet& excluded_S) {
  std::vector<Path> out;
  Path current;
  const RootSystem& rs = g.root_system();
  std::function<void(int, int)> dfs = [&](int a, int last_pos) {
    if (a == v) out.push_back(current);
    for (const auto& e : g.out_edges(a)) {
      int p = order.position(e.label);
      if (p >= last_pos) continue;
      if (!excluded_S.empty() && rs.in_S_span(e.label, excluded_S)) continue;
      current.push_back(e);
      dfs(e.target, p);
      current.pop_back();
    }
  };
  dfs(u, 1 << 30);
  return out;
}

Rational wt_lambda(const QbgGraph& g, int u, int v, const Weight& lambda) {
  auto data = shortest_path_data(g, u, v);
  return pairing(lambda, Coroot{data.wt});
}

Rational wt_lambda(const QbgGraph& g, const WeylElt& u, const WeylElt& v, const Weight& lambda) {
  int a = g.index_of(u), b = g.index_of(v);
  if (a < 0 || b < 0) throw std::invalid_argument("wt_lambda: vertex not in W^S");
  return wt_lambda(g, a, b, lambda);
}

TiltedMin tilted_min(const QbgGraph& full, const WeylElt& y, const WeylElt& pivot, const IndexSet& S,
                     const ReflectionOrder& order) {
  if (!full.S().empty()) throw std::invalid_argument("tilted_min requires the full quantum Bruhat graph");
  ParabolicData par(full.rank(), S);
  TiltedMin out;
  int target = full.index_of(pivot);
  for (const auto& z : par.subgroup()) {
    WeylElt x = y * z;
    for (auto& p : increasing_paths(full, full.index_of(x), target, order, S)) {
      if (out.path_count == 0) {
        out.min = x;
        out.path = std::move(p);
      }
      ++out.path_count;
    }
  }
  if (out.path_count != 1) {
    throw std::logic_error("tilted_min: expected a unique label-increasing path, found " +
                           std::to_string(out.path_count));
  }
  return out;
}

std::string to_dot(const QbgGraph& g, const SubgraphFilter* filter) {
  std::ostringstream os;
  os << "digraph qbg {\n";
  for (int v = 0; v < g.size(); ++v) {
    os << "  v" << v << " [label=\"" << to_string(g.vertex(v)) << "\"];\n";
  }
  for (int v = 0; v < g.size(); ++v) {
    for (const auto& e : g.out_edges(v)) {
      if (filter && !edge_admitted(e, *filter)) continue;
      os << "  v" << e.source << " -> v" << e.target << " [label=\"" << to_string(coroot_of(e.label)) << "\""
         << (e.kind == EdgeKind::Quantum ? ", style=dashed" : "") << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace qlsc

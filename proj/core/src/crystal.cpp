#include "qlsc/qls.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <functional>
#include <algorithm>
#include <stdexcept>

namespace qlsc {

std::vector<Rational> height_values(const PlcPath& pi, const Root& alpha) {
  std::vector<Rational> h{Rational(0)};
  for (size_t k = 0; k < pi.dirs.size(); ++k) {
    h.push_back(h.back() + (pi.times[k + 1] - pi.times[k]) * pairing(pi.dirs[k], alpha));
  }
  return h;
}

namespace {

// Reflect the directions of π by s_α on [a, b], splitting segments at a and b.
PlcPath fold(const PlcPath& pi, const Root& alpha, const Rational& a, const Rational& b) {
  std::set<Rational> cuts(pi.times.begin(), pi.times.end());
  cuts.insert(a);
  cuts.insert(b);
  PlcPath out;
  out.times.push_back(pi.times.front());
  size_t k = 0;
  for (auto it = std::next(cuts.begin()); it != cuts.end(); ++it) {
    Rational lo = out.times.back();
    Rational hi = *it;
    while (pi.times[k + 1] <= lo) ++k;
    bool inside = a <= lo && hi <= b;
    out.dirs.push_back(inside ? reflect(pi.dirs[k], alpha) : pi.dirs[k]);
    out.times.push_back(hi);
  }
  return out.normalized();
}

}  // namespace

std::optional<PlcPath> plc_raise(const PlcPath& pi, const Root& alpha, int k) {
  auto h = height_values(pi, alpha);
  Rational m = *std::min_element(h.begin(), h.end());
  if (m > -k) return std::nullopt;
  size_t k1 = 0;
  while (h[k1] != m) ++k1;
  Rational level = m + k;
  Rational t0;
  for (size_t j = k1; j >= 1; --j) {
    if (h[j - 1] >= level) {
      Rational slope = pairing(pi.dirs[j - 1], alpha);
      t0 = pi.times[j - 1] + (level - h[j - 1]) / slope;
      break;
    }
  }
  return fold(pi, alpha, t0, pi.times[k1]);
}

std::optional<PlcPath> plc_lower(const PlcPath& pi, const Root& alpha, int k) {
  auto h = height_values(pi, alpha);
  Rational m = *std::min_element(h.begin(), h.end());
  if (h.back() - m < k) return std::nullopt;
  size_t k2 = h.size() - 1;
  while (h[k2] != m) --k2;
  Rational level = m + k;
  Rational t3;
  for (size_t j = k2 + 1; j < h.size(); ++j) {
    if (h[j] >= level) {
      Rational slope = pairing(pi.dirs[j - 1], alpha);
      t3 = pi.times[j - 1] + (level - h[j - 1]) / slope;
      break;
    }
  }
  return fold(pi, alpha, pi.times[k2], t3);
}

namespace {

void check_color(int i, int n) {
  if (i < 0 || i > n) throw std::out_of_range("operator index must lie in {0,..,n}");
}

}  // namespace

std::optional<QlsPath> QlsModel::root_op_e(int i, const QlsPath& eta) const {
  check_color(i, rank());
  auto r = plc_raise(to_plc(eta), root_system().affine_simple_bar(i), 1);
  if (!r) return std::nullopt;
  return from_plc(*r);
}

std::optional<QlsPath> QlsModel::root_op_f(int i, const QlsPath& eta) const {
  check_color(i, rank());
  auto r = plc_lower(to_plc(eta), root_system().affine_simple_bar(i), 1);
  if (!r) return std::nullopt;
  return from_plc(*r);
}

std::optional<QlsPath> QlsModel::twisted_op(int i, const QlsPath& eta, OpDirection dir) const {
  check_color(i, rank());
  int k = root_system().chi(i);
  const Root alpha = root_system().affine_simple_bar(i);
  auto r = dir == OpDirection::E ? plc_raise(to_plc(eta), alpha, k) : plc_lower(to_plc(eta), alpha, k);
  if (!r) return std::nullopt;
  return from_plc(*r);
}

std::pair<long long, long long> QlsModel::epsilon_phi(int i, const QlsPath& eta, bool twisted) const {
  check_color(i, rank());
  auto h = height_values(to_plc(eta), root_system().affine_simple_bar(i));
  Rational m = *std::min_element(h.begin(), h.end());
  Rational eps = -m, phi = h.back() - m;
  if (twisted) {
    int k = root_system().chi(i);
    return {floor_of(eps / k), floor_of(phi / k)};
  }
  return {floor_of(eps), floor_of(phi)};
}

CrystalGraph crystal_graph(const QlsModel& model) {
  CrystalGraph g;
  g.vertices = model.enumerate();
  int N = static_cast<int>(g.vertices.size());
  int colors = model.rank() + 1;
  std::map<QlsPath, int> index;
  for (int v = 0; v < N; ++v) index[g.vertices[v]] = v;
  bool twisted = model.variant() == Variant::TwistedA2n2;
  std::vector<std::vector<int>> next(N, std::vector<int>(colors, -1));
  for (int v = 0; v < N; ++v) {
    for (int i = 0; i < colors; ++i) {
      auto t = twisted ? model.twisted_op(i, g.vertices[v], OpDirection::F) : model.root_op_f(i, g.vertices[v]);
      if (!t) continue;
      auto it = index.find(*t);
      if (it == index.end()) {
        g.closed = false;
        continue;
      }
      next[v][i] = it->second;
      g.arrows.push_back(CrystalArrow{v, it->second, i});
    }
  }

  std::vector<int> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& a : g.arrows) parent[find(a.source)] = find(a.target);
  for (int v = 0; v < N; ++v) {
    if (find(v) != find(0)) g.connected = false;
  }

  auto highest = index.find(model.highest_path());
  if (highest == index.end()) {
    g.all_reach_highest = false;
    return g;
  }
  int target = highest->second;
  for (int v = 0; v < N && g.all_reach_highest; ++v) {
    std::vector<bool> seen(N, false);
    std::deque<int> queue{v};
    seen[v] = true;
    bool found = false;
    while (!queue.empty() && !found) {
      int a = queue.front();
      queue.pop_front();
      if (a == target) found = true;
      for (int i = 0; i < colors; ++i) {
        int b = a;
        while (next[b][i] >= 0) b = next[b][i];
        if (!seen[b]) {
          seen[b] = true;
          queue.push_back(b);
        }
      }
    }
    if (!found) g.all_reach_highest = false;
  }
  return g;
}

std::string to_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    os << "  p" << v << " [label=\"" << to_string(g.vertices[v]) << "\"];\n";
  }
  for (const auto& a : g.arrows) {
    os << "  p" << a.source << " -> p" << a.target << " [label=\"i=" << a.color << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qlsc

#include "qlsc/sib.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qlsc {

namespace {

template <class T>
std::string vec_string(const std::vector<T>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

template <class T>
bool first_nonzero_positive(const std::vector<T>& v) {
  for (const auto& x : v) {
    if (x != 0) return x > 0;
  }
  return false;
}

template <class A, class B>
long long dot_ll(const std::vector<A>& x, const std::vector<B>& y) {
  long long s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += static_cast<long long>(x[i]) * static_cast<long long>(y[i]);
  return s;
}

std::vector<long long> act_ll(const WeylElt& w, const std::vector<long long>& x) {
  std::vector<long long> y(x.size(), 0);
  for (int i = 0; i < w.rank(); ++i) {
    int v = w.window(i);
    y[std::abs(v) - 1] = (v < 0 ? -1 : 1) * x[i];
  }
  return y;
}

bool is_cn_root(const std::vector<int>& v) {
  int support = 0;
  for (int x : v) {
    if (x != 0) ++support;
  }
  if (support == 1) {
    for (int x : v) {
      if (x != 0 && std::abs(x) != 2) return false;
    }
    return true;
  }
  if (support == 2) {
    for (int x : v) {
      if (x != 0 && std::abs(x) != 1) return false;
    }
    return true;
  }
  return false;
}

long long max_abs(const Coweight& mu) {
  long long m = 0;
  for (auto x : mu) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

bool is_cn_long(const std::vector<int>& cn_root) {
  int support = 0;
  for (int x : cn_root) support += x != 0;
  return support == 1;
}

int cn_c(const std::vector<int>& cn_root) { return is_cn_long(cn_root) ? 2 : 1; }

std::vector<int> cn_rho(int n) {
  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) r[i] = n - i;
  return r;
}

std::vector<std::vector<int>> cn_roots(int n) {
  std::vector<std::vector<int>> out;
  RootSystem rs(n);
  for (const auto& r : rs.roots()) out.push_back(cn_root_of_b(r));
  return out;
}

std::vector<std::vector<int>> cn_positive_roots_S(int n, const IndexSet& S) {
  std::vector<std::vector<int>> out;
  for (const auto& r : RootSystem(n).positive_roots_S(S)) out.push_back(cn_root_of_b(r));
  return out;
}

long long DagAffineRoot::delta2() const {
  return kind == DagKind::Standard ? 2 * cn_c(finite) * a : 2 * a - 1;
}

bool DagAffineRoot::is_valid() const {
  if (!is_cn_root(finite)) return false;
  return kind == DagKind::Standard || is_cn_long(finite);
}

bool DagAffineRoot::is_positive() const {
  long long d = delta2();
  return d > 0 || (d == 0 && first_nonzero_positive(finite));
}

std::string to_string(const DagAffineRoot& beta) {
  if (beta.kind == DagKind::Standard) {
    long long d = cn_c(beta.finite) * beta.a;
    return vec_string(beta.finite) + (d >= 0 ? "+" : "") + std::to_string(d) + "d";
  }
  long long d = 2 * beta.a - 1;
  return "(" + vec_string(beta.finite) + (d >= 0 ? "+" : "") + std::to_string(d) + "d)/2";
}

CAffineElt CAffineElt::identity(int n) { return CAffineElt{WeylElt::identity(n), Coweight(n, 0)}; }

CAffineElt CAffineElt::translation(const Coweight& mu) {
  return CAffineElt{WeylElt::identity(static_cast<int>(mu.size())), mu};
}

CAffineElt CAffineElt::finite(const WeylElt& w) { return CAffineElt{w, Coweight(w.rank(), 0)}; }

CAffineElt CAffineElt::reflection(const DagAffineRoot& beta) {
  if (!beta.is_valid()) throw std::invalid_argument("not an affine root: " + to_string(beta));
  long long k = beta.kind == DagKind::Standard ? cn_c(beta.finite) * beta.a : 2 * beta.a - 1;
  auto cv = cn_coroot(beta.finite);
  Coweight mu(cv.size());
  for (size_t i = 0; i < cv.size(); ++i) mu[i] = k * cv[i];
  return CAffineElt{WeylElt::reflection(b_root_of_cn(beta.finite)), mu};
}

CAffineElt CAffineElt::operator*(const CAffineElt& o) const {
  Coweight m = act_ll(o.w.inverse(), mu);
  for (size_t i = 0; i < m.size(); ++i) m[i] += o.mu[i];
  return CAffineElt{w * o.w, m};
}

CAffineElt CAffineElt::inverse() const {
  Coweight m = act_ll(w, mu);
  for (auto& x : m) x = -x;
  return CAffineElt{w.inverse(), m};
}

std::pair<std::vector<long long>, long long> CAffineElt::act2(const DagAffineRoot& beta) const {
  std::vector<long long> y2(beta.finite.begin(), beta.finite.end());
  if (beta.kind == DagKind::Standard) {
    for (auto& x : y2) x *= 2;
  }
  long long d2 = beta.delta2() - dot_ll(y2, mu);
  return {act_ll(w, y2), d2};
}

bool CAffineElt::maps_to_positive(const DagAffineRoot& beta) const {
  auto [y2, d2] = act2(beta);
  return d2 > 0 || (d2 == 0 && first_nonzero_positive(y2));
}

std::string to_string(const CAffineElt& x) { return window_string(x.w) + " t(" + vec_string(x.mu) + ")"; }

bool is_s_adjusted(const Coweight& mu, const IndexSet& S) {
  for (const auto& g : cn_positive_roots_S(static_cast<int>(mu.size()), S)) {
    long long p = dot_ll(mu, g);
    if (p != 0 && p != -1) return false;
  }
  return true;
}

bool in_peterson(const CAffineElt& x, const IndexSet& S) {
  int n = x.rank();
  RootSystem rs(n);
  for (const auto& r : rs.roots()) {
    if (!rs.in_S_span(r, S)) continue;
    auto g = cn_root_of_b(r);
    DagAffineRoot lowest{g, r.is_positive() ? 0 : 1, DagKind::Standard};
    if (!x.maps_to_positive(lowest)) return false;
    if (is_cn_long(g) && !x.maps_to_positive(DagAffineRoot{g, 1, DagKind::Half})) return false;
  }
  return true;
}

namespace {

WeylElt z_of_adjusted(const Coweight& mu, const IndexSet& S) {
  int n = static_cast<int>(mu.size());
  std::optional<WeylElt> found;
  ParabolicData par(n, S);
  for (const auto& z : par.subgroup()) {
    if (!in_peterson(CAffineElt{z, mu}, S)) continue;
    if (found) throw std::logic_error("z_mu is not unique for t(" + vec_string(mu) + ")");
    found = z;
  }
  if (!found) throw std::logic_error("no z_mu for t(" + vec_string(mu) + ")");
  return *found;
}

}  // namespace

SAdjustment s_adjust(const Coweight& mu, const IndexSet& S) {
  int n = static_cast<int>(mu.size());
  std::vector<std::vector<int>> basis;
  for (int i : S) basis.push_back(cn_simple_coroot(n, i));
  long long R = 2;
  for (auto x : mu) R += 2 * std::abs(x);
  std::vector<long long> coef(basis.size(), -R);
  std::vector<Coweight> solutions;
  while (true) {
    Coweight phi(n, 0);
    for (size_t k = 0; k < basis.size(); ++k) {
      for (int i = 0; i < n; ++i) phi[i] += coef[k] * basis[k][i];
    }
    Coweight shifted = mu;
    for (int i = 0; i < n; ++i) shifted[i] += phi[i];
    if (is_s_adjusted(shifted, S)) solutions.push_back(phi);
    size_t k = 0;
    while (k < coef.size() && coef[k] == R) coef[k++] = -R;
    if (k == coef.size()) break;
    ++coef[k];
  }
  if (solutions.size() != 1) {
    throw std::logic_error("phi_S(" + vec_string(mu) + ") has " + std::to_string(solutions.size()) +
                           " solutions in the search window");
  }
  Coweight adjusted = mu;
  for (int i = 0; i < n; ++i) adjusted[i] += solutions[0][i];
  return SAdjustment{solutions[0], z_of_adjusted(adjusted, S)};
}

std::string to_string(const PetersonElt& x) {
  return to_string(x.w) + " | " + to_string(x.z) + " | t(" + vec_string(x.mu) + ")";
}

PetersonElt peterson_elt(const WeylElt& w, const Coweight& mu, const IndexSet& S) {
  if (!is_s_adjusted(mu, S)) throw std::invalid_argument("t(" + vec_string(mu) + ") is not S-adjusted");
  if (!ParabolicData(w.rank(), S).is_min_rep(w)) throw std::invalid_argument(to_string(w) + " is not in W^S");
  return PetersonElt{w, z_of_adjusted(mu, S), mu};
}

PetersonElt peterson_projection(const CAffineElt& x, const IndexSet& S) {
  SAdjustment adj = s_adjust(x.mu, S);
  Coweight mu = x.mu;
  for (size_t i = 0; i < mu.size(); ++i) mu[i] += adj.phi[i];
  PetersonElt p{min_coset_rep(x.w, S), adj.z, mu};
  if (!in_peterson(p.element(), S)) throw std::logic_error("projection left (W_aff)^S: " + to_string(x));
  return p;
}

PetersonElt decompose_peterson(const CAffineElt& x, const IndexSet& S) {
  WeylElt w = min_coset_rep(x.w, S);
  WeylElt z = w.inverse() * x.w;
  if (!is_s_adjusted(x.mu, S)) throw std::invalid_argument(to_string(x) + " has a translation that is not S-adjusted");
  return PetersonElt{w, z, x.mu};
}

long long si_length(const CAffineElt& x) { return x.w.length() + 2 * dot_ll(cn_rho(x.rank()), x.mu); }

Rational sib_pairing(const CAffineElt& x, const Weight& lambda, const DagAffineRoot& beta) {
  Weight wl = x.w.act(lambda);
  auto cv = cn_coroot(beta.finite);
  Rational p(0);
  for (size_t i = 0; i < cv.size(); ++i) p += wl[i] * cv[i];
  return beta.kind == DagKind::Half ? 2 * p : p;
}

std::vector<DagAffineRoot> positive_dag_roots(int n, long long bound) {
  std::vector<DagAffineRoot> out;
  for (const auto& g : cn_roots(n)) {
    for (long long a = -bound; a <= bound; ++a) {
      DagAffineRoot s{g, a, DagKind::Standard};
      if (s.is_positive()) out.push_back(s);
      if (is_cn_long(g)) {
        DagAffineRoot h{g, a, DagKind::Half};
        if (h.is_positive()) out.push_back(h);
      }
    }
  }
  return out;
}

int SibGraph::index_of(const PetersonElt& x) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), x);
  if (it == vertices.end() || !(*it == x)) return -1;
  return static_cast<int>(it - vertices.begin());
}

bool is_sib_edge(const PetersonElt& x, const DagAffineRoot& beta, const Weight& lambda, const IndexSet& S,
                 const Rational& b) {
  CAffineElt ex = x.element();
  CAffineElt y = CAffineElt::reflection(beta) * ex;
  if (!in_peterson(y, S)) return false;
  if (si_length(y) != si_length(ex) + 1) return false;
  return is_integer(b * sib_pairing(ex, lambda, beta));
}

namespace {

std::vector<Coweight> box_points(int n, int R) {
  std::vector<Coweight> out;
  Coweight mu(n, -R);
  while (true) {
    out.push_back(mu);
    int k = 0;
    while (k < n && mu[k] == R) mu[k++] = -R;
    if (k == n) break;
    ++mu[k];
  }
  return out;
}

}  // namespace

SibGraph sib_edges(const Weight& lambda, const Rational& b, int box_radius) {
  if (box_radius < 1) throw std::invalid_argument("box radius must be at least 1");
  if (b < 0 || b > 1) throw std::invalid_argument("b must lie in [0,1]");
  int n = lambda.rank();
  SibGraph g;
  g.lambda = lambda;
  g.S = RootSystem(n).stabilizer(lambda);
  g.b = b;
  g.box_radius = box_radius;
  ParabolicData par(n, g.S);
  for (const auto& mu : box_points(n, box_radius)) {
    if (!is_s_adjusted(mu, g.S)) continue;
    WeylElt z = z_of_adjusted(mu, g.S);
    for (const auto& w : par.min_reps()) g.vertices.push_back(PetersonElt{w, z, mu});
  }
  std::sort(g.vertices.begin(), g.vertices.end());
  auto betas = positive_dag_roots(n, box_radius + 1);
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    const PetersonElt& x = g.vertices[v];
    for (const auto& beta : betas) {
      if (!is_sib_edge(x, beta, lambda, g.S, b)) continue;
      PetersonElt y = decompose_peterson(CAffineElt::reflection(beta) * x.element(), g.S);
      int t = max_abs(y.mu) <= box_radius ? g.index_of(y) : -1;
      if (t < 0) ++g.boundary_edges;
      g.edges.push_back(SibEdge{v, t, y, beta});
    }
  }
  return g;
}

std::string to_string(const SilsPath& pi) {
  std::string s = "(";
  for (size_t k = 0; k < pi.states.size(); ++k) {
    if (k) s += ", ";
    s += to_string(pi.states[k]);
  }
  s += "; ";
  for (size_t k = 0; k < pi.times.size(); ++k) {
    if (k) s += ", ";
    s += to_string(pi.times[k]);
  }
  return s + ")";
}

QlsPath cl_project(const SilsPath& pi) {
  QlsPath eta;
  for (const auto& x : pi.states) eta.dirs.push_back(x.w);
  eta.times = pi.times;
  return eta;
}

Lift lift(const QlsModel& qls, const QlsPath& eta, int box_radius) {
  if (qls.variant() != Variant::TwistedA2n2) throw std::invalid_argument("lift is defined for the C-type model");
  if (!qls.is_valid(eta)) throw std::invalid_argument("not a QLS path: " + to_string(eta));
  int n = qls.rank();
  const IndexSet& S = qls.S();
  const QbgGraph& g = qls.graph();
  int s = eta.segments();
  Lift out;
  out.path.times = eta.times;
  out.path.states.resize(s);
  out.path.states[s - 1] = peterson_elt(eta.dirs[s - 1], Coweight(n, 0), S);
  for (int i = s - 1; i >= 1; --i) {
    const Rational& b = eta.times[i];
    auto path = filtered_path(g, g.index_of(eta.dirs[i]), g.index_of(eta.dirs[i - 1]), qls.filter(b));
    if (!path) throw std::logic_error("no junction path in the filtered graph for " + to_string(eta));
    PetersonElt x = out.path.states[i];
    for (const auto& e : *path) {
      auto alpha = cn_root_of_b(e.label);
      auto gamma = x.w.act(alpha);
      DagAffineRoot beta{gamma, 0, DagKind::Standard};
      if (e.kind == EdgeKind::Quantum) beta = is_cn_long(alpha) ? DagAffineRoot{gamma, 1, DagKind::Half}
                                                                  : DagAffineRoot{gamma, 1, DagKind::Standard};
      if (!is_sib_edge(x, beta, qls.lambda(), S, b)) {
        throw std::logic_error("lifted label " + to_string(beta) + " is not an edge at " + to_string(x));
      }
      PetersonElt y = decompose_peterson(CAffineElt::reflection(beta) * x.element(), S);
      if (!(y.w == e.target_elt)) throw std::logic_error("lifted edge does not project onto its QBG edge");
      if (max_abs(y.mu) > box_radius) {
        throw std::out_of_range("lift leaves the translation box of radius " + std::to_string(box_radius));
      }
      out.steps.push_back(LiftStep{i, e.kind, e.label, beta});
      x = y;
    }
    out.path.states[i - 1] = x;
  }
  return out;
}

bool is_sils_path(const Weight& lambda, const SilsPath& pi, int box_radius) {
  int s = static_cast<int>(pi.states.size());
  if (s == 0 || static_cast<int>(pi.times.size()) != s + 1) return false;
  if (pi.times.front() != 0 || pi.times.back() != 1) return false;
  int n = lambda.rank();
  IndexSet S = RootSystem(n).stabilizer(lambda);
  for (int k = 0; k < s; ++k) {
    if (!(pi.times[k] < pi.times[k + 1])) return false;
    if (!in_peterson(pi.states[k].element(), S)) return false;
  }
  auto betas = positive_dag_roots(n, box_radius + 1);
  for (int i = 1; i < s; ++i) {
    const PetersonElt& from = pi.states[i];
    const PetersonElt& to = pi.states[i - 1];
    std::set<PetersonElt> seen{from};
    std::deque<PetersonElt> queue{from};
    bool found = false;
    while (!queue.empty() && !found) {
      PetersonElt x = queue.front();
      queue.pop_front();
      if (x == to) {
        found = true;
        break;
      }
      for (const auto& beta : betas) {
        if (!is_sib_edge(x, beta, lambda, S, pi.times[i])) continue;
        PetersonElt y = decompose_peterson(CAffineElt::reflection(beta) * x.element(), S);
        if (max_abs(y.mu) > box_radius || seen.count(y)) continue;
        seen.insert(y);
        queue.push_back(y);
      }
    }
    if (!found) return false;
  }
  return true;
}

std::string to_dot(const SibGraph& g) {
  std::ostringstream os;
  os << "digraph sib {\n";
  std::map<long long, std::vector<int>> ranks;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    os << "  x" << v << " [label=\"" << to_string(g.vertices[v]) << "\"];\n";
    ranks[si_length(g.vertices[v])].push_back(static_cast<int>(v));
  }
  for (const auto& [len, ids] : ranks) {
    os << "  { rank=same; // l=" << len << "\n   ";
    for (int v : ids) os << " x" << v << ";";
    os << " }\n";
  }
  for (const auto& e : g.edges) {
    if (e.target < 0) continue;
    os << "  x" << e.source << " -> x" << e.target << " [label=\"" << to_string(e.label) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qlsc

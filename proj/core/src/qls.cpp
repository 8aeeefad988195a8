#include "qlsc/qls.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace qlsc {

bool operator<(const QlsPath& a, const QlsPath& b) {
  if (a.dirs != b.dirs) return a.dirs < b.dirs;
  return std::lexicographical_compare(a.times.begin(), a.times.end(), b.times.begin(), b.times.end());
}

Weight PlcPath::endpoint() const {
  Weight p(dirs.empty() ? 0 : dirs.front().rank());
  for (size_t k = 0; k < dirs.size(); ++k) p += (times[k + 1] - times[k]) * dirs[k];
  return p;
}

PlcPath PlcPath::normalized() const {
  PlcPath out;
  out.times.push_back(times.front());
  for (size_t k = 0; k < dirs.size(); ++k) {
    if (times[k + 1] == times[k]) continue;
    if (!out.dirs.empty() && out.dirs.back() == dirs[k]) {
      out.times.back() = times[k + 1];
    } else {
      out.dirs.push_back(dirs[k]);
      out.times.push_back(times[k + 1]);
    }
  }
  return out;
}

namespace {

IndexSet validated_stabilizer(const Weight& lambda, Variant variant) {
  if (!lambda.is_dominant()) throw std::invalid_argument("weight " + to_string(lambda) + " is not dominant");
  if (!lambda.in_weight_lattice()) throw std::invalid_argument("weight " + to_string(lambda) + " is not integral");
  if (variant == Variant::TwistedA2n2 && !lambda.is_integral()) {
    throw std::invalid_argument("weight " + to_string(lambda) + " is not in the root lattice");
  }
  return RootSystem(lambda.rank()).stabilizer(lambda);
}

}  // namespace

QlsModel::QlsModel(Weight lambda, Variant variant)
    : lambda_(std::move(lambda)), variant_(variant), graph_(lambda_.rank(), validated_stabilizer(lambda_, variant)) {
  std::set<Rational> times;
  for (const auto& beta : root_system().positive_roots()) {
    if (root_system().in_S_span(beta, S())) continue;
    Rational p = pairing(lambda_, beta);
    for (Rational d : {p, 2 * p}) {
      if (d <= 0 || !is_integer(d)) continue;
      for (long long k = 1; k < d.numerator(); ++k) times.insert(Rational(k, d.numerator()));
    }
  }
  candidate_times_.assign(times.begin(), times.end());
  for (const auto& b : candidate_times_) reach_.push_back(filtered_reachability(graph_, filter(b)));
}

int QlsModel::reach_index(const Rational& b) const {
  auto it = std::lower_bound(candidate_times_.begin(), candidate_times_.end(), b);
  if (it == candidate_times_.end() || *it != b) return -1;
  return static_cast<int>(it - candidate_times_.begin());
}

bool QlsModel::reachable(const WeylElt& from, const WeylElt& to, const Rational& b) const {
  int u = graph_.index_of(from), v = graph_.index_of(to);
  if (u < 0 || v < 0) return false;
  int k = reach_index(b);
  if (k >= 0) return reach_[k][u][v];
  return filtered_path(graph_, u, v, filter(b)).has_value();
}

bool QlsModel::is_valid(const QlsPath& eta) const {
  int s = eta.segments();
  if (s == 0 || static_cast<int>(eta.times.size()) != s + 1) return false;
  if (eta.times.front() != 0 || eta.times.back() != 1) return false;
  for (int k = 0; k < s; ++k) {
    if (!(eta.times[k] < eta.times[k + 1])) return false;
    if (graph_.index_of(eta.dirs[k]) < 0) return false;
    if (k + 1 < s && eta.dirs[k] == eta.dirs[k + 1]) return false;
  }
  for (int i = 1; i < s; ++i) {
    if (!reachable(eta.dirs[i], eta.dirs[i - 1], eta.times[i])) return false;
  }
  return true;
}

bool QlsModel::check_c_prime(const QlsPath& eta) const {
  for (int i = 1; i < eta.segments(); ++i) {
    int u = graph_.index_of(eta.dirs[i]), v = graph_.index_of(eta.dirs[i - 1]);
    SubgraphFilter f = filter(eta.times[i]);
    std::function<bool(int)> dfs = [&](int a) -> bool {
      if (a == v) return true;
      for (const auto& e : graph_.out_edges(a)) {
        if (graph_.distance(e.target, v) != graph_.distance(a, v) - 1) continue;
        if (!edge_admitted(e, f)) continue;
        if (dfs(e.target)) return true;
      }
      return false;
    };
    if (!dfs(u)) return false;
  }
  return true;
}

std::vector<QlsPath> QlsModel::enumerate() const {
  std::vector<QlsPath> out;
  int N = graph_.size();
  int T = static_cast<int>(candidate_times_.size());
  QlsPath current;
  current.times.push_back(Rational(0));
  std::function<void(int, int)> extend = [&](int last_dir, int last_time) {
    current.times.push_back(Rational(1));
    out.push_back(current);
    current.times.pop_back();
    for (int t = last_time + 1; t < T; ++t) {
      for (int w = 0; w < N; ++w) {
        if (w == last_dir || !reach_[t][w][last_dir]) continue;
        current.dirs.push_back(graph_.vertex(w));
        current.times.push_back(candidate_times_[t]);
        extend(w, t);
        current.times.pop_back();
        current.dirs.pop_back();
      }
    }
  };
  for (int w = 0; w < N; ++w) {
    current.dirs.push_back(graph_.vertex(w));
    extend(w, -1);
    current.dirs.pop_back();
  }
  std::sort(out.begin(), out.end());
  return out;
}

Weight QlsModel::wt(const QlsPath& eta) const { return to_plc(eta).endpoint(); }

Rational QlsModel::deg(const QlsPath& eta, DegConvention convention) const {
  Rational total(0);
  for (int i = 1; i < eta.segments(); ++i) {
    int u = graph_.index_of(eta.dirs[i]), v = graph_.index_of(eta.dirs[i - 1]);
    Rational junction(0);
    if (convention == DegConvention::Plain) {
      junction = wt_lambda(graph_, u, v, lambda_);
    } else {
      for (const auto& e : shortest_path_data(graph_, u, v).path) {
        if (e.kind == EdgeKind::Quantum) junction += e.label.c() * pairing(lambda_, e.label);
      }
    }
    total += (1 - eta.times[i]) * junction;
  }
  return total;
}

GradedCharacter QlsModel::graded_character(const std::vector<QlsPath>& paths, DegConvention convention) const {
  GradedCharacter ch;
  for (const auto& eta : paths) ch.add_term(wt(eta), deg(eta, convention));
  return ch;
}

GradedCharacter QlsModel::graded_character(DegConvention convention) const {
  return graded_character(enumerate(), convention);
}

PlcPath QlsModel::to_plc(const QlsPath& eta) const {
  PlcPath pi;
  pi.times = eta.times;
  for (const auto& w : eta.dirs) pi.dirs.push_back(w.act(lambda_));
  return pi;
}

QlsPath QlsModel::from_plc(const PlcPath& pi) const {
  PlcPath norm = pi.normalized();
  QlsPath eta;
  eta.times = norm.times;
  for (const auto& d : norm.dirs) eta.dirs.push_back(orbit_rep_v(lambda_, d));
  return eta;
}

QlsPath QlsModel::straight_path(const WeylElt& w) const {
  return QlsPath{{graph_.parabolic().min_coset_rep(w)}, {Rational(0), Rational(1)}};
}

std::string to_string(const QlsPath& eta) {
  std::string s = "(";
  for (int k = 0; k < eta.segments(); ++k) {
    if (k) s += ", ";
    s += to_string(eta.dirs[k]);
  }
  s += "; ";
  for (size_t k = 0; k < eta.times.size(); ++k) {
    if (k) s += ", ";
    s += to_string(eta.times[k]);
  }
  return s + ")";
}

std::string to_json(const QlsPath& eta) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json dirs = nlohmann::ordered_json::array();
  for (const auto& w : eta.dirs) dirs.push_back(w.window_vector());
  nlohmann::ordered_json times = nlohmann::ordered_json::array();
  for (const auto& t : eta.times) times.push_back(to_string(t));
  doc["dirs"] = std::move(dirs);
  doc["times"] = std::move(times);
  return doc.dump();
}

QlsPath qls_path_from_json(const std::string& text) {
  auto doc = nlohmann::json::parse(text);
  QlsPath eta;
  for (const auto& d : doc.at("dirs")) eta.dirs.push_back(WeylElt::from_window(d.get<std::vector<int>>()));
  for (const auto& t : doc.at("times")) eta.times.push_back(parse_rational(t.get<std::string>()));
  return eta;
}

}  // namespace qlsc

#include "qlsc/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace qlsc {

Weight Weight::from_ints(const std::vector<long long>& v) {
  std::vector<Rational> c;
  c.reserve(v.size());
  for (long long x : v) c.emplace_back(x);
  return Weight(std::move(c));
}

Weight& Weight::operator+=(const Weight& o) {
  for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Weight operator-(Weight a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

Weight operator*(const Rational& s, Weight a) {
  for (auto& c : a.coords_) c *= s;
  return a;
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r == 0; });
}

bool Weight::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return is_integer(r); });
}

bool Weight::in_weight_lattice() const {
  if (is_integral()) return true;
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& r) { return r.denominator() == 2; });
}

bool Weight::is_dominant() const {
  for (size_t i = 0; i + 1 < coords_.size(); ++i) {
    if (coords_[i] < coords_[i + 1]) return false;
  }
  return coords_.empty() || coords_.back() >= 0;
}

std::vector<long long> Weight::to_ints() const {
  std::vector<long long> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) {
    if (!is_integer(c)) throw std::logic_error("weight " + to_string(*this) + " is not integral");
    out.push_back(c.numerator());
  }
  return out;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  size_t m = std::min(a.coords_.size(), b.coords_.size());
  for (size_t i = 0; i < m; ++i) {
    auto c = compare(a.coords_[i], b.coords_[i]);
    if (c != 0) return c;
  }
  return a.coords_.size() <=> b.coords_.size();
}

Rational dot(const Weight& a, const Weight& b) {
  Rational s(0);
  for (int i = 0; i < a.rank(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const Weight& w) {
  std::string s = "[";
  for (int i = 0; i < w.rank(); ++i) {
    if (i) s += ",";
    s += to_string(w[i]);
  }
  return s + "]";
}

int Root::support_size() const {
  return static_cast<int>(std::count_if(coords.begin(), coords.end(), [](int x) { return x != 0; }));
}

bool Root::is_positive() const {
  for (int x : coords) {
    if (x != 0) return x > 0;
  }
  return false;
}

Root Root::operator-() const {
  Root r = *this;
  for (auto& x : r.coords) x = -x;
  return r;
}

Weight Root::weight() const { return int_weight(coords); }

std::vector<int> Root::coroot() const {
  std::vector<int> c = coords;
  if (is_short()) {
    for (auto& x : c) x *= 2;
  }
  return c;
}

Weight int_weight(const std::vector<int>& v) {
  return Weight(std::vector<Rational>(v.begin(), v.end()));
}

Coroot coroot_of(const Root& r) { return Coroot{r.coroot()}; }

Rational pairing(const Weight& x, const Coroot& c) {
  Rational s(0);
  for (int i = 0; i < x.rank(); ++i) s += x[i] * c.coords[i];
  return s;
}

Rational pairing(const Weight& x, const Root& beta) {
  Rational s(0);
  int k = beta.is_short() ? 2 : 1;
  for (int i = 0; i < x.rank(); ++i) s += x[i] * (k * beta.coords[i]);
  return s;
}

int pairing(const Root& a, const Root& beta) {
  int s = 0;
  int k = beta.is_short() ? 2 : 1;
  for (int i = 0; i < a.rank(); ++i) s += a.coords[i] * beta.coords[i] * k;
  return s;
}

namespace {

std::string int_vector_string(const std::vector<int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

int height(const Root& r) {
  int h = 0;
  int partial = 0;
  for (int x : r.coords) {
    partial += x;
    h += partial;
  }
  return h;
}

}  // namespace

std::string to_string(const Root& r) { return int_vector_string(r.coords); }
std::string to_string(const Coroot& c) { return int_vector_string(c.coords); }

Weight reflect(const Weight& x, const Root& beta) {
  return x - pairing(x, beta) * beta.weight();
}

Root reflect(const Root& x, const Root& beta) {
  int p = pairing(x, beta);
  Root r = x;
  for (int i = 0; i < r.rank(); ++i) r.coords[i] -= p * beta.coords[i];
  return r;
}

RootSystem::RootSystem(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  for (int i = 0; i < n; ++i) {
    for (int s : {1, -1}) {
      Root r{std::vector<int>(n, 0)};
      r.coords[i] = s;
      roots_.push_back(r);
    }
    for (int j = i + 1; j < n; ++j) {
      for (int s : {1, -1}) {
        for (int t : {1, -1}) {
          Root r{std::vector<int>(n, 0)};
          r.coords[i] = s;
          r.coords[j] = t;
          roots_.push_back(r);
        }
      }
    }
  }
  for (const auto& r : roots_) {
    if (r.is_positive()) positive_.push_back(r);
  }
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a.coords > b.coords;
  });
  std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
    bool pa = a.is_positive(), pb = b.is_positive();
    if (pa != pb) return pa;
    int ha = height(a), hb = height(b);
    if (ha != hb) return pa ? ha < hb : ha > hb;
    return a.coords > b.coords;
  });
  for (int i = 1; i <= n; ++i) {
    Root r{std::vector<int>(n, 0)};
    r.coords[i - 1] = 1;
    if (i < n) r.coords[i] = -1;
    simple_.push_back(r);
  }
  theta_ = Root{std::vector<int>(n, 0)};
  theta_.coords[0] = 1;
}

Root RootSystem::affine_simple_bar(int i) const {
  if (i == 0) return -theta_;
  return simple_root(i);
}

Weight RootSystem::rho() const {
  Weight s(n_);
  for (const auto& r : positive_) s += r.weight();
  return Rational(1, 2) * s;
}

Weight RootSystem::rho_vee() const {
  Weight s(n_);
  for (const auto& r : positive_) s += int_weight(r.coroot());
  return Rational(1, 2) * s;
}

Weight RootSystem::rho_vee_S(const IndexSet& S) const {
  Weight s(n_);
  for (const auto& r : positive_roots_S(S)) s += int_weight(r.coroot());
  return Rational(1, 2) * s;
}

Weight RootSystem::fundamental_weight(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("fundamental weight index");
  Weight w(n_);
  Rational v = (i == n_) ? Rational(1, 2) : Rational(1);
  for (int k = 0; k < i; ++k) w[k] = v;
  return w;
}

bool RootSystem::in_S_span(const Root& r, const IndexSet& S) const {
  // Coefficient of α_k in r is the partial sum x_1 + ... + x_k.
  int partial = 0;
  for (int k = 1; k <= n_; ++k) {
    partial += r.coords[k - 1];
    if (partial != 0 && !S.count(k)) return false;
  }
  return true;
}

std::vector<Root> RootSystem::positive_roots_S(const IndexSet& S) const {
  std::vector<Root> out;
  for (const auto& r : positive_) {
    if (in_S_span(r, S)) out.push_back(r);
  }
  return out;
}

int RootSystem::positive_index(const Root& r) const {
  for (size_t i = 0; i < positive_.size(); ++i) {
    if (positive_[i] == r) return static_cast<int>(i);
  }
  return -1;
}

IndexSet RootSystem::stabilizer(const Weight& lambda) const {
  IndexSet S;
  for (int i = 1; i <= n_; ++i) {
    if (pairing(lambda, simple_root(i)) == 0) S.insert(i);
  }
  return S;
}

CnWeight iota_star_inverse(const Weight& lambda) {
  if (!lambda.is_integral()) {
    throw std::invalid_argument("weight " + to_string(lambda) + " is not in the root lattice");
  }
  CnWeight out;
  out.coords = lambda.to_ints();
  int n = lambda.rank();
  for (int i = 1; i <= n; ++i) {
    auto cv = cn_simple_coroot(n, i);
    long long s = 0;
    for (int k = 0; k < n; ++k) s += out.coords[k] * cv[k];
    out.fundamental_coords.push_back(s);
  }
  return out;
}

Weight iota_star(const CnWeight& lambda) { return Weight::from_ints(lambda.coords); }

std::vector<int> cn_simple_root(int n, int i) {
  std::vector<int> v(n, 0);
  if (i < n) {
    v[i - 1] = 1;
    v[i] = -1;
  } else {
    v[n - 1] = 2;
  }
  return v;
}

std::vector<int> cn_coroot(const std::vector<int>& cn_root) {
  std::vector<int> v = cn_root;
  int support = 0;
  for (int x : v) support += x != 0;
  if (support == 1) {
    for (auto& x : v) x /= 2;
  }
  return v;
}

std::vector<int> cn_simple_coroot(int n, int i) { return cn_coroot(cn_simple_root(n, i)); }

std::vector<int> iota_star_root(const std::vector<int>& cn_root) { return cn_root; }

std::vector<Rational> iota_coroot(const std::vector<int>& cn_coroot_vec) {
  return std::vector<Rational>(cn_coroot_vec.begin(), cn_coroot_vec.end());
}

Root b_root_of_cn(const std::vector<int>& cn_root) {
  Root r{cn_root};
  if (r.support_size() == 1) {
    for (auto& x : r.coords) x /= 2;
  }
  return r;
}

std::vector<int> cn_root_of_b(const Root& b_root) {
  std::vector<int> v = b_root.coords;
  if (b_root.is_short()) {
    for (auto& x : v) x *= 2;
  }
  return v;
}

}  // namespace qlsc

#include "qlsc/affine.hpp"

#include <algorithm>
#include <stdexcept>

namespace qlsc {

std::string to_string(const AffineRoot& beta) {
  return to_string(beta.finite) + (beta.dg >= 0 ? "+" : "") + std::to_string(beta.dg) + "d";
}

AffineWeylElt AffineWeylElt::identity(int n) {
  return AffineWeylElt(std::vector<long long>(n, 0), WeylElt::identity(n));
}

AffineWeylElt AffineWeylElt::translation(const std::vector<long long>& x) {
  return AffineWeylElt(x, WeylElt::identity(static_cast<int>(x.size())));
}

AffineWeylElt AffineWeylElt::finite(const WeylElt& w) {
  return AffineWeylElt(std::vector<long long>(w.rank(), 0), w);
}

AffineWeylElt AffineWeylElt::simple(int n, int i) {
  if (i == 0) {
    std::vector<long long> theta(n, 0);
    theta[0] = 1;
    Root th{std::vector<int>(n, 0)};
    th.coords[0] = 1;
    return AffineWeylElt(theta, WeylElt::reflection(th));
  }
  return finite(WeylElt::simple(n, i));
}

namespace {

std::vector<long long> act_ll(const WeylElt& w, const std::vector<long long>& x) {
  std::vector<long long> y(x.size(), 0);
  for (int i = 0; i < w.rank(); ++i) {
    int v = w.window(i);
    y[std::abs(v) - 1] = (v < 0 ? -1 : 1) * x[i];
  }
  return y;
}

long long twice_dot(const std::vector<long long>& x, const Root& r) {
  long long s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * r.coords[i];
  return 2 * s;
}

}  // namespace

AffineWeylElt AffineWeylElt::operator*(const AffineWeylElt& o) const {
  std::vector<long long> t = act_ll(fin_, o.trans_);
  for (size_t i = 0; i < t.size(); ++i) t[i] += trans_[i];
  return AffineWeylElt(std::move(t), fin_ * o.fin_);
}

AffineWeylElt AffineWeylElt::inverse() const {
  WeylElt winv = fin_.inverse();
  std::vector<long long> t = act_ll(winv, trans_);
  for (auto& x : t) x = -x;
  return AffineWeylElt(std::move(t), winv);
}

AffineRoot AffineWeylElt::act(const AffineRoot& beta) const {
  Root r = fin_.act(beta.finite);
  return AffineRoot{r, beta.dg - twice_dot(trans_, r)};
}

int AffineWeylElt::length() const {
  RootSystem rs(rank());
  int len = 0;
  for (const auto& alpha : rs.roots()) {
    Root wa = fin_.act(alpha);
    long long D = twice_dot(trans_, wa);
    int c = alpha.c();
    long long top = std::max<long long>(0, D / c) + 1;
    for (long long a = 0; a <= top; ++a) {
      if (a == 0 && !alpha.is_positive()) continue;
      long long dg = c * a - D;
      if (dg < 0 || (dg == 0 && !wa.is_positive())) ++len;
    }
  }
  return len;
}

AffineRoot affine_simple_root(int n, int i) {
  RootSystem rs(n);
  if (i == 0) return AffineRoot{-rs.theta(), 1};
  return AffineRoot{rs.simple_root(i), 0};
}

bool AffineWeylElt::has_right_descent(int i) const { return !act(affine_simple_root(rank(), i)).is_positive(); }

std::string to_string(const AffineWeylElt& u) {
  std::string s = "t([";
  for (size_t i = 0; i < u.wt().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(u.wt()[i]);
  }
  return s + "])" + window_string(u.dir());
}

AffineWeylElt affine_reflection(const AffineRoot& beta) {
  if (!beta.is_valid()) throw std::invalid_argument("not an affine root: " + to_string(beta));
  long long k = beta.dg / beta.finite.c();
  std::vector<long long> t(beta.finite.rank());
  for (size_t i = 0; i < t.size(); ++i) t[i] = -k * beta.finite.coords[i];
  return AffineWeylElt(std::move(t), WeylElt::reflection(beta.finite));
}

AffineWeylElt m_mu(const Weight& mu) {
  auto x = mu.to_ints();
  AffineWeylElt tmu = AffineWeylElt::translation(x);
  AffineWeylElt best;
  int best_len = -1;
  for (const auto& w : all_elements(mu.rank())) {
    AffineWeylElt u = tmu * AffineWeylElt::finite(w);
    int len = u.length();
    if (best_len < 0 || len < best_len) {
      best = u;
      best_len = len;
    }
  }
  return best;
}

std::vector<int> affine_reduced_word(const AffineWeylElt& u) {
  std::vector<int> word;
  AffineWeylElt x = u;
  int n = u.rank();
  int len = x.length();
  while (len > 0) {
    bool found = false;
    for (int i = 0; i <= n && !found; ++i) {
      if (x.has_right_descent(i)) {
        word.push_back(i);
        x = x * AffineWeylElt::simple(n, i);
        found = true;
      }
    }
    if (!found) throw std::logic_error("no right descent for a nontrivial element");
    --len;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

AffineWeylElt affine_from_word(int n, const std::vector<int>& word) {
  AffineWeylElt x = AffineWeylElt::identity(n);
  for (int i : word) x = x * AffineWeylElt::simple(n, i);
  return x;
}

std::vector<AffineRoot> alcove_betas(int n, const std::vector<int>& word) {
  int L = static_cast<int>(word.size());
  std::vector<AffineRoot> betas(L);
  AffineWeylElt x = AffineWeylElt::identity(n);
  for (int k = L - 1; k >= 0; --k) {
    betas[k] = x.act(affine_simple_root(n, word[k]));
    x = x * AffineWeylElt::simple(n, word[k]);
  }
  return betas;
}

}  // namespace qlsc

#include "qlsc/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace qlsc {

namespace {

int sgn(int x) { return x < 0 ? -1 : 1; }

}  // namespace

WeylElt WeylElt::identity(int n) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("unsupported rank");
  WeylElt w;
  w.n_ = n;
  for (int i = 0; i < n; ++i) w.win_[i] = static_cast<std::int8_t>(i + 1);
  w.length_ = 0;
  return w;
}

WeylElt WeylElt::simple(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("simple reflection index");
  WeylElt w = identity(n);
  if (i < n) {
    std::swap(w.win_[i - 1], w.win_[i]);
  } else {
    w.win_[n - 1] = static_cast<std::int8_t>(-w.win_[n - 1]);
  }
  w.length_ = 1;
  return w;
}

WeylElt WeylElt::longest(int n) {
  WeylElt w = identity(n);
  for (int i = 0; i < n; ++i) w.win_[i] = static_cast<std::int8_t>(-(i + 1));
  w.length_ = n * n;
  return w;
}

WeylElt WeylElt::from_window(const std::vector<int>& window) {
  int n = static_cast<int>(window.size());
  WeylElt w = identity(n);
  std::vector<bool> seen(n + 1, false);
  for (int i = 0; i < n; ++i) {
    int a = std::abs(window[i]);
    if (a < 1 || a > n || seen[a]) throw std::invalid_argument("not a signed permutation");
    seen[a] = true;
    w.win_[i] = static_cast<std::int8_t>(window[i]);
  }
  w.recompute_length();
  return w;
}

WeylElt WeylElt::from_word(int n, const std::vector<int>& word) {
  WeylElt w = identity(n);
  for (int i : word) w = w * simple(n, i);
  return w;
}

WeylElt WeylElt::reflection(const Root& beta) {
  int n = beta.rank();
  std::vector<int> window(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    Root image = reflect(Root{e}, beta);
    for (int p = 0; p < n; ++p) {
      if (image.coords[p] != 0) window[i] = image.coords[p] * (p + 1);
    }
  }
  return from_window(window);
}

std::vector<int> WeylElt::window_vector() const {
  return std::vector<int>(win_.begin(), win_.begin() + n_);
}

void WeylElt::recompute_length() {
  int len = 0;
  for (int i = 0; i < n_; ++i) {
    int si = sgn(win_[i]), pi = std::abs(win_[i]);
    if (si < 0) ++len;
    for (int j = i + 1; j < n_; ++j) {
      int sj = sgn(win_[j]), pj = std::abs(win_[j]);
      if (pi < pj) {
        if (si < 0) len += 2;  // both e_i − e_j and e_i + e_j
      } else {
        if (sj > 0) ++len;  // e_i − e_j
        if (sj < 0) ++len;  // e_i + e_j
      }
    }
  }
  length_ = len;
}

WeylElt WeylElt::operator*(const WeylElt& o) const {
  WeylElt r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) {
    int v = o.win_[i];
    r.win_[i] = static_cast<std::int8_t>(sgn(v) * win_[std::abs(v) - 1]);
  }
  r.recompute_length();
  return r;
}

WeylElt WeylElt::inverse() const {
  WeylElt r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) {
    int v = win_[i];
    r.win_[std::abs(v) - 1] = static_cast<std::int8_t>(sgn(v) * (i + 1));
  }
  r.length_ = length_;
  return r;
}

std::vector<int> WeylElt::act(const std::vector<int>& x) const {
  std::vector<int> y(n_, 0);
  for (int i = 0; i < n_; ++i) y[std::abs(win_[i]) - 1] = sgn(win_[i]) * x[i];
  return y;
}

Weight WeylElt::act(const Weight& x) const {
  Weight y(n_);
  for (int i = 0; i < n_; ++i) y[std::abs(win_[i]) - 1] = sgn(win_[i]) * x[i];
  return y;
}

Root WeylElt::act(const Root& r) const { return Root{act(r.coords)}; }

bool WeylElt::has_right_descent(int i) const {
  if (i == n_) return win_[n_ - 1] < 0;
  int a = win_[i - 1], b = win_[i];
  // w(e_i − e_{i+1}) = sgn(a) e_|a| − sgn(b) e_|b|
  return std::abs(a) < std::abs(b) ? a < 0 : b > 0;
}

bool WeylElt::has_left_descent(int i) const { return inverse().has_right_descent(i); }

std::strong_ordering operator<=>(const WeylElt& a, const WeylElt& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (int i = 0; i < a.n_; ++i) {
    if (auto c = a.win_[i] <=> b.win_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::vector<int> reduced_word(const WeylElt& w) {
  std::vector<int> word;
  WeylElt x = w;
  int n = w.rank();
  while (x.length() > 0) {
    for (int i = 1; i <= n; ++i) {
      if (x.has_right_descent(i)) {
        word.push_back(i);
        x = x * WeylElt::simple(n, i);
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string word_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (size_t k = 0; k < word.size(); ++k) {
    if (k) s += ".";
    s += "s" + std::to_string(word[k]);
  }
  return s;
}

std::string window_string(const WeylElt& w) {
  std::string s = "[";
  for (int i = 0; i < w.rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.window(i));
  }
  return s + "]";
}

std::string to_string(const WeylElt& w) { return word_string(reduced_word(w)); }

std::vector<WeylElt> all_elements(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<WeylElt> out;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> window(perm);
      for (int i = 0; i < n; ++i) {
        if (mask & (1 << i)) window[i] = -window[i];
      }
      out.push_back(WeylElt::from_window(window));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end(), [](const WeylElt& a, const WeylElt& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  });
  return out;
}

WeylElt min_coset_rep(const WeylElt& w, const IndexSet& S) {
  WeylElt x = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : S) {
      if (x.has_right_descent(i)) {
        x = x * WeylElt::simple(x.rank(), i);
        changed = true;
      }
    }
  }
  return x;
}

ParabolicData::ParabolicData(int n, IndexSet S) : n_(n), S_(std::move(S)) {
  std::vector<WeylElt> frontier{WeylElt::identity(n)};
  W_S_ = frontier;
  while (!frontier.empty()) {
    std::vector<WeylElt> next;
    for (const auto& w : frontier) {
      for (int i : S_) {
        WeylElt x = w * WeylElt::simple(n, i);
        if (std::find(W_S_.begin(), W_S_.end(), x) == W_S_.end()) {
          W_S_.push_back(x);
          next.push_back(x);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(W_S_.begin(), W_S_.end(), [](const WeylElt& a, const WeylElt& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  });
  longest_S_ = W_S_.back();
  for (const auto& w : all_elements(n)) {
    if (is_min_rep(w)) W_to_S_.push_back(w);
  }
}

WeylElt ParabolicData::min_coset_rep(const WeylElt& w) const { return qlsc::min_coset_rep(w, S_); }

bool ParabolicData::is_min_rep(const WeylElt& w) const {
  for (int i : S_) {
    if (w.has_right_descent(i)) return false;
  }
  return true;
}

bool ParabolicData::in_subgroup(const WeylElt& w) const {
  return std::find(W_S_.begin(), W_S_.end(), w) != W_S_.end();
}

WeylElt orbit_rep_v(const Weight& lambda, const Weight& mu) {
  int n = lambda.rank();
  if (!lambda.is_dominant()) throw std::invalid_argument("weight " + to_string(lambda) + " is not dominant");
  if (mu.rank() != n) throw std::invalid_argument("rank mismatch");
  std::vector<int> window(n, 0);
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    bool found = false;
    for (int p = 0; p < n && !found; ++p) {
      if (used[p]) continue;
      if (mu[p] == lambda[i] || mu[p] == -lambda[i]) {
        used[p] = true;
        window[i] = (mu[p] < 0 ? -1 : 1) * (p + 1);
        found = true;
      }
    }
    if (!found) {
      throw std::invalid_argument("weight " + to_string(mu) + " is not in the orbit of " + to_string(lambda));
    }
  }
  RootSystem rs(n);
  return min_coset_rep(WeylElt::from_window(window), rs.stabilizer(lambda));
}

std::vector<Weight> weyl_orbit(const Weight& lambda) {
  std::vector<Weight> out;
  for (const auto& w : all_elements(lambda.rank())) out.push_back(w.act(lambda));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool bruhat_le(const WeylElt& u, const WeylElt& v) {
  if (u.length() > v.length()) return false;
  if (v.length() == 0) return u.length() == 0;
  int n = v.rank();
  for (int i = 1; i <= n; ++i) {
    if (v.has_right_descent(i)) {
      WeylElt s = WeylElt::simple(n, i);
      if (u.has_right_descent(i)) return bruhat_le(u * s, v * s);
      return bruhat_le(u, v * s);
    }
  }
  return false;
}

}  // namespace qlsc

#include "qlsc/macdonald.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qlsc {

long long AlcovePath::qwt_dg() const {
  long long s = 0;
  for (size_t k = 0; k < labels.size(); ++k) {
    if (quantum[k]) s += labels[k].dg;
  }
  return s;
}

namespace {

Weight validated_root_lattice_dominant(Weight lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("weight " + to_string(lambda) + " is not dominant");
  if (!lambda.is_integral()) throw std::invalid_argument("weight " + to_string(lambda) + " is not in the root lattice");
  return lambda;
}

int simple_index(const AffineRoot& a, int n) {
  for (int i = 0; i <= n; ++i) {
    if (affine_simple_root(n, i) == a) return i;
  }
  return -1;
}

}  // namespace

std::vector<AffineRoot> sorted_inversion_set(const Weight& lambda, const ReflectionOrder& order) {
  Weight lm = -lambda;
  RootSystem rs(lambda.rank());
  std::vector<AffineRoot> out;
  for (const auto& alpha : rs.roots()) {
    if (alpha.is_positive()) continue;
    long long p = pairing(lm, alpha).numerator();
    for (long long a = 1; a <= p; ++a) out.push_back(AffineRoot{alpha, a * alpha.c()});
  }
  auto d_of = [&](const AffineRoot& b) {
    long long p = pairing(lm, b.finite).numerator();
    long long cp = b.finite.c() * p;
    return Rational(cp - b.dg, cp);
  };
  std::sort(out.begin(), out.end(), [&](const AffineRoot& x, const AffineRoot& y) {
    Rational dx = d_of(x), dy = d_of(y);
    if (dx != dy) return dx < dy;
    return order.position(-x.finite) < order.position(-y.finite);
  });
  return out;
}

std::vector<AffineRoot> inversion_set_by_window(const Weight& lambda_minus) {
  int n = lambda_minus.rank();
  AffineWeylElt t = AffineWeylElt::translation(lambda_minus.to_ints());
  long long bound = 2;
  for (const auto& r : lambda_minus.coords()) bound += 4 * std::abs(r.numerator());
  RootSystem rs(n);
  std::vector<AffineRoot> out;
  for (const auto& alpha : rs.roots()) {
    for (long long a = -bound; a <= bound; ++a) {
      AffineRoot beta{alpha, a * alpha.c()};
      if (beta.is_positive() && !t.act(beta).is_positive()) out.push_back(beta);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

AlcoveModel::AlcoveModel(Weight lambda)
    : lambda_(validated_root_lattice_dominant(std::move(lambda))),
      lambda_minus_(-lambda_),
      S_(RootSystem(lambda_.rank()).stabilizer(lambda_)),
      order_(lambda_.rank(), S_),
      full_(lambda_.rank(), IndexSet{}) {
  int n = rank();
  inversions_ = sorted_inversion_set(lambda_, order_);
  for (const auto& b : inversions_) d_.push_back(d_value(b));
  M_ = static_cast<int>(std::count(d_.begin(), d_.end(), Rational(0)));
  int L = static_cast<int>(inversions_.size());
  word_.assign(L, -1);
  AffineWeylElt x = AffineWeylElt::identity(n);
  for (int k = L - 1; k >= 0; --k) {
    int i = simple_index(x.act(inversions_[k]), n);
    if (i < 0) throw std::logic_error("sorted inversion set does not come from a reduced word");
    word_[k] = i;
    x = AffineWeylElt::simple(n, i) * x;
  }
  if (!(x == AffineWeylElt::translation(lambda_minus_.to_ints()))) {
    throw std::logic_error("word of the sorted inversion set does not multiply to t(λ_-)");
  }
}

Rational AlcoveModel::d_value(const AffineRoot& beta) const {
  long long p = pairing(lambda_minus_, beta.finite).numerator();
  long long cp = beta.finite.c() * p;
  return Rational(cp - beta.dg, cp);
}

std::vector<int> AlcoveModel::reduced_word_m_mu(const Weight& mu) const {
  if (mu == lambda_minus_) return word_;
  orbit_rep_v(lambda_, mu);  // validates μ ∈ Wλ
  return affine_reduced_word(m_mu(mu));
}

namespace {

// Step z → z·s_β along the quantum Bruhat graph; nullopt if the step is not admissible.
std::optional<bool> alcove_step(const QbgGraph& full, const AffineWeylElt& z, const AffineRoot& beta) {
  Root minus_bar = -beta.finite;
  if (!minus_bar.is_positive()) return std::nullopt;
  WeylElt u = z.dir();
  WeylElt v = u * WeylElt::reflection(minus_bar);
  const QbgEdge* e = full.find_edge(full.index_of(u), full.index_of(v));
  if (!e || !(e->label == minus_bar)) return std::nullopt;
  bool quantum = e->kind == EdgeKind::Quantum;
  if (!quantum && beta.dg % 2 != 0) return std::nullopt;
  return quantum;
}

std::optional<AlcovePath> path_from_J(const QbgGraph& full, const AffineWeylElt& start,
                                  const std::vector<AffineRoot>& betas, const std::vector<int>& J) {
  AlcovePath p;
  p.states.push_back(start);
  for (size_t k = 0; k < J.size(); ++k) {
    if (k > 0 && J[k] <= J[k - 1]) return std::nullopt;
    const AffineRoot& beta = betas.at(J[k]);
    auto q = alcove_step(full, p.states.back(), beta);
    if (!q) return std::nullopt;
    p.J.push_back(J[k]);
    p.labels.push_back(beta);
    p.quantum.push_back(*q);
    p.states.push_back(p.states.back() * affine_reflection(beta));
  }
  return p;
}

}  // namespace

std::vector<AlcovePath> AlcoveModel::enumerate_qb(const Weight& mu) const {
  auto word = reduced_word_m_mu(mu);
  auto betas = alcove_betas(rank(), word);
  AffineWeylElt start = affine_from_word(rank(), word);
  std::vector<AlcovePath> out;
  AlcovePath current;
  current.states.push_back(start);
  int L = static_cast<int>(betas.size());
  std::function<void(int)> dfs = [&](int next) {
    out.push_back(current);
    for (int j = next; j < L; ++j) {
      auto q = alcove_step(full_, current.states.back(), betas[j]);
      if (!q) continue;
      current.J.push_back(j);
      current.labels.push_back(betas[j]);
      current.quantum.push_back(*q);
      current.states.push_back(current.states.back() * affine_reflection(betas[j]));
      dfs(j + 1);
      current.states.pop_back();
      current.quantum.pop_back();
      current.labels.pop_back();
      current.J.pop_back();
    }
  };
  dfs(0);
  return out;
}

GradedCharacter AlcoveModel::alcove_character(const Weight& mu) const {
  GradedCharacter ch;
  for (const auto& p : enumerate_qb(mu)) {
    ch.add_term(Weight::from_ints(p.end().wt()), Rational(p.qwt_dg()));
  }
  return ch;
}

QlsPath xi_map(const AlcoveModel& os, const QlsModel& qls, const AlcovePath& p) {
  const auto& d = os.d_values();
  int r = static_cast<int>(p.J.size());
  // Boundaries u_1 < ⋯ < u_{s-1} between groups of equal d; u_0 = 0 and the d = 0 group is absorbed at σ_0.
  std::vector<int> u{0};
  std::vector<Rational> sigma{Rational(0)};
  int k = 0;
  while (k < r && d[p.J[k]] == 0) ++k;
  u.push_back(k);
  while (k < r) {
    Rational dk = d[p.J[k]];
    sigma.push_back(dk);
    while (k < r && d[p.J[k]] == dk) ++k;
    u.push_back(k);
  }
  sigma.push_back(Rational(1));
  // u = (u_0, u_1, …, u_s) with u_s = r; σ = (σ_0, …, σ_s).
  WeylElt w0 = WeylElt::longest(os.rank());
  QlsPath eta;
  eta.times = sigma;
  for (size_t q = 1; q < u.size(); ++q) {
    eta.dirs.push_back(qls.graph().parabolic().min_coset_rep(p.states[u[q]].dir() * w0));
  }
  return eta;
}

AlcovePath xi_inverse(const AlcoveModel& os, const QlsModel& qls, const QlsPath& eta) {
  if (!qls.is_valid(eta)) throw std::invalid_argument("xi_inverse: not a QLS path " + to_string(eta));
  int n = os.rank();
  WeylElt pivot = WeylElt::longest(n);
  std::vector<int> J;
  const auto& inv = os.inversion_set();
  for (int p = 1; p <= eta.segments(); ++p) {
    TiltedMin tm = tilted_min(os.full_graph(), eta.dirs[p - 1], pivot, os.S(), os.order());
    const Rational& tau = eta.times[p - 1];
    for (auto it = tm.path.rbegin(); it != tm.path.rend(); ++it) {
      const Root& gamma = it->label;
      long long pg = pairing(os.lambda_minus(), -gamma).numerator();
      Rational a = (1 - tau) * pg;
      if (!is_integer(a)) throw std::logic_error("xi_inverse: non-integral affine level");
      AffineRoot tilde{-gamma, gamma.c() * a.numerator()};
      auto pos = std::find(inv.begin(), inv.end(), tilde);
      if (pos == inv.end()) throw std::logic_error("xi_inverse: " + to_string(tilde) + " is not an inversion");
      J.push_back(static_cast<int>(pos - inv.begin()));
    }
    pivot = tm.min;
  }
  auto betas = alcove_betas(n, os.word());
  auto path = path_from_J(os.full_graph(), affine_from_word(n, os.word()), betas, J);
  if (!path) throw std::logic_error("xi_inverse: reconstructed index set is not an alcove path");
  return *path;
}

GradedCharacter nonsymmetric_filtered_character(const QlsModel& qls, const Weight& mu, DegConvention convention) {
  WeylElt v = orbit_rep_v(qls.lambda(), mu);
  std::vector<QlsPath> kept;
  for (auto& eta : qls.enumerate()) {
    if (bruhat_le(eta.dirs.front(), v)) kept.push_back(std::move(eta));
  }
  return qls.graded_character(kept, convention);
}

std::string to_string(const AlcovePath& p) {
  std::string s = "J={";
  for (size_t k = 0; k < p.J.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(p.J[k] + 1);
  }
  s += "} end=" + to_string(p.end()) + " qdeg=" + std::to_string(p.qwt_dg());
  return s;
}

}  // namespace qlsc

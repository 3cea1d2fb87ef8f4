#include "redalg/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace redalg {

bool PBWMonomial::empty() const {
  return std::all_of(k.begin(), k.end(), [](int e) { return e == 0; });
}

int PBWMonomial::degree() const {
  int d = 0;
  for (int e : k) d += e;
  return d;
}

VermaModule::VermaModule(int n, WeightPoint mu) : n_(n), mu_(std::move(mu)) {
  if (n < 1 || n > kMaxN) throw std::out_of_range("n must be between 1 and 7");
  if (int(mu_.size()) != n) throw std::invalid_argument("weight has the wrong length");
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i) roots_.emplace_back(j, i);
  }
}

PBWMonomial VermaModule::monomial(std::initializer_list<std::pair<std::pair<int, int>, int>> powers) const {
  PBWMonomial m = vacuum();
  for (const auto& [root, e] : powers) {
    auto [j, i] = root;
    if (j <= i || j > n_ || i < 1) throw std::out_of_range("not a lowering generator");
    m.k[root_index(j, i)] += e;
  }
  return m;
}

std::vector<int> VermaModule::weight_offset(const PBWMonomial& m) const {
  std::vector<int> w(n_, 0);
  for (int r = 0; r < root_count(); ++r) {
    auto [j, i] = roots_[r];
    w[j - 1] += m.k[r];
    w[i - 1] -= m.k[r];
  }
  return w;
}

std::string VermaModule::to_string(const PBWMonomial& m) const {
  std::string s;
  for (int r = 0; r < root_count(); ++r) {
    if (m.k[r] == 0) continue;
    auto [j, i] = roots_[r];
    if (!s.empty()) s += "*";
    s += "e" + std::to_string(j) + std::to_string(i);
    if (m.k[r] > 1) s += "^" + std::to_string(m.k[r]);
  }
  return s.empty() ? "1" : s;
}

namespace {

void add_to(VermaModule::Vector& v, const PBWMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = v.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) v.erase(it);
}

}  // namespace

const VermaModule::Vector& VermaModule::act(int a, int b, const PBWMonomial& m) const {
  if (a < 1 || a > n_ || b < 1 || b > n_) throw std::out_of_range("generator index out of range");
  return act_memo_.get({a, b, m}, [&] {
    Vector res;
    if (a == b) {
      add_to(res, m, mu_[a - 1] + weight_offset(m)[a - 1]);
      return res;
    }
    int first = 0;
    while (first < root_count() && m.k[first] == 0) ++first;
    if (first == root_count()) {
      // e_ab 1_mu: a new PBW letter or zero
      if (a > b) {
        PBWMonomial r = m;
        r.k[root_index(a, b)] = 1;
        res.emplace(r, Rational(1));
      }
      return res;
    }
    if (a > b && root_index(a, b) <= first) {
      PBWMonomial r = m;
      r.k[root_index(a, b)] += 1;
      res.emplace(r, Rational(1));
      return res;
    }
    // e_ab y rest = y (e_ab rest) + [e_ab, y] rest
    auto [c, d] = roots_[first];
    PBWMonomial rest = m;
    rest.k[first] -= 1;
    for (const auto& [m1, r1] : act(a, b, rest)) {
      for (const auto& [m2, r2] : act(c, d, m1)) add_to(res, m2, r1 * r2);
    }
    // [e_ab, e_cd] = delta_bc e_ad - delta_da e_cb
    if (b == c) {
      for (const auto& [m1, r1] : act(a, d, rest)) add_to(res, m1, r1);
    }
    if (d == a) {
      for (const auto& [m1, r1] : act(c, b, rest)) add_to(res, m1, -r1);
    }
    return res;
  });
}

Rational VermaModule::shapovalov(const PBWMonomial& f, const PBWMonomial& g) const {
  if (weight_offset(f) != weight_offset(g)) return 0;
  return form_memo_.get({f, g}, [&]() -> Rational {
    int first = 0;
    while (first < root_count() && f.k[first] == 0) ++first;
    if (first == root_count()) return g.empty() ? 1 : 0;
    // (y f' 1, g 1) = (f' 1, e_ij g 1) for y = e_ji
    auto [j, i] = roots_[first];
    PBWMonomial rest = f;
    rest.k[first] -= 1;
    Rational r = 0;
    for (const auto& [m, c] : act(i, j, g)) r += c * shapovalov(rest, m);
    return r;
  });
}

TensorVector::TensorVector(std::shared_ptr<const VermaModule> verma, Parity parity)
    : verma_(std::move(verma)), parity_(parity) {}

TensorVector TensorVector::basis(std::shared_ptr<const VermaModule> verma, Parity parity, const MultiIndex& nu,
                                 const PBWMonomial* pbw) {
  if (nu.size() != verma->n()) throw std::invalid_argument("multi-index length differs from n");
  TensorVector v(verma, parity);
  v.add_term({nu, pbw ? *pbw : verma->vacuum()}, 1);
  return v;
}

Rational TensorVector::coefficient(const MultiIndex& nu, const PBWMonomial& m) const {
  auto it = terms_.find({nu, m});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorVector::add_term(const Key& k, const Rational& c) {
  if (parity_ == Parity::odd && !k.first.is_binary()) throw std::invalid_argument("odd index must be binary");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  if (o.parity_ != parity_ || o.verma_->mu() != verma_->mu()) throw std::invalid_argument("incompatible vectors");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TensorVector TensorVector::operator*(const Rational& c) const {
  TensorVector r(verma_, parity_);
  for (const auto& [k, v] : terms_) r.add_term(k, v * c);
  return r;
}

WeightPoint TensorVector::weight() const {
  if (terms_.empty()) throw std::invalid_argument("zero vector has no weight");
  WeightPoint w;
  for (const auto& [k, c] : terms_) {
    WeightPoint t = verma_->mu();
    auto off = verma_->weight_offset(k.second);
    for (int i = 0; i < verma_->n(); ++i) t[i] += k.first[i] + off[i];
    if (w.empty()) w = t;
    else if (w != t) throw std::invalid_argument("vector is not homogeneous");
  }
  return w;
}

std::string TensorVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ") " << (parity_ == Parity::even ? "x" : "z") << k.first.to_string() << " (x) "
       << verma_->to_string(k.second);
  }
  return os.str();
}

namespace {

// x^i d/dx^j on x^nu, or z^i d/dz^j on the descending product z^nu.
bool poly_act(int i, int j, const MultiIndex& nu, Parity parity, MultiIndex& out, Rational& c) {
  if (nu[j - 1] == 0) return false;
  out = nu;
  if (parity == Parity::even) {
    c = nu[j - 1];
    out.add(j - 1, -1);
    out.add(i - 1, 1);
    return true;
  }
  if (i != j && nu[i - 1] == 1) return false;
  int sign = 0;
  for (int l = j + 1; l <= nu.size(); ++l) sign += nu[l - 1];
  out.add(j - 1, -1);
  for (int l = i + 1; l <= nu.size(); ++l) sign += out[l - 1];
  out.add(i - 1, 1);
  c = sign % 2 ? -1 : 1;
  return true;
}

void check_pair(int i, int j, int n) {
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("generator index out of range");
}

}  // namespace

TensorVector gl_act_first(int i, int j, const TensorVector& v) {
  check_pair(i, j, v.verma().n());
  TensorVector r(v.verma_ptr(), v.parity());
  for (const auto& [k, c] : v.terms()) {
    MultiIndex nu;
    Rational s;
    if (poly_act(i, j, k.first, v.parity(), nu, s)) r.add_term({nu, k.second}, c * s);
  }
  return r;
}

TensorVector gl_act(int i, int j, const TensorVector& v) {
  TensorVector r = gl_act_first(i, j, v);
  for (const auto& [k, c] : v.terms()) {
    for (const auto& [m, s] : v.verma().act(i, j, k.second)) r.add_term({k.first, m}, c * s);
  }
  return r;
}

Rational shapovalov(const PBWMonomial& f, const PBWMonomial& g, const VermaModule& verma) {
  return verma.shapovalov(f, g);
}

Rational tensor_form(const TensorVector& v, const TensorVector& w) {
  if (v.parity() != w.parity() || v.verma().mu() != w.verma().mu()) {
    throw std::invalid_argument("vectors over different modules");
  }
  Rational r = 0;
  for (const auto& [k, c] : v.terms()) {
    for (const auto& [k2, c2] : w.terms()) {
      if (k.first != k2.first) continue;
      Rational pair = 1;
      if (v.parity() == Parity::even) {
        for (int i = 0; i < k.first.size(); ++i) {
          for (int m = 2; m <= k.first[i]; ++m) pair *= m;
        }
      }
      r += pair * c * c2 * v.verma().shapovalov(k.second, k2.second);
    }
  }
  return r;
}

TensorVector extremal_projector(const TensorVector& v) {
  if (v.is_zero()) return v;
  const WeightPoint lambda = v.weight();
  const int n = v.verma().n();
  TensorVector cur = v;
  for (int m = n; m >= 2; --m) {
    for (int i = m - 1; i >= 1; --i) {
      // P_im = sum_k (-1)^k / (k! (h_im + rho + 1)^{up k}) e_mi^k e_im^k
      const Rational base = shifted_root_value(lambda, i, m) + 1;
      TensorVector acc = cur, up = cur;
      Rational denom = 1;
      for (int k = 1;; ++k) {
        up = gl_act(i, m, up);
        if (up.is_zero()) break;
        Rational f = base + (k - 1);
        if (f == 0) {
          throw InvalidWeight("singular weight: h" + std::to_string(i) + std::to_string(m) + " = " +
                              shifted_root_value(lambda, i, m).get_str() + " hits the projector denominator");
        }
        denom *= -k * f;
        TensorVector down = up;
        for (int s = 0; s < k; ++s) down = gl_act(m, i, down);
        acc += down * (1 / denom);
      }
      cur = std::move(acc);
      if (cur.is_zero()) return cur;
    }
  }
  return cur;
}

Rational oracle_norm(const MultiIndex& nu, const WeightPoint& mu, Parity parity) {
  const int n = nu.size();
  if (int(mu.size()) != n) throw InvalidWeight("weight has the wrong length");
  if (parity == Parity::odd && !nu.is_binary()) throw std::invalid_argument("odd multi-index must be binary");
  WeightPoint lambda = mu;
  for (int i = 0; i < n; ++i) lambda[i] += nu[i];
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Rational h = shifted_root_value(lambda, i, j);
      if (h < 0 && h.get_den() == 1) {
        throw InvalidWeight("singular weight: h" + std::to_string(i) + std::to_string(j) + " = " + h.get_str() +
                            " at mu + nu");
      }
    }
  }
  auto verma = std::make_shared<const VermaModule>(n, mu);
  TensorVector v = TensorVector::basis(verma, parity, nu);
  return tensor_form(v, extremal_projector(v));
}

std::vector<NamedCheck> gl2_example_check(const WeightPoint& mu) {
  if (mu.size() != 2) throw InvalidWeight("the gl2 example needs a weight with two entries");
  const Rational h = mu[0] - mu[1];
  if (h.get_den() == 1) throw InvalidWeight("the gl2 example needs a non-integral mu1 - mu2");
  auto verma = std::make_shared<const VermaModule>(2, mu);
  const TensorVector p1 = extremal_projector(TensorVector::basis(verma, Parity::even, MultiIndex{1, 0}));
  const TensorVector p2 = extremal_projector(TensorVector::basis(verma, Parity::even, MultiIndex{0, 1}));
  const TensorVector zero(verma, Parity::even);
  const TensorVector* p[] = {nullptr, &p1, &p2};

  std::vector<NamedCheck> out;
  auto record = [&](const std::string& name, const TensorVector& lhs, const TensorVector& rhs) {
    bool ok = lhs == rhs;
    out.push_back({name, ok, ok ? "" : "lhs " + lhs.to_string() + " rhs " + rhs.to_string()});
  };
  auto s = [&](int i, int j, int k) { return extremal_projector(gl_act_first(i, j, *p[k])); };
  const Rational ratio = h / (h + 1);
  record("s12 v1 = 0", s(1, 2, 1), zero);
  record("s12 v2 = v1 h12/(h12+1)", s(1, 2, 2), p1 * ratio);
  record("s21 v1 = v2", s(2, 1, 1), p2);
  record("s21 v2 = 0", s(2, 1, 2), zero);
  record("s11 v1 = v1", s(1, 1, 1), p1);
  record("s11 v2 = v2/(h12+1)", s(1, 1, 2), p2 * (1 / (h + 1)));
  record("s22 v1 = 0", s(2, 2, 1), zero);
  record("s22 v2 = v2 h12/(h12+1)", s(2, 2, 2), p2 * ratio);
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      // shifted Cartan element h_i - i acting diagonally
      TensorVector lhs = gl_act(i, i, *p[j]) - *p[j] * Rational(i);
      Rational value = mu[i - 1] - i + (i == j ? 1 : 0);
      record("h" + std::to_string(i) + " v" + std::to_string(j) + " = v" + std::to_string(j) + "(h" +
                 std::to_string(i) + (i == j ? "+1)" : ")"),
             lhs, *p[j] * value);
    }
  }
  return out;
}

WeightPoint generic_weight(int n, int max_degree, std::mt19937_64& rng) {
  static const int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                               73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151};
  const int bound = 2 * max_degree + n;
  std::vector<int> pool;
  for (int p : primes) {
    if (p > bound) pool.push_back(p);
  }
  if (int(pool.size()) < n) throw std::invalid_argument("degree too large for the prime pool");
  for (;;) {
    std::shuffle(pool.begin(), pool.end(), rng);
    WeightPoint mu(n);
    for (int i = 0; i < n; ++i) {
      mu[i] = Rational(std::uniform_int_distribution<int>(-3, 3)(rng)) + Rational(1, pool[i]);
      mu[i].canonicalize();
    }
    bool ok = true;
    for (int d = 0; d <= max_degree && ok; ++d) {
      for (const auto& nu : multi_indices(n, d)) {
        WeightPoint lambda = mu;
        for (int i = 0; i < n; ++i) lambda[i] += nu[i];
        if (!is_nonsingular(lambda)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return mu;
  }
}

}  // namespace redalg

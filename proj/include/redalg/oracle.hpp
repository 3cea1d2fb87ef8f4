// Classical model for cross-checking the norm formulas: the diagonal action of
// gl_n on P_n (x) M_mu or Lambda_n (x) M_mu at an explicit rational weight mu,
// with the Verma module M_mu in the PBW basis of lowering generators.
#pragma once

#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "redalg/algebra.hpp"
#include "redalg/forms.hpp"
#include "redalg/memo.hpp"

namespace redalg {

// Exponents of the lowering generators e_ji (j > i), ordered lexicographically
// in (j, i): e21, e31, e32, e41, ...  The monomial is the product in that order
// applied to the highest-weight vector.
struct PBWMonomial {
  std::vector<int> k;
  auto operator<=>(const PBWMonomial&) const = default;
  bool empty() const;
  int degree() const;
};

class VermaModule {
 public:
  using Vector = std::map<PBWMonomial, Rational>;

  VermaModule(int n, WeightPoint mu);
  int n() const { return n_; }
  const WeightPoint& mu() const { return mu_; }
  int root_count() const { return n_ * (n_ - 1) / 2; }
  // position of e_ji, j > i, both 1-based
  int root_index(int j, int i) const { return (j - 1) * (j - 2) / 2 + (i - 1); }
  std::pair<int, int> root(int idx) const { return roots_[idx]; }
  PBWMonomial vacuum() const { return {std::vector<int>(root_count(), 0)}; }
  PBWMonomial monomial(std::initializer_list<std::pair<std::pair<int, int>, int>> powers) const;

  // e_ab applied to m 1_mu, straightened into the PBW basis
  const Vector& act(int a, int b, const PBWMonomial& m) const;
  // (f 1_mu, g 1_mu) with (1_mu, 1_mu) = 1 and e_ij adjoint to e_ji
  Rational shapovalov(const PBWMonomial& f, const PBWMonomial& g) const;
  // weight of m 1_mu minus mu
  std::vector<int> weight_offset(const PBWMonomial& m) const;
  std::string to_string(const PBWMonomial& m) const;

 private:
  int n_;
  WeightPoint mu_;
  std::vector<std::pair<int, int>> roots_;
  mutable Memo<std::tuple<int, int, PBWMonomial>, Vector> act_memo_;
  mutable Memo<std::pair<PBWMonomial, PBWMonomial>, Rational> form_memo_;
};

// Finite sums of (polynomial or Grassmann monomial) (x) (PBW monomial) 1_mu.
class TensorVector {
 public:
  using Key = std::pair<MultiIndex, PBWMonomial>;

  TensorVector(std::shared_ptr<const VermaModule> verma, Parity parity);
  // x^nu (x) 1_mu
  static TensorVector basis(std::shared_ptr<const VermaModule> verma, Parity parity, const MultiIndex& nu,
                            const PBWMonomial* pbw = nullptr);

  const VermaModule& verma() const { return *verma_; }
  const std::shared_ptr<const VermaModule>& verma_ptr() const { return verma_; }
  Parity parity() const { return parity_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const MultiIndex& nu, const PBWMonomial& m) const;
  void add_term(const Key& k, const Rational& c);

  TensorVector& operator+=(const TensorVector& o);
  TensorVector operator*(const Rational& c) const;
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a += b * Rational(-1); }
  friend bool operator==(const TensorVector& a, const TensorVector& b) {
    return a.parity_ == b.parity_ && a.terms_ == b.terms_;
  }

  // Common weight of the terms; throws on a zero or inhomogeneous vector.
  WeightPoint weight() const;
  std::string to_string() const;

 private:
  std::shared_ptr<const VermaModule> verma_;
  Parity parity_;
  std::map<Key, Rational> terms_;
};

// Diagonal action of e_ij.
TensorVector gl_act(int i, int j, const TensorVector& v);
// e_ij on the polynomial factor only.
TensorVector gl_act_first(int i, int j, const TensorVector& v);
Rational shapovalov(const PBWMonomial& f, const PBWMonomial& g, const VermaModule& verma);
// Product of the monomial pairing (nu! or 1) and the Shapovalov form.
Rational tensor_form(const TensorVector& v, const TensorVector& w);

// Ordered product of one-root projectors, A_2 A_3 ... A_n with
// A_m = P_{1m} ... P_{m-1,m}.  Throws InvalidWeight on a vanishing denominator.
TensorVector extremal_projector(const TensorVector& v);

// (v, P v) for v = x^nu (x) 1_mu.
Rational oracle_norm(const MultiIndex& nu, const WeightPoint& mu, Parity parity);

struct NamedCheck {
  std::string name;
  bool pass;
  std::string detail;
};

// The gl2 action table on the tautological representation, checked through
// P (e_ij (x) 1) P on P(v^k (x) 1_mu).
std::vector<NamedCheck> gl2_example_check(const WeightPoint& mu);

// mu_i = a_i + 1/p_i with distinct primes p_i > 2 max_degree + n; all weights
// mu + nu with |nu| <= max_degree are non-singular.
WeightPoint generic_weight(int n, int max_degree, std::mt19937_64& rng);

}  // namespace redalg

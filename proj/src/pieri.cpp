#include "redalg/pieri.hpp"

#include <algorithm>
#include <sstream>

namespace redalg {

namespace {

std::vector<int> padded(const std::vector<int>& p, std::size_t len) {
  std::vector<int> r = p;
  r.resize(std::max(len, p.size()), 0);
  return r;
}

Partition checked_mu(const Partition& mu, int n) {
  if (n < 1 || n > kMaxN) throw std::out_of_range("n must be between 1 and 7");
  if (!is_partition(mu)) throw std::invalid_argument("mu is not a partition");
  Partition p = padded(mu, n);
  for (std::size_t i = n; i < p.size(); ++i) {
    if (p[i] != 0) throw std::invalid_argument("mu has more than n parts");
  }
  p.resize(n);
  return p;
}

}  // namespace

bool is_partition(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

std::string partition_to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

Partition parse_partition(const std::string& text) {
  Partition p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition entry '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad partition entry '" + item + "'");
    p.push_back(v);
  }
  if (p.empty()) throw std::invalid_argument("empty partition");
  if (!is_partition(p)) throw std::invalid_argument("not a partition: " + text);
  return p;
}

bool horizontal_strip(const Partition& mu, const Partition& lambda) {
  const std::size_t len = std::max(mu.size(), lambda.size());
  auto m = padded(mu, len), l = padded(lambda, len);
  for (std::size_t i = 0; i < len; ++i) {
    if (l[i] < m[i]) return false;
    if (i + 1 < len && l[i + 1] > m[i]) return false;
  }
  return true;
}

bool vertical_strip(const Partition& mu, const Partition& lambda) {
  const std::size_t len = std::max(mu.size(), lambda.size());
  auto m = padded(mu, len), l = padded(lambda, len);
  for (std::size_t i = 0; i < len; ++i) {
    if (l[i] - m[i] != 0 && l[i] - m[i] != 1) return false;
  }
  return true;
}

mpz_class weyl_dim(const Partition& lambda, int n) {
  if (int(lambda.size()) > n) {
    for (std::size_t i = n; i < lambda.size(); ++i) {
      if (lambda[i] != 0) throw std::invalid_argument("partition has more than n parts");
    }
  }
  auto l = padded(lambda, n);
  mpq_class r = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) r *= mpq_class(l[i] - l[j] + j - i, j - i);
  }
  r.canonicalize();
  if (r.get_den() != 1) throw std::logic_error("dimension is not an integer");
  return r.get_num();
}

const char* status_name(NormStatus s) {
  switch (s) {
    case NormStatus::nonzero: return "nonzero";
    case NormStatus::zero: return "zero";
    case NormStatus::excluded_singular: return "excluded-singular";
  }
  return "?";
}

std::vector<ScanEntry> pieri_scan(const Partition& mu_in, int m, int n, Parity parity) {
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  const Partition mu = checked_mu(mu_in, n);
  if (parity == Parity::odd && m > n) throw std::invalid_argument("m must not exceed n in the dual rule");
  WeightPoint w(mu.begin(), mu.end());
  std::vector<ScanEntry> out;
  for (const auto& nu : multi_indices(n, m)) {
    if (parity == Parity::odd && !nu.is_binary()) continue;
    ScanEntry e{nu, {}, false, NormStatus::zero, 0};
    for (int i = 0; i < n; ++i) e.lambda.push_back(mu[i] + nu[i]);
    e.partition = is_partition(e.lambda);
    try {
      e.norm = evaluate_norm(nu, w, parity);
      e.status = e.norm == 0 ? NormStatus::zero : NormStatus::nonzero;
    } catch (const InvalidWeight&) {
      e.status = NormStatus::excluded_singular;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Partition> pieri_decompose(const Partition& mu, int m, int n) {
  std::vector<Partition> out;
  for (const auto& e : pieri_scan(mu, m, n, Parity::even)) {
    if (e.partition && e.status == NormStatus::nonzero) out.push_back(e.lambda);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Partition> dual_pieri_decompose(const Partition& mu, int m, int n) {
  std::vector<Partition> out;
  for (const auto& e : pieri_scan(mu, m, n, Parity::odd)) {
    if (!e.partition) continue;
    if (e.status != NormStatus::nonzero) {
      throw std::logic_error("odd norm vanishes at the partition " + partition_to_string(e.lambda));
    }
    out.push_back(e.lambda);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Partition> partitions_of(int k, int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto& self, int left, int maxpart) -> void {
    if (int(cur.size()) == n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 0; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, k, k);
  return out;
}

std::vector<Partition> strip_set(const Partition& mu_in, int m, int n, bool vertical) {
  const Partition mu = checked_mu(mu_in, n);
  int size = 0;
  for (int p : mu) size += p;
  std::vector<Partition> out;
  for (const auto& l : partitions_of(size + m, n)) {
    if (vertical ? vertical_strip(mu, l) : horizontal_strip(mu, l)) out.push_back(l);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

DimensionCheck dimension_check(const Partition& mu, const std::vector<Partition>& lambdas, int m, int n, bool dual) {
  DimensionCheck c;
  c.sum = 0;
  for (const auto& l : lambdas) c.sum += weyl_dim(l, n);
  mpz_class binom;
  if (dual) mpz_bin_uiui(binom.get_mpz_t(), n, m);
  else mpz_bin_uiui(binom.get_mpz_t(), n + m - 1, m);
  c.expected = binom * weyl_dim(mu, n);
  return c;
}

}  // namespace redalg

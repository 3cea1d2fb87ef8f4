// Pieri and dual Pieri rules read off from the zeros of the norm formulas.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "redalg/forms.hpp"

namespace redalg {

using Partition = std::vector<int>;

bool is_partition(const std::vector<int>& p);
std::string partition_to_string(const Partition& p);
Partition parse_partition(const std::string& text);

// Shorter arguments are padded with zeros.
bool horizontal_strip(const Partition& mu, const Partition& lambda);
bool vertical_strip(const Partition& mu, const Partition& lambda);

// prod_{i<j} (l_i - l_j + j - i) / (j - i)
mpz_class weyl_dim(const Partition& lambda, int n);

enum class NormStatus { nonzero, zero, excluded_singular };
const char* status_name(NormStatus s);

struct ScanEntry {
  MultiIndex nu;
  std::vector<int> lambda;  // mu + nu
  bool partition;
  NormStatus status;
  Rational norm;  // 0 unless status is nonzero
};

// Every nu with |nu| = m (binary for the odd case) and the norm of :x^nu: at mu.
std::vector<ScanEntry> pieri_scan(const Partition& mu, int m, int n, Parity parity);

// lambda = mu + nu that are partitions with non-vanishing even norm.
std::vector<Partition> pieri_decompose(const Partition& mu, int m, int n);
// lambda = mu + nu, nu binary, that are partitions; throws std::logic_error if
// one of them has vanishing odd norm.
std::vector<Partition> dual_pieri_decompose(const Partition& mu, int m, int n);

// All partitions lambda with |lambda| = |mu| + m forming a horizontal (vertical)
// strip over mu, at most n parts.
std::vector<Partition> strip_set(const Partition& mu, int m, int n, bool vertical);

struct DimensionCheck {
  mpz_class sum;       // sum of weyl_dim over the decomposition
  mpz_class expected;  // binomial * weyl_dim(mu)
  bool pass() const { return sum == expected; }
};
DimensionCheck dimension_check(const Partition& mu, const std::vector<Partition>& lambdas, int m, int n, bool dual);

// Partitions of size exactly k with at most n parts.
std::vector<Partition> partitions_of(int k, int n);

}  // namespace redalg

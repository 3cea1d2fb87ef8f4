// Exponent vectors with at most seven entries.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "redalg/poly.hpp"

namespace redalg {

inline constexpr int kMaxN = kMaxVars;

class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(int n) : n_(check_n(n)) {}
  MultiIndex(std::initializer_list<int> v) : MultiIndex(std::vector<int>(v)) {}
  explicit MultiIndex(const std::vector<int>& v) : n_(check_n(int(v.size()))) {
    for (int i = 0; i < n_; ++i) set(i, v[i]);
  }

  static MultiIndex unit(int n, int i) {
    MultiIndex m(n);
    m.set(i, 1);
    return m;
  }

  int size() const { return n_; }
  int operator[](int i) const { return e_[i]; }
  void set(int i, int v) {
    if (v < 0 || v > 255) throw std::out_of_range("exponent out of range");
    e_[i] = std::uint8_t(v);
  }
  void add(int i, int d) { set(i, e_[i] + d); }
  int degree() const {
    int d = 0;
    for (int i = 0; i < n_; ++i) d += e_[i];
    return d;
  }
  bool is_zero() const { return degree() == 0; }
  bool is_binary() const {
    for (int i = 0; i < n_; ++i) {
      if (e_[i] > 1) return false;
    }
    return true;
  }
  std::vector<int> to_vector() const { return std::vector<int>(e_.begin(), e_.begin() + n_); }

  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) {
    for (int i = 0; i < a.n_; ++i) a.set(i, a.e_[i] + b.e_[i]);
    return a;
  }

  auto operator<=>(const MultiIndex&) const = default;

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < n_; ++i) s += (i ? "," : "") + std::to_string(int(e_[i]));
    return s + ")";
  }

 private:
  static std::uint8_t check_n(int n) {
    if (n < 0 || n > kMaxN) throw std::out_of_range("dimension must be between 1 and 7");
    return std::uint8_t(n);
  }
  std::array<std::uint8_t, kMaxN> e_{};
  std::uint8_t n_ = 0;
};

// All multi-indices of length n and total degree d, lexicographically descending.
std::vector<MultiIndex> multi_indices(int n, int d);
// All binary multi-indices of length n.
std::vector<MultiIndex> binary_indices(int n);

}  // namespace redalg

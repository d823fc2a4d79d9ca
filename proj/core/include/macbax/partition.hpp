#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace macbax {

// Weakly decreasing sequence of non-negative integers, trailing zeros removed.
class Partition {
 public:
  Partition() = default;
  // Accepts trailing zeros; throws std::invalid_argument if not a partition.
  Partition(std::vector<int> parts);  // NOLINT(google-explicit-constructor)
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static bool is_partition(const std::vector<int>& v);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  // lambda_i with 1-based index; zero beyond the length
  int operator()(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  std::vector<int> padded(int n) const;  // throws if length > n
  Partition conjugate() const;
  bool contains(const Partition& mu) const;  // mu subset lambda as diagrams
  bool dominates(const Partition& mu) const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// Partitions of n (with at most max_len parts), in reverse lex order.
std::vector<Partition> partitions_of(int n, int max_len = -1);
// Partitions with weight <= w and length <= max_len, by weight then reverse lex.
std::vector<Partition> partitions_up_to(int w, int max_len);
// lambda / mu is a horizontal strip (mu interlaces lambda).
bool interlaces(const std::vector<int>& lambda, const std::vector<int>& mu);
// All mu (length n-1 tuples) with lambda_1 >= mu_1 >= lambda_2 >= ... >= mu_{n-1} >= lambda_n.
std::vector<std::vector<int>> interlacing_below(const std::vector<int>& lambda);
// All mu of length n with mu_1 >= lambda_1 >= mu_2 >= ... >= lambda_{n-1} >= mu_n >= lambda_n.
// Only entries with |mu| - |lambda| == m.
std::vector<std::vector<int>> horizontal_strips_above(const std::vector<int>& lambda, int m);

// Graded-lex output order used in reports: weight ascending, then reverse lex.
bool graded_lex_less(const Partition& a, const Partition& b);

}  // namespace macbax

#include "macbax/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace macbax {

bool Partition::is_partition(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return false;
    if (i > 0 && v[i] > v[i - 1]) return false;
  }
  return true;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (!is_partition(parts_)) throw std::invalid_argument("not a partition");
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(int n) const {
  if (length() > n) throw std::invalid_argument("partition " + to_string() + " longer than rank " + std::to_string(n));
  std::vector<int> v(parts_);
  v.resize(n, 0);
  return v;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts_.empty()) return Partition();
  for (int j = 1; j <= parts_[0]; ++j) {
    int cnt = 0;
    for (int p : parts_)
      if (p >= j) ++cnt;
    c.push_back(cnt);
  }
  return Partition(c);
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu(i) > (*this)(i)) return false;
  return true;
}

bool Partition::dominates(const Partition& mu) const {
  if (weight() != mu.weight()) return false;
  int a = 0, b = 0;
  int len = std::max(length(), mu.length());
  for (int i = 1; i <= len; ++i) {
    a += (*this)(i);
    b += mu(i);
    if (a < b) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_of(int n, int max_len) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_len >= 0 && static_cast<int>(cur.size()) >= max_len) return;
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> partitions_up_to(int w, int max_len) {
  std::vector<Partition> out;
  for (int k = 0; k <= w; ++k) {
    auto p = partitions_of(k, max_len);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

bool interlaces(const std::vector<int>& lambda, const std::vector<int>& mu) {
  // lambda_i >= mu_i >= lambda_{i+1}
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i >= lambda.size() || mu[i] > lambda[i]) return false;
    if (i + 1 < lambda.size() && mu[i] < lambda[i + 1]) return false;
  }
  return true;
}

std::vector<std::vector<int>> interlacing_below(const std::vector<int>& lambda) {
  std::vector<std::vector<int>> out;
  if (lambda.empty()) return out;
  std::size_t m = lambda.size() - 1;
  std::vector<int> mu(m);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m) {
      out.push_back(mu);
      return;
    }
    for (int v = lambda[i]; v >= lambda[i + 1]; --v) {
      mu[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<int>> horizontal_strips_above(const std::vector<int>& lambda, int m) {
  std::vector<std::vector<int>> out;
  std::size_t n = lambda.size();
  if (n == 0 || m < 0) return out;
  std::vector<int> mu(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
    if (i == n) {
      if (rem == 0) out.push_back(mu);
      return;
    }
    int lo = lambda[i];
    int hi = i == 0 ? lambda[0] + rem : std::min(lambda[i - 1], lambda[i] + rem);
    for (int v = hi; v >= lo; --v) {
      mu[i] = v;
      rec(i + 1, rem - (v - lambda[i]));
    }
  };
  rec(0, m);
  return out;
}

bool graded_lex_less(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return a > b;
}

}  // namespace macbax

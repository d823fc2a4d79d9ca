#pragma once

#include <map>
#include <vector>

#include "macbax/ratfunc.hpp"
#include "macbax/symfunc.hpp"

namespace macbax {

// Finitely supported function on Z^n tuples; absent keys read as zero.
template <class V>
using PartitionFunction = std::map<std::vector<int>, V>;

// r-element subsets of {0..n-1}, lexicographic.
std::vector<std::vector<int>> subsets(int n, int r);

inline RatFunc scale_value(const RatFunc& c, const RatFunc& v) { return c * v; }
inline SymFunc scale_value(const RatFunc& c, const SymFunc& v) { return v.scaled(c); }

// (A F)(lam) = sum_{|I| = r} c(I, lam) F(lam + e_I), evaluated on every
// partition lam reachable from the support of F.  The coefficient function
// decides whether shifts off the partition cone contribute.
template <class V, class Coeff>
PartitionFunction<V> apply_shift_operator(int n, int r, const PartitionFunction<V>& F, Coeff coeff) {
  PartitionFunction<V> out;
  auto subs = subsets(n, r);
  for (const auto& [kappa, value] : F) {
    // shifts landing off the partition cone read as zero
    bool key_ok = true;
    for (int i = 0; i + 1 < n; ++i)
      if (kappa[i] < kappa[i + 1]) key_ok = false;
    if (!key_ok) continue;
    for (const auto& I : subs) {
      std::vector<int> lam = kappa;
      for (int i : I) --lam[i];
      bool ok = true;
      for (int i = 0; i < n; ++i)
        if (lam[i] < 0 || (i + 1 < n && lam[i] < lam[i + 1])) ok = false;
      if (!ok) continue;
      RatFunc c = coeff(I, lam);
      if (c.is_zero()) continue;
      auto it = out.find(lam);
      if (it == out.end()) out.emplace(lam, scale_value(c, value));
      else it->second += scale_value(c, value);
    }
  }
  return out;
}

}  // namespace macbax

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

#include "macbax/symfunc.hpp"

namespace macbax {

// Write-once table of polynomials keyed by (family, params, rank, partition).
// Inserts are idempotent: the first value stored for a key wins.  When the
// environment variable MACBAX_CACHE_DIR names a directory, entries are also
// stored there, one file per key, named by a hash of the key.
class PolyTable {
 public:
  explicit PolyTable(std::string family);

  std::optional<SymFunc> find(const std::string& params, int rank, const Partition& lambda) const;
  SymFunc insert(const std::string& params, int rank, const Partition& lambda, SymFunc value);
  // Computes outside the lock (compute may recurse into the table).
  SymFunc get(const std::string& params, int rank, const Partition& lambda,
              const std::function<SymFunc()>& compute);
  std::size_t size() const;

 private:
  std::string family_;
  mutable std::shared_mutex mu_;
  mutable std::map<std::string, SymFunc> table_;

  std::string key(const std::string& params, int rank, const Partition& lambda) const;
};

// Text round trip used by the disk cache.
std::string serialize(const SymFunc& f);
SymFunc deserialize_symfunc(const std::string& s);
std::string serialize(const Poly& p);
Poly deserialize_poly(const std::string& s);

// 64-bit FNV-1a of a string, as 16 hex digits.
std::string fnv1a_hex(const std::string& s);

}  // namespace macbax

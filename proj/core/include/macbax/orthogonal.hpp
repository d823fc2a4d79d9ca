#pragma once

#include <map>
#include <vector>

#include "macbax/symfunc.hpp"

namespace macbax {

// Linear extensions of dominance used to order Gram-Schmidt.
enum class Extension {
  lex,            // ascending lexicographic
  conjugate_lex,  // lambda before mu iff conjugate(lambda) is lex-greater
};

// Partitions of w in the order Gram-Schmidt visits them (dominance-small first).
std::vector<Partition> extension_order(int w, Extension ext);

// Monic, dominance-triangular family of weight w orthogonal for the scalar
// product of the field (sp_qt, sp_q or sp_kappa), at rank w.  Cached.
const std::map<Partition, SymFunc>& gram_schmidt_family(int w, Field field, Extension ext);

// The member of that family for lambda, restricted to rank n.
SymFunc gram_schmidt(const Partition& lambda, int n, Field field, Extension ext = Extension::lex);

}  // namespace macbax

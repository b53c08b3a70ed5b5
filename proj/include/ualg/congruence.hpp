#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/hom.hpp"
#include "ualg/types.hpp"

namespace ualg {

struct CongruenceCheck;

// A compatible partition of a carrier in min-representative normal form:
// labels[x] is the least element of x's block. Two congruences are equal iff
// their label vectors (and algebras) are.
class Congruence {
 public:
  const FiniteAlgebra& algebra() const noexcept { return algebra_; }
  const std::vector<element_type>& labels() const noexcept { return labels_; }

  bool related(element_type x, element_type y) const {
    return labels_.at(x) == labels_.at(y);
  }
  std::size_t block_count() const;
  std::vector<std::vector<element_type>> blocks() const;

  friend bool operator==(const Congruence& a, const Congruence& b) {
    return a.algebra_ == b.algebra_ && a.labels_ == b.labels_;
  }

 private:
  Congruence(FiniteAlgebra algebra, std::vector<element_type> labels)
      : algebra_(std::move(algebra)), labels_(std::move(labels)) {}

  friend CongruenceCheck check_congruence(
      const FiniteAlgebra&, const std::vector<std::vector<element_type>>&);
  friend Congruence kernel_congruence(const Hom&);

  FiniteAlgebra algebra_;
  std::vector<element_type> labels_;
};

// Rewrites an arbitrary label vector (equal labels <=> same block) into
// min-representative form. Idempotent.
std::vector<element_type> normalize_labels(
    const std::vector<element_type>& labels);

// Related argument tuples with unrelated results, witnessing incompatibility.
struct CompatibilityWitness {
  std::string symbol;
  std::vector<element_type> lhs_args;
  std::vector<element_type> rhs_args;
};

struct CongruenceCheck {
  std::optional<Congruence> congruence;
  std::optional<CompatibilityWitness> witness;

  bool ok() const noexcept { return congruence.has_value(); }
};

// Decides whether a partition is compatible with every operation. Throws
// UalgError when `blocks` is not a partition of the carrier.
CongruenceCheck check_congruence(
    const FiniteAlgebra& alg,
    const std::vector<std::vector<element_type>>& blocks);

// The kernel of a verified hom, normalized. Compatible by theorem; re-checked
// when debug_recheck_enabled().
Congruence kernel_congruence(const Hom& h);

struct QuotientResult {
  FiniteAlgebra algebra;  // carrier = blocks ordered by minimum representative
  Hom projection;         // x |-> index of x's block; surjective
};

// Operations act on blocks through minimum representatives; well-defined by
// compatibility.
QuotientResult quotient(const Congruence& theta);

}  // namespace ualg

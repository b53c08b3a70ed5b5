#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/hom.hpp"
#include "ualg/iso.hpp"
#include "ualg/types.hpp"

namespace ualg {

struct ClosureViolation {
  std::string symbol;
  std::vector<element_type> args;  // tuple drawn from the subset
  element_type result = 0;         // lands outside the subset
};

// Exhaustive closure check over all tuples from the subset; nullopt = closed.
// Note a nullary symbol's empty tuple is drawn from any subset, so the empty
// set is closed exactly when the signature has no nullary symbols.
std::optional<ClosureViolation> find_closure_violation(
    const FiniteAlgebra& alg, std::span<const element_type> subset);

bool is_closed(const FiniteAlgebra& alg, std::span<const element_type> subset);

// A subset of a carrier closed under every operation. Construction validates
// closure.
class Subuniverse {
 public:
  Subuniverse(FiniteAlgebra algebra, std::vector<element_type> members);

  const FiniteAlgebra& algebra() const noexcept { return algebra_; }
  const std::vector<element_type>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(element_type x) const;

  friend bool operator==(const Subuniverse& a, const Subuniverse& b) {
    return a.algebra_ == b.algebra_ && a.members_ == b.members_;
  }

 private:
  FiniteAlgebra algebra_;
  std::vector<element_type> members_;  // ascending
};

// Least closed superset of the generators, by worklist fixpoint.
Subuniverse sg_closure(const FiniteAlgebra& alg,
                       std::span<const element_type> generators);

// Same closure computed through the term machinery: repeatedly interpret
// enumerated small terms over environments into the current set until stable.
Subuniverse term_image_closure(const FiniteAlgebra& alg,
                               std::span<const element_type> generators);

// Evidence that one algebra embeds in another.
struct SubalgebraWitness {
  Hom embedding;  // injective and verified
};

struct InducedSubalgebra {
  FiniteAlgebra algebra;       // members re-indexed ascending
  SubalgebraWitness inclusion;  // new index |-> original element
};

// Requires a non-empty subuniverse (algebras have size >= 1).
InducedSubalgebra subuniv_algebra(const Subuniverse& s);

// Every closed subset, ordered by size then lexicographically. Scans all
// 2^size subsets; intended for small carriers, the caller owns the scale.
std::vector<Subuniverse> all_subuniverses(const FiniteAlgebra& alg);

// Set intersection of a non-empty list over one algebra.
Subuniverse intersect_subuniverses(const std::vector<Subuniverse>& subs);

// First injective hom b -> a in search order, or nullopt (exhaustive).
std::optional<SubalgebraWitness> is_subalgebra_of(const FiniteAlgebra& b,
                                                  const FiniteAlgebra& a);

struct ClassWitness {
  std::size_t member_index = 0;
  FiniteAlgebra member;
  Subuniverse subuniverse;
  FiniteAlgebra subalgebra;  // induced on the subuniverse
  Iso iso;                   // b ~ subalgebra
};

struct ClassSearch {
  std::optional<ClassWitness> witness;
  // True when every member's subuniverses were enumerated exhaustively
  // (size <= 4); beyond that only closures of generator sets of size <= 2
  // are tried and a negative answer is not definitive.
  bool exhaustive = true;
};

// Scans members in order, subuniverses in (size, lexicographic) order, and
// returns the first member whose induced subalgebra is isomorphic to b.
ClassSearch is_subalgebra_of_class(const FiniteAlgebra& b,
                                   const std::vector<FiniteAlgebra>& algebras);

// First surjective hom a -> b in search order, or nullopt (exhaustive).
std::optional<Hom> is_hom_image_of(const FiniteAlgebra& b,
                                   const FiniteAlgebra& a);

struct ClassImageWitness {
  std::size_t member_index = 0;
  Hom epi;
};

std::optional<ClassImageWitness> is_hom_image_of_class(
    const FiniteAlgebra& b, const std::vector<FiniteAlgebra>& algebras);

}  // namespace ualg

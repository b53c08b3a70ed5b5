#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/types.hpp"

namespace ualg {

struct HomCheck;

// A total map between carriers together with its verification status. The
// verified flag is set by check_hom's exhaustive check, or by constructions
// whose compatibility holds by theorem (those are re-checked when
// debug_recheck_enabled()).
class Hom {
 public:
  // An unverified candidate; most operations reject these.
  static Hom unchecked(FiniteAlgebra domain, FiniteAlgebra codomain,
                       std::vector<element_type> map);

  const FiniteAlgebra& domain() const noexcept { return domain_; }
  const FiniteAlgebra& codomain() const noexcept { return codomain_; }
  const std::vector<element_type>& map() const noexcept { return map_; }
  bool verified() const noexcept { return verified_; }

  element_type operator()(element_type x) const { return map_.at(x); }

 private:
  Hom(FiniteAlgebra domain, FiniteAlgebra codomain,
      std::vector<element_type> map, bool verified);

  friend Hom trusted_hom(FiniteAlgebra, FiniteAlgebra,
                         std::vector<element_type>);
  friend HomCheck check_hom(const FiniteAlgebra&, const FiniteAlgebra&,
                            std::vector<element_type>);

  FiniteAlgebra domain_;
  FiniteAlgebra codomain_;
  std::vector<element_type> map_;
  bool verified_ = false;
};

// Maps agree pointwise (endpoints are not compared).
bool same_map(const Hom& a, const Hom& b);

struct HomCounterexample {
  std::string symbol;
  std::vector<element_type> args;
  element_type lhs = 0;  // map applied after the domain operation
  element_type rhs = 0;  // codomain operation applied to mapped arguments
};

struct HomCheck {
  std::optional<Hom> hom;
  std::optional<HomCounterexample> counterexample;

  bool ok() const noexcept { return hom.has_value(); }
};

// Decides compatibility exhaustively: for every symbol (signature order) and
// every argument tuple (flat index order), map[f(a)] must equal f(map . a).
// The first violation is reported. Shape errors (wrong length, out-of-range
// entries, signature mismatch) throw UalgError.
HomCheck check_hom(const FiniteAlgebra& domain, const FiniteAlgebra& codomain,
                   std::vector<element_type> map);

// For constructions whose compatibility is a theorem; re-checks when
// debug_recheck_enabled() and throws std::logic_error on failure.
Hom trusted_hom(FiniteAlgebra domain, FiniteAlgebra codomain,
                std::vector<element_type> map);

Hom identity_hom(const FiniteAlgebra& alg);

// h after g; g's codomain must equal h's domain and both must be verified.
Hom compose_hom(const Hom& g, const Hom& h);

struct MorphismKind {
  bool injective = false;
  bool surjective = false;

  bool bijective() const noexcept { return injective && surjective; }
};

MorphismKind classify(const Hom& h);

// Elements where the two maps agree, ascending. Requires equal endpoints.
std::vector<element_type> equalizer(const Hom& g, const Hom& h);

// Fibers of the map, as blocks sorted by minimum element, elements ascending.
std::vector<std::vector<element_type>> kernel_pairs(const Hom& h);

struct ImageAlgebra {
  std::vector<element_type> subset;  // image of the map, ascending
  FiniteAlgebra algebra;             // induced algebra on the image
  Hom inclusion;                     // image algebra -> codomain, injective
  Hom corestriction;                 // domain -> image algebra, surjective
};

ImageAlgebra image_algebra(const Hom& h);

struct HomSearchOptions {
  std::size_t limit = static_cast<std::size_t>(-1);
  bool require_injective = false;
  bool require_surjective = false;
  // Partial map: (position, value) pairs pinned before the search.
  std::vector<std::pair<element_type, element_type>> fixed;
};

// Backtracking enumeration of all homs domain -> codomain, in lexicographic
// map order, complete up to `limit`. Positions are decided ascending; any
// operation tuple whose arguments are all decided forces (or checks) the
// value at its result.
std::vector<Hom> search_homs(const FiniteAlgebra& domain,
                             const FiniteAlgebra& codomain,
                             const HomSearchOptions& options = {});

// a |-> (h0(a), ..., hk-1(a)) into the product of `family`.
Hom tuple_hom_into_product(const FiniteAlgebra& domain,
                           const std::vector<FiniteAlgebra>& family,
                           const std::vector<Hom>& homs);

// Componentwise action through both product codecs.
Hom factorwise_product_hom(const std::vector<FiniteAlgebra>& domain_family,
                           const std::vector<FiniteAlgebra>& codomain_family,
                           const std::vector<Hom>& homs);

// Projection of the product onto factor i; surjective since all sizes >= 1.
Hom projection_hom(const std::vector<FiniteAlgebra>& family, std::size_t i);

}  // namespace ualg

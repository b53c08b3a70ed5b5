#pragma once

#include <optional>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/hom.hpp"
#include "ualg/types.hpp"

namespace ualg {

// A pair of verified homs composing to the identity in both directions.
struct Iso {
  Hom forward;
  Hom backward;
};

struct IsoViolation {
  // True when forward(backward(e)) != e, false when backward(forward(e)) != e.
  bool on_codomain = false;
  element_type element = 0;
};

struct IsoCheck {
  std::optional<Iso> iso;
  std::optional<IsoViolation> violation;

  bool ok() const noexcept { return iso.has_value(); }
};

// Both round trips are checked pointwise; the first violating element is
// reported. Endpoint mismatches and unverified homs throw UalgError.
IsoCheck check_iso(const Hom& forward, const Hom& backward);

// Decision procedure: sizes must match, then bijective homs are enumerated in
// lexicographic order and the first whose inverse passes check_hom is
// returned. Exhaustive, so nullopt means no isomorphism exists.
std::optional<Iso> find_iso(const FiniteAlgebra& a, const FiniteAlgebra& b);

Iso iso_refl(const FiniteAlgebra& a);
Iso iso_sym(const Iso& i);

// Round trips are re-checked; endpoint mismatches throw.
Iso compose_iso(const Iso& ab, const Iso& bc);

// Componentwise iso between the two products.
Iso product_iso(const std::vector<Iso>& isos);

}  // namespace ualg

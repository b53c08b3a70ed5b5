#pragma once

#include "ualg/algebra.hpp"
#include "ualg/congruence.hpp"
#include "ualg/hom.hpp"
#include "ualg/iso.hpp"
#include "ualg/subalg.hpp"
#include "ualg/types.hpp"

namespace ualg {

// h factored as an injective hom after the canonical projection onto the
// quotient by its kernel: mediating . projection = h pointwise.
struct HomDecomposition {
  Congruence kernel;
  FiniteAlgebra quotient_algebra;
  Hom projection;  // surjective
  Hom mediating;   // injective, quotient -> codomain
  SubalgebraWitness embedding_witness;  // quotient embeds in the codomain
};

// Each block maps to h of its minimum representative. The decomposition
// equations are checked before returning.
HomDecomposition first_hom_decomposition(const Hom& h);

// Requires h surjective (NotSurjectiveError lists the missed elements);
// the mediating hom is then bijective and returned with its inverse, both
// directions passing check_hom.
Iso first_isomorphism(const Hom& h);

// Given g : A -> B and surjective h : A -> C with ker h contained in ker g,
// returns phi : C -> B with g = phi . h (phi(c) = g at the minimum preimage
// of c). With want_epi, g must also be surjective and phi then is.
// Violated preconditions throw NotSurjectiveError / KernelContainmentError.
Hom hom_factor(const Hom& g, const Hom& h, bool want_epi = false);

}  // namespace ualg

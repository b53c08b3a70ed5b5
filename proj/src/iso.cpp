#include "ualg/iso.hpp"

namespace ualg {

namespace {

// First element breaking either round trip, or nullopt.
std::optional<IsoViolation> find_roundtrip_violation(const Hom& forward,
                                                     const Hom& backward) {
  for (element_type b = 0; b < forward.codomain().size(); ++b) {
    if (forward.map()[backward.map()[b]] != b) {
      return IsoViolation{true, b};
    }
  }
  for (element_type a = 0; a < forward.domain().size(); ++a) {
    if (backward.map()[forward.map()[a]] != a) {
      return IsoViolation{false, a};
    }
  }
  return std::nullopt;
}

}  // namespace

IsoCheck check_iso(const Hom& forward, const Hom& backward) {
  if (!forward.verified() || !backward.verified()) {
    throw UalgError("check_iso requires verified homs");
  }
  if (forward.domain() != backward.codomain() ||
      forward.codomain() != backward.domain()) {
    throw UalgError("check_iso requires homs with opposite endpoints");
  }
  if (auto violation = find_roundtrip_violation(forward, backward)) {
    return {std::nullopt, violation};
  }
  return {Iso{forward, backward}, std::nullopt};
}

std::optional<Iso> find_iso(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.signature() != b.signature()) {
    throw UalgError("find_iso requires algebras over one signature");
  }
  if (a.size() != b.size()) {
    return std::nullopt;
  }
  HomSearchOptions options;
  options.require_injective = true;
  options.require_surjective = true;
  for (const Hom& forward : search_homs(a, b, options)) {
    std::vector<element_type> inverse(b.size());
    for (element_type x = 0; x < a.size(); ++x) {
      inverse[forward.map()[x]] = x;
    }
    // provably a hom (inverse of a bijective hom); checked anyway
    HomCheck back = check_hom(b, a, std::move(inverse));
    if (back.ok()) {
      return Iso{forward, *back.hom};
    }
  }
  return std::nullopt;
}

Iso iso_refl(const FiniteAlgebra& a) {
  Hom id = identity_hom(a);
  return {id, id};
}

Iso iso_sym(const Iso& i) { return {i.backward, i.forward}; }

Iso compose_iso(const Iso& ab, const Iso& bc) {
  if (ab.forward.codomain() != bc.forward.domain()) {
    throw UalgError("compose_iso requires matching endpoints");
  }
  Hom forward = compose_hom(ab.forward, bc.forward);
  Hom backward = compose_hom(bc.backward, ab.backward);
  if (find_roundtrip_violation(forward, backward)) {
    throw std::logic_error("composite of isos failed its round trips");
  }
  return {std::move(forward), std::move(backward)};
}

Iso product_iso(const std::vector<Iso>& isos) {
  if (isos.empty()) {
    throw UalgError("product_iso requires a non-empty family");
  }
  std::vector<FiniteAlgebra> domain_family;
  std::vector<FiniteAlgebra> codomain_family;
  std::vector<Hom> forwards;
  std::vector<Hom> backwards;
  for (const Iso& i : isos) {
    domain_family.push_back(i.forward.domain());
    codomain_family.push_back(i.forward.codomain());
    forwards.push_back(i.forward);
    backwards.push_back(i.backward);
  }
  Hom forward =
      factorwise_product_hom(domain_family, codomain_family, forwards);
  Hom backward =
      factorwise_product_hom(codomain_family, domain_family, backwards);
  if (find_roundtrip_violation(forward, backward)) {
    throw std::logic_error("product of isos failed its round trips");
  }
  return {std::move(forward), std::move(backward)};
}

}  // namespace ualg

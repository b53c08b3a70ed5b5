#include "ualg/theorems.hpp"

#include <algorithm>

namespace ualg {

namespace {

std::vector<element_type> missing_codomain_elements(const Hom& h) {
  std::vector<char> hit(h.codomain().size(), 0);
  for (element_type v : h.map()) {
    hit[v] = 1;
  }
  std::vector<element_type> missing;
  for (element_type v = 0; v < hit.size(); ++v) {
    if (!hit[v]) {
      missing.push_back(v);
    }
  }
  return missing;
}

std::string join_elements(const std::vector<element_type>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

HomDecomposition first_hom_decomposition(const Hom& h) {
  if (!h.verified()) {
    throw UalgError("first_hom_decomposition requires a verified hom");
  }
  Congruence kernel = kernel_congruence(h);
  QuotientResult q = quotient(kernel);

  // block i maps to h of its minimum representative
  std::vector<element_type> mediating_map(q.algebra.size());
  for (element_type x = 0; x < h.domain().size(); ++x) {
    if (kernel.labels()[x] == x) {
      mediating_map[q.projection.map()[x]] = h.map()[x];
    }
  }
  Hom mediating = trusted_hom(q.algebra, h.codomain(), std::move(mediating_map));

  for (element_type x = 0; x < h.domain().size(); ++x) {
    if (mediating.map()[q.projection.map()[x]] != h.map()[x]) {
      throw std::logic_error("hom decomposition does not commute");
    }
  }
  if (!classify(mediating).injective) {
    throw std::logic_error("mediating hom of a kernel quotient not injective");
  }
  if (!classify(q.projection).surjective) {
    throw std::logic_error("canonical projection not surjective");
  }

  SubalgebraWitness witness{mediating};
  return {std::move(kernel), std::move(q.algebra), std::move(q.projection),
          std::move(mediating), std::move(witness)};
}

Iso first_isomorphism(const Hom& h) {
  if (!h.verified()) {
    throw UalgError("first_isomorphism requires a verified hom");
  }
  if (!classify(h).surjective) {
    auto missing = missing_codomain_elements(h);
    throw NotSurjectiveError(
        "first_isomorphism requires a surjective hom; codomain elements "
        "without preimage: " +
            join_elements(missing),
        std::move(missing));
  }

  HomDecomposition d = first_hom_decomposition(h);
  if (!classify(d.mediating).bijective()) {
    throw std::logic_error("mediating hom of an epi decomposition not "
                           "bijective");
  }

  std::vector<element_type> inverse(h.codomain().size());
  for (element_type b = 0; b < d.mediating.map().size(); ++b) {
    inverse[d.mediating.map()[b]] = b;
  }
  HomCheck back = check_hom(h.codomain(), d.quotient_algebra, inverse);
  if (!back.ok()) {
    throw std::logic_error("inverse of a bijective hom failed check_hom");
  }
  for (element_type b = 0; b < h.codomain().size(); ++b) {
    if (d.mediating.map()[back.hom->map()[b]] != b ||
        back.hom->map()[d.mediating.map()[b]] != b) {
      throw std::logic_error("first_isomorphism round trip failed");
    }
  }
  return {std::move(d.mediating), std::move(*back.hom)};
}

Hom hom_factor(const Hom& g, const Hom& h, bool want_epi) {
  if (!g.verified() || !h.verified()) {
    throw UalgError("hom_factor requires verified homs");
  }
  if (g.domain() != h.domain()) {
    throw UalgError("hom_factor requires homs with a shared domain");
  }
  if (!classify(h).surjective) {
    auto missing = missing_codomain_elements(h);
    throw NotSurjectiveError(
        "hom_factor requires a surjective h; codomain elements without "
        "preimage: " +
            join_elements(missing),
        std::move(missing));
  }
  if (want_epi && !classify(g).surjective) {
    auto missing = missing_codomain_elements(g);
    throw NotSurjectiveError(
        "hom_factor(want_epi) requires a surjective g; codomain elements "
        "without preimage: " +
            join_elements(missing),
        std::move(missing));
  }
  for (element_type x = 0; x < h.domain().size(); ++x) {
    for (element_type y = x + 1; y < h.domain().size(); ++y) {
      if (h.map()[x] == h.map()[y] && g.map()[x] != g.map()[y]) {
        throw KernelContainmentError(
            "kernel of h is not contained in kernel of g: h(" +
                std::to_string(x) + ") = h(" + std::to_string(y) +
                ") but g disagrees",
            x, y);
      }
    }
  }

  // phi(c) = g at the minimum preimage of c under h
  std::vector<element_type> phi(h.codomain().size(), UNDEFINED);
  for (element_type x = 0; x < h.domain().size(); ++x) {
    if (phi[h.map()[x]] == UNDEFINED) {
      phi[h.map()[x]] = g.map()[x];
    }
  }
  Hom result = trusted_hom(h.codomain(), g.codomain(), std::move(phi));

  for (element_type x = 0; x < h.domain().size(); ++x) {
    if (result.map()[h.map()[x]] != g.map()[x]) {
      throw std::logic_error("hom_factor result does not commute");
    }
  }
  if (want_epi && !classify(result).surjective) {
    throw std::logic_error("hom_factor(want_epi) result not surjective");
  }
  return result;
}

}  // namespace ualg

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/congruence.hpp"
#include "ualg/hom.hpp"
#include "ualg/types.hpp"

namespace ualg {

// Algebra document (UTF-8, JSON):
//   { "name": optional string, "size": nat,
//     "signature": [ {"symbol": s, "arity": k}, ... ],
//     "operations": { s: [e0, e1, ...], ... } }
// Tables are flat row-major; nullary tables have length 1. The canonical
// serialization lists the signature in declaration order, keys operations in
// signature order, indents by 2 spaces and ends with a newline.
FiniteAlgebra parse_algebra(const std::string& text);
std::string serialize_algebra(const FiniteAlgebra& alg);

FiniteAlgebra load_algebra_file(const std::filesystem::path& path);

// Hom document: { "domain": ref, "codomain": ref, "map": [e0, ...] } where a
// ref is either a path (resolved relative to the document) or an inline
// algebra object. The map is run through check_hom; an incompatible map is a
// validation error naming the counterexample.
struct LoadedHom {
  Hom hom;
  std::string domain_ref;    // compact JSON of the original ref
  std::string codomain_ref;
};

LoadedHom load_hom_file(const std::filesystem::path& path);
std::string serialize_hom(const Hom& h, const std::string& domain_ref,
                          const std::string& codomain_ref);

// Congruence document: { "algebra": ref, "blocks": [[...], ...] } with blocks
// sorted by minimum element, elements ascending.
struct LoadedCongruence {
  Congruence congruence;
  std::string algebra_ref;
};

LoadedCongruence load_congruence_file(const std::filesystem::path& path);
std::string serialize_congruence(const Congruence& theta,
                                 const std::string& algebra_ref);

// Class document: { "algebras": [ref, ...] }.
std::vector<FiniteAlgebra> load_class_file(const std::filesystem::path& path);

// True when the file holds a class document rather than a single algebra.
bool is_class_document(const std::filesystem::path& path);

}  // namespace ualg

#pragma once

// Shared fixtures, generators and independent oracles for the test suites.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/congruence.hpp"
#include "ualg/hom.hpp"
#include "ualg/term.hpp"

namespace ualg::test {

using Rng = std::mt19937_64;

// Mod-2 addition on {0,1} under the binary symbol "+".
inline FiniteAlgebra z2() {
  return FiniteAlgebra(Signature({{"+", 2}}), 2, {{0, 1, 1, 0}}, "z2");
}

// Mod-n addition under "+".
inline FiniteAlgebra zmod(std::size_t n) {
  std::vector<element_type> table;
  table.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      table.push_back((x + y) % n);
    }
  }
  return FiniteAlgebra(Signature({{"+", 2}}), n, {std::move(table)},
                       "z" + std::to_string(n));
}

// Two-element meet semilattice, same signature as z2 so the two compare.
inline FiniteAlgebra m2() {
  return FiniteAlgebra(Signature({{"+", 2}}), 2, {{0, 0, 0, 1}}, "m2");
}

// z2 extended with a nullary constant c = 0.
inline FiniteAlgebra z2_with_constant() {
  return FiniteAlgebra(Signature({{"+", 2}, {"c", 0}}), 2,
                       {{0, 1, 1, 0}, {0}});
}

inline element_type random_element(Rng& rng, const FiniteAlgebra& a) {
  return std::uniform_int_distribution<element_type>(0, a.size() - 1)(rng);
}

inline std::vector<element_type> random_env(Rng& rng, const FiniteAlgebra& a,
                                            std::size_t nvars) {
  std::vector<element_type> env(nvars);
  for (auto& e : env) {
    e = random_element(rng, a);
  }
  return env;
}

// Random algebra with <= max_symbols symbols of arity <= max_arity over a
// fixed symbol pool, so independently drawn algebras often share signatures.
inline FiniteAlgebra random_algebra(Rng& rng, std::size_t max_size,
                                    std::size_t max_symbols = 2,
                                    std::size_t max_arity = 2,
                                    bool allow_nullary = false) {
  static const char* kNames[] = {"f", "g", "h"};
  const std::size_t size =
      std::uniform_int_distribution<std::size_t>(1, max_size)(rng);
  const std::size_t nsym =
      std::uniform_int_distribution<std::size_t>(1, max_symbols)(rng);
  std::vector<OperationSymbol> symbols;
  for (std::size_t s = 0; s < nsym; ++s) {
    const std::size_t lo = allow_nullary ? 0 : 1;
    symbols.push_back(
        {kNames[s],
         std::uniform_int_distribution<std::size_t>(lo, max_arity)(rng)});
  }
  Signature sig(symbols);
  std::vector<std::vector<element_type>> tables;
  for (std::size_t s = 0; s < sig.count(); ++s) {
    std::vector<element_type> table(table_size(size, sig.arity(s)));
    for (auto& e : table) {
      e = std::uniform_int_distribution<element_type>(0, size - 1)(rng);
    }
    tables.push_back(std::move(table));
  }
  return FiniteAlgebra(std::move(sig), size, std::move(tables));
}

// Random algebra over a caller-fixed signature.
inline FiniteAlgebra random_algebra_over(Rng& rng, const Signature& sig,
                                         std::size_t max_size) {
  const std::size_t size =
      std::uniform_int_distribution<std::size_t>(1, max_size)(rng);
  std::vector<std::vector<element_type>> tables;
  for (std::size_t s = 0; s < sig.count(); ++s) {
    std::vector<element_type> table(table_size(size, sig.arity(s)));
    for (auto& e : table) {
      e = std::uniform_int_distribution<element_type>(0, size - 1)(rng);
    }
    tables.push_back(std::move(table));
  }
  return FiniteAlgebra(sig, size, std::move(tables));
}

// Random term of height <= depth; requires nvars > 0 or a nullary symbol.
inline Term random_term(Rng& rng, const Signature& sig, std::size_t nvars,
                        std::size_t depth) {
  std::vector<std::size_t> leaves;
  std::vector<std::size_t> inner;
  for (std::size_t s = 0; s < sig.count(); ++s) {
    (sig.arity(s) == 0 ? leaves : inner).push_back(s);
  }
  const std::size_t leaf_count = nvars + leaves.size();
  if (depth == 0 || inner.empty() ||
      std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
    const std::size_t pick =
        std::uniform_int_distribution<std::size_t>(0, leaf_count - 1)(rng);
    if (pick < nvars) {
      return Term::var(pick);
    }
    return Term::node(sig.name(leaves[pick - nvars]), {});
  }
  const std::size_t s = inner[std::uniform_int_distribution<std::size_t>(
      0, inner.size() - 1)(rng)];
  std::vector<Term> children;
  for (std::size_t j = 0; j < sig.arity(s); ++j) {
    children.push_back(random_term(rng, sig, nvars, depth - 1));
  }
  return Term::node(sig.name(s), std::move(children));
}

// All partitions of {0..n-1} as restricted-growth label vectors.
inline std::vector<std::vector<element_type>> all_partitions(std::size_t n) {
  std::vector<std::vector<element_type>> out;
  std::vector<element_type> labels(n, 0);
  const auto recurse = [&](auto&& self, std::size_t next) -> void {
    if (next == n) {
      out.push_back(labels);
      return;
    }
    const element_type max_used =
        *std::max_element(labels.begin(), labels.begin() + next);
    for (element_type v = 0; v <= max_used + 1; ++v) {
      labels[next] = v;
      self(self, next + 1);
    }
  };
  if (n > 0) {
    recurse(recurse, 1);
  }
  return out;
}

inline std::vector<std::vector<element_type>> blocks_from_labels(
    const std::vector<element_type>& labels) {
  std::vector<std::vector<element_type>> blocks;
  for (element_type x = 0; x < labels.size(); ++x) {
    if (labels[x] >= blocks.size()) {
      blocks.resize(labels[x] + 1);
    }
    blocks[labels[x]].push_back(x);
  }
  return blocks;
}

// All congruences of `a`, via exhaustive partition enumeration. Independent
// route into check_congruence; also the pool backing random_congruence.
inline std::vector<Congruence> all_congruences(const FiniteAlgebra& a) {
  std::vector<Congruence> out;
  for (const auto& labels : all_partitions(a.size())) {
    CongruenceCheck c = check_congruence(a, blocks_from_labels(labels));
    if (c.ok()) {
      out.push_back(*std::move(c.congruence));
    }
  }
  return out;
}

inline Congruence random_congruence(Rng& rng, const FiniteAlgebra& a) {
  auto all = all_congruences(a);
  const std::size_t pick =
      std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng);
  return all[pick];
}

// Random verified hom with domain of size <= max_size. Quotient projections
// guarantee a supply; searched homs and compositions add variety.
inline Hom random_hom(Rng& rng, std::size_t max_size) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const int strategy = std::uniform_int_distribution<int>(0, 3)(rng);
    if (strategy == 0 || strategy == 3) {
      const FiniteAlgebra a = random_algebra(rng, max_size);
      Hom projection = quotient(random_congruence(rng, a)).projection;
      if (strategy == 3) {
        Hom next = quotient(random_congruence(rng, projection.codomain()))
                       .projection;
        return compose_hom(projection, next);
      }
      return projection;
    }
    const FiniteAlgebra a = random_algebra(rng, max_size);
    const FiniteAlgebra b =
        strategy == 1 ? random_algebra_over(rng, a.signature(), max_size)
                      : a;
    HomSearchOptions options;
    options.limit = 16;
    auto found = search_homs(a, b, options);
    if (!found.empty()) {
      const std::size_t pick =
          std::uniform_int_distribution<std::size_t>(0, found.size() - 1)(rng);
      return found[pick];
    }
  }
  // constant maps onto a one-element algebra always exist; the total
  // partition is enumerated first
  const FiniteAlgebra a = random_algebra(rng, max_size);
  return quotient(all_congruences(a).front()).projection;
}

// Random surjective verified hom out of a given algebra (a quotient
// projection).
inline Hom random_epi_from(Rng& rng, const FiniteAlgebra& a) {
  return quotient(random_congruence(rng, a)).projection;
}

// Random verified hom out of a given algebra; searched when possible, with a
// quotient projection as the fallback.
inline Hom random_hom_from(Rng& rng, const FiniteAlgebra& a) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    const FiniteAlgebra b = random_algebra_over(rng, a.signature(), a.size());
    HomSearchOptions options;
    options.limit = 8;
    auto found = search_homs(a, b, options);
    if (!found.empty()) {
      const std::size_t pick =
          std::uniform_int_distribution<std::size_t>(0, found.size() - 1)(rng);
      return found[pick];
    }
  }
  return random_epi_from(rng, a);
}

// Random surjective verified hom (a quotient projection).
inline Hom random_epi(Rng& rng, std::size_t max_size) {
  const FiniteAlgebra a = random_algebra(rng, max_size);
  return quotient(random_congruence(rng, a)).projection;
}

}  // namespace ualg::test

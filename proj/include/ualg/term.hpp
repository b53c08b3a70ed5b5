#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/signature.hpp"
#include "ualg/types.hpp"

namespace ualg {

// A term over a signature and variables x0, x1, ...: either a variable or an
// operation symbol applied to arity-many subterms. Leaves (variables and
// nullary symbols) have height 0.
class Term {
 public:
  static Term var(std::size_t index);
  static Term node(std::string symbol, std::vector<Term> children);

  bool is_var() const noexcept { return var_ != UNDEFINED; }
  std::size_t var_index() const;
  const std::string& symbol() const;
  const std::vector<Term>& children() const;
  std::size_t height() const noexcept { return height_; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  Term() = default;

  std::size_t var_ = UNDEFINED;  // UNDEFINED marks an operation node
  std::string symbol_;
  std::vector<Term> children_;
  std::size_t height_ = 0;
};

inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }

// Total order used by enumerate_terms: height, then variables by index before
// nodes, then symbol position in the signature, then children
// lexicographically. Returns <0, 0 or >0.
int compare_terms(const Signature& sig, const Term& a, const Term& b);

// Grammar (whitespace-insensitive):
//   term := VAR | SYM | SYM "(" term ("," term)* ")"
//   VAR  := "x" DIGITS
// Nullary symbols are written bare. Throws UalgError on syntax errors,
// unknown symbols, arity mismatches and variable indices >= nvars.
Term parse_term(const Signature& sig, std::size_t nvars, std::string_view text);

// Canonical printer: no whitespace, nullary symbols bare.
std::string print_term(const Term& t);

// Checks symbols, arities and variable indices; throws UalgError.
void validate_term(const Signature& sig, std::size_t nvars, const Term& t);

// Structural-recursion interpreter: variables look up the environment, nodes
// apply the algebra's operation to the interpreted children.
element_type interpret(const FiniteAlgebra& alg, const Term& t,
                       std::span<const element_type> env);

// The homomorphic extension of a variable assignment to all terms, written as
// its own recursion (tests compare it against interpret).
element_type free_lift(const FiniteAlgebra& alg,
                       std::span<const element_type> assignment, const Term& t);

// Simultaneous substitution: variable i is replaced by sigma[i].
Term substitute(const Term& t, std::span<const Term> sigma);

// Exactly the well-formed terms of height <= depth, in the order fixed by
// compare_terms. Empty iff nvars = 0 and the signature has no nullary symbol.
std::vector<Term> enumerate_terms(const Signature& sig, std::size_t nvars,
                                  std::size_t depth);

}  // namespace ualg

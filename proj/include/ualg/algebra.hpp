#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ualg/signature.hpp"
#include "ualg/types.hpp"

namespace ualg {

// Row-major index of an argument tuple: sum of args[i] * size^(k-1-i).
// A bijection between arity-k tuples over [0, size) and [0, size^k).
std::size_t flat_index(std::size_t size, std::span<const element_type> args);

// Inverse of flat_index.
std::vector<element_type> unflatten_index(std::size_t size, std::size_t arity,
                                          std::size_t index);

// size^arity, throwing UalgError when the table would be unreasonably large.
std::size_t table_size(std::size_t size, std::size_t arity);

struct ValidationIssue {
  std::string symbol;  // empty when the issue is not tied to a symbol
  std::optional<std::size_t> index;  // table position when applicable
  std::string reason;
};

std::string format_issues(const std::vector<ValidationIssue>& issues);

// Unvalidated algebra description, as read from a document.
struct RawAlgebra {
  std::optional<std::string> name;
  long long size = 0;
  std::vector<std::pair<std::string, long long>> signature;
  std::vector<std::pair<std::string, std::vector<long long>>> operations;
};

struct ValidationResult;

// A finite algebra: carrier {0..size-1} plus one row-major lookup table per
// signature symbol. Immutable; copies share storage.
class FiniteAlgebra {
 public:
  // Programmatic constructor; throws UalgError on any invariant violation.
  // `tables` is indexed by symbol position in the signature.
  FiniteAlgebra(Signature sig, std::size_t size,
                std::vector<std::vector<element_type>> tables,
                std::optional<std::string> name = std::nullopt);

  // Checks every invariant of `raw` and reports all violations.
  static ValidationResult validate(const RawAlgebra& raw);

  // Like validate but throws UalgError listing every violation.
  static FiniteAlgebra make(const RawAlgebra& raw);

  const Signature& signature() const noexcept { return d_->sig; }
  std::size_t size() const noexcept { return d_->size; }
  const std::optional<std::string>& name() const noexcept { return d_->name; }
  const std::vector<element_type>& table(std::size_t sym) const {
    return d_->tables.at(sym);
  }
  const std::vector<std::vector<element_type>>& tables() const noexcept {
    return d_->tables;
  }

  element_type apply(std::size_t sym, std::span<const element_type> args) const;
  element_type apply(std::string_view symbol,
                     std::span<const element_type> args) const;

  FiniteAlgebra with_name(std::optional<std::string> name) const;

 private:
  struct Data {
    std::optional<std::string> name;
    Signature sig;
    std::size_t size = 0;
    std::vector<std::vector<element_type>> tables;
  };

  std::shared_ptr<const Data> d_;
};

struct ValidationResult {
  std::optional<FiniteAlgebra> algebra;
  std::vector<ValidationIssue> issues;

  bool ok() const noexcept { return issues.empty(); }
};

// Structural equality of the mathematical content (signature, size, tables);
// the name is metadata and not compared.
bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b);
inline bool operator!=(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return !(a == b);
}

// Mixed-radix codec between factor tuples and product carrier elements;
// factor 0 is most significant.
struct ProductCodec {
  std::vector<std::size_t> sizes;

  std::size_t total() const;
  element_type encode(std::span<const element_type> tuple) const;
  std::vector<element_type> decode(element_type x) const;
};

struct ProductAlgebra {
  FiniteAlgebra algebra;
  ProductCodec codec;
};

// Componentwise product of a non-empty family over one signature.
ProductAlgebra product_algebra(const std::vector<FiniteAlgebra>& factors);

}  // namespace ualg

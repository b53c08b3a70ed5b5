#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ualg/types.hpp"

namespace ualg {

struct OperationSymbol {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const OperationSymbol&,
                         const OperationSymbol&) = default;
};

// An ordered list of operation symbols with finite arities. Names are unique,
// non-empty, and never of the form x<digits> (reserved for variables).
class Signature {
 public:
  Signature() = default;

  // Throws UalgError if any name invariant is violated.
  explicit Signature(std::vector<OperationSymbol> symbols);

  static bool valid_symbol_name(std::string_view name);

  const std::vector<OperationSymbol>& symbols() const noexcept {
    return symbols_;
  }
  std::size_t count() const noexcept { return symbols_.size(); }
  const std::string& name(std::size_t index) const {
    return symbols_.at(index).name;
  }
  std::size_t arity(std::size_t index) const { return symbols_.at(index).arity; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  // Like index_of but throws UalgError on an unknown symbol.
  std::size_t require_index(std::string_view name) const;

  std::size_t max_arity() const;
  bool has_nullary() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<OperationSymbol> symbols_;
};

}  // namespace ualg

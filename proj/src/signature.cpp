#include "ualg/signature.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace ualg {

Signature::Signature(std::vector<OperationSymbol> symbols)
    : symbols_(std::move(symbols)) {
  std::unordered_set<std::string> seen;
  for (const auto& sym : symbols_) {
    if (!valid_symbol_name(sym.name)) {
      throw UalgError("invalid operation symbol name \"" + sym.name + "\"");
    }
    if (!seen.insert(sym.name).second) {
      throw UalgError("duplicate operation symbol \"" + sym.name + "\"");
    }
  }
}

bool Signature::valid_symbol_name(std::string_view name) {
  if (name.empty()) {
    return false;
  }
  // x<digits> is reserved for variables
  if (name.size() >= 2 && name[0] == 'x' &&
      std::all_of(name.begin() + 1, name.end(),
                  [](unsigned char c) { return std::isdigit(c) != 0; })) {
    return false;
  }
  return true;
}

std::optional<std::size_t> Signature::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].name == name) {
      return i;
    }
  }
  return std::nullopt;
}

std::size_t Signature::require_index(std::string_view name) const {
  if (auto i = index_of(name)) {
    return *i;
  }
  throw UalgError("unknown operation symbol \"" + std::string(name) + "\"");
}

std::size_t Signature::max_arity() const {
  std::size_t m = 0;
  for (const auto& sym : symbols_) {
    m = std::max(m, sym.arity);
  }
  return m;
}

bool Signature::has_nullary() const {
  return std::any_of(symbols_.begin(), symbols_.end(),
                     [](const OperationSymbol& s) { return s.arity == 0; });
}

}  // namespace ualg

#include "ualg/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ualg {

namespace {

// Tables beyond this are rejected rather than allocated.
constexpr std::size_t kMaxTableEntries = std::size_t(1) << 26;

}  // namespace

std::size_t flat_index(std::size_t size, std::span<const element_type> args) {
  std::size_t index = 0;
  for (element_type a : args) {
    index = index * size + a;
  }
  return index;
}

std::vector<element_type> unflatten_index(std::size_t size, std::size_t arity,
                                          std::size_t index) {
  std::vector<element_type> args(arity, 0);
  for (std::size_t i = arity; i-- > 0;) {
    args[i] = index % size;
    index /= size;
  }
  return args;
}

std::size_t table_size(std::size_t size, std::size_t arity) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (size != 0 && n > kMaxTableEntries / size) {
      throw UalgError("operation table too large (size " +
                      std::to_string(size) + ", arity " +
                      std::to_string(arity) + ")");
    }
    n *= size;
  }
  return n;
}

std::string format_issues(const std::vector<ValidationIssue>& issues) {
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i > 0) {
      os << "\n";
    }
    const auto& issue = issues[i];
    if (!issue.symbol.empty()) {
      os << "symbol \"" << issue.symbol << "\"";
      if (issue.index) {
        os << " entry " << *issue.index;
      }
      os << ": ";
    }
    os << issue.reason;
  }
  return os.str();
}

FiniteAlgebra::FiniteAlgebra(Signature sig, std::size_t size,
                             std::vector<std::vector<element_type>> tables,
                             std::optional<std::string> name) {
  if (size == 0) {
    throw UalgError("algebra carrier must have size >= 1");
  }
  if (tables.size() != sig.count()) {
    throw UalgError("expected one table per signature symbol");
  }
  for (std::size_t s = 0; s < sig.count(); ++s) {
    const std::size_t want = table_size(size, sig.arity(s));
    if (tables[s].size() != want) {
      throw UalgError("table for \"" + sig.name(s) + "\" has " +
                      std::to_string(tables[s].size()) + " entries, expected " +
                      std::to_string(want));
    }
    for (element_type e : tables[s]) {
      if (e >= size) {
        throw UalgError("table entry out of range for \"" + sig.name(s) +
                        "\"");
      }
    }
  }
  d_ = std::make_shared<const Data>(Data{std::move(name), std::move(sig), size,
                                         std::move(tables)});
}

ValidationResult FiniteAlgebra::validate(const RawAlgebra& raw) {
  ValidationResult result;
  auto issue = [&result](std::string symbol, std::optional<std::size_t> index,
                         std::string reason) {
    result.issues.push_back(
        {std::move(symbol), index, std::move(reason)});
  };

  if (raw.size < 1) {
    issue("", std::nullopt,
          "size must be at least 1, got " + std::to_string(raw.size));
  }

  std::map<std::string, std::size_t> arities;
  for (const auto& [name, arity] : raw.signature) {
    if (!Signature::valid_symbol_name(name)) {
      issue(name, std::nullopt,
            name.empty() ? "symbol name must be non-empty"
                         : "symbol name collides with the variable pattern "
                           "or is otherwise invalid");
      continue;
    }
    if (arities.count(name) > 0) {
      issue(name, std::nullopt, "duplicate symbol in signature");
      continue;
    }
    if (arity < 0) {
      issue(name, std::nullopt, "arity must be a natural number");
      continue;
    }
    arities.emplace(name, static_cast<std::size_t>(arity));
  }

  std::map<std::string, const std::vector<long long>*> given;
  for (const auto& [name, entries] : raw.operations) {
    if (arities.count(name) == 0) {
      issue(name, std::nullopt, "operation for a symbol not in the signature");
      continue;
    }
    if (!given.emplace(name, &entries).second) {
      issue(name, std::nullopt, "duplicate operation table");
    }
  }
  for (const auto& [name, arity] : arities) {
    if (given.count(name) == 0) {
      issue(name, std::nullopt, "missing operation table");
    }
  }

  if (raw.size >= 1) {
    const auto size = static_cast<std::size_t>(raw.size);
    for (const auto& [name, entries] : given) {
      std::size_t want = 0;
      try {
        want = table_size(size, arities.at(name));
      } catch (const UalgError& e) {
        issue(name, std::nullopt, e.what());
        continue;
      }
      if (entries->size() != want) {
        issue(name, std::nullopt,
              "table has " + std::to_string(entries->size()) +
                  " entries, expected " + std::to_string(want));
      }
      for (std::size_t i = 0; i < entries->size(); ++i) {
        const long long e = (*entries)[i];
        if (e < 0 || static_cast<std::size_t>(e) >= size) {
          issue(name, i,
                "entry " + std::to_string(e) + " outside carrier [0, " +
                    std::to_string(size) + ")");
        }
      }
    }
  }

  if (!result.issues.empty()) {
    return result;
  }

  std::vector<OperationSymbol> symbols;
  symbols.reserve(raw.signature.size());
  std::vector<std::vector<element_type>> tables;
  for (const auto& [name, arity] : raw.signature) {
    symbols.push_back({name, static_cast<std::size_t>(arity)});
    const auto& entries = *given.at(name);
    std::vector<element_type> table(entries.size());
    std::transform(entries.begin(), entries.end(), table.begin(),
                   [](long long e) { return static_cast<element_type>(e); });
    tables.push_back(std::move(table));
  }
  result.algebra = FiniteAlgebra(Signature(std::move(symbols)),
                                 static_cast<std::size_t>(raw.size),
                                 std::move(tables), raw.name);
  return result;
}

FiniteAlgebra FiniteAlgebra::make(const RawAlgebra& raw) {
  ValidationResult result = validate(raw);
  if (!result.ok()) {
    throw UalgError("invalid algebra:\n" + format_issues(result.issues));
  }
  return *std::move(result.algebra);
}

element_type FiniteAlgebra::apply(std::size_t sym,
                                  std::span<const element_type> args) const {
  if (sym >= d_->sig.count()) {
    throw UalgError("operation symbol index out of range");
  }
  if (args.size() != d_->sig.arity(sym)) {
    throw UalgError("arity mismatch for \"" + d_->sig.name(sym) + "\": got " +
                    std::to_string(args.size()) + " arguments, expected " +
                    std::to_string(d_->sig.arity(sym)));
  }
  for (element_type a : args) {
    if (a >= d_->size) {
      throw UalgError("argument out of range for \"" + d_->sig.name(sym) +
                      "\"");
    }
  }
  return d_->tables[sym][flat_index(d_->size, args)];
}

element_type FiniteAlgebra::apply(std::string_view symbol,
                                  std::span<const element_type> args) const {
  return apply(d_->sig.require_index(symbol), args);
}

FiniteAlgebra FiniteAlgebra::with_name(std::optional<std::string> name) const {
  FiniteAlgebra copy = *this;
  copy.d_ = std::make_shared<const Data>(
      Data{std::move(name), d_->sig, d_->size, d_->tables});
  return copy;
}

bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return a.size() == b.size() && a.signature() == b.signature() &&
         a.tables() == b.tables();
}

std::size_t ProductCodec::total() const {
  std::size_t n = 1;
  for (std::size_t s : sizes) {
    n *= s;
  }
  return n;
}

element_type ProductCodec::encode(std::span<const element_type> tuple) const {
  if (tuple.size() != sizes.size()) {
    throw UalgError("tuple length does not match the factor count");
  }
  element_type x = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (tuple[i] >= sizes[i]) {
      throw UalgError("tuple component out of range for factor " +
                      std::to_string(i));
    }
    x = x * sizes[i] + tuple[i];
  }
  return x;
}

std::vector<element_type> ProductCodec::decode(element_type x) const {
  if (x >= total()) {
    throw UalgError("element out of range for the product carrier");
  }
  std::vector<element_type> tuple(sizes.size(), 0);
  for (std::size_t i = sizes.size(); i-- > 0;) {
    tuple[i] = x % sizes[i];
    x /= sizes[i];
  }
  return tuple;
}

ProductAlgebra product_algebra(const std::vector<FiniteAlgebra>& factors) {
  if (factors.empty()) {
    throw UalgError("product of the empty family is not defined");
  }
  const Signature& sig = factors.front().signature();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (factors[i].signature() != sig) {
      throw UalgError("product factors must share one signature");
    }
  }

  ProductCodec codec;
  codec.sizes.reserve(factors.size());
  std::size_t total = 1;
  for (const auto& f : factors) {
    codec.sizes.push_back(f.size());
    if (total > kMaxTableEntries / f.size()) {
      throw UalgError("product carrier too large");
    }
    total *= f.size();
  }

  std::vector<std::vector<element_type>> tables(sig.count());
  std::vector<element_type> factor_args;
  std::vector<element_type> results(factors.size(), 0);
  for (std::size_t s = 0; s < sig.count(); ++s) {
    const std::size_t k = sig.arity(s);
    const std::size_t entries = table_size(total, k);
    tables[s].reserve(entries);
    std::vector<std::vector<element_type>> decoded(k);
    for (std::size_t t = 0; t < entries; ++t) {
      const auto args = unflatten_index(total, k, t);
      for (std::size_t j = 0; j < k; ++j) {
        decoded[j] = codec.decode(args[j]);
      }
      for (std::size_t i = 0; i < factors.size(); ++i) {
        factor_args.clear();
        for (std::size_t j = 0; j < k; ++j) {
          factor_args.push_back(decoded[j][i]);
        }
        results[i] = factors[i].apply(s, factor_args);
      }
      tables[s].push_back(codec.encode(results));
    }
  }

  return {FiniteAlgebra(sig, total, std::move(tables)), std::move(codec)};
}

}  // namespace ualg

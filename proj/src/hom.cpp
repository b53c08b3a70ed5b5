#include "ualg/hom.hpp"

#include <algorithm>
#include <sstream>

namespace ualg {

namespace {

std::string format_tuple(std::span<const element_type> args) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) {
      os << ',';
    }
    os << args[i];
  }
  os << ')';
  return os.str();
}

void require_verified(const Hom& h, const char* what) {
  if (!h.verified()) {
    throw UalgError(std::string(what) + " requires a verified hom");
  }
}

void check_map_shape(const FiniteAlgebra& domain,
                     const FiniteAlgebra& codomain,
                     const std::vector<element_type>& map) {
  if (domain.signature() != codomain.signature()) {
    throw UalgError("homs are only defined between algebras over one "
                    "signature");
  }
  if (map.size() != domain.size()) {
    throw UalgError("map has " + std::to_string(map.size()) +
                    " entries, expected " + std::to_string(domain.size()));
  }
  for (element_type e : map) {
    if (e >= codomain.size()) {
      throw UalgError("map entry " + std::to_string(e) +
                      " outside the codomain carrier");
    }
  }
}

// First violating (symbol, tuple) in signature / flat-index order.
std::optional<HomCounterexample> find_hom_violation(
    const FiniteAlgebra& domain, const FiniteAlgebra& codomain,
    const std::vector<element_type>& map) {
  const Signature& sig = domain.signature();
  std::vector<element_type> mapped;
  for (std::size_t s = 0; s < sig.count(); ++s) {
    const std::size_t k = sig.arity(s);
    const std::size_t entries = table_size(domain.size(), k);
    for (std::size_t t = 0; t < entries; ++t) {
      const auto args = unflatten_index(domain.size(), k, t);
      mapped.resize(k);
      for (std::size_t j = 0; j < k; ++j) {
        mapped[j] = map[args[j]];
      }
      const element_type lhs = map[domain.apply(s, args)];
      const element_type rhs = codomain.apply(s, mapped);
      if (lhs != rhs) {
        return HomCounterexample{sig.name(s), args, lhs, rhs};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Hom::Hom(FiniteAlgebra domain, FiniteAlgebra codomain,
         std::vector<element_type> map, bool verified)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      map_(std::move(map)),
      verified_(verified) {}

Hom Hom::unchecked(FiniteAlgebra domain, FiniteAlgebra codomain,
                   std::vector<element_type> map) {
  check_map_shape(domain, codomain, map);
  return Hom(std::move(domain), std::move(codomain), std::move(map), false);
}

bool same_map(const Hom& a, const Hom& b) { return a.map() == b.map(); }

HomCheck check_hom(const FiniteAlgebra& domain, const FiniteAlgebra& codomain,
                   std::vector<element_type> map) {
  check_map_shape(domain, codomain, map);
  if (auto violation = find_hom_violation(domain, codomain, map)) {
    return {std::nullopt, std::move(violation)};
  }
  return {Hom(domain, codomain, std::move(map), true), std::nullopt};
}

Hom trusted_hom(FiniteAlgebra domain, FiniteAlgebra codomain,
                std::vector<element_type> map) {
  check_map_shape(domain, codomain, map);
  if (debug_recheck_enabled()) {
    if (auto violation = find_hom_violation(domain, codomain, map)) {
      throw std::logic_error(
          "recheck of a theorem-constructed hom failed at \"" +
          violation->symbol + "\" " + format_tuple(violation->args));
    }
  }
  return Hom(std::move(domain), std::move(codomain), std::move(map), true);
}

Hom identity_hom(const FiniteAlgebra& alg) {
  std::vector<element_type> map(alg.size());
  for (element_type x = 0; x < alg.size(); ++x) {
    map[x] = x;
  }
  return trusted_hom(alg, alg, std::move(map));
}

Hom compose_hom(const Hom& g, const Hom& h) {
  require_verified(g, "compose_hom");
  require_verified(h, "compose_hom");
  if (g.codomain() != h.domain()) {
    throw UalgError("compose_hom: codomain of the first hom differs from the "
                    "domain of the second");
  }
  std::vector<element_type> map(g.map().size());
  for (std::size_t x = 0; x < map.size(); ++x) {
    map[x] = h.map()[g.map()[x]];
  }
  return trusted_hom(g.domain(), h.codomain(), std::move(map));
}

MorphismKind classify(const Hom& h) {
  std::vector<char> hit(h.codomain().size(), 0);
  bool injective = true;
  std::size_t covered = 0;
  for (element_type v : h.map()) {
    if (hit[v]) {
      injective = false;
    } else {
      hit[v] = 1;
      ++covered;
    }
  }
  return {injective, covered == h.codomain().size()};
}

std::vector<element_type> equalizer(const Hom& g, const Hom& h) {
  if (g.domain() != h.domain() || g.codomain() != h.codomain()) {
    throw UalgError("equalizer requires parallel homs");
  }
  std::vector<element_type> agree;
  for (element_type x = 0; x < g.domain().size(); ++x) {
    if (g.map()[x] == h.map()[x]) {
      agree.push_back(x);
    }
  }
  return agree;
}

std::vector<std::vector<element_type>> kernel_pairs(const Hom& h) {
  require_verified(h, "kernel_pairs");
  std::vector<std::vector<element_type>> blocks;
  std::vector<std::size_t> block_of_value(h.codomain().size(), SIZE_MAX);
  for (element_type x = 0; x < h.domain().size(); ++x) {
    const element_type v = h.map()[x];
    if (block_of_value[v] == SIZE_MAX) {
      block_of_value[v] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of_value[v]].push_back(x);
  }
  // ascending scan already orders blocks by minimum element
  return blocks;
}

ImageAlgebra image_algebra(const Hom& h) {
  require_verified(h, "image_algebra");
  std::vector<element_type> subset = h.map();
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());

  const FiniteAlgebra& cod = h.codomain();
  std::vector<std::size_t> new_index(cod.size(), SIZE_MAX);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    new_index[subset[i]] = i;
  }

  const Signature& sig = cod.signature();
  const std::size_t n = subset.size();
  std::vector<std::vector<element_type>> tables(sig.count());
  std::vector<element_type> orig;
  for (std::size_t s = 0; s < sig.count(); ++s) {
    const std::size_t k = sig.arity(s);
    const std::size_t entries = table_size(n, k);
    tables[s].reserve(entries);
    for (std::size_t t = 0; t < entries; ++t) {
      const auto args = unflatten_index(n, k, t);
      orig.resize(k);
      for (std::size_t j = 0; j < k; ++j) {
        orig[j] = subset[args[j]];
      }
      const element_type r = cod.apply(s, orig);
      if (new_index[r] == SIZE_MAX) {
        throw std::logic_error("image of a verified hom is not closed");
      }
      tables[s].push_back(new_index[r]);
    }
  }
  FiniteAlgebra image(sig, n, std::move(tables));

  Hom inclusion = trusted_hom(image, cod, subset);
  std::vector<element_type> corestrict(h.domain().size());
  for (element_type x = 0; x < h.domain().size(); ++x) {
    corestrict[x] = new_index[h.map()[x]];
  }
  Hom corestriction = trusted_hom(h.domain(), image, std::move(corestrict));
  return {std::move(subset), std::move(image), std::move(inclusion),
          std::move(corestriction)};
}

namespace {

// Backtracking state for search_homs. Propagation keeps every fully decided
// operation tuple consistent, so complete assignments are homs by
// construction.
class HomSearcher {
 public:
  HomSearcher(const FiniteAlgebra& domain, const FiniteAlgebra& codomain,
              const HomSearchOptions& options)
      : dom_(domain),
        cod_(codomain),
        opt_(options),
        map_(domain.size(), UNDEFINED),
        cover_count_(codomain.size(), 0) {}

  std::vector<Hom> run() {
    for (const auto& [pos, value] : opt_.fixed) {
      if (pos >= dom_.size()) {
        throw UalgError("fixed position out of range");
      }
      if (value >= cod_.size()) {
        throw UalgError("fixed value out of range");
      }
    }
    const std::size_t checkpoint = trail_.size();
    bool ok = true;
    for (const auto& [pos, value] : opt_.fixed) {
      if (map_[pos] == value) {
        continue;
      }
      if (!assign(pos, value) || !propagate()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      dfs();
    }
    undo_to(checkpoint);
    return std::move(results_);
  }

 private:
  bool assign(element_type pos, element_type value) {
    if (map_[pos] != UNDEFINED) {
      return map_[pos] == value;
    }
    if (opt_.require_injective && cover_count_[value] > 0) {
      return false;
    }
    map_[pos] = value;
    if (cover_count_[value]++ == 0) {
      ++distinct_;
    }
    ++assigned_;
    trail_.push_back(pos);
    return true;
  }

  // Scans every operation tuple whose arguments are all decided; checks the
  // forced value or assigns it. Runs to a fixpoint.
  bool propagate() {
    const Signature& sig = dom_.signature();
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < sig.count(); ++s) {
        const std::size_t k = sig.arity(s);
        const std::size_t entries = table_size(dom_.size(), k);
        for (std::size_t t = 0; t < entries; ++t) {
          const auto args = unflatten_index(dom_.size(), k, t);
          mapped_.resize(k);
          bool decided = true;
          for (std::size_t j = 0; j < k; ++j) {
            if (map_[args[j]] == UNDEFINED) {
              decided = false;
              break;
            }
            mapped_[j] = map_[args[j]];
          }
          if (!decided) {
            continue;
          }
          const element_type r = dom_.apply(s, args);
          const element_type want = cod_.apply(s, mapped_);
          if (map_[r] == UNDEFINED) {
            if (!assign(r, want)) {
              return false;
            }
            changed = true;
          } else if (map_[r] != want) {
            return false;
          }
        }
      }
    }
    if (opt_.require_surjective &&
        cod_.size() - distinct_ > dom_.size() - assigned_) {
      return false;
    }
    return true;
  }

  void undo_to(std::size_t checkpoint) {
    while (trail_.size() > checkpoint) {
      const element_type pos = trail_.back();
      trail_.pop_back();
      const element_type value = map_[pos];
      map_[pos] = UNDEFINED;
      --assigned_;
      if (--cover_count_[value] == 0) {
        --distinct_;
      }
    }
  }

  void dfs() {
    if (results_.size() >= opt_.limit) {
      return;
    }
    element_type pos = UNDEFINED;
    for (element_type x = 0; x < dom_.size(); ++x) {
      if (map_[x] == UNDEFINED) {
        pos = x;
        break;
      }
    }
    if (pos == UNDEFINED) {
      if (opt_.require_surjective && distinct_ != cod_.size()) {
        return;
      }
      results_.push_back(trusted_hom(dom_, cod_, map_));
      return;
    }
    for (element_type v = 0; v < cod_.size(); ++v) {
      const std::size_t checkpoint = trail_.size();
      if (assign(pos, v) && propagate()) {
        dfs();
      }
      undo_to(checkpoint);
      if (results_.size() >= opt_.limit) {
        return;
      }
    }
  }

  const FiniteAlgebra& dom_;
  const FiniteAlgebra& cod_;
  const HomSearchOptions& opt_;
  std::vector<element_type> map_;
  std::vector<std::size_t> cover_count_;
  std::size_t distinct_ = 0;
  std::size_t assigned_ = 0;
  std::vector<element_type> trail_;
  std::vector<element_type> mapped_;
  std::vector<Hom> results_;
};

}  // namespace

std::vector<Hom> search_homs(const FiniteAlgebra& domain,
                             const FiniteAlgebra& codomain,
                             const HomSearchOptions& options) {
  if (domain.signature() != codomain.signature()) {
    throw UalgError("homs are only defined between algebras over one "
                    "signature");
  }
  return HomSearcher(domain, codomain, options).run();
}

Hom tuple_hom_into_product(const FiniteAlgebra& domain,
                           const std::vector<FiniteAlgebra>& family,
                           const std::vector<Hom>& homs) {
  if (family.empty() || homs.size() != family.size()) {
    throw UalgError("tuple_hom_into_product requires one hom per factor");
  }
  for (std::size_t i = 0; i < homs.size(); ++i) {
    require_verified(homs[i], "tuple_hom_into_product");
    if (homs[i].domain() != domain) {
      throw UalgError("tuple_hom_into_product: hom " + std::to_string(i) +
                      " is not defined on the shared domain");
    }
    if (homs[i].codomain() != family[i]) {
      throw UalgError("tuple_hom_into_product: hom " + std::to_string(i) +
                      " does not land in factor " + std::to_string(i));
    }
  }
  ProductAlgebra product = product_algebra(family);
  std::vector<element_type> map(domain.size());
  std::vector<element_type> tuple(family.size());
  for (element_type a = 0; a < domain.size(); ++a) {
    for (std::size_t i = 0; i < homs.size(); ++i) {
      tuple[i] = homs[i].map()[a];
    }
    map[a] = product.codec.encode(tuple);
  }
  return trusted_hom(domain, std::move(product.algebra), std::move(map));
}

Hom factorwise_product_hom(const std::vector<FiniteAlgebra>& domain_family,
                           const std::vector<FiniteAlgebra>& codomain_family,
                           const std::vector<Hom>& homs) {
  if (domain_family.empty() || domain_family.size() != codomain_family.size() ||
      homs.size() != domain_family.size()) {
    throw UalgError("factorwise_product_hom requires equal-length families "
                    "and one hom per index");
  }
  for (std::size_t i = 0; i < homs.size(); ++i) {
    require_verified(homs[i], "factorwise_product_hom");
    if (homs[i].domain() != domain_family[i] ||
        homs[i].codomain() != codomain_family[i]) {
      throw UalgError("factorwise_product_hom: hom " + std::to_string(i) +
                      " does not match the families at index " +
                      std::to_string(i));
    }
  }
  ProductAlgebra pa = product_algebra(domain_family);
  ProductAlgebra pb = product_algebra(codomain_family);
  std::vector<element_type> map(pa.algebra.size());
  std::vector<element_type> tuple(homs.size());
  for (element_type x = 0; x < pa.algebra.size(); ++x) {
    const auto decoded = pa.codec.decode(x);
    for (std::size_t i = 0; i < homs.size(); ++i) {
      tuple[i] = homs[i].map()[decoded[i]];
    }
    map[x] = pb.codec.encode(tuple);
  }
  return trusted_hom(std::move(pa.algebra), std::move(pb.algebra),
                     std::move(map));
}

Hom projection_hom(const std::vector<FiniteAlgebra>& family, std::size_t i) {
  if (i >= family.size()) {
    throw UalgError("projection index out of range");
  }
  ProductAlgebra product = product_algebra(family);
  std::vector<element_type> map(product.algebra.size());
  for (element_type x = 0; x < product.algebra.size(); ++x) {
    map[x] = product.codec.decode(x)[i];
  }
  return trusted_hom(std::move(product.algebra), family[i], std::move(map));
}

}  // namespace ualg

#include "ualg/congruence.hpp"

#include <algorithm>
#include <map>

namespace ualg {

std::size_t Congruence::block_count() const {
  std::size_t count = 0;
  for (element_type x = 0; x < labels_.size(); ++x) {
    if (labels_[x] == x) {
      ++count;
    }
  }
  return count;
}

std::vector<std::vector<element_type>> Congruence::blocks() const {
  std::map<element_type, std::vector<element_type>> by_label;
  for (element_type x = 0; x < labels_.size(); ++x) {
    by_label[labels_[x]].push_back(x);
  }
  std::vector<std::vector<element_type>> blocks;
  blocks.reserve(by_label.size());
  for (auto& [label, members] : by_label) {
    blocks.push_back(std::move(members));
  }
  return blocks;
}

std::vector<element_type> normalize_labels(
    const std::vector<element_type>& labels) {
  std::map<element_type, element_type> first_seen;
  std::vector<element_type> normalized(labels.size());
  for (element_type x = 0; x < labels.size(); ++x) {
    auto [it, inserted] = first_seen.emplace(labels[x], x);
    normalized[x] = it->second;
  }
  return normalized;
}

namespace {

// Every tuple is compared against its representative tuple; compatibility for
// arbitrary related pairs follows because both sides reduce to the same
// representative.
std::optional<CompatibilityWitness> find_incompatibility(
    const FiniteAlgebra& alg, const std::vector<element_type>& labels) {
  const Signature& sig = alg.signature();
  std::vector<element_type> reps;
  for (std::size_t s = 0; s < sig.count(); ++s) {
    const std::size_t k = sig.arity(s);
    const std::size_t entries = table_size(alg.size(), k);
    for (std::size_t t = 0; t < entries; ++t) {
      const auto args = unflatten_index(alg.size(), k, t);
      reps.resize(k);
      bool canonical = true;
      for (std::size_t j = 0; j < k; ++j) {
        reps[j] = labels[args[j]];
        canonical = canonical && reps[j] == args[j];
      }
      if (canonical) {
        continue;
      }
      if (labels[alg.apply(s, args)] != labels[alg.apply(s, reps)]) {
        return CompatibilityWitness{sig.name(s), args,
                                    std::vector<element_type>(reps.begin(),
                                                              reps.end())};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

CongruenceCheck check_congruence(
    const FiniteAlgebra& alg,
    const std::vector<std::vector<element_type>>& blocks) {
  std::vector<element_type> labels(alg.size(), UNDEFINED);
  for (const auto& block : blocks) {
    if (block.empty()) {
      throw UalgError("not a partition: empty block");
    }
    const element_type rep = *std::min_element(block.begin(), block.end());
    for (element_type x : block) {
      if (x >= alg.size()) {
        throw UalgError("not a partition: element " + std::to_string(x) +
                        " outside the carrier");
      }
      if (labels[x] != UNDEFINED) {
        throw UalgError("not a partition: element " + std::to_string(x) +
                        " appears in two blocks");
      }
      labels[x] = rep;
    }
  }
  for (element_type x = 0; x < alg.size(); ++x) {
    if (labels[x] == UNDEFINED) {
      throw UalgError("not a partition: element " + std::to_string(x) +
                      " is missing");
    }
  }

  if (auto witness = find_incompatibility(alg, labels)) {
    return {std::nullopt, std::move(witness)};
  }
  return {Congruence(alg, std::move(labels)), std::nullopt};
}

Congruence kernel_congruence(const Hom& h) {
  if (!h.verified()) {
    throw UalgError("kernel_congruence requires a verified hom");
  }
  std::vector<element_type> first_with_value(h.codomain().size(), UNDEFINED);
  std::vector<element_type> labels(h.domain().size());
  for (element_type x = 0; x < h.domain().size(); ++x) {
    const element_type v = h.map()[x];
    if (first_with_value[v] == UNDEFINED) {
      first_with_value[v] = x;
    }
    labels[x] = first_with_value[v];
  }
  if (debug_recheck_enabled()) {
    if (auto witness = find_incompatibility(h.domain(), labels)) {
      throw std::logic_error("kernel of a verified hom is not compatible at \"" +
                             witness->symbol + "\"");
    }
  }
  return Congruence(h.domain(), std::move(labels));
}

QuotientResult quotient(const Congruence& theta) {
  const FiniteAlgebra& alg = theta.algebra();
  const auto& labels = theta.labels();

  std::vector<element_type> reps;  // ascending minimum representatives
  std::vector<std::size_t> block_index(alg.size(), SIZE_MAX);
  for (element_type x = 0; x < alg.size(); ++x) {
    if (labels[x] == x) {
      block_index[x] = reps.size();
      reps.push_back(x);
    }
  }

  const Signature& sig = alg.signature();
  const std::size_t q = reps.size();
  std::vector<std::vector<element_type>> tables(sig.count());
  std::vector<element_type> orig;
  for (std::size_t s = 0; s < sig.count(); ++s) {
    const std::size_t k = sig.arity(s);
    const std::size_t entries = table_size(q, k);
    tables[s].reserve(entries);
    for (std::size_t t = 0; t < entries; ++t) {
      const auto args = unflatten_index(q, k, t);
      orig.resize(k);
      for (std::size_t j = 0; j < k; ++j) {
        orig[j] = reps[args[j]];
      }
      tables[s].push_back(block_index[labels[alg.apply(s, orig)]]);
    }
  }
  FiniteAlgebra quotient_alg(sig, q, std::move(tables));

  std::vector<element_type> projection(alg.size());
  for (element_type x = 0; x < alg.size(); ++x) {
    projection[x] = block_index[labels[x]];
  }
  return {quotient_alg, trusted_hom(alg, quotient_alg, std::move(projection))};
}

}  // namespace ualg

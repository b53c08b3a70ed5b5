#include "ualg/subalg.hpp"

#include <algorithm>

#include "ualg/term.hpp"

namespace ualg {

namespace {

std::vector<element_type> sorted_unique(std::span<const element_type> xs,
                                        std::size_t carrier) {
  std::vector<element_type> out(xs.begin(), xs.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && out.back() >= carrier) {
    throw UalgError("subset element " + std::to_string(out.back()) +
                    " outside the carrier");
  }
  return out;
}

}  // namespace

std::optional<ClosureViolation> find_closure_violation(
    const FiniteAlgebra& alg, std::span<const element_type> subset) {
  const std::vector<element_type> members = sorted_unique(subset, alg.size());
  const Signature& sig = alg.signature();
  std::vector<element_type> args;
  for (std::size_t s = 0; s < sig.count(); ++s) {
    const std::size_t k = sig.arity(s);
    const std::size_t tuples = table_size(members.size(), k);
    if (k > 0 && members.empty()) {
      continue;
    }
    for (std::size_t t = 0; t < tuples; ++t) {
      const auto picks = unflatten_index(members.size(), k, t);
      args.resize(k);
      for (std::size_t j = 0; j < k; ++j) {
        args[j] = members[picks[j]];
      }
      const element_type r = alg.apply(s, args);
      if (!std::binary_search(members.begin(), members.end(), r)) {
        return ClosureViolation{sig.name(s), args, r};
      }
    }
  }
  return std::nullopt;
}

bool is_closed(const FiniteAlgebra& alg,
               std::span<const element_type> subset) {
  return !find_closure_violation(alg, subset).has_value();
}

Subuniverse::Subuniverse(FiniteAlgebra algebra,
                         std::vector<element_type> members)
    : algebra_(std::move(algebra)) {
  members_ = sorted_unique(members, algebra_.size());
  if (auto violation = find_closure_violation(algebra_, members_)) {
    throw UalgError("subset is not closed: \"" + violation->symbol +
                    "\" escapes to " + std::to_string(violation->result));
  }
}

bool Subuniverse::contains(element_type x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

Subuniverse sg_closure(const FiniteAlgebra& alg,
                       std::span<const element_type> generators) {
  std::vector<char> in(alg.size(), 0);
  for (element_type x : sorted_unique(generators, alg.size())) {
    in[x] = 1;
  }

  const Signature& sig = alg.signature();
  std::vector<element_type> members;
  std::vector<element_type> args;
  bool changed = true;
  while (changed) {
    changed = false;
    members.clear();
    for (element_type x = 0; x < alg.size(); ++x) {
      if (in[x]) {
        members.push_back(x);
      }
    }
    for (std::size_t s = 0; s < sig.count(); ++s) {
      const std::size_t k = sig.arity(s);
      if (k > 0 && members.empty()) {
        continue;
      }
      const std::size_t tuples = table_size(members.size(), k);
      for (std::size_t t = 0; t < tuples; ++t) {
        const auto picks = unflatten_index(members.size(), k, t);
        args.resize(k);
        for (std::size_t j = 0; j < k; ++j) {
          args[j] = members[picks[j]];
        }
        const element_type r = alg.apply(s, args);
        if (!in[r]) {
          in[r] = 1;
          changed = true;
        }
      }
    }
  }

  members.clear();
  for (element_type x = 0; x < alg.size(); ++x) {
    if (in[x]) {
      members.push_back(x);
    }
  }
  return Subuniverse(alg, std::move(members));
}

Subuniverse term_image_closure(const FiniteAlgebra& alg,
                               std::span<const element_type> generators) {
  std::vector<char> in(alg.size(), 0);
  for (element_type x : sorted_unique(generators, alg.size())) {
    in[x] = 1;
  }

  const std::size_t nvars = std::max<std::size_t>(alg.signature().max_arity(), 1);
  const std::vector<Term> ground = enumerate_terms(alg.signature(), 0, 1);
  const std::vector<Term> open_terms =
      enumerate_terms(alg.signature(), nvars, 1);

  std::vector<element_type> current;
  std::vector<element_type> env(nvars);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Term& t : ground) {
      const element_type v = interpret(alg, t, {});
      if (!in[v]) {
        in[v] = 1;
        changed = true;
      }
    }
    current.clear();
    for (element_type x = 0; x < alg.size(); ++x) {
      if (in[x]) {
        current.push_back(x);
      }
    }
    if (!current.empty()) {
      const std::size_t envs = table_size(current.size(), nvars);
      for (std::size_t e = 0; e < envs; ++e) {
        const auto picks = unflatten_index(current.size(), nvars, e);
        for (std::size_t j = 0; j < nvars; ++j) {
          env[j] = current[picks[j]];
        }
        for (const Term& t : open_terms) {
          const element_type v = interpret(alg, t, env);
          if (!in[v]) {
            in[v] = 1;
            changed = true;
          }
        }
      }
    }
  }

  std::vector<element_type> members;
  for (element_type x = 0; x < alg.size(); ++x) {
    if (in[x]) {
      members.push_back(x);
    }
  }
  return Subuniverse(alg, std::move(members));
}

InducedSubalgebra subuniv_algebra(const Subuniverse& s) {
  if (s.members().empty()) {
    throw UalgError("the empty subuniverse induces no algebra");
  }
  const FiniteAlgebra& alg = s.algebra();
  const auto& members = s.members();
  std::vector<std::size_t> new_index(alg.size(), SIZE_MAX);
  for (std::size_t i = 0; i < members.size(); ++i) {
    new_index[members[i]] = i;
  }

  const Signature& sig = alg.signature();
  const std::size_t n = members.size();
  std::vector<std::vector<element_type>> tables(sig.count());
  std::vector<element_type> orig;
  for (std::size_t si = 0; si < sig.count(); ++si) {
    const std::size_t k = sig.arity(si);
    const std::size_t entries = table_size(n, k);
    tables[si].reserve(entries);
    for (std::size_t t = 0; t < entries; ++t) {
      const auto picks = unflatten_index(n, k, t);
      orig.resize(k);
      for (std::size_t j = 0; j < k; ++j) {
        orig[j] = members[picks[j]];
      }
      tables[si].push_back(new_index[alg.apply(si, orig)]);
    }
  }
  FiniteAlgebra induced(sig, n, std::move(tables));
  Hom inclusion = trusted_hom(induced, alg, members);
  return {std::move(induced), SubalgebraWitness{std::move(inclusion)}};
}

std::vector<Subuniverse> all_subuniverses(const FiniteAlgebra& alg) {
  const std::size_t n = alg.size();
  std::vector<std::vector<element_type>> found;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<element_type> subset;
    for (element_type x = 0; x < n; ++x) {
      if (mask & (std::size_t(1) << x)) {
        subset.push_back(x);
      }
    }
    if (is_closed(alg, subset)) {
      found.push_back(std::move(subset));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) {
                return a.size() < b.size();
              }
              return a < b;
            });
  std::vector<Subuniverse> subs;
  subs.reserve(found.size());
  for (auto& members : found) {
    subs.emplace_back(alg, std::move(members));
  }
  return subs;
}

Subuniverse intersect_subuniverses(const std::vector<Subuniverse>& subs) {
  if (subs.empty()) {
    throw UalgError("intersection of an empty list of subuniverses");
  }
  const FiniteAlgebra& alg = subs.front().algebra();
  for (const Subuniverse& s : subs) {
    if (s.algebra() != alg) {
      throw UalgError("subuniverses over different algebras");
    }
  }
  std::vector<element_type> acc = subs.front().members();
  std::vector<element_type> next;
  for (std::size_t i = 1; i < subs.size(); ++i) {
    next.clear();
    std::set_intersection(acc.begin(), acc.end(), subs[i].members().begin(),
                          subs[i].members().end(), std::back_inserter(next));
    acc.swap(next);
  }
  // closed by the intersection lemma; the constructor re-checks
  return Subuniverse(alg, std::move(acc));
}

std::optional<SubalgebraWitness> is_subalgebra_of(const FiniteAlgebra& b,
                                                  const FiniteAlgebra& a) {
  HomSearchOptions options;
  options.require_injective = true;
  options.limit = 1;
  auto homs = search_homs(b, a, options);
  if (homs.empty()) {
    return std::nullopt;
  }
  return SubalgebraWitness{std::move(homs.front())};
}

namespace {

// Candidate subuniverses of a member, in (size, lexicographic) order.
// Exhaustive for carriers of size <= 4; otherwise only closures of generator
// sets of size <= 2.
std::vector<Subuniverse> candidate_subuniverses(const FiniteAlgebra& alg,
                                                bool& exhaustive) {
  if (alg.size() <= 4) {
    return all_subuniverses(alg);
  }
  exhaustive = false;
  std::vector<std::vector<element_type>> gens;
  gens.push_back({});
  for (element_type x = 0; x < alg.size(); ++x) {
    gens.push_back({x});
  }
  for (element_type x = 0; x < alg.size(); ++x) {
    for (element_type y = x + 1; y < alg.size(); ++y) {
      gens.push_back({x, y});
    }
  }
  std::vector<std::vector<element_type>> members;
  for (const auto& g : gens) {
    members.push_back(sg_closure(alg, g).members());
  }
  std::sort(members.begin(), members.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) {
                return a.size() < b.size();
              }
              return a < b;
            });
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<Subuniverse> subs;
  subs.reserve(members.size());
  for (auto& m : members) {
    subs.emplace_back(alg, std::move(m));
  }
  return subs;
}

}  // namespace

ClassSearch is_subalgebra_of_class(const FiniteAlgebra& b,
                                   const std::vector<FiniteAlgebra>& algebras) {
  for (const FiniteAlgebra& a : algebras) {
    if (a.signature() != b.signature()) {
      throw UalgError("class member over a different signature");
    }
  }
  bool exhaustive = true;
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    const FiniteAlgebra& a = algebras[i];
    for (Subuniverse& s : candidate_subuniverses(a, exhaustive)) {
      if (s.size() != b.size() || s.size() == 0) {
        continue;
      }
      InducedSubalgebra induced = subuniv_algebra(s);
      if (auto iso = find_iso(b, induced.algebra)) {
        return {ClassWitness{i, a, std::move(s), std::move(induced.algebra),
                             std::move(*iso)},
                true};
      }
    }
  }
  return {std::nullopt, exhaustive};
}

std::optional<Hom> is_hom_image_of(const FiniteAlgebra& b,
                                   const FiniteAlgebra& a) {
  HomSearchOptions options;
  options.require_surjective = true;
  options.limit = 1;
  auto homs = search_homs(a, b, options);
  if (homs.empty()) {
    return std::nullopt;
  }
  return std::move(homs.front());
}

std::optional<ClassImageWitness> is_hom_image_of_class(
    const FiniteAlgebra& b, const std::vector<FiniteAlgebra>& algebras) {
  for (const FiniteAlgebra& a : algebras) {
    if (a.signature() != b.signature()) {
      throw UalgError("class member over a different signature");
    }
  }
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    if (auto epi = is_hom_image_of(b, algebras[i])) {
      return ClassImageWitness{i, std::move(*epi)};
    }
  }
  return std::nullopt;
}

}  // namespace ualg

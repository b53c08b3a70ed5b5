#include "doctest.h"
#include "support.hpp"
#include "ualg/iso.hpp"

using namespace ualg;
using test::m2;
using test::z2;

namespace {

// z2 with the carrier relabeled through the swap 0 <-> 1.
FiniteAlgebra z2_swapped() {
  return FiniteAlgebra(Signature({{"+", 2}}), 2, {{1, 0, 0, 1}});
}

}  // namespace

TEST_CASE("the identity pair is an iso") {
  const Hom id = identity_hom(z2());
  const IsoCheck c = check_iso(id, id);
  REQUIRE(c.ok());
}

TEST_CASE("a non-invertible pair reports its first violation") {
  const Hom const0 = *check_hom(z2(), z2(), {0, 0}).hom;
  const IsoCheck c = check_iso(const0, const0);
  REQUIRE_FALSE(c.ok());
  CHECK(c.violation->element == 1);
}

TEST_CASE("check_iso rejects mismatched endpoints") {
  const Hom id = identity_hom(z2());
  const Hom proj0 = projection_hom({z2(), z2()}, 0);
  CHECK_THROWS_AS(check_iso(id, proj0), UalgError);
}

TEST_CASE("find_iso sees through a relabeling") {
  const auto iso = find_iso(z2(), z2_swapped());
  REQUIRE(iso.has_value());
  CHECK(iso->forward.map() == std::vector<element_type>{1, 0});
  CHECK(iso->backward.map() == std::vector<element_type>{1, 0});
  CHECK(check_iso(iso->forward, iso->backward).ok());
}

TEST_CASE("z2 and the meet semilattice are not isomorphic") {
  CHECK_FALSE(find_iso(z2(), m2()).has_value());
}

TEST_CASE("every algebra is isomorphic to itself via the identity") {
  test::Rng rng(97);
  for (int i = 0; i < 20; ++i) {
    const FiniteAlgebra a = test::random_algebra(rng, 4, 2, 2, true);
    const auto iso = find_iso(a, a);
    REQUIRE(iso.has_value());
    CHECK(iso->forward.map() == identity_hom(a).map());
  }
}

TEST_CASE("size is an isomorphism obstruction") {
  CHECK_FALSE(find_iso(z2(), test::zmod(3)).has_value());
}

TEST_CASE("mod-6 addition is the product of mod-2 and mod-3 addition") {
  const FiniteAlgebra z6 = test::zmod(6);
  const auto product = product_algebra({z2(), test::zmod(3)}).algebra;
  const auto iso = find_iso(z6, product);
  REQUIRE(iso.has_value());
  CHECK(check_iso(iso->forward, iso->backward).ok());
  // x |-> (x mod 2, x mod 3) is one witness; whichever the search picked
  // must respect addition of generators
  const element_type one = iso->forward.map()[1];
  element_type acc = iso->forward.map()[0];
  for (int i = 0; i < 6; ++i) {
    CHECK(acc == iso->forward.map()[i % 6]);
    acc = product.apply("+", std::vector<element_type>{acc, one});
  }
}

TEST_CASE("mod-4 addition is not the Klein four-group") {
  const auto klein = product_algebra({z2(), z2()}).algebra;
  CHECK_FALSE(find_iso(test::zmod(4), klein).has_value());
}

TEST_CASE("find_iso is sound and complete against the bijection oracle") {
  test::Rng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const FiniteAlgebra a = test::random_algebra(rng, 3);
    const FiniteAlgebra b = test::random_algebra_over(rng, a.signature(), 3);

    // oracle: try every bijection in both directions
    bool oracle = false;
    if (a.size() == b.size()) {
      std::vector<element_type> perm(a.size());
      for (element_type x = 0; x < a.size(); ++x) {
        perm[x] = x;
      }
      do {
        std::vector<element_type> inverse(a.size());
        for (element_type x = 0; x < a.size(); ++x) {
          inverse[perm[x]] = x;
        }
        oracle = oracle || (check_hom(a, b, perm).ok() &&
                            check_hom(b, a, inverse).ok());
      } while (std::next_permutation(perm.begin(), perm.end()));
    }

    const auto iso = find_iso(a, b);
    REQUIRE(iso.has_value() == oracle);
    if (iso) {
      REQUIRE(check_iso(iso->forward, iso->backward).ok());
      const MorphismKind kind = classify(iso->forward);
      REQUIRE(kind.bijective());
    }
  }
}

TEST_CASE("refl, sym and trans stay inside the iso type") {
  test::Rng rng(103);
  for (int i = 0; i < 100; ++i) {
    const FiniteAlgebra a = test::random_algebra(rng, 4);
    const Iso refl = iso_refl(a);
    REQUIRE(check_iso(refl.forward, refl.backward).ok());

    // conjugate by random permutations to get a length-3 chain
    const Iso s = iso_sym(refl);
    const Iso chain = compose_iso(compose_iso(refl, s), refl);
    REQUIRE(check_iso(chain.forward, chain.backward).ok());
  }
}

TEST_CASE("composing an iso with its inverse is the identity iso") {
  const auto iso = find_iso(z2(), z2_swapped());
  REQUIRE(iso.has_value());
  const Iso round = compose_iso(*iso, iso_sym(*iso));
  CHECK(round.forward.map() == identity_hom(z2()).map());

  // two swaps compose to the identity
  const auto again = find_iso(z2_swapped(), z2());
  REQUIRE(again.has_value());
  const Iso both = compose_iso(*iso, *again);
  CHECK(both.forward.map() == std::vector<element_type>{0, 1});
}

TEST_CASE("compose_iso rejects mismatched chains") {
  const Iso a = iso_refl(z2());
  const Iso b = iso_refl(test::zmod(3));
  CHECK_THROWS_AS(compose_iso(a, b), UalgError);
}

TEST_CASE("products of isos act coordinatewise") {
  const Iso all_refl = product_iso({iso_refl(z2()), iso_refl(z2())});
  CHECK(all_refl.forward.map() == std::vector<element_type>{0, 1, 2, 3});

  const auto swap = find_iso(z2(), z2_swapped());
  REQUIRE(swap.has_value());
  const Iso mixed = product_iso({*swap, iso_refl(z2())});
  // swaps the first coordinate: (a,b) |-> (1-a, b)
  CHECK(mixed.forward.map() == std::vector<element_type>{2, 3, 0, 1});
  CHECK(check_iso(mixed.forward, mixed.backward).ok());
}

TEST_CASE("projections commute with product isos") {
  const auto swap = find_iso(z2(), z2_swapped());
  REQUIRE(swap.has_value());
  const std::vector<Iso> family{*swap, iso_refl(z2())};
  const Iso p = product_iso(family);

  const std::vector<FiniteAlgebra> doms{z2(), z2()};
  const std::vector<FiniteAlgebra> cods{z2_swapped(), z2()};
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Hom left = compose_hom(p.forward, projection_hom(cods, i));
    const Hom right = compose_hom(projection_hom(doms, i), family[i].forward);
    CHECK(same_map(left, right));
  }
}

namespace {

// Multiset of fixed-point counts over every unary slice of every operation
// (all arguments but one pinned). An isomorphism invariant.
std::vector<std::size_t> fixed_point_profile(const FiniteAlgebra& a) {
  std::vector<std::size_t> profile;
  const Signature& sig = a.signature();
  for (std::size_t s = 0; s < sig.count(); ++s) {
    const std::size_t k = sig.arity(s);
    if (k == 0) {
      continue;
    }
    const std::size_t pinned = table_size(a.size(), k - 1);
    for (std::size_t slot = 0; slot < k; ++slot) {
      for (std::size_t rest = 0; rest < pinned; ++rest) {
        const auto fixed = unflatten_index(a.size(), k - 1, rest);
        std::size_t fixpoints = 0;
        for (element_type x = 0; x < a.size(); ++x) {
          std::vector<element_type> args(fixed.begin(), fixed.end());
          args.insert(args.begin() + slot, x);
          fixpoints += a.apply(s, args) == x ? 1 : 0;
        }
        profile.push_back(fixpoints);
      }
    }
  }
  std::sort(profile.begin(), profile.end());
  return profile;
}

// Relabels the carrier through a permutation; an isomorphic copy.
FiniteAlgebra relabel(const FiniteAlgebra& a,
                      const std::vector<element_type>& perm) {
  std::vector<element_type> inverse(perm.size());
  for (element_type x = 0; x < perm.size(); ++x) {
    inverse[perm[x]] = x;
  }
  const Signature& sig = a.signature();
  std::vector<std::vector<element_type>> tables(sig.count());
  for (std::size_t s = 0; s < sig.count(); ++s) {
    const std::size_t k = sig.arity(s);
    const std::size_t entries = table_size(a.size(), k);
    tables[s].resize(entries);
    for (std::size_t t = 0; t < entries; ++t) {
      auto args = unflatten_index(a.size(), k, t);
      for (auto& x : args) {
        x = inverse[x];
      }
      tables[s][t] = perm[a.apply(s, args)];
    }
  }
  return FiniteAlgebra(sig, a.size(), std::move(tables));
}

}  // namespace

TEST_CASE("isomorphic algebras share their fixed-point profiles") {
  test::Rng rng(257);
  for (int i = 0; i < 30; ++i) {
    const FiniteAlgebra a = test::random_algebra(rng, 4);
    std::vector<element_type> perm(a.size());
    for (element_type x = 0; x < a.size(); ++x) {
      perm[x] = x;
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    const FiniteAlgebra b = relabel(a, perm);

    REQUIRE(fixed_point_profile(a) == fixed_point_profile(b));
    const auto iso = find_iso(a, b);
    REQUIRE(iso.has_value());
    REQUIRE(check_iso(iso->forward, iso->backward).ok());
  }
}

TEST_CASE("iso forwards are injective and surjective") {
  test::Rng rng(107);
  for (int i = 0; i < 30; ++i) {
    const FiniteAlgebra a = test::random_algebra(rng, 3);
    const FiniteAlgebra b = test::random_algebra_over(rng, a.signature(), 3);
    if (const auto iso = find_iso(a, b)) {
      const MorphismKind kind = classify(iso->forward);
      REQUIRE(kind.injective);
      REQUIRE(kind.surjective);
    }
  }
}

#include "ualg/cli.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ualg/io.hpp"
#include "ualg/subalg.hpp"
#include "ualg/term.hpp"
#include "ualg/theorems.hpp"

namespace ualg {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;  // computed a negative answer (none / fail)
constexpr int kUsage = 2;     // could not compute

std::vector<element_type> parse_element_list(const std::string& text) {
  std::vector<element_type> out;
  if (text.empty()) {
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) {
        throw std::invalid_argument(item);
      }
      out.push_back(static_cast<element_type>(v));
    } catch (const std::exception&) {
      throw UalgError("cannot parse \"" + item + "\" as a carrier element");
    }
  }
  return out;
}

std::vector<std::pair<element_type, element_type>> parse_fixed_list(
    const std::string& text) {
  std::vector<std::pair<element_type, element_type>> out;
  if (text.empty()) {
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw UalgError("fixed entries look like position=value, got \"" + item +
                      "\"");
    }
    const auto pos = parse_element_list(item.substr(0, eq));
    const auto val = parse_element_list(item.substr(eq + 1));
    if (pos.size() != 1 || val.size() != 1) {
      throw UalgError("fixed entries look like position=value, got \"" + item +
                      "\"");
    }
    out.emplace_back(pos[0], val[0]);
  }
  return out;
}

void emit(std::ostream& out, const ojson& value, bool pretty) {
  if (pretty) {
    out << value.dump(2) << "\n";
  } else {
    out << value.dump() << "\n";
  }
}

// ---------------------------------------------------------------------------
// verify: seeded property batteries over user-supplied algebras

class VerifyRun {
 public:
  VerifyRun(std::vector<FiniteAlgebra> algebras, std::uint64_t seed,
            std::ostream& out)
      : algebras_(std::move(algebras)), rng_(seed), out_(out) {
    out_ << "seed = " << seed << "\n";
  }

  int finish() {
    out_ << (failures_ == 0 ? "all checks passed" : "checks failed") << " ("
         << passes_ << " passed, " << failures_ << " failed)\n";
    return failures_ == 0 ? kOk : kNegative;
  }

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    if (ok) {
      ++passes_;
      out_ << "ok " << name << "\n";
    } else {
      ++failures_;
      out_ << "FAIL " << name << (detail.empty() ? "" : ": " + detail) << "\n";
    }
  }

  element_type random_element(const FiniteAlgebra& a) {
    return std::uniform_int_distribution<element_type>(0, a.size() - 1)(rng_);
  }

  Term random_term(const Signature& sig, std::size_t nvars, std::size_t depth) {
    std::vector<std::size_t> leaves;  // nvars vars, then nullary symbols
    std::vector<std::size_t> inner;
    for (std::size_t s = 0; s < sig.count(); ++s) {
      (sig.arity(s) == 0 ? leaves : inner).push_back(s);
    }
    const std::size_t leaf_count = nvars + leaves.size();
    if (depth == 0 || inner.empty() ||
        std::uniform_int_distribution<int>(0, 3)(rng_) == 0) {
      if (leaf_count == 0) {
        throw UalgError("no height-0 terms exist for this context");
      }
      const std::size_t pick =
          std::uniform_int_distribution<std::size_t>(0, leaf_count - 1)(rng_);
      if (pick < nvars) {
        return Term::var(pick);
      }
      return Term::node(sig.name(leaves[pick - nvars]), {});
    }
    const std::size_t s =
        inner[std::uniform_int_distribution<std::size_t>(0, inner.size() - 1)(
            rng_)];
    std::vector<Term> children;
    for (std::size_t j = 0; j < sig.arity(s); ++j) {
      children.push_back(random_term(sig, nvars, depth - 1));
    }
    return Term::node(sig.name(s), std::move(children));
  }

  std::vector<element_type> random_env(const FiniteAlgebra& a,
                                       std::size_t nvars) {
    std::vector<element_type> env(nvars);
    for (auto& e : env) {
      e = random_element(a);
    }
    return env;
  }

  void run() {
    for (std::size_t i = 0; i < algebras_.size(); ++i) {
      run_single("algebra " + std::to_string(i), algebras_[i]);
    }
    for (std::size_t i = 0; i < algebras_.size(); ++i) {
      for (std::size_t j = 0; j < algebras_.size(); ++j) {
        if (i != j &&
            algebras_[i].signature() == algebras_[j].signature()) {
          run_pair(i, j);
        }
      }
    }
  }

 private:
  void run_single(const std::string& tag, const FiniteAlgebra& a) {
    {
      const std::string once = serialize_algebra(a);
      bool ok = false;
      std::string detail;
      try {
        const FiniteAlgebra back = parse_algebra(once);
        ok = back == a && serialize_algebra(back) == once;
      } catch (const UalgError& e) {
        detail = e.what();
      }
      check(tag + ": codec round trip", ok, detail);
    }

    {
      bool ok = true;
      for (std::size_t k = 0; k <= 3 && ok; ++k) {
        const std::size_t entries = table_size(a.size(), k);
        for (std::size_t t = 0; t < entries && ok; ++t) {
          const auto args = unflatten_index(a.size(), k, t);
          ok = flat_index(a.size(), args) == t;
        }
      }
      check(tag + ": flat index bijection", ok);
    }

    {
      std::vector<element_type> id(a.size());
      for (element_type x = 0; x < a.size(); ++x) {
        id[x] = x;
      }
      check(tag + ": identity map is a hom", check_hom(a, a, id).ok());
    }

    std::vector<Hom> endos;
    {
      HomSearchOptions options;
      options.limit = 16;
      endos = search_homs(a, a, options);

      // pinning every position to itself must leave exactly the identity
      HomSearchOptions pinned;
      for (element_type x = 0; x < a.size(); ++x) {
        pinned.fixed.emplace_back(x, x);
      }
      const auto only = search_homs(a, a, pinned);
      check(tag + ": pinned search recovers exactly the identity",
            only.size() == 1 && same_map(only.front(), identity_hom(a)));
    }

    if (a.size() <= 4) {
      // every map, filtered through check_hom, must equal the search output
      HomSearchOptions options;
      const auto searched = search_homs(a, a, options);
      std::vector<std::vector<element_type>> brute;
      const std::size_t total = table_size(a.size(), a.size());
      for (std::size_t m = 0; m < total; ++m) {
        auto map = unflatten_index(a.size(), a.size(), m);
        if (check_hom(a, a, map).ok()) {
          brute.push_back(std::move(map));
        }
      }
      bool ok = searched.size() == brute.size();
      for (std::size_t i = 0; ok && i < brute.size(); ++i) {
        ok = searched[i].map() == brute[i];
      }
      check(tag + ": endomorphism search matches exhaustive filter", ok);
    }

    if (a.size() <= 5) {
      bool ok = true;
      std::string detail;
      const auto congruences = all_congruences(a);
      for (const Congruence& theta : congruences) {
        QuotientResult q = quotient(theta);
        if (!classify(q.projection).surjective) {
          ok = false;
          detail = "projection not surjective";
          break;
        }
        if (!(kernel_congruence(q.projection) == theta)) {
          ok = false;
          detail = "kernel of the projection differs from the congruence";
          break;
        }
      }
      check(tag + ": quotient projections invert kernels (" +
                std::to_string(congruences.size()) + " congruences)",
            ok, detail);
    }

    {
      bool ok = true;
      const std::size_t nvars = 2;
      for (int i = 0; i < 200 && ok; ++i) {
        const Term t = random_term(a.signature(), nvars, 3);
        const auto env = random_env(a, nvars);
        ok = interpret(a, t, env) == free_lift(a, env, t);
      }
      check(tag + ": interpretation agrees with the free lift", ok);
    }

    {
      bool ok = true;
      const std::size_t nvars = 2;
      for (int i = 0; i < 200 && ok; ++i) {
        const Term t = random_term(a.signature(), nvars, 2);
        std::vector<Term> sigma;
        for (std::size_t v = 0; v < nvars; ++v) {
          sigma.push_back(random_term(a.signature(), nvars, 1));
        }
        const auto env = random_env(a, nvars);
        std::vector<element_type> via(nvars);
        for (std::size_t v = 0; v < nvars; ++v) {
          via[v] = interpret(a, sigma[v], env);
        }
        ok = interpret(a, substitute(t, sigma), env) == interpret(a, t, via);
      }
      check(tag + ": substitution respects interpretation", ok);
    }

    {
      bool ok = true;
      const std::size_t nvars = 2;
      for (const Hom& h : endos) {
        for (int i = 0; i < 20 && ok; ++i) {
          const Term t = random_term(a.signature(), nvars, 2);
          const auto env = random_env(a, nvars);
          std::vector<element_type> mapped(nvars);
          for (std::size_t v = 0; v < nvars; ++v) {
            mapped[v] = h.map()[env[v]];
          }
          ok = h.map()[interpret(a, t, env)] == interpret(a, t, mapped);
        }
      }
      check(tag + ": terms commute with found endomorphisms", ok);
    }

    {
      bool ok = true;
      for (int i = 0; i < 20 && ok; ++i) {
        std::vector<element_type> gens;
        for (element_type x = 0; x < a.size(); ++x) {
          if (std::uniform_int_distribution<int>(0, 1)(rng_) == 1) {
            gens.push_back(x);
          }
        }
        const Subuniverse sg = sg_closure(a, gens);
        ok = is_closed(a, sg.members()) &&
             sg.members() == term_image_closure(a, gens).members();
        if (ok && a.size() <= 4) {
          std::vector<Subuniverse> containing;
          for (const Subuniverse& s : all_subuniverses(a)) {
            if (std::includes(s.members().begin(), s.members().end(),
                              gens.begin(), gens.end())) {
              containing.push_back(s);
            }
          }
          ok = !containing.empty() &&
               intersect_subuniverses(containing).members() == sg.members();
        }
      }
      check(tag + ": generated subuniverses are closed and least", ok);
    }

    {
      bool ok = true;
      for (const Hom& h : endos) {
        ok = ok && is_closed(a, image_algebra(h).subset);
      }
      check(tag + ": endomorphism images are closed", ok);
    }

    {
      bool ok = true;
      for (const Hom& h : endos) {
        const HomDecomposition d = first_hom_decomposition(h);
        for (element_type x = 0; ok && x < a.size(); ++x) {
          ok = d.mediating.map()[d.projection.map()[x]] == h.map()[x];
        }
        ok = ok && classify(d.mediating).injective &&
             classify(d.projection).surjective;
      }
      check(tag + ": endomorphisms decompose through their kernels", ok);
    }
  }

  void run_pair(std::size_t i, std::size_t j) {
    const FiniteAlgebra& a = algebras_[i];
    const FiniteAlgebra& b = algebras_[j];
    const std::string tag =
        "algebras " + std::to_string(i) + " -> " + std::to_string(j);
    HomSearchOptions options;
    options.limit = 8;
    bool ok = true;
    for (const Hom& h : search_homs(a, b, options)) {
      ok = ok && check_hom(a, b, h.map()).ok();
      const Congruence theta = kernel_congruence(h);
      ok = ok && check_congruence(a, theta.blocks()).ok();
    }
    check(tag + ": searched homs re-verify and have congruence kernels", ok);
  }

  // Enumerates all compatible partitions; carriers of size <= 5 keep this
  // cheap (Bell(5) = 52 candidates).
  std::vector<Congruence> all_congruences(const FiniteAlgebra& a) {
    std::vector<Congruence> out;
    std::vector<element_type> labels(a.size(), 0);
    enumerate_partitions(a, labels, 1, out);
    return out;
  }

  void enumerate_partitions(const FiniteAlgebra& a,
                            std::vector<element_type>& labels,
                            std::size_t next, std::vector<Congruence>& out) {
    if (next == a.size()) {
      std::vector<std::vector<element_type>> blocks;
      for (element_type x = 0; x < a.size(); ++x) {
        if (labels[x] >= blocks.size()) {
          blocks.emplace_back();
        }
        blocks[labels[x]].push_back(x);
      }
      CongruenceCheck c = check_congruence(a, blocks);
      if (c.ok()) {
        out.push_back(*std::move(c.congruence));
      }
      return;
    }
    const element_type max_used =
        *std::max_element(labels.begin(), labels.begin() + next);
    for (element_type v = 0; v <= max_used + 1; ++v) {
      labels[next] = v;
      enumerate_partitions(a, labels, next + 1, out);
    }
  }

  std::vector<FiniteAlgebra> algebras_;
  std::mt19937_64 rng_;
  std::ostream& out_;
  int passes_ = 0;
  int failures_ = 0;
};

ojson hom_doc_json(const Hom& h, const std::string& domain_ref,
                   const std::string& codomain_ref) {
  ojson doc;
  doc["domain"] = ojson::parse(domain_ref);
  doc["codomain"] = ojson::parse(codomain_ref);
  doc["map"] = h.map();
  return doc;
}

std::string quote(const std::string& path) { return ojson(path).dump(); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"computations with finite algebras over a finite signature"};
  app.name("ualg");
  app.require_subcommand(1);

  bool pretty = false;
  app.add_flag("--json", pretty,
               "pretty-print structured output as indented JSON");

  std::string algebra_path;
  std::string term_text;
  std::string env_list;
  std::string set_list;
  std::string congruence_path;
  std::string hom_path;
  std::string through_path;
  std::string from_path;
  std::string to_path;
  std::string left_path;
  std::string right_path;
  std::vector<std::string> algebra_paths;
  std::string fixed_list;
  std::size_t limit = static_cast<std::size_t>(-1);
  bool count_only = false;
  bool want_injective = false;
  bool want_surjective = false;
  bool want_epi = false;
  std::uint64_t seed = 1729;

  CLI::App* inspect = app.add_subcommand(
      "inspect", "validate an algebra document and print its canonical form");
  inspect->add_option("--algebra", algebra_path, "algebra document")
      ->required();

  CLI::App* eval = app.add_subcommand(
      "eval", "interpret a term under an environment");
  eval->add_option("--algebra", algebra_path, "algebra document")->required();
  eval->add_option("--term", term_text, "term, e.g. \"f(x0,x1)\"")->required();
  eval->add_option("--env", env_list,
                   "comma-separated values for x0, x1, ...")
      ->required();

  CLI::App* sg = app.add_subcommand(
      "sg", "subuniverse generated by a subset");
  sg->add_option("--algebra", algebra_path, "algebra document")->required();
  sg->add_option("--set", set_list, "comma-separated generators (may be empty)")
      ->required();

  CLI::App* quot = app.add_subcommand(
      "quotient", "quotient algebra modulo a congruence");
  quot->add_option("--algebra", algebra_path, "algebra document")->required();
  quot->add_option("--congruence", congruence_path, "congruence document")
      ->required();

  CLI::App* kernel = app.add_subcommand(
      "kernel", "kernel congruence of a homomorphism");
  kernel->add_option("--hom", hom_path, "hom document")->required();

  CLI::App* homs = app.add_subcommand(
      "homs", "enumerate homomorphisms between two algebras");
  homs->add_option("--from", from_path, "domain algebra document")->required();
  homs->add_option("--to", to_path, "codomain algebra document")->required();
  homs->add_flag("--count", count_only, "print only the number of homs");
  homs->add_option("--limit", limit, "stop after this many homs");
  homs->add_flag("--injective", want_injective, "only injective homs");
  homs->add_flag("--surjective", want_surjective, "only surjective homs");
  homs->add_option("--fixed", fixed_list,
                   "pin map entries, e.g. \"0=1,2=0\"");

  CLI::App* iso = app.add_subcommand(
      "iso", "search for an isomorphism between two algebras");
  iso->add_option("--left", left_path, "algebra document")->required();
  iso->add_option("--right", right_path, "algebra document")->required();

  CLI::App* product = app.add_subcommand(
      "product", "finite product of algebras over one signature");
  product
      ->add_option("--algebra", algebra_paths,
                   "factor document (repeat per factor, order significant)")
      ->required();

  CLI::App* factor = app.add_subcommand(
      "factor", "factor one hom through another surjective hom");
  factor->add_option("--hom", hom_path, "hom document for g : A -> B")
      ->required();
  factor
      ->add_option("--through", through_path,
                   "hom document for surjective h : A -> C")
      ->required();
  factor->add_flag("--epi", want_epi, "require g surjective; the factor is too");

  CLI::App* subalg = app.add_subcommand(
      "subalg", "decide whether one algebra embeds in another (or a class)");
  subalg->add_option("--left", left_path, "candidate subalgebra document")
      ->required();
  subalg
      ->add_option("--right", right_path,
                   "algebra document or class document")
      ->required();

  CLI::App* image = app.add_subcommand(
      "image", "image algebra of a hom, or decide hom-image between algebras");
  image->add_option("--hom", hom_path, "hom document");
  image->add_option("--from", from_path,
                    "source algebra or class document");
  image->add_option("--to", to_path, "target algebra document");

  CLI::App* verify = app.add_subcommand(
      "verify", "run seeded property batteries against supplied algebras");
  verify
      ->add_option("--algebra", algebra_paths,
                   "algebra document (repeatable)")
      ->required();
  verify->add_option("--seed", seed, "random seed (printed)");

  for (CLI::App* sub : app.get_subcommands({})) {
    sub->add_flag("--json", pretty,
                  "pretty-print structured output as indented JSON");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (inspect->parsed()) {
      out << serialize_algebra(load_algebra_file(algebra_path));
      return kOk;
    }

    if (eval->parsed()) {
      const FiniteAlgebra a = load_algebra_file(algebra_path);
      const auto env = parse_element_list(env_list);
      for (element_type e : env) {
        if (e >= a.size()) {
          throw UalgError("environment value " + std::to_string(e) +
                          " outside the carrier");
        }
      }
      const Term t = parse_term(a.signature(), env.size(), term_text);
      out << interpret(a, t, env) << "\n";
      return kOk;
    }

    if (sg->parsed()) {
      const FiniteAlgebra a = load_algebra_file(algebra_path);
      const Subuniverse s = sg_closure(a, parse_element_list(set_list));
      emit(out, ojson(s.members()), pretty);
      return kOk;
    }

    if (quot->parsed()) {
      const FiniteAlgebra a = load_algebra_file(algebra_path);
      const LoadedCongruence lc = load_congruence_file(congruence_path);
      if (lc.congruence.algebra() != a) {
        throw UalgError("congruence belongs to a different algebra than "
                        "--algebra");
      }
      const QuotientResult q = quotient(lc.congruence);
      if (pretty) {
        ojson doc;
        doc["algebra"] = ojson::parse(serialize_algebra(q.algebra));
        doc["projection"] = q.projection.map();
        emit(out, doc, true);
      } else {
        out << serialize_algebra(q.algebra);
      }
      return kOk;
    }

    if (kernel->parsed()) {
      const LoadedHom lh = load_hom_file(hom_path);
      out << serialize_congruence(kernel_congruence(lh.hom), lh.domain_ref);
      return kOk;
    }

    if (homs->parsed()) {
      const FiniteAlgebra a = load_algebra_file(from_path);
      const FiniteAlgebra b = load_algebra_file(to_path);
      HomSearchOptions options;
      options.limit = limit;
      options.require_injective = want_injective;
      options.require_surjective = want_surjective;
      options.fixed = parse_fixed_list(fixed_list);
      const auto found = search_homs(a, b, options);
      if (count_only) {
        out << found.size() << "\n";
      } else if (pretty) {
        ojson doc;
        doc["count"] = found.size();
        ojson maps = ojson::array();
        for (const Hom& h : found) {
          maps.push_back(h.map());
        }
        doc["homs"] = std::move(maps);
        emit(out, doc, true);
      } else if (found.empty()) {
        out << "none\n";
      } else {
        for (const Hom& h : found) {
          emit(out, ojson(h.map()), false);
        }
      }
      return found.empty() ? kNegative : kOk;
    }

    if (iso->parsed()) {
      const FiniteAlgebra a = load_algebra_file(left_path);
      const FiniteAlgebra b = load_algebra_file(right_path);
      const auto found = find_iso(a, b);
      if (!found) {
        out << "none\n";
        return kNegative;
      }
      ojson doc;
      doc["forward"] = found->forward.map();
      doc["backward"] = found->backward.map();
      emit(out, doc, pretty);
      return kOk;
    }

    if (product->parsed()) {
      std::vector<FiniteAlgebra> factors;
      factors.reserve(algebra_paths.size());
      for (const auto& p : algebra_paths) {
        factors.push_back(load_algebra_file(p));
      }
      const ProductAlgebra p = product_algebra(factors);
      if (pretty) {
        ojson doc;
        doc["algebra"] = ojson::parse(serialize_algebra(p.algebra));
        doc["factor_sizes"] = p.codec.sizes;
        emit(out, doc, true);
      } else {
        out << serialize_algebra(p.algebra);
      }
      return kOk;
    }

    if (factor->parsed()) {
      const LoadedHom g = load_hom_file(hom_path);
      const LoadedHom h = load_hom_file(through_path);
      const Hom phi = hom_factor(g.hom, h.hom, want_epi);
      emit(out, hom_doc_json(phi, h.codomain_ref, g.codomain_ref), pretty);
      return kOk;
    }

    if (subalg->parsed()) {
      const FiniteAlgebra b = load_algebra_file(left_path);
      if (is_class_document(right_path)) {
        const auto algebras = load_class_file(right_path);
        const ClassSearch result = is_subalgebra_of_class(b, algebras);
        if (!result.witness) {
          if (!result.exhaustive) {
            err << "note: members larger than 4 were searched only through "
                   "generator sets of size <= 2; a negative answer is not "
                   "definitive\n";
          }
          out << "none\n";
          return kNegative;
        }
        const ClassWitness& w = *result.witness;
        ojson doc;
        doc["member_index"] = w.member_index;
        doc["subuniverse"] = w.subuniverse.members();
        doc["iso_forward"] = w.iso.forward.map();
        doc["iso_backward"] = w.iso.backward.map();
        emit(out, doc, pretty);
        return kOk;
      }
      const FiniteAlgebra a = load_algebra_file(right_path);
      const auto witness = is_subalgebra_of(b, a);
      if (!witness) {
        out << "none\n";
        return kNegative;
      }
      out << serialize_hom(witness->embedding, quote(left_path),
                           quote(right_path));
      return kOk;
    }

    if (image->parsed()) {
      if (!hom_path.empty()) {
        const LoadedHom lh = load_hom_file(hom_path);
        const ImageAlgebra im = image_algebra(lh.hom);
        ojson doc;
        doc["subset"] = im.subset;
        doc["algebra"] = ojson::parse(serialize_algebra(im.algebra));
        doc["inclusion"] = im.inclusion.map();
        doc["corestriction"] = im.corestriction.map();
        emit(out, doc, pretty);
        return kOk;
      }
      if (from_path.empty() || to_path.empty()) {
        throw UalgError("image needs either --hom or both --from and --to");
      }
      const FiniteAlgebra b = load_algebra_file(to_path);
      if (is_class_document(from_path)) {
        const auto algebras = load_class_file(from_path);
        const auto witness = is_hom_image_of_class(b, algebras);
        if (!witness) {
          out << "none\n";
          return kNegative;
        }
        ojson doc;
        doc["member_index"] = witness->member_index;
        doc["map"] = witness->epi.map();
        emit(out, doc, pretty);
        return kOk;
      }
      const FiniteAlgebra a = load_algebra_file(from_path);
      const auto epi = is_hom_image_of(b, a);
      if (!epi) {
        out << "none\n";
        return kNegative;
      }
      out << serialize_hom(*epi, quote(from_path), quote(to_path));
      return kOk;
    }

    if (verify->parsed()) {
      std::vector<FiniteAlgebra> algebras;
      for (const auto& p : algebra_paths) {
        algebras.push_back(load_algebra_file(p));
      }
      VerifyRun run(std::move(algebras), seed, out);
      run.run();
      return run.finish();
    }
  } catch (const UalgError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  err << "error: no subcommand given\n";
  return kUsage;
}

}  // namespace ualg

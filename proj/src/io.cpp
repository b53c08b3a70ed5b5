#include "ualg/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ualg {

namespace {

using ojson = nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UalgError("cannot read file " + path.string());
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ojson parse_json(const std::string& text) {
  try {
    return ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UalgError(std::string("syntax error: ") + e.what());
  }
}

[[noreturn]] void shape_error(const std::string& what) {
  throw UalgError("document shape error: " + what);
}

long long as_integer(const ojson& j, const std::string& what) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    shape_error(what + " must be an integer");
  }
  return j.get<long long>();
}

RawAlgebra raw_algebra_from_json(const ojson& doc) {
  if (!doc.is_object()) {
    shape_error("algebra document must be an object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "name" && key != "size" && key != "signature" &&
        key != "operations") {
      shape_error("unknown key \"" + key + "\"");
    }
  }
  if (!doc.contains("size")) {
    shape_error("missing \"size\"");
  }
  if (!doc.contains("signature")) {
    shape_error("missing \"signature\"");
  }
  if (!doc.contains("operations")) {
    shape_error("missing \"operations\"");
  }

  RawAlgebra raw;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) {
      shape_error("\"name\" must be a string");
    }
    raw.name = doc["name"].get<std::string>();
  }
  raw.size = as_integer(doc["size"], "\"size\"");

  if (!doc["signature"].is_array()) {
    shape_error("\"signature\" must be an array");
  }
  for (const auto& entry : doc["signature"]) {
    if (!entry.is_object() || !entry.contains("symbol") ||
        !entry.contains("arity") || entry.size() != 2) {
      shape_error("signature entries must be {\"symbol\": ..., \"arity\": ...}");
    }
    if (!entry["symbol"].is_string()) {
      shape_error("\"symbol\" must be a string");
    }
    raw.signature.emplace_back(entry["symbol"].get<std::string>(),
                               as_integer(entry["arity"], "\"arity\""));
  }

  if (!doc["operations"].is_object()) {
    shape_error("\"operations\" must be an object");
  }
  for (const auto& [symbol, entries] : doc["operations"].items()) {
    if (!entries.is_array()) {
      shape_error("operation table for \"" + symbol + "\" must be an array");
    }
    std::vector<long long> table;
    table.reserve(entries.size());
    for (const auto& e : entries) {
      table.push_back(as_integer(e, "table entry for \"" + symbol + "\""));
    }
    raw.operations.emplace_back(symbol, std::move(table));
  }
  return raw;
}

FiniteAlgebra algebra_from_json(const ojson& doc) {
  ValidationResult result = FiniteAlgebra::validate(raw_algebra_from_json(doc));
  if (!result.ok()) {
    throw UalgError("invalid algebra:\n" + format_issues(result.issues));
  }
  return *std::move(result.algebra);
}

ojson algebra_to_json(const FiniteAlgebra& alg) {
  ojson doc;
  if (alg.name()) {
    doc["name"] = *alg.name();
  }
  doc["size"] = alg.size();
  ojson sig = ojson::array();
  for (const auto& sym : alg.signature().symbols()) {
    ojson entry;
    entry["symbol"] = sym.name;
    entry["arity"] = sym.arity;
    sig.push_back(std::move(entry));
  }
  doc["signature"] = std::move(sig);
  ojson ops;
  for (std::size_t s = 0; s < alg.signature().count(); ++s) {
    ops[alg.signature().name(s)] = alg.table(s);
  }
  doc["operations"] = std::move(ops);
  return doc;
}

// A ref is a path string (relative to `base`) or an inline algebra object.
FiniteAlgebra resolve_algebra_ref(const ojson& ref,
                                  const std::filesystem::path& base) {
  if (ref.is_string()) {
    std::filesystem::path p(ref.get<std::string>());
    if (p.is_relative()) {
      p = base / p;
    }
    return load_algebra_file(p);
  }
  if (ref.is_object()) {
    return algebra_from_json(ref);
  }
  shape_error("algebra reference must be a path or an inline object");
}

std::vector<element_type> element_list_from_json(const ojson& j,
                                                 const std::string& what) {
  if (!j.is_array()) {
    shape_error(what + " must be an array");
  }
  std::vector<element_type> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    const long long v = as_integer(e, what);
    if (v < 0) {
      shape_error(what + " contains a negative entry");
    }
    out.push_back(static_cast<element_type>(v));
  }
  return out;
}

}  // namespace

FiniteAlgebra parse_algebra(const std::string& text) {
  return algebra_from_json(parse_json(text));
}

std::string serialize_algebra(const FiniteAlgebra& alg) {
  return algebra_to_json(alg).dump(2) + "\n";
}

FiniteAlgebra load_algebra_file(const std::filesystem::path& path) {
  try {
    return parse_algebra(read_file(path));
  } catch (const UalgError& e) {
    throw UalgError(path.string() + ": " + e.what());
  }
}

LoadedHom load_hom_file(const std::filesystem::path& path) {
  const ojson doc = parse_json(read_file(path));
  if (!doc.is_object() || !doc.contains("domain") ||
      !doc.contains("codomain") || !doc.contains("map")) {
    shape_error("hom document needs \"domain\", \"codomain\" and \"map\"");
  }
  const std::filesystem::path base = path.parent_path();
  FiniteAlgebra domain = resolve_algebra_ref(doc["domain"], base);
  FiniteAlgebra codomain = resolve_algebra_ref(doc["codomain"], base);
  auto map = element_list_from_json(doc["map"], "\"map\"");
  HomCheck check = check_hom(domain, codomain, std::move(map));
  if (!check.ok()) {
    const auto& c = *check.counterexample;
    std::string args;
    for (std::size_t i = 0; i < c.args.size(); ++i) {
      args += (i ? "," : "") + std::to_string(c.args[i]);
    }
    throw UalgError(path.string() + ": map is not a homomorphism at \"" +
                    c.symbol + "\" (" + args + "): maps the result to " +
                    std::to_string(c.lhs) + " but the mapped arguments to " +
                    std::to_string(c.rhs));
  }
  return {*std::move(check.hom), doc["domain"].dump(),
          doc["codomain"].dump()};
}

std::string serialize_hom(const Hom& h, const std::string& domain_ref,
                          const std::string& codomain_ref) {
  ojson doc;
  doc["domain"] = parse_json(domain_ref);
  doc["codomain"] = parse_json(codomain_ref);
  doc["map"] = h.map();
  return doc.dump(2) + "\n";
}

LoadedCongruence load_congruence_file(const std::filesystem::path& path) {
  const ojson doc = parse_json(read_file(path));
  if (!doc.is_object() || !doc.contains("algebra") || !doc.contains("blocks")) {
    shape_error("congruence document needs \"algebra\" and \"blocks\"");
  }
  FiniteAlgebra alg = resolve_algebra_ref(doc["algebra"], path.parent_path());
  if (!doc["blocks"].is_array()) {
    shape_error("\"blocks\" must be an array of arrays");
  }
  std::vector<std::vector<element_type>> blocks;
  for (const auto& b : doc["blocks"]) {
    blocks.push_back(element_list_from_json(b, "block"));
  }
  CongruenceCheck check = check_congruence(alg, blocks);
  if (!check.ok()) {
    throw UalgError(path.string() +
                    ": partition is not compatible with operation \"" +
                    check.witness->symbol + "\"");
  }
  return {*std::move(check.congruence), doc["algebra"].dump()};
}

std::string serialize_congruence(const Congruence& theta,
                                 const std::string& algebra_ref) {
  ojson doc;
  doc["algebra"] = parse_json(algebra_ref);
  doc["blocks"] = theta.blocks();
  return doc.dump(2) + "\n";
}

std::vector<FiniteAlgebra> load_class_file(const std::filesystem::path& path) {
  const ojson doc = parse_json(read_file(path));
  if (!doc.is_object() || !doc.contains("algebras") ||
      !doc["algebras"].is_array()) {
    shape_error("class document needs an \"algebras\" array");
  }
  std::vector<FiniteAlgebra> algebras;
  for (const auto& ref : doc["algebras"]) {
    algebras.push_back(resolve_algebra_ref(ref, path.parent_path()));
  }
  return algebras;
}

bool is_class_document(const std::filesystem::path& path) {
  const ojson doc = parse_json(read_file(path));
  return doc.is_object() && doc.contains("algebras");
}

}  // namespace ualg

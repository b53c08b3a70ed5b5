#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "ualg/cli.hpp"
#include "ualg/io.hpp"

using namespace ualg;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

// Writes the shared fixture documents once per process.
class Workspace {
 public:
  Workspace() {
    dir_ = fs::temp_directory_path() / "ualg-cli-tests";
    fs::create_directories(dir_);
    write("z2.json", serialize_algebra(test::z2()));
    write("z4.json", serialize_algebra(test::zmod(4)));
    write("m2.json", serialize_algebra(test::m2()));
    write("square.json",
          serialize_algebra(product_algebra({test::z2(), test::z2()}).algebra));
    write("proj0.json",
          R"({"domain": "square.json", "codomain": "z2.json", "map": [0, 0, 1, 1]})");
    write("proj1.json",
          R"({"domain": "square.json", "codomain": "z2.json", "map": [0, 1, 0, 1]})");
    write("first-coord.json",
          R"({"algebra": "square.json", "blocks": [[0, 1], [2, 3]]})");
    write("bad-hom.json",
          R"({"domain": "z2.json", "codomain": "z2.json", "map": [1, 0]})");
    write("class.json", R"({"algebras": ["square.json", "m2.json"]})");
  }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

 private:
  void write(const std::string& name, const std::string& text) {
    std::ofstream f(dir_ / name, std::ios::binary);
    f << text;
  }

  fs::path dir_;
};

const Workspace& workspace() {
  static Workspace w;
  return w;
}

}  // namespace

TEST_CASE("eval interprets terms over a file algebra") {
  const auto r = run({"eval", "--algebra", workspace().path("z2.json"),
                      "--term", "+(x0,x0)", "--env", "1"});
  CHECK(r.status == 0);
  CHECK(r.out == "0\n");
}

TEST_CASE("homs --count prints the number of homs") {
  const auto r = run({"homs", "--from", workspace().path("z2.json"), "--to",
                      workspace().path("z2.json"), "--count"});
  CHECK(r.status == 0);
  CHECK(r.out == "2\n");
}

TEST_CASE("homs lists maps lexicographically") {
  const auto r = run({"homs", "--from", workspace().path("z2.json"), "--to",
                      workspace().path("z2.json")});
  CHECK(r.status == 0);
  CHECK(r.out == "[0,0]\n[0,1]\n");
}

TEST_CASE("iso prints none and exits 1 when none exists") {
  const auto r = run({"iso", "--left", workspace().path("z2.json"), "--right",
                      workspace().path("m2.json")});
  CHECK(r.status == 1);
  CHECK(r.out == "none\n");
}

TEST_CASE("iso prints both directions when found") {
  const auto r = run({"iso", "--left", workspace().path("z2.json"), "--right",
                      workspace().path("z2.json")});
  CHECK(r.status == 0);
  CHECK(r.out == "{\"forward\":[0,1],\"backward\":[0,1]}\n");
}

TEST_CASE("inspect echoes the canonical document") {
  const auto r = run({"inspect", "--algebra", workspace().path("z2.json")});
  CHECK(r.status == 0);
  CHECK(r.out == serialize_algebra(test::z2()));
  // the output re-parses to the same algebra
  CHECK(parse_algebra(r.out) == test::z2());
}

TEST_CASE("sg prints the generated members") {
  const auto r = run({"sg", "--algebra", workspace().path("z4.json"), "--set",
                      "1"});
  CHECK(r.status == 0);
  CHECK(r.out == "[0,1,2,3]\n");
}

TEST_CASE("kernel emits a reloadable congruence document") {
  const auto r = run({"kernel", "--hom", workspace().path("proj0.json")});
  CHECK(r.status == 0);
  CHECK(r.out.find("\"blocks\"") != std::string::npos);

  const auto tmp = fs::temp_directory_path() / "ualg-cli-tests" / "out.json";
  std::ofstream(tmp, std::ios::binary) << r.out;
  const LoadedCongruence back = load_congruence_file(tmp);
  CHECK(back.congruence.blocks() ==
        std::vector<std::vector<element_type>>{{0, 1}, {2, 3}});
}

TEST_CASE("quotient prints the canonical quotient algebra") {
  const auto r = run({"quotient", "--algebra", workspace().path("square.json"),
                      "--congruence", workspace().path("first-coord.json")});
  CHECK(r.status == 0);
  const FiniteAlgebra q = parse_algebra(r.out);
  CHECK(q == test::z2());
}

TEST_CASE("product prints the canonical product document") {
  const auto r = run({"product", "--algebra", workspace().path("z2.json"),
                      "--algebra", workspace().path("z2.json")});
  CHECK(r.status == 0);
  const FiniteAlgebra p = parse_algebra(r.out);
  CHECK(p == product_algebra({test::z2(), test::z2()}).algebra);
}

TEST_CASE("factor emits a reloadable hom document") {
  // factor proj0 through itself: the identity on z2
  const auto r = run({"factor", "--hom", workspace().path("proj0.json"),
                      "--through", workspace().path("proj0.json")});
  CHECK(r.status == 0);

  const auto tmp = fs::temp_directory_path() / "ualg-cli-tests" / "phi.json";
  std::ofstream(tmp, std::ios::binary) << r.out;
  const LoadedHom phi = load_hom_file(tmp);
  CHECK(phi.hom.map() == std::vector<element_type>{0, 1});
}

TEST_CASE("factor reports kernel containment violations as errors") {
  const auto r = run({"factor", "--hom", workspace().path("proj1.json"),
                      "--through", workspace().path("proj0.json")});
  CHECK(r.status == 2);
  CHECK(r.err.find("kernel") != std::string::npos);
}

TEST_CASE("subalg finds embeddings into algebras and classes") {
  const auto direct =
      run({"subalg", "--left", workspace().path("z2.json"), "--right",
           workspace().path("square.json")});
  CHECK(direct.status == 0);

  const auto via_class = run({"subalg", "--left", workspace().path("z2.json"),
                              "--right", workspace().path("class.json")});
  CHECK(via_class.status == 0);
  CHECK(via_class.out.find("\"member_index\":0") != std::string::npos);

  const auto none = run({"subalg", "--left", workspace().path("z4.json"),
                         "--right", workspace().path("z2.json")});
  CHECK(none.status == 1);
  CHECK(none.out == "none\n");
}

TEST_CASE("image decides hom-image questions") {
  const auto yes = run({"image", "--from", workspace().path("square.json"),
                        "--to", workspace().path("z2.json")});
  CHECK(yes.status == 0);

  const auto no = run({"image", "--from", workspace().path("z2.json"), "--to",
                       workspace().path("square.json")});
  CHECK(no.status == 1);
  CHECK(no.out == "none\n");
}

TEST_CASE("image of a hom document prints the induced pieces") {
  const auto r = run({"image", "--hom", workspace().path("proj0.json")});
  CHECK(r.status == 0);
  CHECK(r.out.find("\"subset\":[0,1]") != std::string::npos);
}

TEST_CASE("hom documents accept inline algebra objects") {
  const auto dir = fs::temp_directory_path() / "ualg-cli-tests";
  const auto path = dir / "inline-hom.json";
  std::ofstream(path, std::ios::binary) << R"({
    "domain": {"size": 2, "signature": [{"symbol": "+", "arity": 2}],
               "operations": {"+": [0, 1, 1, 0]}},
    "codomain": "z2.json",
    "map": [0, 1]
  })";
  const LoadedHom lh = load_hom_file(path);
  CHECK(lh.hom.verified());
  CHECK(lh.hom.domain() == test::z2());

  const auto r = run({"kernel", "--hom", path.string()});
  CHECK(r.status == 0);
}

TEST_CASE("invalid hom documents are validation errors with a witness") {
  const auto r = run({"kernel", "--hom", workspace().path("bad-hom.json")});
  CHECK(r.status == 2);
  CHECK(r.err.find("not a homomorphism") != std::string::npos);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run({"eval", "--algebra", workspace().path("z2.json")}).status == 2);
  CHECK(run({"nonsense"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"eval", "--algebra", "/nonexistent.json", "--term", "x0",
             "--env", "0"})
            .status == 2);
}

TEST_CASE("bad term or environment inputs exit with status 2") {
  CHECK(run({"eval", "--algebra", workspace().path("z2.json"), "--term",
             "+(x0)", "--env", "1"})
            .status == 2);
  CHECK(run({"eval", "--algebra", workspace().path("z2.json"), "--term",
             "+(x0,x0)", "--env", "7"})
            .status == 2);
}

TEST_CASE("identical invocations produce byte-identical output") {
  const std::vector<std::string> args{
      "homs", "--from", workspace().path("square.json"), "--to",
      workspace().path("z2.json")};
  const auto first = run(args);
  const auto second = run(args);
  CHECK(first.status == second.status);
  CHECK(first.out == second.out);
}

TEST_CASE("verify runs its batteries against a supplied algebra") {
  const auto r = run({"verify", "--algebra", workspace().path("z2.json"),
                      "--seed", "7"});
  CHECK(r.status == 0);
  CHECK(r.out.find("seed = 7") != std::string::npos);
  CHECK(r.out.find("all checks passed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  const auto again = run({"verify", "--algebra", workspace().path("z2.json"),
                          "--seed", "7"});
  CHECK(again.out == r.out);
}

TEST_CASE("help is available and exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("ualg") != std::string::npos);
}

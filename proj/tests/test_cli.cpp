#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "test_support.hpp"
#include "tkr/cli.hpp"
#include "tkr/poly.hpp"

using namespace tkr;
using nlohmann::json;

namespace {

CommandResult run(std::initializer_list<const char*> args) {
  return run_cli(std::vector<std::string>(args.begin(), args.end()));
}

}  // namespace

TEST_CASE("catalog listing") {
  CommandResult r = run({"list-builtins"});
  CHECK(r.exit_code == 0);
  CHECK(r.err.empty());
  CHECK(r.out ==
        "s2vs1 dim=2 f=(1,1,1)\n"
        "s2vs2 dim=2 f=(1,1,2)\n"
        "sphere-three-cells dim=2 f=(2,3,3)\n"
        "sphere-three-cells-deleted dim=2 f=(2,3,1)\n"
        "rp2 dim=2 f=(1,1,1)\n"
        "torus dim=2 f=(1,2,1)\n"
        "klein-bottle dim=2 f=(1,2,1)\n"
        "disc dim=2 f=(1,1,1)\n"
        "tetrahedron-boundary dim=2 f=(4,6,4)\n"
        "cube-surface dim=2 f=(8,12,6)\n"
        "octahedron-surface dim=2 f=(6,12,8)\n"
        "theta-complex dim=2 f=(2,3,3)\n"
        "triangle-complex dim=2 f=(3,3,2)\n"
        "simplex-skeleton(n,k)  (parameterized; 0 <= k < n <= 9)\n");

  CommandResult j = run({"list-builtins", "--json"});
  CHECK(j.exit_code == 0);
  json parsed = json::parse(j.out);
  REQUIRE(parsed.is_array());
  CHECK(parsed.size() == 14);
  CHECK(parsed.front()["name"] == "s2vs1");
  CHECK(parsed.back()["parameterized"] == true);
}

TEST_CASE("validation verdicts") {
  CommandResult ok = run({"validate", "theta-complex"});
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "ok\n");
  CommandResult j = run({"validate", "theta-complex", "--json"});
  CHECK(j.out == "{\"dim\":2,\"name\":\"theta-complex\",\"ok\":true}\n");
}

TEST_CASE("polynomial output is canonical text or ordered JSON") {
  CommandResult t = run({"tkr", "sphere-three-cells", "--dim", "2"});
  CHECK(t.exit_code == 0);
  CHECK(t.out == "X^2 + 3*X + Y + 3\n");

  CommandResult m = run({"tkr", "rp2", "--dim", "2", "--modified"});
  CHECK(m.out == "X + 4\n");

  CommandResult j = run({"tkr", "sphere-three-cells", "--dim", "2", "--json"});
  CHECK(j.out ==
        "[{\"x\":2,\"y\":0,\"c\":1},{\"x\":1,\"y\":0,\"c\":3},"
        "{\"x\":0,\"y\":1,\"c\":1},{\"x\":0,\"y\":0,\"c\":3}]\n");
  // The JSON and text forms parse to the same polynomial.
  std::string body = j.out;
  body.pop_back();
  CHECK(BiPoly::parse_json(body) == BiPoly::parse_text("X^2 + 3*X + Y + 3"));

  CommandResult b = run({"bott", "torus"});
  CHECK(b.out == "L - 1\n");
  CommandResult bv = run({"bott", "octahedron-surface", "--via-tkr"});
  CHECK(bv.out == "L - 1\n");
  CommandResult bj = run({"bott", "torus", "--json"});
  CHECK(bj.out == "[{\"e\":1,\"c\":1},{\"e\":0,\"c\":-1}]\n");
}

TEST_CASE("homology table") {
  CommandResult r = run({"homology", "rp2"});
  CHECK(r.out ==
        "H_0: betti=1 torsion=1\n"
        "H_1: betti=0 torsion=2 factors=[2]\n"
        "H_2: betti=0 torsion=1\n");
  CommandResult red = run({"homology", "klein-bottle", "--reduced"});
  CHECK(red.out ==
        "H~_0: betti=0 torsion=1\n"
        "H~_1: betti=1 torsion=2 factors=[2]\n"
        "H~_2: betti=0 torsion=1\n");
  CommandResult j = run({"homology", "rp2", "--degree", "1", "--json"});
  CHECK(j.out ==
        "[{\"betti\":0,\"degree\":1,\"factors\":[2],\"reduced\":false,"
        "\"torsion\":2}]\n");
}

TEST_CASE("tree counting, listing, and the determinant route") {
  CommandResult r = run({"trees", "sphere-three-cells", "--dim", "1", "--list"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1\n{b}\n");

  CommandResult empty = run({"trees", "disc", "--dim", "1", "--list"});
  CHECK(empty.out == "1\n{}\n");

  CommandResult w = run({"trees", "rp2", "--dim", "2", "--weighted"});
  CHECK(w.out == "4\n");

  CommandResult warn = run({"trees", "torus", "--dim", "2"});
  CHECK(warn.exit_code == 0);
  CHECK(warn.out == "0\n");
  CHECK(warn.err ==
        "warning: not acyclic in positive codimension; top-dimensional tree "
        "counts may be degenerate\n");

  CommandResult mt =
      run({"trees", "octahedron-surface", "--dim", "2", "--matrix-tree"});
  CHECK(mt.out ==
        "8\nmatrix-tree value=8 raw-det=8 gamma={pxpy,pxmy,pxpz,pxmz,mxpy}\n");

  CommandResult j =
      run({"trees", "sphere-three-cells", "--dim", "1", "--list", "--json"});
  CHECK(j.out == "{\"count\":1,\"trees\":[[\"b\"]],\"weighted\":false}\n");

  CommandResult guard =
      run({"trees", "tetrahedron-boundary", "--dim", "0", "--matrix-tree"});
  CHECK(guard.exit_code == 2);
  CHECK(guard.out.empty());
  CHECK(guard.err ==
        "error: OutOfRange: --matrix-tree needs a reference tree one dimension "
        "down, so --dim must be at least 1\n");
}

TEST_CASE("rewrite verification blocks") {
  CommandResult split = run({"skein", "sphere-three-cells", "--verify", "sigma2"});
  CHECK(split.exit_code == 0);
  CHECK(split.out ==
        "cell sigma2: loop=no bridge=no boundary-regular=yes free-faces=[]\n"
        "case: i\n"
        "deletion = X^2 + 2*X + 1\n"
        "contraction = X + Y + 2\n"
        "lhs = X^2 + 3*X + Y + 3\n"
        "rhs = X^2 + 3*X + Y + 3\n"
        "equal\n");

  CommandResult none = run({"skein", "sphere-three-cells", "--verify", "sigmaoo"});
  CHECK(none.out ==
        "cell sigmaoo: loop=no bridge=no boundary-regular=no free-faces=[]\n"
        "case: none\n"
        "deletion = X^2 + 2*X + 1\n"
        "contraction = Y^2 + 2*Y + 1\n"
        "lhs = X^2 + 3*X + Y + 3\n"
        "rhs = X^2 + Y^2 + 2*X + 2*Y + 2\n"
        "unequal\n");

  CommandResult trace = run({"skein", "s2vs2", "--trace"});
  CHECK(trace.out ==
        "(ii) loop sigma -> delete\n"
        "  (iii) bridge sigmap -> collapse across e\n"
        "    enumerate over 0 top cells\n"
        "X*Y + X + Y + 1\n");

  CommandResult plain = run({"skein", "tetrahedron-boundary"});
  CHECK(plain.out == "X^3 + 4*X^2 + 6*X + Y + 4\n");

  CommandResult low = run({"skein", "rp2", "--verify", "e"});
  CHECK(low.exit_code == 2);
  CHECK(low.err ==
        "error: NotTopCell: classification applies to top-dimensional cells "
        "only\n");
  CommandResult missing = run({"skein", "rp2", "--verify", "zz"});
  CHECK(missing.exit_code == 2);
  CHECK(missing.err == "error: UnknownName: no cell named 'zz'\n");
}

TEST_CASE("matroid views") {
  CHECK(run({"matroid", "sphere-three-cells", "--dim", "2"}).out ==
        "ground=3 rank=2\n");
  CHECK(run({"matroid", "sphere-three-cells", "--dim", "2", "--tutte"}).out ==
        "X^2 + X + Y\n");
  CHECK(run({"matroid", "sphere-three-cells", "--dim", "2", "--bases"}).out ==
        "{sigma1,sigma2}\n{sigma1,sigmaoo}\n{sigma2,sigmaoo}\n");
  CHECK(run({"matroid", "sphere-three-cells", "--dim", "2", "--check"}).out ==
        "shift-identity: pass\n"
        "bases-match-trees: pass\n"
        "activities-expansion: pass\n");
  CHECK(run({"matroid", "torus", "--dim", "2", "--check"}).out ==
        "shift-identity: pass\n"
        "bases-match-trees: skipped\n"
        "activities-expansion: pass\n");
  CHECK(run({"matroid", "tetrahedron-boundary", "--dim", "1", "--json"}).out ==
        "{\"ground\":6,\"rank\":3}\n");
}

TEST_CASE("duality comparisons") {
  CommandResult r = run({"duality", "tetrahedron-self", "--dim", "1"});
  CHECK(r.out ==
        "lhs = X^3 + Y^3 + 6*X^2 + 4*X*Y + 6*Y^2 + 15*X + 15*Y + 16\n"
        "rhs = X^3 + Y^3 + 6*X^2 + 4*X*Y + 6*Y^2 + 15*X + 15*Y + 16\n"
        "equal\n");
  CommandResult alex =
      run({"duality", "theta-triangle", "--dim", "1", "--alexander", "--strict"});
  CHECK(alex.out == "alexander: checked=8 failures=0 ok\n");
  CommandResult file = run({"duality", "data/pairs/theta-triangle.pair",
                            "--dim", "1", "--alexander"});
  CHECK(file.out == "alexander: checked=8 failures=0 ok\n");
  CommandResult unknown = run({"duality", "nope", "--dim", "1"});
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.err ==
        "error: UnknownName: 'nope' is neither a catalog pair nor a file\n");
}

TEST_CASE("exit codes and error formats") {
  CommandResult unknown = run({"tkr", "nope", "--dim", "2"});
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.out.empty());
  CHECK(unknown.err ==
        "error: UnknownName: 'nope' is neither a catalog complex nor a file\n");

  CommandResult range = run({"tkr", "sphere-three-cells", "--dim", "5"});
  CHECK(range.exit_code == 2);
  CHECK(range.err == "error: OutOfRange: level 5 outside 1..2\n");

  CommandResult usage = run({"tkr", "sphere-three-cells"});
  CHECK(usage.exit_code == 1);
  CHECK(usage.err == "usage error: --dim is required\n");

  CommandResult flag = run({"tkr", "sphere-three-cells", "--dim", "2", "--bogus"});
  CHECK(flag.exit_code == 1);
  CHECK(flag.err ==
        "usage error: The following argument was not expected: --bogus\n");

  CommandResult cap =
      run({"tkr", "simplex-skeleton(9,1)", "--dim", "1", "--cap", "10"});
  CHECK(cap.exit_code == 2);
  CHECK(cap.err ==
        "error: TooLarge: enumeration over 36 cells exceeds the cap of 10 "
        "(raise it with --cap)\n");

  CommandResult help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("Usage: tkr") != std::string::npos);

  CommandResult none = run({});
  CHECK(none.exit_code == 1);
}

TEST_CASE("name resolution between catalog and files") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "tkr-cli-test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  fs::path previous = fs::current_path();
  std::ofstream(dir / "rp2") << "";
  std::ofstream(dir / "mini.cw") << "complex mini dim=0\ncells 0: v\n";
  fs::current_path(dir);

  CommandResult ambiguous = run({"validate", "rp2"});
  CommandResult forced = run({"validate", "./rp2"});
  CommandResult file = run({"validate", "mini.cw"});
  CommandResult hom = run({"homology", "mini.cw", "--degree", "0"});

  fs::current_path(previous);
  fs::remove_all(dir);

  CHECK(ambiguous.exit_code == 2);
  CHECK(ambiguous.err ==
        "error: AmbiguousName: 'rp2' names both a catalog complex and an "
        "existing file; use a path prefix such as './' to pick the file\n");
  CHECK(forced.exit_code == 2);
  CHECK(forced.err.find("error: ParseError:") == 0);
  CHECK(file.exit_code == 0);
  CHECK(file.out == "ok\n");
  CHECK(hom.out == "H_0: betti=1 torsion=1\n");
}

TEST_CASE("runs are deterministic and thread count does not change output") {
  for (std::initializer_list<const char*> args :
       {std::initializer_list<const char*>{"tkr", "cube-surface", "--dim", "2"},
        std::initializer_list<const char*>{"duality", "cube-octahedron", "--dim",
                                           "1", "--modified"},
        std::initializer_list<const char*>{"skein", "sphere-three-cells",
                                           "--trace"}}) {
    CommandResult a = run(args);
    CommandResult b = run(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
  CommandResult seq = run({"tkr", "octahedron-surface", "--dim", "2"});
  CommandResult par =
      run({"tkr", "octahedron-surface", "--dim", "2", "--threads", "4"});
  CHECK(seq.out == par.out);
  CHECK(seq.out ==
        "X^7 + 8*X^6 + 28*X^5 + 56*X^4 + 70*X^3 + 56*X^2 + 28*X + Y + 8\n");
}

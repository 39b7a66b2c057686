#include "tkr/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <sstream>

#include "tkr/catalog.hpp"
#include "tkr/cell_complex.hpp"
#include "tkr/complex_io.hpp"
#include "tkr/duality.hpp"
#include "tkr/enumeration.hpp"
#include "tkr/errors.hpp"
#include "tkr/homology.hpp"
#include "tkr/matroid.hpp"
#include "tkr/poly.hpp"
#include "tkr/skein.hpp"
#include "tkr/tkr_poly.hpp"
#include "tkr/trees.hpp"

namespace tkr {
namespace {

using nlohmann::json;

bool is_regular_file(const std::string& path) {
  std::error_code ec;
  return std::filesystem::is_regular_file(path, ec);
}

// A complex argument names either a catalog entry or a file on disk.  If a
// file with the same name as a catalog entry exists, the reference is
// ambiguous and the caller must disambiguate (e.g. "./rp2" for the file).
CellComplex resolve_complex(const std::string& ref) {
  const bool builtin_hit = is_builtin_name(ref);
  const bool file_hit = is_regular_file(ref);
  if (builtin_hit && file_hit) {
    fail("AmbiguousName", "'" + ref +
                              "' names both a catalog complex and an existing "
                              "file; use a path prefix such as './' to pick "
                              "the file");
  }
  if (builtin_hit) return builtin(ref).complex;
  if (file_hit) return load_complex_file(ref);
  fail("UnknownName", "'" + ref + "' is neither a catalog complex nor a file");
}

DualPair resolve_pair(const std::string& ref) {
  const bool builtin_hit = is_builtin_pair_name(ref);
  const bool file_hit = is_regular_file(ref);
  if (builtin_hit && file_hit) {
    fail("AmbiguousName", "'" + ref +
                              "' names both a catalog pair and an existing "
                              "file; use a path prefix such as './' to pick "
                              "the file");
  }
  if (builtin_hit) return builtin_pair(ref);
  if (file_hit) return load_pair_file(ref);
  fail("UnknownName", "'" + ref + "' is neither a catalog pair nor a file");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json homology_json(const HomologySummary& h) {
  json factors = json::array();
  for (const auto& f : h.torsion_factors) factors.push_back(to_int64(f));
  return json{{"degree", h.degree},
              {"reduced", h.reduced},
              {"betti", h.betti},
              {"torsion", to_int64(h.torsion_order)},
              {"factors", factors}};
}

std::string homology_line(const HomologySummary& h) {
  std::ostringstream os;
  os << (h.reduced ? "H~_" : "H_") << h.degree << ": betti=" << h.betti
     << " torsion=" << h.torsion_order.str();
  if (!h.torsion_factors.empty()) {
    os << " factors=[";
    for (size_t i = 0; i < h.torsion_factors.size(); ++i) {
      if (i) os << ",";
      os << h.torsion_factors[i].str();
    }
    os << "]";
  }
  return os.str();
}

std::string subset_ids_text(const std::vector<std::string>& ids) {
  std::string s = "{";
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ",";
    s += ids[i];
  }
  s += "}";
  return s;
}

std::string case_label(SkeinCase c) {
  switch (c) {
    case SkeinCase::del_contract: return "i";
    case SkeinCase::loop: return "ii";
    case SkeinCase::bridge: return "iii";
    default: return "none";
  }
}

struct Options {
  bool as_json = false;
  EnumOptions enum_opts;
};

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args) {
  CommandResult result;
  std::ostringstream out;
  std::ostringstream err;

  CLI::App app{"Exact polynomial invariants of finite cell complexes"};
  app.require_subcommand(1);

  Options opt;
  int cap = 24;
  int threads = 1;
  app.add_flag("--json", opt.as_json, "emit JSON instead of text");
  app.add_option("--cap", cap, "largest allowed subset-enumeration size")
      ->check(CLI::Range(0, 62));
  app.add_option("--threads", threads, "worker threads for enumeration")
      ->check(CLI::Range(1, 64));

  struct SubSpec {
    CLI::App* sub = nullptr;
    std::string arg;        // complex or pair reference
    std::string cell;       // skein --verify
    int dim = -1;
    int degree = -1;
    bool reduced = false;
    bool modified = false;
    bool via_tkr = false;
    bool weighted = false;
    bool list = false;
    bool matrix_tree = false;
    bool trace = false;
    bool tutte = false;
    bool bases = false;
    bool check = false;
    bool alexander = false;
    bool strict = false;
  };
  SubSpec v, h, t, b, tr, sk, ma, du;
  CLI::App* lb = app.add_subcommand("list-builtins", "list catalog complexes");

  v.sub = app.add_subcommand("validate", "check chain-complex well-formedness");
  v.sub->add_option("complex", v.arg, "catalog name or file")->required();

  h.sub = app.add_subcommand("homology", "integral homology of a complex");
  h.sub->add_option("complex", h.arg, "catalog name or file")->required();
  h.sub->add_option("--degree", h.degree, "restrict to one degree");
  h.sub->add_flag("--reduced", h.reduced, "use reduced homology");

  t.sub = app.add_subcommand("tkr", "two-variable subset-expansion polynomial");
  t.sub->add_option("complex", t.arg, "catalog name or file")->required();
  t.sub->add_option("--dim", t.dim, "cell dimension j (1..dim)")->required();
  t.sub->add_flag("--modified", t.modified,
                  "weight subsets by squared torsion order");

  b.sub = app.add_subcommand("bott", "one-variable top-cell polynomial");
  b.sub->add_option("complex", b.arg, "catalog name or file")->required();
  b.sub->add_flag("--via-tkr", b.via_tkr,
                  "derive from the two-variable polynomial instead of "
                  "direct enumeration");

  tr.sub = app.add_subcommand("trees", "cellular spanning trees");
  tr.sub->add_option("complex", tr.arg, "catalog name or file")->required();
  tr.sub->add_option("--dim", tr.dim, "cell dimension j (0..dim)")->required();
  tr.sub->add_flag("--weighted", tr.weighted,
                   "weight each tree by squared torsion order");
  tr.sub->add_flag("--list", tr.list, "list the trees");
  tr.sub->add_flag("--matrix-tree", tr.matrix_tree,
                   "evaluate the determinant formula against enumeration");

  sk.sub = app.add_subcommand("skein", "local rewrite rules for top cells");
  sk.sub->add_option("complex", sk.arg, "catalog name or file")->required();
  sk.sub->add_option("--verify", sk.cell,
                     "check the applicable rewrite identity at one top cell");
  sk.sub->add_flag("--trace", sk.trace, "print the rewrite steps taken");

  ma.sub = app.add_subcommand("matroid", "column matroid of a boundary map");
  ma.sub->add_option("complex", ma.arg, "catalog name or file")->required();
  ma.sub->add_option("--dim", ma.dim, "cell dimension j (1..dim)")->required();
  ma.sub->add_flag("--tutte", ma.tutte,
                   "corank-nullity polynomial via deletion-contraction");
  ma.sub->add_flag("--bases", ma.bases, "list the bases");
  ma.sub->add_flag("--check", ma.check,
                   "cross-check matroid and complex invariants");

  du.sub = app.add_subcommand("duality", "compare a complex with its dual");
  du.sub->add_option("pair", du.arg, "catalog pair name or pair file")
      ->required();
  du.sub->add_option("--dim", du.dim, "cell dimension j on the primal side")
      ->required();
  du.sub->add_flag("--modified", du.modified,
                   "compare the torsion-weighted polynomials");
  du.sub->add_flag("--alexander", du.alexander,
                   "check subset-wise rank and torsion correspondences");
  du.sub->add_flag("--strict", du.strict,
                   "with --alexander, compare full torsion factor lists");

  for (CLI::App* sub : app.get_subcommands(
           [](const CLI::App*) { return true; }))
    sub->fallthrough();

  std::vector<std::string> argv_store;
  argv_store.push_back("tkr");
  for (const auto& a : args) argv_store.push_back(a);
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    result.out = out.str();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    result.out = out.str();
    return result;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    result.exit_code = 1;
    result.err = err.str();
    return result;
  }

  opt.enum_opts.cap = cap;
  opt.enum_opts.threads = threads;

  try {
    if (lb->parsed()) {
      if (opt.as_json) {
        json arr = json::array();
        for (const auto& name : builtin_names()) {
          const auto info = builtin(name);
          json f = json::array();
          for (int d = 0; d <= info.complex.dim(); ++d)
            f.push_back(info.complex.f(d));
          arr.push_back(
              {{"name", name}, {"dim", info.complex.dim()}, {"f", f}});
        }
        arr.push_back({{"name", "simplex-skeleton(n,k)"},
                       {"parameterized", true}});
        out << arr.dump() << "\n";
      } else {
        for (const auto& name : builtin_names()) {
          const auto info = builtin(name);
          out << name << " dim=" << info.complex.dim() << " f=(";
          for (int d = 0; d <= info.complex.dim(); ++d) {
            if (d) out << ",";
            out << info.complex.f(d);
          }
          out << ")\n";
        }
        out << "simplex-skeleton(n,k)  (parameterized; 0 <= k < n <= 9)\n";
      }
    } else if (v.sub->parsed()) {
      const CellComplex k = resolve_complex(v.arg);
      const ValidationResult res = validate(k);
      if (!res.ok) fail(res.code, res.message);
      if (opt.as_json) {
        out << json{{"ok", true},
                    {"name", k.name()},
                    {"dim", k.dim()}}
                   .dump()
            << "\n";
      } else {
        out << "ok\n";
      }
    } else if (h.sub->parsed()) {
      const CellComplex k = resolve_complex(h.arg);
      std::vector<HomologySummary> rows;
      if (h.sub->count("--degree") > 0) {
        rows.push_back(homology(k, h.degree, h.reduced));
      } else {
        rows = all_homology(k, h.reduced);
      }
      if (opt.as_json) {
        json arr = json::array();
        for (const auto& row : rows) arr.push_back(homology_json(row));
        out << arr.dump() << "\n";
      } else {
        for (const auto& row : rows) out << homology_line(row) << "\n";
      }
    } else if (t.sub->parsed()) {
      const CellComplex k = resolve_complex(t.arg);
      const BiPoly p = t.modified
                           ? modified_tkr(k, t.dim, opt.enum_opts)
                           : tkr_polynomial(k, t.dim, opt.enum_opts);
      out << (opt.as_json ? p.to_json() : p.to_text()) << "\n";
    } else if (b.sub->parsed()) {
      const CellComplex k = resolve_complex(b.arg);
      const UniPoly p = b.via_tkr ? bott_via_tkr(k, opt.enum_opts)
                                  : bott_direct(k, opt.enum_opts);
      out << (opt.as_json ? p.to_json() : p.to_text()) << "\n";
    } else if (tr.sub->parsed()) {
      const CellComplex k = resolve_complex(tr.arg);
      if (tr.matrix_tree && tr.dim < 1)
        fail("OutOfRange",
             "--matrix-tree needs a reference tree one dimension down, so "
             "--dim must be at least 1");
      if (!is_apc(k) && tr.dim == k.dim()) {
        err << "warning: not acyclic in positive codimension; top-dimensional "
               "tree counts may be degenerate\n";
      }
      const std::vector<SpanningSubcomplex> trees =
          enumerate_csts(k, tr.dim, opt.enum_opts);
      const Int count =
          tr.weighted ? weighted_tau(k, tr.dim, opt.enum_opts)
                      : Int(static_cast<long long>(trees.size()));
      json j_out;
      if (opt.as_json) {
        j_out = json{{"count", to_int64(count)}, {"weighted", tr.weighted}};
      } else {
        out << count.str() << "\n";
      }
      if (tr.list) {
        json arr = json::array();
        for (const auto& s : trees) {
          const auto ids = s.cell_ids();
          if (opt.as_json) {
            arr.push_back(ids);
          } else {
            out << subset_ids_text(ids) << "\n";
          }
        }
        if (opt.as_json) j_out["trees"] = arr;
      }
      if (tr.matrix_tree) {
        const std::vector<SpanningSubcomplex> gammas =
            enumerate_csts(k, tr.dim - 1, opt.enum_opts);
        if (gammas.empty())
          fail("NotACst", "no spanning tree exists one dimension down");
        const MatrixTreeResult mt =
            matrix_tree_weighted(k, tr.dim, gammas.front());
        std::vector<std::string> gamma_ids = gammas.front().cell_ids();
        if (opt.as_json) {
          j_out["matrix_tree"] = json{{"value", to_int64(mt.value)},
                                      {"raw_det", to_int64(mt.raw_determinant)},
                                      {"gamma", gamma_ids}};
        } else {
          out << "matrix-tree value=" << mt.value.str()
              << " raw-det=" << mt.raw_determinant.str()
              << " gamma=" << subset_ids_text(gamma_ids) << "\n";
        }
      }
      if (opt.as_json) out << j_out.dump() << "\n";
    } else if (sk.sub->parsed()) {
      const CellComplex k = resolve_complex(sk.arg);
      if (sk.sub->count("--verify") > 0) {
        const int idx = k.index_of(k.dim(), sk.cell);
        CellRef cell{k.dim(), idx};
        if (idx < 0) {
          // Allow a helpful error when the id exists at a lower dimension.
          bool found = false;
          for (int d = 0; d < k.dim() && !found; ++d) {
            const int i = k.index_of(d, sk.cell);
            if (i >= 0) {
              cell = CellRef{d, i};
              found = true;
            }
          }
          if (!found)
            fail("UnknownName", "no cell named '" + sk.cell + "'");
        }
        const SkeinReport rep = verify_skein(k, cell, opt.enum_opts);
        if (opt.as_json) {
          json j_out{{"cell", sk.cell},
                     {"loop", rep.cls.is_loop},
                     {"bridge", rep.cls.is_bridge},
                     {"boundary_regular", rep.cls.boundary_regular},
                     {"case", case_label(rep.kind)},
                     {"applicable", rep.applicable},
                     {"lhs", json::parse(rep.lhs.to_json())},
                     {"rhs", json::parse(rep.rhs.to_json())},
                     {"equal", rep.equal}};
          json ff = json::array();
          for (const auto& f : rep.cls.free_faces) ff.push_back(k.id_of(f));
          j_out["free_faces"] = ff;
          if (rep.kind == SkeinCase::del_contract ||
              rep.kind == SkeinCase::not_applicable) {
            j_out["deletion"] = json::parse(rep.deletion_part.to_json());
            j_out["contraction"] = json::parse(rep.contraction_part.to_json());
          }
          out << j_out.dump() << "\n";
        } else {
          out << "cell " << sk.cell << ": loop=" << yes_no(rep.cls.is_loop)
              << " bridge=" << yes_no(rep.cls.is_bridge)
              << " boundary-regular=" << yes_no(rep.cls.boundary_regular)
              << " free-faces=[";
          for (size_t i = 0; i < rep.cls.free_faces.size(); ++i) {
            if (i) out << ",";
            out << k.id_of(rep.cls.free_faces[i]);
          }
          out << "]\n";
          out << "case: " << case_label(rep.kind) << "\n";
          if (rep.kind == SkeinCase::del_contract ||
              rep.kind == SkeinCase::not_applicable) {
            out << "deletion = " << rep.deletion_part.to_text() << "\n";
            out << "contraction = " << rep.contraction_part.to_text() << "\n";
          }
          out << "lhs = " << rep.lhs.to_text() << "\n";
          out << "rhs = " << rep.rhs.to_text() << "\n";
          out << (rep.equal ? "equal" : "unequal") << "\n";
        }
      } else {
        SkeinTrace trace;
        const BiPoly value =
            skein_evaluate(k, opt.enum_opts, sk.trace ? &trace : nullptr);
        if (opt.as_json) {
          json j_out{{"polynomial", json::parse(value.to_json())}};
          if (sk.trace) j_out["trace"] = trace.lines;
          out << j_out.dump() << "\n";
        } else {
          if (sk.trace)
            for (const auto& line : trace.lines) out << line << "\n";
          out << value.to_text() << "\n";
        }
      }
    } else if (ma.sub->parsed()) {
      const CellComplex k = resolve_complex(ma.arg);
      ColumnMatroid m(k, ma.dim);
      if (ma.check) {
        const MatroidCheckReport rep =
            check_matroid_correspondence(k, ma.dim, opt.enum_opts);
        if (opt.as_json) {
          out << json{{"shift_identity", rep.shift_identity},
                      {"bases_checked", rep.bases_checked},
                      {"bases_match_trees", rep.bases_match_trees},
                      {"activities_expansion", rep.activities_expansion}}
                     .dump()
              << "\n";
        } else {
          out << "shift-identity: " << (rep.shift_identity ? "pass" : "fail")
              << "\n";
          out << "bases-match-trees: "
              << (rep.bases_checked ? (rep.bases_match_trees ? "pass" : "fail")
                                    : "skipped")
              << "\n";
          out << "activities-expansion: "
              << (rep.activities_expansion ? "pass" : "fail") << "\n";
        }
      } else if (ma.tutte) {
        const BiPoly p = tutte_deletion_contraction(m);
        out << (opt.as_json ? p.to_json() : p.to_text()) << "\n";
      } else if (ma.bases) {
        const std::vector<std::uint64_t> bases =
            matroid_bases(m, opt.enum_opts);
        json arr = json::array();
        for (const std::uint64_t mask : bases) {
          std::vector<std::string> ids;
          for (int i = 0; i < m.size(); ++i)
            if (mask >> i & 1) ids.push_back(k.id_of(CellRef{ma.dim, i}));
          if (opt.as_json) {
            arr.push_back(ids);
          } else {
            out << subset_ids_text(ids) << "\n";
          }
        }
        if (opt.as_json) out << arr.dump() << "\n";
      } else {
        if (opt.as_json) {
          out << json{{"ground", m.size()}, {"rank", m.full_rank()}}.dump()
              << "\n";
        } else {
          out << "ground=" << m.size() << " rank=" << m.full_rank() << "\n";
        }
      }
    } else if (du.sub->parsed()) {
      const DualPair pair = resolve_pair(du.arg);
      if (du.alexander) {
        const AlexanderReport rep = check_alexander_identities(
            pair, du.dim, du.strict, opt.enum_opts);
        if (opt.as_json) {
          out << json{{"checked", rep.checked},
                      {"failures", rep.failures},
                      {"ok", rep.ok}}
                     .dump()
              << "\n";
        } else {
          out << "alexander: checked=" << rep.checked
              << " failures=" << rep.failures << " "
              << (rep.ok ? "ok" : "FAIL") << "\n";
          if (!rep.ok) out << rep.first_failure << "\n";
        }
      } else {
        const DualityReport rep =
            check_duality(pair, du.dim, du.modified, opt.enum_opts);
        if (opt.as_json) {
          out << json{{"lhs", json::parse(rep.lhs.to_json())},
                      {"rhs", json::parse(rep.rhs.to_json())},
                      {"equal", rep.equal}}
                     .dump()
              << "\n";
        } else {
          out << "lhs = " << rep.lhs.to_text() << "\n";
          out << "rhs = " << rep.rhs.to_text() << "\n";
          out << (rep.equal ? "equal" : "unequal") << "\n";
        }
      }
    }
  } catch (const error& e) {
    err << "error: " << e.code() << ": " << e.what() << "\n";
    result.exit_code = 2;
  }

  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace tkr

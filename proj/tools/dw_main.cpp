// dw: exact finite-gauge-theory calculator.
//
// Subcommands: group, chartable, double, irreps, modular, fusion,
// verlinde, partition, homcount, link, selfcheck. JSON on stdout,
// diagnostics on stderr. Exit codes: 0 success, 2 invalid input,
// 3 axiom/oracle failure.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dw/bundles.hpp"
#include "dw/chars.hpp"
#include "dw/group.hpp"
#include "dw/hopf.hpp"
#include "dw/json_io.hpp"
#include "dw/links.hpp"
#include "dw/tqft.hpp"

namespace {

using dw::Json;

struct RunConfig {
  double tolerance = 1e-9;
  std::uint64_t enumeration_cap = dw::kDefaultEnumerationCap;
  std::uint64_t seed = dw::kDefaultSeed;
  std::string output = "json";
  std::string cache_dir;
};

void emit_tsv(std::ostream& os, const Json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      emit_tsv(os, it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
  } else if (j.is_array()) {
    bool scalars = true;
    for (const auto& v : j)
      if (v.is_structured()) scalars = false;
    if (scalars) {
      os << prefix;
      for (const auto& v : j) os << '\t' << v.dump();
      os << '\n';
    } else {
      int i = 0;
      for (const auto& v : j)
        emit_tsv(os, v, prefix + "[" + std::to_string(i++) + "]");
    }
  } else {
    os << prefix << '\t' << j.dump() << '\n';
  }
}

void emit(const RunConfig& cfg, const Json& j) {
  if (cfg.output == "tsv") {
    emit_tsv(std::cout, j, "");
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

Json axiom_report_json(const dw::VerifyReport& rep) {
  Json out = Json::array();
  for (const auto& r : rep.results) {
    Json item{{"axiom", r.axiom}, {"pass", r.pass}};
    if (!r.pass) item["witness"] = r.witness;
    out.push_back(std::move(item));
  }
  return out;
}

Json modular_to_json(const dw::ModularData& md) {
  auto matrix = [](const Eigen::MatrixXcd& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        row.push_back(dw::complex_to_json(m(i, j)));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  Json labels = Json::array();
  for (int i = 0; i < md.num_labels(); ++i)
    labels.push_back(Json{{"class_rep", md.labels[i].class_rep},
                          {"centralizer_irrep", md.labels[i].centralizer_irrep},
                          {"conformal_weight", dw::complex_to_json(md.weights[i])},
                          {"dual", md.dual_of[i]}});
  return Json{{"num_labels", md.num_labels()},
              {"vacuum", md.vacuum},
              {"labels", std::move(labels)},
              {"S", matrix(md.s_irrep)},
              {"T_diagonal",
               [&] {
                 Json d = Json::array();
                 for (int i = 0; i < md.num_labels(); ++i)
                   d.push_back(dw::complex_to_json(md.t_irrep(i, i)));
                 return d;
               }()},
              {"t_orbit_order", md.t_orbit_order},
              {"orbit_count", static_cast<int>(md.orbit_reps.size())}};
}

// Character-table cache: keyed by the table hash and seed; written
// atomically (temp then rename) inside cache_dir only.
Json cached_chartable(const RunConfig& cfg, const dw::FiniteGroup& g) {
  std::string key;
  if (!cfg.cache_dir.empty()) {
    std::ostringstream name;
    name << "chartable-" << std::hex << g.table_hash() << "-" << cfg.seed
         << ".json";
    key = (std::filesystem::path(cfg.cache_dir) / name.str()).string();
    if (std::filesystem::exists(key)) {
      std::cerr << "dw: character table cache hit\n";
      return dw::load_json_file(key);
    }
  }
  Json out = dw::chartable_to_json(
      dw::character_table(g, cfg.seed, cfg.tolerance));
  if (!key.empty()) {
    std::filesystem::create_directories(cfg.cache_dir);
    std::string tmp = key + ".tmp";
    {
      std::ofstream f(tmp);
      f << out.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, key);
  }
  return out;
}

int run_selfcheck(const RunConfig& cfg, const dw::FiniteGroup& g) {
  Json checks = Json::array();
  bool all = true;
  auto record = [&](const std::string& name, bool pass,
                    const std::string& detail = "") {
    Json item{{"check", name}, {"pass", pass}};
    if (!detail.empty()) item["detail"] = detail;
    checks.push_back(std::move(item));
    all = all && pass;
    std::cerr << "dw: " << name << (pass ? " ok" : " FAILED") << '\n';
  };

  dw::QuantumDouble qd(g);
  auto hopf = qd.verify_hopf();
  record("hopf_axioms", hopf.all_pass());
  auto quasi = qd.verify_quasitriangular();
  record("quasitriangular_ribbon", quasi.all_pass());

  try {
    auto ct = dw::character_table(g, cfg.seed, cfg.tolerance);
    long long sum_sq = 0;
    for (int d : ct.degrees) sum_sq += static_cast<long long>(d) * d;
    record("character_table", sum_sq == g.order());
  } catch (const std::exception& e) {
    record("character_table", false, e.what());
  }

  try {
    auto md = dw::torus_modular_data(g, cfg.seed);
    auto irreps = dw::irreducible_bundles(g, cfg.seed);
    long long sdim = dw::surface_hilbert_dim(g, 1, cfg.enumeration_cap);
    record("label_triangulation",
           md.num_labels() == static_cast<int>(irreps.size()) &&
               sdim == md.num_labels());
    bool schur = true;
    for (std::size_t a = 0; a < irreps.size() && schur; ++a)
      for (std::size_t b = 0; b < irreps.size() && schur; ++b)
        schur = dw::pairing_dim(irreps[a].bundle, irreps[b].bundle) ==
                (a == b ? 1 : 0);
    record("schur_orthogonality", schur);
  } catch (const std::exception& e) {
    record("modular_data", false, e.what());
  }

  try {
    auto tt = dw::three_torus_check(g);
    record("three_torus", tt.pass);
  } catch (const std::exception& e) {
    record("three_torus", false, e.what());
  }

  try {
    auto v = dw::verlinde_check(g, cfg.seed);
    record("verlinde", v.pass,
           "max deviation " + std::to_string(v.max_deviation));
  } catch (const std::exception& e) {
    record("verlinde", false, e.what());
  }

  if (g.order() <= 24) {
    try {
      auto lhs = dw::partition_presented(g, dw::surface_group_presentation(2),
                                         cfg.enumeration_cap);
      auto rhs = dw::surface_partition_characters(g, 2, cfg.seed);
      record("genus2_partition_crosscheck", lhs == rhs);
    } catch (const std::exception& e) {
      record("genus2_partition_crosscheck", false, e.what());
    }
  }

  if (g.order() <= 12) {
    try {
      dw::BraidWord trefoil{2, {1, 1, 1}};
      auto counting = dw::closure_count(trefoil, g);
      auto oracle = dw::wirtinger_oracle(trefoil, g, cfg.enumeration_cap);
      record("link_oracle_trefoil", counting.raw_count == oracle);
    } catch (const std::exception& e) {
      record("link_oracle_trefoil", false, e.what());
    }
  }

  emit(cfg, Json{{"group", g.name()}, {"order", g.order()}, {"checks", checks},
                 {"pass", all}});
  return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dw: exact Dijkgraaf-Witten / quantum-double calculator"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--tolerance", cfg.tolerance, "numeric tolerance")
      ->check(CLI::Range(1e-300, 1e-3));
  app.add_option("--cap", cfg.enumeration_cap, "enumeration cap");
  app.add_option("--seed", cfg.seed, "seed for randomized linear algebra");
  app.add_option("--output", cfg.output, "output format")
      ->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--cache-dir", cfg.cache_dir, "character table cache dir");

  std::string group_token, presentation_path, braid_text;
  int genus = -1, lens_p = 0, lens_q = 0, strands = 1;

  auto add_group_arg = [&](CLI::App* cmd) {
    cmd->add_option("group", group_token, "group name or JSON file")
        ->required();
  };

  auto* c_group = app.add_subcommand("group", "group summary");
  add_group_arg(c_group);
  auto* c_chartable = app.add_subcommand("chartable", "character table");
  add_group_arg(c_chartable);
  auto* c_double = app.add_subcommand("double", "quantum double");
  auto* c_double_verify =
      c_double->add_subcommand("verify", "run the exact axiom suites");
  add_group_arg(c_double_verify);
  auto* c_irreps = app.add_subcommand("irreps", "irreducible bundles");
  add_group_arg(c_irreps);
  auto* c_modular = app.add_subcommand("modular", "torus modular data");
  add_group_arg(c_modular);
  auto* c_fusion = app.add_subcommand("fusion", "fusion coefficients");
  add_group_arg(c_fusion);
  auto* c_verlinde = app.add_subcommand("verlinde", "Verlinde consistency");
  add_group_arg(c_verlinde);
  auto* c_partition = app.add_subcommand("partition", "partition function");
  c_partition->add_option("--genus", genus, "closed surface genus");
  c_partition->add_option("--presentation", presentation_path,
                          "pi_1 presentation JSON file");
  c_partition->add_option("--lens", lens_p, "lens space L(p,q): p");
  c_partition->add_option("--lens-q", lens_q, "lens space L(p,q): q (unused)");
  add_group_arg(c_partition);
  auto* c_homcount = app.add_subcommand("homcount", "count homomorphisms");
  c_homcount
      ->add_option("--presentation", presentation_path, "presentation file")
      ->required();
  add_group_arg(c_homcount);
  auto* c_link = app.add_subcommand("link", "closed-braid invariant");
  c_link->add_option("--strands", strands, "number of strands")->required();
  c_link->add_option("--braid", braid_text, "signed generators, e.g. \"1 1 1\"")
      ->required();
  bool with_oracle = false;
  c_link->add_flag("--oracle", with_oracle, "cross-check with the Wirtinger "
                                            "counting oracle");
  add_group_arg(c_link);
  auto* c_selfcheck = app.add_subcommand("selfcheck", "cross-module suite");
  add_group_arg(c_selfcheck);

  // Allow the global flags to appear after the subcommand too.
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    std::cerr << "hint: run with --help for usage\n";
    return 2;
  }

  try {
    dw::FiniteGroup g = dw::resolve_group(group_token);

    if (c_group->parsed()) {
      auto cc = dw::conjugacy_data(g);
      Json classes = Json::array();
      for (std::size_t c = 0; c < cc.classes.size(); ++c)
        classes.push_back(
            Json{{"representative", cc.representatives[c]},
                 {"representative_name",
                  g.element_name(cc.representatives[c])},
                 {"size", cc.classes[c].size()},
                 {"centralizer_order",
                  cc.centralizers[cc.representatives[c]].size()}});
      emit(cfg, Json{{"name", g.name()},
                     {"order", g.order()},
                     {"abelian", g.is_abelian()},
                     {"identity", g.identity()},
                     {"exponent", g.exponent()},
                     {"num_classes", cc.classes.size()},
                     {"classes", classes}});
    } else if (c_chartable->parsed()) {
      emit(cfg, cached_chartable(cfg, g));
    } else if (c_double_verify->parsed()) {
      dw::QuantumDouble qd(g);
      auto hopf = qd.verify_hopf();
      auto quasi = qd.verify_quasitriangular();
      Json out{{"group", g.name()},
               {"hopf", axiom_report_json(hopf)},
               {"quasitriangular", axiom_report_json(quasi)}};
      bool pass = hopf.all_pass() && quasi.all_pass();
      out["pass"] = pass;
      emit(cfg, out);
      if (!pass) return 3;
    } else if (c_irreps->parsed()) {
      auto irreps = dw::irreducible_bundles(g, cfg.seed);
      Json out = Json::array();
      for (const auto& ir : irreps)
        out.push_back(Json{
            {"class_rep", ir.label.class_rep},
            {"class_rep_name", g.element_name(ir.label.class_rep)},
            {"centralizer_irrep", ir.label.centralizer_irrep},
            {"total_dim", ir.bundle.total_dim},
            {"conformal_weight", dw::complex_to_json(ir.weight)}});
      emit(cfg, Json{{"group", g.name()}, {"irreps", out}});
    } else if (c_modular->parsed()) {
      emit(cfg, modular_to_json(dw::torus_modular_data(g, cfg.seed)));
    } else if (c_fusion->parsed()) {
      auto irreps = dw::irreducible_bundles(g, cfg.seed);
      int vac = dw::vacuum_index(irreps, g);
      auto fusion = dw::fusion_coefficients(irreps, vac);
      Json labels = Json::array();
      for (const auto& ir : irreps)
        labels.push_back(Json{{"class_rep", ir.label.class_rep},
                              {"centralizer_irrep", ir.label.centralizer_irrep},
                              {"total_dim", ir.bundle.total_dim},
                              {"conformal_weight",
                               dw::complex_to_json(ir.weight)}});
      emit(cfg, Json{{"group", g.name()},
                     {"vacuum", vac},
                     {"labels", std::move(labels)},
                     {"N", fusion}});
    } else if (c_verlinde->parsed()) {
      auto rep = dw::verlinde_check(g, cfg.seed);
      emit(cfg, Json{{"group", g.name()},
                     {"pass", rep.pass},
                     {"max_deviation", dw::json_round(rep.max_deviation)}});
      if (!rep.pass) return 3;
    } else if (c_partition->parsed()) {
      dw::GroupPresentation pres;
      std::string source;
      if (genus >= 0) {
        pres = dw::surface_group_presentation(genus);
        source = "genus " + std::to_string(genus);
      } else if (!presentation_path.empty()) {
        pres = dw::presentation_from_json(dw::load_json_file(presentation_path));
        source = presentation_path;
      } else if (lens_p > 0) {
        if (lens_q != 0)
          std::cerr << "dw: note: only pi_1 matters in the untwisted theory; "
                       "the lens parameter q is ignored\n";
        pres = dw::cyclic_presentation(lens_p);
        source = "lens p=" + std::to_string(lens_p);
      } else {
        throw dw::ValidationError(
            "partition needs --genus, --presentation or --lens");
      }
      auto z = dw::partition_presented(g, pres, cfg.enumeration_cap);
      std::cerr << "dw: Z(" << source << ") for " << g.name() << '\n';
      emit(cfg, dw::rational_to_json(z));
    } else if (c_homcount->parsed()) {
      auto pres =
          dw::presentation_from_json(dw::load_json_file(presentation_path));
      auto homs = dw::enumerate_homs(pres, g, cfg.enumeration_cap);
      auto orbits = dw::hom_orbits(homs, g);
      emit(cfg, Json{{"group", g.name()},
                     {"count", homs.size()},
                     {"orbits", orbits.size()}});
    } else if (c_link->parsed()) {
      dw::BraidWord braid;
      braid.strands = strands;
      std::istringstream in(braid_text);
      for (int k; in >> k;) braid.word.push_back(k);
      auto res = dw::closure_count(braid, g, cfg.enumeration_cap);
      Json out{{"group", g.name()},
               {"strands", braid.strands},
               {"raw_count", res.raw_count},
               {"normalized", dw::rational_to_json(res.normalized)},
               {"components", res.components},
               {"writhe", res.writhe}};
      if (with_oracle) {
        auto oracle = dw::wirtinger_oracle(braid, g, cfg.enumeration_cap);
        out["wirtinger_count"] = oracle;
        if (oracle != res.raw_count) {
          out["pass"] = false;
          emit(cfg, out);
          std::cerr << "dw: Wirtinger oracle disagrees with the fixed-point "
                       "count; this is a bug, not bad input\n";
          return 3;
        }
        out["pass"] = true;
      }
      emit(cfg, out);
    } else if (c_selfcheck->parsed()) {
      return run_selfcheck(cfg, g);
    }
  } catch (const dw::ValidationError& e) {
    std::cerr << "dw: invalid input: " << e.what() << '\n';
    std::cerr << "hint: check the group/presentation definition and caps\n";
    return 2;
  } catch (const dw::CheckError& e) {
    std::cerr << "dw: check failed: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "dw: error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

#include "mop/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mop/bounds.hpp"
#include "mop/coloring.hpp"
#include "mop/doubling.hpp"
#include "mop/extend.hpp"
#include "mop/gallery.hpp"
#include "mop/io.hpp"
#include "mop/rotation.hpp"
#include "mop/search.hpp"
#include "mop/verify.hpp"

namespace mop {
namespace {

constexpr int kMaxConstructT = 512;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void deliver(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file || !(file << text) || !file.flush()) {
    throw std::runtime_error("cannot write '" + out_path + "'");
  }
}

void print_bounds(std::ostream& out, const BoundReport& r) {
  out << "bounds t=" << r.t << " n=" << r.n << "\n";
  out << "total=" << r.total << " capacity=" << r.capacity << " quadratic=" << r.quadratic
      << "\n";
  out << "minimum_order=" << r.minimum_order << "\n";
  out << "counting-infeasible: " << (r.counting_infeasible ? "yes" : "no") << "\n";
  out << "below-minimum: " << (r.below_minimum ? "yes" : "no") << "\n";
  out << "verdict: " << (r.feasible() ? "feasible" : "infeasible") << "\n";
}

void print_search(std::ostream& out, const SearchResult& r) {
  switch (r.outcome) {
    case SearchOutcome::Found:
      out << "outcome: found\n";
      break;
    case SearchOutcome::Refuted:
      out << "outcome: refuted\n";
      break;
    case SearchOutcome::BudgetExceeded:
      out << "outcome: budget-exceeded\n";
      break;
  }
  out << "nodes: " << r.nodes << "\n";
  for (std::size_t c = 0; c < r.parts.size(); ++c) {
    out << "part " << c << ":";
    for (const Edge& e : r.parts[c]) out << " {" << e.u << "," << e.v << "}";
    out << "\n";
  }
}

int exit_code(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::Found:
      return 0;
    case SearchOutcome::Refuted:
      return 1;
    case SearchOutcome::BudgetExceeded:
      return 3;
  }
  return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"edge-disjoint maximal outerplanar families: construct, grow, certify"};
  app.name("mopkit");
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build a family from scratch");
  construct->require_subcommand(1);
  int rot_t = 0, rot_n = -1;
  std::string rot_out;
  auto* rotation = construct->add_subcommand("rotation", "t members on 4t vertices");
  rotation->alias("gn");
  rotation->add_option("--t", rot_t, "member count")->required();
  rotation->add_option("--n", rot_n, "grow to this order after construction");
  rotation->add_option("-o,--output", rot_out, "write here instead of stdout");
  int dbl_s = 0, dbl_n = -1;
  std::string dbl_out;
  auto* doubling = construct->add_subcommand("doubling", "2^s members on 2^(s+2) vertices");
  doubling->add_option("--s", dbl_s, "doubling level")->required();
  doubling->add_option("--n", dbl_n, "grow to this order after construction");
  doubling->add_option("-o,--output", dbl_out, "write here instead of stdout");

  // extend
  std::string ext_in, ext_out;
  int ext_to = 0;
  bool ext_strict = false;
  auto* extend = app.add_subcommand("extend", "grow a family file to a larger order");
  extend->add_option("--input", ext_in, "family file")->required();
  extend->add_option("--to", ext_to, "target order")->required();
  extend->add_flag("--strict", ext_strict, "re-verify after every growth round");
  extend->add_option("-o,--output", ext_out, "write here instead of stdout");

  // verify
  std::string ver_in;
  bool ver_allow = false, ver_serial = false;
  int ver_cap = limits::kOuterplanarOracleMaxN;
  auto* verify = app.add_subcommand("verify", "certify a family file");
  verify->add_option("--input", ver_in, "family file")->required();
  verify->add_flag("--allow-nonmaximal", ver_allow,
                   "accept members that are outerplanar but not maximal");
  verify->add_flag("--serial", ver_serial, "disable the parallel member scan");
  verify->add_option("--oracle-cap", ver_cap, "max order for the outerplanarity fallback");

  // bounds
  int bnd_t = 0, bnd_n = 0;
  auto* bounds = app.add_subcommand("bounds", "counting feasibility for (t, n)");
  bounds->add_option("--t", bnd_t, "member count")->required();
  bounds->add_option("--n", bnd_n, "order")->required();

  // gallery
  std::string gal_which, gal_out;
  auto* gallery = app.add_subcommand("gallery", "fixed small exhibits");
  gallery->add_option("exhibit", gal_which, "k7e or k8m")
      ->required()
      ->check(CLI::IsMember({"k7e", "k8m"}));
  gallery->add_option("-o,--output", gal_out, "write here instead of stdout");

  // search
  auto* search = app.add_subcommand("search", "exhaustive decomposition search");
  search->require_subcommand(1);
  std::string ot_in;
  int ot_k = 0;
  long long ot_budget = 0;
  bool ot_serial = false;
  auto* ot = search->add_subcommand("ot", "split the union into k outerplanar classes");
  ot->add_option("--input", ot_in, "family file; its union is searched")->required();
  ot->add_option("--k", ot_k, "class count")->required();
  ot->add_option("--budget", ot_budget, "node budget (default: MOPKIT_BUDGET or built-in)");
  ot->add_flag("--serial", ot_serial, "disable the parallel subtree scan");

  // color
  std::string col_in;
  auto* color = app.add_subcommand("color", "exact chromatic number of the union");
  color->add_option("--input", col_in, "family file")->required();

  // export
  std::string exp_in, exp_fmt, exp_out;
  auto* exporter = app.add_subcommand("export", "re-serialize a family file");
  exporter->add_option("--input", exp_in, "family file")->required();
  exporter->add_option("--format", exp_fmt, "edgelist, graph6, or dot")
      ->required()
      ->check(CLI::IsMember({"edgelist", "graph6", "dot"}));
  exporter->add_option("-o,--output", exp_out, "write here instead of stdout");

  std::vector<const char*> argv;
  argv.push_back("mopkit");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (rotation->parsed()) {
      if (rot_t < 1 || rot_t > kMaxConstructT) {
        throw std::invalid_argument("member count must be in {1,...," +
                                    std::to_string(kMaxConstructT) + "}");
      }
      Family f = rotation_family(rot_t);
      if (rot_n >= 0) f = extend_to(f, rot_n);
      deliver(emit_family(f), rot_out, out);
      return 0;
    }
    if (doubling->parsed()) {
      Family f = doubling_family(dbl_s);
      if (dbl_n >= 0) f = extend_to(f, dbl_n);
      deliver(emit_family(f), dbl_out, out);
      return 0;
    }
    if (extend->parsed()) {
      Family f = parse_family(slurp(ext_in));
      f = extend_to(f, ext_to, ext_strict);
      deliver(emit_family(f), ext_out, out);
      return 0;
    }
    if (verify->parsed()) {
      Family f = parse_family(slurp(ver_in));
      VerifyOptions opts;
      opts.parallel = !ver_serial;
      opts.oracle_cap = ver_cap;
      VerificationReport report = verify_family(f, opts);
      std::ostringstream text;
      print_report(text, report, ver_allow);
      out << text.str();
      return report.valid(ver_allow) ? 0 : 1;
    }
    if (bounds->parsed()) {
      BoundReport report = counting_check(bnd_t, bnd_n);
      print_bounds(out, report);
      return report.feasible() ? 0 : 1;
    }
    if (gallery->parsed()) {
      Family f = gal_which == "k7e" ? k7_minus_e_family() : k8_minus_matching_family();
      deliver(emit_family(f), gal_out, out);
      return 0;
    }
    if (ot->parsed()) {
      Family f = parse_family(slurp(ot_in));
      SearchOptions opts;
      opts.node_budget = ot_budget;
      opts.parallel = !ot_serial;
      SearchResult result = outerthickness_exact(family_union(f), ot_k, opts);
      print_search(out, result);
      return exit_code(result.outcome);
    }
    if (color->parsed()) {
      Family f = parse_family(slurp(col_in));
      out << "chromatic: " << chromatic_number_exact(family_union(f)) << "\n";
      return 0;
    }
    if (exporter->parsed()) {
      Family f = parse_family(slurp(exp_in));
      std::ostringstream text;
      if (exp_fmt == "edgelist") {
        text << emit_family(f);
      } else if (exp_fmt == "graph6") {
        for (int k = 0; k < f.t(); ++k) text << emit_graph6(f.member_graph(k)) << "\n";
      } else {
        for (int k = 0; k < f.t(); ++k) {
          Graph g = f.member_graph(k);
          CertifyResult cert = certify_mop(g);
          text << emit_dot(g, cert.ok() ? &*cert.certificate : nullptr);
        }
      }
      deliver(text.str(), exp_out, out);
      return 0;
    }
    err << "no subcommand selected\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help and friends
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const GraphError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const PlanningError& e) {
    err << "planning failed: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    // slurp/deliver failures: unreadable input, unwritable output
    err << "i/o error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace mop

#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sct/constructions.hpp"
#include "sct/enumerate.hpp"
#include "sct/json_io.hpp"
#include "sct/lattice.hpp"
#include "sct/verify.hpp"

namespace sct {

namespace detail {

inline std::optional<std::string> env_cache_dir() {
  if (const char* e = std::getenv("SCT_CACHE"); e && *e)
    return std::string(e);
  return std::nullopt;
}

inline TheorySet obtain_theories(int n,
                                 const std::optional<std::string>& cache) {
  if (cache) {
    if (auto ts = load_theory_set(*cache, n)) return std::move(*ts);
  }
  TheorySet ts = enumerate_all(n, default_search_budget());
  if (cache) save_theory_set(ts, *cache);
  return ts;
}

}  // namespace detail

// Runs one command line (without the program name) against the given
// streams.  Exit codes: 0 success, 1 failed verification claim, 2 resource
// budget exhausted, 64 usage or invalid input, 70 internal error.
inline int dispatch(std::vector<std::string> args, std::ostream& out,
                    std::ostream& err) {
  CLI::App app{"supercharacter theories of cyclic groups"};
  app.name("sct");
  app.require_subcommand(1);

  int n = 0;
  std::string format = "text";
  std::string cache_flag;
  std::string property;
  std::string dot_path;
  std::string report_path;
  std::string inner_path, outer_path, a_path, b_path;
  std::vector<int> gens;
  int subgroup_order = 0;
  int max_n = 30;
  unsigned jobs = 1;

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list every supercharacter theory of Z_n");
  enumerate->add_option("--n", n, "group order")->required();
  enumerate->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  enumerate->add_option("--cache", cache_flag,
                        "directory for cached enumerations");

  CLI::App* construct =
      app.add_subcommand("construct", "build one theory and print it");
  construct->add_option("--n", n, "group order")->required();
  construct->require_subcommand(1);
  CLI::App* c_aut = construct->add_subcommand(
      "aut", "orbit theory of the unit subgroup generated by --gens");
  c_aut->add_option("--gens", gens, "generating units, comma separated")
      ->required()
      ->delimiter(',');
  CLI::App* c_star = construct->add_subcommand(
      "star", "theory assembled over the subgroup of order --subgroup");
  c_star->add_option("--subgroup", subgroup_order, "subgroup order")
      ->required();
  c_star->add_option("--inner", inner_path, "theory of the subgroup (JSON)")
      ->required();
  c_star->add_option("--outer", outer_path, "theory of the quotient (JSON)")
      ->required();
  CLI::App* c_direct = construct->add_subcommand(
      "direct", "product theory of two coprime components");
  c_direct->add_option("--a", a_path, "first component (JSON)")->required();
  c_direct->add_option("--b", b_path, "second component (JSON)")->required();
  CLI::App* c_inv =
      construct->add_subcommand("inversion", "blocks {g, -g}");
  CLI::App* c_min =
      construct->add_subcommand("min", "finest theory (singletons)");
  CLI::App* c_max =
      construct->add_subcommand("max", "coarsest theory ({0} and the rest)");

  CLI::App* check = app.add_subcommand(
      "check", "test an order property of the full lattice");
  check->add_option("--n", n, "group order")->required();
  check->add_option("--property", property, "usm, lsm or modular")
      ->required()
      ->check(CLI::IsMember({"usm", "lsm", "modular"}));

  CLI::App* hasse =
      app.add_subcommand("hasse", "write the cover graph in DOT form");
  hasse->add_option("--n", n, "group order")->required();
  hasse->add_option("--dot", dot_path, "output path")->required();

  CLI::App* verify = app.add_subcommand(
      "verify-paper", "re-check the recorded lattice claims");
  verify->add_option("--max-n", max_n, "largest group order")
      ->check(CLI::Range(6, 30));
  verify->add_option("--report", report_path, "write a JSON report here");
  verify->add_option("--jobs", jobs, "worker threads for enumeration")
      ->check(CLI::Range(1u, 64u));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));

    std::optional<std::string> cache = detail::env_cache_dir();

    if (*enumerate) {
      if (!cache_flag.empty()) cache = cache_flag;
      TheorySet ts = detail::obtain_theories(n, cache);
      if (format == "json") {
        nlohmann::json j;
        j["n"] = ts.n;
        j["count"] = ts.size();
        auto& arr = j["theories"] = nlohmann::json::array();
        for (const auto& t : ts.theories)
          arr.push_back(t.superclasses.blocks);
        out << j.dump(1) << "\n";
      } else {
        out << "n=" << ts.n << " count=" << ts.size() << "\n";
        for (const auto& t : ts.theories)
          out << t.superclasses.to_string() << "\n";
      }
      return 0;
    }

    if (*construct) {
      SCTheory t = min_theory(n);
      if (*c_aut) {
        t = from_automorphisms(n, generated_unit_subgroup(n, gens));
      } else if (*c_star) {
        if (subgroup_order < 1 || n % subgroup_order != 0)
          throw InvalidDivisorError("subgroup order must divide n");
        t = star_product(n, subgroup_of_order(n, subgroup_order),
                         theory_from_file(inner_path),
                         theory_from_file(outer_path));
      } else if (*c_direct) {
        t = direct_product(theory_from_file(a_path),
                           theory_from_file(b_path));
      } else if (*c_inv) {
        t = inversion_theory(n);
      } else if (*c_min) {
        t = min_theory(n);
      } else if (*c_max) {
        t = max_theory(n);
      }
      out << partition_to_json(t.superclasses).dump(1) << "\n";
      return 0;
    }

    if (*check) {
      Lattice l(detail::obtain_theories(n, cache));
      auto r = l.check_semimodularity(*parse_property(property));
      if (r.holds) {
        out << "true\n";
      } else {
        out << "false\n";
        out << "witness a: " << l.theory(r.witness->a).superclasses.to_string()
            << "\n";
        out << "witness b: " << l.theory(r.witness->b).superclasses.to_string()
            << "\n";
      }
      return 0;
    }

    if (*hasse) {
      Lattice l(detail::obtain_theories(n, cache));
      std::ofstream f(dot_path);
      if (!f) throw Error("cannot open " + dot_path + " for writing");
      f << l.to_dot();
      int covers = 0;
      for (int i = 0; i < l.size(); ++i)
        covers += static_cast<int>(l.covers_above(i).size());
      out << "nodes=" << l.size() << " covers=" << covers << "\n";
      return 0;
    }

    if (*verify) {
      Session session(cache);
      session.prefetch(max_n, jobs);
      auto claims = run_paper_verification(session, max_n);
      out << render_text_report(claims, max_n);
      if (!report_path.empty()) {
        std::ofstream f(report_path);
        if (!f) throw Error("cannot open " + report_path + " for writing");
        f << render_json_report(claims, max_n).dump(1) << "\n";
      }
      for (const auto& c : claims)
        if (!c.pass) return 1;
      return 0;
    }

    err << "no command selected\n";
    return 64;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const InternalInconsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return 70;
  } catch (const ArithmeticOverflowError& e) {
    err << "internal error: " << e.what() << "\n";
    return 70;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 70;
  }
}

}  // namespace sct

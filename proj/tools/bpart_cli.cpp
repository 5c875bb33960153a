// Command-line front end: counting, enumeration, diagram export, lattice
// queries and the cross-validation suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bpart/counting.hpp"
#include "bpart/io.hpp"
#include "bpart/lattice.hpp"
#include "bpart/oracle.hpp"
#include "bpart/tree.hpp"
#include "bpart/verify.hpp"

namespace {

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

struct args {
  unsigned base = 2;
  bpart::value_t n = 0;
  bpart::value_t depth = 0;
  bpart::value_t max_n = 30;
  std::size_t cap = bpart::default_node_cap;
  std::string count_method = "recurrence";
  std::string enum_format = "lines";
  std::string hasse_format = "dot";
  std::string hasse_method = "direct";
  std::string tree_format = "lines";
  std::string output;
  std::string p_text;
  std::string q_text;
};

void add_common(CLI::App* cmd, args& a) {
  cmd->add_option("-b,--base", a.base, "radix of the power representation (>= 2)")
      ->capture_default_str();
  cmd->add_option("--cap", a.cap, "node budget for enumerations and diagrams")
      ->capture_default_str();
  cmd->add_option("-o,--output", a.output, "write to a file instead of standard output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"b-ary partition toolkit: enumeration, counting, lattice structure"};
  app.require_subcommand(1);
  args a;
  int rc = 0;

  auto* cmd_count = app.add_subcommand("count", "number of representations of n");
  add_common(cmd_count, a);
  cmd_count->add_option("--n", a.n, "the represented integer")->required();
  cmd_count->add_option("--method", a.count_method, "recurrence|sum|pi|oracle")
      ->capture_default_str()
      ->check(CLI::IsMember({"recurrence", "sum", "pi", "oracle"}));
  cmd_count->callback([&] {
    const bpart::basis b(a.base);
    std::string text;
    if (a.count_method == "oracle") {
      text = std::to_string(bpart::oracle::brute_count(a.n, b, a.cap));
    } else {
      bpart::count_cache cache(b);
      if (a.count_method == "sum")
        text = cache.count_sum_form(a.n).str();
      else if (a.count_method == "pi")
        text = cache.count_via_tree(a.n).str();
      else
        text = cache.count(a.n).str();
    }
    emit(text + "\n", a.output);
  });

  auto* cmd_enum = app.add_subcommand("enum", "list every representation of n");
  add_common(cmd_enum, a);
  cmd_enum->add_option("--n", a.n, "the represented integer")->required();
  cmd_enum->add_option("--format", a.enum_format, "lines|json")
      ->capture_default_str()
      ->check(CLI::IsMember({"lines", "json"}));
  cmd_enum->callback([&] {
    const bpart::basis b(a.base);
    std::string text;
    if (a.enum_format == "json") {
      text = bpart::partitions_to_json(bpart::enumerate(a.n, b, a.cap)).dump() + "\n";
    } else {
      bpart::for_each_partition(
          a.n, b, [&](const bpart::partition& p) { text += bpart::to_string(p) + "\n"; },
          a.cap);
    }
    emit(text, a.output);
  });

  auto* cmd_hasse = app.add_subcommand("hasse", "covering diagram of the representations of n");
  add_common(cmd_hasse, a);
  cmd_hasse->add_option("--n", a.n, "the represented integer")->required();
  cmd_hasse->add_option("--format", a.hasse_format, "dot|json")
      ->capture_default_str()
      ->check(CLI::IsMember({"dot", "json"}));
  cmd_hasse->add_option("--method", a.hasse_method, "direct|incremental")
      ->capture_default_str()
      ->check(CLI::IsMember({"direct", "incremental"}));
  cmd_hasse->callback([&] {
    const bpart::basis b(a.base);
    const bpart::hasse_diagram d =
        (a.hasse_method == "incremental" && a.n > 0)
            ? bpart::incremental_next(bpart::build_hasse(a.n - 1, b, a.cap))
            : bpart::build_hasse(a.n, b, a.cap);
    emit(a.hasse_format == "json" ? bpart::hasse_to_json(d).dump() + "\n"
                                   : bpart::hasse_to_dot(d),
         a.output);
  });

  auto* cmd_tree = app.add_subcommand("tree", "expansion tree levels 0..depth");
  add_common(cmd_tree, a);
  cmd_tree->add_option("--depth", a.depth, "deepest level to generate")->required();
  cmd_tree->add_option("--format", a.tree_format, "lines|json|dot")
      ->capture_default_str()
      ->check(CLI::IsMember({"lines", "json", "dot"}));
  cmd_tree->callback([&] {
    const bpart::basis b(a.base);
    const auto levels = bpart::levels(b, a.depth, a.cap);
    std::string text;
    if (a.tree_format == "json") {
      text = bpart::levels_to_json(b, levels).dump() + "\n";
    } else if (a.tree_format == "dot") {
      text = bpart::tree_to_dot(b, levels);
    } else {
      for (std::size_t d = 0; d < levels.size(); ++d) {
        text += std::to_string(d) + ":";
        for (const bpart::partition& p : levels[d]) text += " " + bpart::to_string(p);
        text += "\n";
      }
    }
    emit(text, a.output);
  });

  const auto lattice_query = [&](const std::string& which) {
    const bpart::basis b(a.base);
    const bpart::partition p = bpart::parse_partition(a.p_text, b);
    const bpart::partition q = bpart::parse_partition(a.q_text, b);
    std::string text;
    if (which == "meet")
      text = bpart::to_string(bpart::meet(p, q, a.n));
    else if (which == "join")
      text = bpart::to_string(bpart::join(p, q, a.n));
    else
      text = bpart::leq(p, q, a.n) ? "true" : "false";
    emit(text + "\n", a.output);
  };

  for (const std::string which : {"meet", "join", "leq"}) {
    auto* cmd = app.add_subcommand(
        which, which == "leq" ? "is p reachable from q by firings"
                              : which + " of two representations of n");
    add_common(cmd, a);
    cmd->add_option("--n", a.n, "the represented integer")->required();
    cmd->add_option("p", a.p_text, "first partition, as p0,p1,...")->required();
    cmd->add_option("q", a.q_text, "second partition")->required();
    cmd->callback([&, which] { lattice_query(which); });
  }

  auto* cmd_shots = app.add_subcommand("shots", "per-position firing counts from (n) to p");
  add_common(cmd_shots, a);
  cmd_shots->add_option("--n", a.n, "the represented integer")->required();
  cmd_shots->add_option("p", a.p_text, "partition, as p0,p1,...")->required();
  cmd_shots->callback([&] {
    const bpart::basis b(a.base);
    emit(bpart::to_string(bpart::shots(bpart::parse_partition(a.p_text, b), a.n)) + "\n",
         a.output);
  });

  auto* cmd_verify = app.add_subcommand("verify", "cross-validate all implementations");
  add_common(cmd_verify, a);
  cmd_verify->add_option("--max-n", a.max_n, "check every n up to this bound")
      ->capture_default_str();
  cmd_verify->callback([&] {
    bpart::verify_options opt{bpart::basis(a.base)};
    opt.max_n = a.max_n;
    opt.order_max_n = std::min<bpart::value_t>(a.max_n, opt.order_max_n);
    opt.cfg_max_n = std::min<bpart::value_t>(a.max_n, opt.cfg_max_n);
    opt.budget = a.cap;
    std::string text;
    std::size_t failed = 0;
    for (const bpart::check_result& r : bpart::run_verification(opt)) {
      if (r.passed) {
        text += "PASS " + r.name + "\n";
      } else {
        text += "FAIL " + r.name + ": " + r.detail + "\n";
        ++failed;
      }
    }
    text += failed == 0 ? "all checks passed\n"
                        : std::to_string(failed) + " check(s) failed\n";
    emit(text, a.output);
    if (failed > 0) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  } catch (const bpart::cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

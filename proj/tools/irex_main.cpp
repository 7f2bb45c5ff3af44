// irex: interval graph recognition, partial representation extension, and
// simultaneous representation with shared vertices.
//
// Exit codes: 0 = positive answer, 1 = negative answer, 2 = I/O or parse
// error, 3 = shared-vertex bound exceeded (simrep only).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "irex/graph.hpp"
#include "irex/interval.hpp"
#include "irex/repext.hpp"
#include "irex/selfcheck.hpp"
#include "irex/simrep.hpp"

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return in;
}

irex::Graph load_graph_file(const std::string& path) {
  auto in = open_input(path);
  return irex::load_graph(in);
}

// Render a representation, then re-parse and re-verify the rendered text so
// nothing unverified ever reaches stdout with exit status 0.
std::string render_checked(const irex::Graph& g, const irex::PredrawnMap& pre,
                           const irex::Representation& rep) {
  std::string text = irex::format_representation(rep);
  std::istringstream back(text);
  irex::Representation reread = irex::parse_representation(back, g.n());
  auto chk = irex::verify_extension(g, pre, reread);
  if (!chk.ok)
    throw std::logic_error("internal error: output failed re-verification: " +
                           chk.reason);
  return text;
}

const char* status_word(const irex::ExtendResult& res) {
  if (res.extended) return "EXTENDED";
  switch (res.fail) {
    case irex::ExtendFail::NotInterval: return "NOT_INTERVAL";
    case irex::ExtendFail::InvalidPartial: return "INVALID_PARTIAL";
    default: return "NOT_EXTENDIBLE";
  }
}

int cmd_recognize(const std::string& graph_path) {
  irex::Graph g = load_graph_file(graph_path);
  auto res = irex::recognize(g);
  if (!res.extended) {
    std::cout << "NOT_INTERVAL\n";
    std::cerr << res.reason << "\n";
    return 1;
  }
  std::cout << render_checked(g, irex::PredrawnMap(g.n()), res.rep);
  return 0;
}

int cmd_extend(const std::string& graph_path, const std::string& partial_path,
               bool assume_sorted, bool as_json) {
  irex::Graph g = load_graph_file(graph_path);
  auto in = open_input(partial_path);
  auto lines = irex::parse_interval_lines(in);

  bool sorted = true;
  for (std::size_t i = 1; i < lines.size(); ++i)
    if (lines[i].span.left < lines[i - 1].span.left) sorted = false;
  if (!sorted) {
    if (assume_sorted)
      throw irex::parse_error(irex::parse_error::Kind::UnsortedInput, 0,
                              "--assume-sorted given but intervals are not "
                              "sorted by left endpoint");
    std::cerr << "note: partial representation is not sorted by left "
                 "endpoint; sorting it costs O(k log k)\n";
  }

  irex::PredrawnMap pre = irex::partial_from_lines(lines, g.n());
  auto res = irex::extend(g, pre);

  if (as_json) {
    nlohmann::json out;
    out["status"] = status_word(res);
    if (res.extended) {
      // Re-verify through the text round trip before emitting JSON.
      render_checked(g, pre, res.rep);
      auto arr = nlohmann::json::array();
      for (int v = 0; v < g.n(); ++v)
        arr.push_back({{"vertex", v},
                       {"left", res.rep[v].left.str()},
                       {"right", res.rep[v].right.str()}});
      out["representation"] = std::move(arr);
      out["clique_order"] = res.clique_order;
    } else {
      out["reason"] = res.reason;
    }
    std::cout << out.dump(2) << "\n";
    return res.extended ? 0 : 1;
  }

  if (!res.extended) {
    std::cout << status_word(res) << "\n";
    std::cerr << res.reason << "\n";
    return 1;
  }
  std::cout << render_checked(g, pre, res.rep);
  return 0;
}

int cmd_simrep(const std::string& instance_path, int max_shared) {
  auto in = open_input(instance_path);
  irex::SimRepInstance inst = irex::parse_simrep_instance(in);
  auto res = irex::simrep(inst, max_shared);
  switch (res.status) {
    case irex::SimRepStatus::Solved:
      for (std::size_t i = 0; i < res.reps.size(); ++i) {
        std::cout << "# graph " << i << "\n";
        std::cout << render_checked(inst.graphs[i], irex::PredrawnMap(inst.graphs[i].n()),
                                    res.reps[i]);
      }
      return 0;
    case irex::SimRepStatus::NoSimRep:
      std::cout << "NO_SIMREP\n";
      return 1;
    case irex::SimRepStatus::BoundExceeded:
      std::cerr << "error: " << res.reason << "\n";
      return 3;
    default:
      std::cerr << "error: " << res.reason << "\n";
      return 2;
  }
}

int cmd_selfcheck(unsigned seed, int iters, bool inject_fault) {
  auto reports = irex::selfcheck::run_selfchecks(seed, iters, inject_fault);
  bool all_ok = true;
  for (const auto& r : reports) {
    if (r.failure) {
      all_ok = false;
      std::cout << "[FAIL] " << r.name << "\n" << *r.failure << "\n";
    } else {
      std::cout << "[ok] " << r.name << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval graph tools: recognition, partial representation "
               "extension, simultaneous representation"};
  app.require_subcommand(1);

  std::string graph_path, partial_path, instance_path;
  bool assume_sorted = false, as_json = false, inject_fault = false;
  int max_shared = 5, iters = 200;
  unsigned seed = 1;

  auto* rec = app.add_subcommand("recognize",
                                 "decide whether a graph is an interval graph");
  rec->add_option("graph", graph_path, "graph file: 'n m' header + edge lines")
      ->required();

  auto* ext = app.add_subcommand(
      "extend", "extend a partial interval representation to the whole graph");
  ext->add_option("graph", graph_path, "graph file: 'n m' header + edge lines")
      ->required();
  ext->add_option("partial", partial_path,
                  "pre-drawn intervals: 'vertex left right' lines")
      ->required();
  ext->add_flag("--assume-sorted", assume_sorted,
                "trust that intervals are sorted by left endpoint; reject "
                "unsorted input instead of sorting it");
  ext->add_flag("--json", as_json, "emit the result as JSON");

  auto* sim = app.add_subcommand(
      "simrep", "find representations of several graphs agreeing on shared "
                "vertices");
  sim->add_option("instance", instance_path, "simultaneous instance file")
      ->required();
  sim->add_option("--max-shared", max_shared,
                  "largest shared-vertex count accepted (runtime grows "
                  "factorially with it)")
      ->capture_default_str();

  auto* chk = app.add_subcommand(
      "selfcheck", "run randomized agreement checks against brute-force oracles");
  chk->add_option("--seed", seed, "random seed")->capture_default_str();
  chk->add_option("--iters", iters, "iterations per check")
      ->capture_default_str();
  chk->add_flag("--inject-fault", inject_fault, "")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // normalize CLI11's parse-error codes
  }

  try {
    if (*rec) return cmd_recognize(graph_path);
    if (*ext) return cmd_extend(graph_path, partial_path, assume_sorted, as_json);
    if (*sim) return cmd_simrep(instance_path, max_shared);
    return cmd_selfcheck(seed, iters, inject_fault);
  } catch (const irex::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

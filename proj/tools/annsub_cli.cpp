#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "annsub/annsub.hpp"

using namespace annsub;

namespace {

enum Exit { ok = 0, assert_failed = 1, parse_failed = 2, resource_failed = 3 };

struct Options {
  std::string ring;
  std::string module;
  std::size_t max_submodules = kDefaultMaxSubmodules;
  std::size_t max_chromatic = kDefaultMaxExactVertices;
  bool strict = false;
  bool star = false;
  bool no_timings = false;
  std::string theorem = "all";
  std::uint32_t max_ring = 48;
  std::uint32_t max_module = 128;
  std::string theorems = "all";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string out;
  std::string format = "json";

  Limits limits() const { return {kDefaultMaxElements, max_submodules, max_chromatic}; }
};

void add_instance(CLI::App* cmd, Options& o) {
  cmd->add_option("--ring", o.ring, "ring, e.g. Z12 or Z4xZ6")->required();
  cmd->add_option("--module", o.module, "cyclic orders per factor, e.g. 2,3 or 4,2;6")->required();
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open output file '" + path + "'");
  f << text;
}

std::string ids(const SubmoduleLattice& L, const std::vector<SubmoduleId>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + L.label(v[i]);
  return s.empty() ? "-" : s;
}

std::string elems(const RingSpec& r, const std::vector<RingElement>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + r.element_to_string(v[i]);
  return s + "}";
}

int cmd_info(const Options& o) {
  auto ctx = InstanceContext::build(InstanceDescriptor{o.ring, o.module}, o.limits());
  const auto& L = ctx.lattice;
  std::cout << "ring: " << ctx.ring.to_string() << "\n"
            << "module: " << ctx.module.to_string() << "\n"
            << "elements: " << ctx.module.size() << "\n"
            << "submodules: " << L.size() << "\n"
            << "ann: " << to_string(ctx.ring, L.annihilator()) << "\n"
            << "z_module: " << elems(ctx.ring, ctx.z_module) << "\n"
            << "spec: " << ctx.spectrum.primes.size() << "\n"
            << "max: " << ctx.spectrum.maximals.size() << "\n"
            << "rad0: " << L.label(ctx.spectrum.radical_of_zero) << "\n"
            << "faithful: " << ctx.faithful << "\n"
            << "simple: " << ctx.spectrum.is_simple << "\n"
            << "prime_module: " << ctx.spectrum.is_prime_module << "\n"
            << "semiprime_module: " << ctx.spectrum.is_semiprime_module << "\n"
            << "reduced_ring: " << ctx.reduced << "\n"
            << "local_ring: " << ctx.local << "\n"
            << "min_primes: " << ctx.min_primes.size() << "\n"
            << "ag_vertices: " << ctx.ag.vertex_count() << "\n"
            << "ag_star_vertices: " << ctx.ag_star.vertex_count() << "\n";
  return ok;
}

int cmd_graph(const Options& o) {
  auto ring = RingSpec::parse(o.ring);
  auto module = ModuleSpec::parse(ring, o.module);
  auto L = SubmoduleLattice::enumerate(module, o.max_submodules);
  auto g = build(L, o.star ? GraphVariant::ag_star : GraphVariant::ag);
  std::cout << to_string(g.variant) << " " << ring.to_string() << " " << module.to_string() << "\n"
            << "vertices: " << g.vertex_count() << "\n";
  for (auto v : g.vertices) std::cout << "  " << v << " " << L.label(v) << "\n";
  std::cout << "edges: " << g.edge_count() << "\n";
  for (auto [i, j] : g.edges()) std::cout << "  " << g.vertices[i] << " -- " << g.vertices[j] << "\n";
  std::cout << "star: " << (g.vertex_count() >= 2 && analyze(g, {o.max_chromatic}).star ? "yes" : "no") << "\n";
  return ok;
}

int cmd_analyze(const Options& o) {
  auto ring = RingSpec::parse(o.ring);
  auto module = ModuleSpec::parse(ring, o.module);
  auto L = SubmoduleLattice::enumerate(module, o.max_submodules);
  auto g = build(L, o.star ? GraphVariant::ag_star : GraphVariant::ag);
  auto a = analyze(g, {o.max_chromatic});
  auto j = analysis_json(g, a);
  j["center_label"] = a.center ? Json(L.label(g.vertices[*a.center])) : Json(nullptr);
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  std::cout << j.dump(2) << "\n";
  return ok;
}

int cmd_check(const Options& o) {
  auto ctx = InstanceContext::build(InstanceDescriptor{o.ring, o.module}, o.limits());
  Json out = Json::array();
  bool failed = false;
  for (const auto& id : resolve_ids(o.theorem)) {
    auto r = run_check(find_check(id), ctx);
    failed |= r.status == CheckStatus::fail && r.mode == CheckMode::assert_mode;
    out.push_back(to_json(r, !o.no_timings));
  }
  std::cout << out.dump(2) << "\n";
  return failed && o.strict ? assert_failed : ok;
}

int cmd_corpus(const Options& o) {
  auto theorems = resolve_ids(o.theorems);
  auto corpus = generate_corpus({o.max_ring, o.max_module, o.max_submodules});
  auto result = run_corpus(corpus, theorems, o.limits(), o.jobs);
  write_out(o.out, to_json(result, !o.no_timings).dump(2) + "\n");
  const auto& t = result.tallies;
  std::cerr << "instances: " << result.instances << ", assert failures: " << result.assert_failures
            << ", report-only failures: " << result.report_only_failures << "\n";
  for (const auto& [id, tally] : t)
    std::cerr << "  " << id << " applicable=" << tally.applicable << " pass=" << tally.pass << " fail=" << tally.fail
              << " na=" << tally.not_applicable << "\n";
  return result.failed() && o.strict ? assert_failed : ok;
}

int cmd_export(const Options& o) {
  auto ctx = InstanceContext::build(InstanceDescriptor{o.ring, o.module}, o.limits());
  auto format = parse_export_format(o.format);
  const auto& g = o.star ? ctx.ag_star : ctx.ag;
  const auto& a = o.star ? ctx.star_analysis : ctx.ag_analysis;
  Json checks = Json::array();
  if (format == ExportFormat::json)
    for (const auto& c : registry()) checks.push_back(to_json(run_check(c, ctx), false));
  write_out(o.out, export_graph(g, ctx.lattice, format, &a, checks));
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Annihilating-submodule graphs of finite modules over Z_m1 x ... x Z_mk"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-submodules", o.max_submodules, "submodule lattice bound")->capture_default_str();
  app.add_option("--max-chromatic-vertices", o.max_chromatic, "exact clique/colouring search cap")
      ->capture_default_str();
  app.add_flag("--strict", o.strict, "exit 1 on assert-mode check failures");
  app.fallthrough();

  auto* info = app.add_subcommand("info", "lattice, annihilator and spectrum summary");
  add_instance(info, o);
  auto* graph = app.add_subcommand("graph", "vertices and edges of AG(M) or AG(M)*");
  add_instance(graph, o);
  graph->add_flag("--star", o.star, "use AG(M)*");
  auto* an = app.add_subcommand("analyze", "full graph analysis as JSON");
  add_instance(an, o);
  an->add_flag("--star", o.star, "use AG(M)*");
  auto* check = app.add_subcommand("check", "run theorem checks on one instance");
  add_instance(check, o);
  check->add_option("--theorem", o.theorem, "check id or 'all'")->capture_default_str();
  check->add_flag("--no-timings", o.no_timings, "report millis as 0");
  auto* corpus = app.add_subcommand("corpus", "run checks over the generated corpus");
  corpus->add_option("--max-ring", o.max_ring)->capture_default_str()->check(CLI::Range(2u, 1u << 20));
  corpus->add_option("--max-module", o.max_module)->capture_default_str()->check(CLI::Range(2u, 1u << 20));
  corpus->add_option("--theorems", o.theorems, "comma-separated ids or 'all'")->capture_default_str();
  corpus->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  corpus->add_option("--out", o.out, "output file (default stdout)");
  corpus->add_flag("--no-timings", o.no_timings, "report millis as 0");
  auto* ex = app.add_subcommand("export", "write the graph as DOT or JSON");
  add_instance(ex, o);
  ex->add_flag("--star", o.star, "use AG(M)*");
  ex->add_option("--format", o.format, "dot or json")->capture_default_str();
  ex->add_option("--out", o.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : parse_failed;
  }

  try {
    if (*info) return cmd_info(o);
    if (*graph) return cmd_graph(o);
    if (*an) return cmd_analyze(o);
    if (*check) return cmd_check(o);
    if (*corpus) return cmd_corpus(o);
    if (*ex) return cmd_export(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return parse_failed;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return resource_failed;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return parse_failed;
  }
  return ok;
}

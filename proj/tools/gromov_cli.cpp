// Command-line front end over the shared-library C API.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gromov/gromov.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNonGeneric = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << content;
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  gromov_string_free(s);
  return out;
}

struct MetricHandle {
  gromov_metric* ptr = nullptr;
  ~MetricHandle() { gromov_metric_free(ptr); }
};
struct StructureHandle {
  gromov_structure* ptr = nullptr;
  ~StructureHandle() { gromov_structure_free(ptr); }
};
struct RegistryHandle {
  gromov_registry* ptr = nullptr;
  ~RegistryHandle() { gromov_registry_free(ptr); }
};

[[noreturn]] void fail_input(const std::string& context) {
  std::cerr << "error: " << context << ": " << gromov_last_error() << "\n";
  std::exit(kExitInputError);
}

int default_threads() {
  if (const char* env = std::getenv("GROMOV_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

void render_analyze_text(const nlohmann::json& report, std::ostream& out) {
  int n = report.at("n").get<int>();
  out << "points: " << n << "\n";
  if (!report.at("generic").get<bool>()) {
    out << "NOT generic: tied minimal products at vertices";
    for (int v : report.at("nongeneric_vertices")) out << " " << v;
    out << "\n";
    for (int v : report.at("nongeneric_vertices")) {
      out << "  vertex " << v << " minima:";
      for (const auto& t : report.at("minimal_products")[static_cast<std::size_t>(v - 1)])
        out << "  {" << t.at("pair")[0].get<int>() << "," << t.at("pair")[1].get<int>()
            << "} = " << t.at("value").get<std::string>();
      out << "\n";
    }
    return;
  }

  out << "structure (vertex: pair realized through it):\n";
  std::istringstream lines(report.at("structure").at("text").get<std::string>());
  std::string line;
  while (std::getline(lines, line)) out << "  " << line << "\n";

  out << "minimal products:";
  for (const auto& at_vertex : report.at("minimal_products"))
    for (const auto& t : at_vertex)
      out << " D(" << t.at("apex").get<int>() << ";" << t.at("pair")[0].get<int>() << ","
          << t.at("pair")[1].get<int>() << ")=" << t.at("value").get<std::string>();
  out << "\n";
  if (!report.at("zero_minimum_vertices").empty()) {
    out << "zero-valued minima at vertices:";
    for (int v : report.at("zero_minimum_vertices")) out << " " << v;
    out << " (accepted; the metric sits on the cone boundary)\n";
  }

  out << "structure matrix:\n";
  for (const auto& row : report.at("matrix")) out << "  " << row.get<std::string>() << "\n";
  out << "removed edges:";
  for (const auto& e : report.at("removed_edges"))
    out << " {" << e[0].get<int>() << "," << e[1].get<int>() << "}";
  out << "\n";
  out << "pendant-free adjacency:\n";
  for (const auto& row : report.at("pendant_free_adjacency"))
    out << "  " << row.get<std::string>() << "\n";

  out << "chains/cycles:\n";
  for (const auto& comp : report.at("decomposition")) {
    out << "  " << comp.at("kind").get<std::string>() << " [";
    bool first = true;
    for (int v : comp.at("vertices")) {
      if (!first) out << " ";
      out << v;
      first = false;
    }
    out << "]";
    if (!comp.at("end_arrows").empty()) {
      out << " ends:";
      for (const auto& a : comp.at("end_arrows"))
        out << " " << a[0].get<int>() << "->" << a[1].get<int>();
    }
    out << "\n";
  }

  const auto& fp = report.at("fingerprint");
  out << "rank: " << fp.at("rank").get<int>()
      << "  removed edges: " << fp.at("removed_edge_count").get<int>()
      << "  ends: " << fp.at("ends").get<int>()
      << "  irreducible: " << (fp.at("irreducible").get<bool>() ? "yes" : "no") << "\n";
  out << "trace powers:";
  for (const auto& t : fp.at("trace_powers")) out << " " << t.get<std::string>();
  out << "\n";
  auto poly_line = [&](const char* name, const nlohmann::json& p) {
    out << name << ": " << p.at("factored").get<std::string>() << "   coefficients (low->high):";
    for (const auto& c : p.at("coefficients")) out << " " << c.get<std::string>();
    out << "\n";
  };
  poly_line("k(t)", fp.at("char_poly"));
  poly_line("m(t)", fp.at("min_poly"));
}

int cmd_analyze(const std::string& path, const std::string& format, bool json_output,
                const std::string& out_path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  MetricHandle metric;
  if (gromov_metric_parse(text.c_str(), format.empty() ? nullptr : format.c_str(), &metric.ptr))
    fail_input(path);

  char* raw = nullptr;
  if (gromov_metric_analyze_json(metric.ptr, &raw)) fail_input("analyze");
  std::string report_text = take_string(raw);

  nlohmann::json report = nlohmann::json::parse(report_text);
  if (json_output) {
    write_output(out_path, report_text);
  } else {
    std::ostringstream human;
    render_analyze_text(report, human);
    write_output(out_path, human.str());
  }
  if (!report.at("generic").get<bool>()) return kExitNonGeneric;
  return kExitOk;
}

int cmd_equiv(const std::string& path_a, const std::string& path_b, bool json_output,
              const std::string& out_path) {
  StructureHandle a, b;
  try {
    if (gromov_structure_parse(read_file(path_a).c_str(), &a.ptr)) fail_input(path_a);
    if (gromov_structure_parse(read_file(path_b).c_str(), &b.ptr)) fail_input(path_b);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  int equivalent = 0;
  char* raw = nullptr;
  if (gromov_equivalence_check(a.ptr, b.ptr, &equivalent, &raw)) fail_input("equiv");
  std::string verdict_text = take_string(raw);

  if (json_output) {
    write_output(out_path, verdict_text);
  } else {
    nlohmann::json v = nlohmann::json::parse(verdict_text);
    std::ostringstream human;
    if (equivalent) {
      human << "equivalent; permutation:";
      for (int img : v.at("permutation")) human << " " << img;
      human << "\n";
    } else {
      human << "not equivalent";
      if (v.contains("distinguishing_invariant"))
        human << " (distinguishing invariant: "
              << v.at("distinguishing_invariant").get<std::string>() << ")";
      else
        human << " (decided by search, " << v.at("search_nodes").get<std::uint64_t>()
              << " nodes)";
      human << "\n";
    }
    write_output(out_path, human.str());
  }
  return equivalent ? kExitOk : kExitNegative;
}

void progress_to_stderr(uint64_t done, uint64_t total, void*) {
  std::fprintf(stderr, "\rcensus: %llu / %llu", static_cast<unsigned long long>(done),
               static_cast<unsigned long long>(total));
  if (done == total) std::fprintf(stderr, "\n");
}

int cmd_census(int n, std::uint64_t samples, std::uint64_t seed, std::uint64_t weight_max,
               int threads, bool verbose, bool json_output, const std::string& out_path) {
  RegistryHandle registry;
  if (gromov_census_run(n, samples, seed, weight_max, threads,
                        verbose ? progress_to_stderr : nullptr, nullptr, &registry.ptr))
    fail_input("census");

  std::uint64_t classes = 0, reducible = 0, irreducible = 0, nongeneric = 0, drawn = 0;
  gromov_registry_counts(registry.ptr, &classes, &reducible, &irreducible, &nongeneric, &drawn);

  if (!out_path.empty() || json_output) {
    char* raw = nullptr;
    if (gromov_registry_to_json(registry.ptr, &raw)) fail_input("registry");
    std::string json = take_string(raw);
    if (!out_path.empty())
      write_output(out_path, json);
    else
      std::cout << json;
  }

  std::ostream& summary = (json_output && out_path.empty()) ? std::cerr : std::cout;
  summary << "n=" << n << " classes=" << classes << " reducible=" << reducible
          << " irreducible=" << irreducible << " nongeneric=" << nongeneric << "\n";
  if (classes == 0)
    std::cerr << "warning: no generic sample in " << drawn << " draws; registry is empty\n";
  return kExitOk;
}

int cmd_check_tables(int n, const std::string& registry_path, bool json_output,
                     const std::string& out_path) {
  RegistryHandle registry;
  if (!registry_path.empty()) {
    try {
      if (gromov_registry_parse_json(read_file(registry_path).c_str(), &registry.ptr))
        fail_input(registry_path);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitInputError;
    }
  }

  int ok = 0;
  char* raw = nullptr;
  gromov_status status = json_output
                             ? gromov_check_tables(n, registry.ptr, &ok, &raw)
                             : gromov_check_tables_text(n, registry.ptr, &ok, &raw);
  if (status) fail_input("check-tables");
  write_output(out_path, take_string(raw));
  return ok ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite metric spaces: minimal Gromov-product structures, exact matrix "
               "invariants, permutation equivalence, and Monte-Carlo class censuses"};
  app.require_subcommand(1);

  std::string metric_path, format, out_path;
  bool json_output = false;

  auto* analyze = app.add_subcommand("analyze", "analyze one distance matrix");
  analyze->add_option("file", metric_path, "metric file")->required();
  analyze->add_option("--format", format, "csv-full | csv-lower | json | auto")
      ->check(CLI::IsMember({"auto", "csv-full", "csv-lower", "json"}));
  analyze->add_flag("--json", json_output, "emit the JSON report");
  analyze->add_option("--out", out_path, "write the report to a file");

  std::string path_a, path_b;
  auto* equiv = app.add_subcommand("equiv", "decide equivalence of two structures");
  equiv->add_option("a", path_a, "first structure file")->required();
  equiv->add_option("b", path_b, "second structure file")->required();
  equiv->add_flag("--json", json_output, "emit the JSON verdict");
  equiv->add_option("--out", out_path, "write the verdict to a file");

  int n = 0;
  std::uint64_t samples = 0, seed = 1, weight_max = 0;
  int threads = default_threads();
  bool verbose = false;
  auto* census = app.add_subcommand("census", "Monte-Carlo census of structure classes");
  census->add_option("--n", n, "number of points")->required();
  census->add_option("--samples", samples, "sample budget")->required();
  census->add_option("--seed", seed, "rng seed (default 1)");
  census->add_option("--weight-max", weight_max, "weights drawn from [1, W]; 0 = default 2^20");
  census->add_option("--threads", threads, "worker count (default $GROMOV_THREADS or 1)");
  census->add_flag("--verbose", verbose, "progress on stderr");
  census->add_flag("--json", json_output, "print registry JSON to stdout if --out is absent");
  census->add_option("--out", out_path, "write registry JSON to a file");

  std::string registry_path;
  auto* check = app.add_subcommand("check-tables", "verify the bundled class catalog");
  check->add_option("--n", n, "4, 5 or 6")->required();
  check->add_option("--registry", registry_path, "census registry JSON to cross-check");
  check->add_flag("--json", json_output, "emit the JSON report");
  check->add_option("--out", out_path, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  if (analyze->parsed()) return cmd_analyze(metric_path, format, json_output, out_path);
  if (equiv->parsed()) return cmd_equiv(path_a, path_b, json_output, out_path);
  if (census->parsed())
    return cmd_census(n, samples, seed, weight_max, threads, verbose, json_output, out_path);
  if (check->parsed()) return cmd_check_tables(n, registry_path, json_output, out_path);
  return kExitInputError;
}

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>

#include "packlab/catalog.hpp"
#include "packlab/packing.hpp"

using namespace packlab;

namespace {

double run(const Graph& g, int k, uint64_t budget, int jobs, Verdict& v) {
  auto t0 = std::chrono::steady_clock::now();
  v = corr_packing_upper(g, k, budget, 0, jobs);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cover enumeration kernel: serial reference vs parallel"};
  std::string graph_arg = "A+";
  int k = 4, jobs = 4;
  double budget = 2e6;
  app.add_option("--graph", graph_arg, "catalog name or graph file");
  app.add_option("--k", k, "fold");
  app.add_option("--budget", budget, "covers per run");
  app.add_option("--jobs", jobs, "threads for the parallel run");
  CLI11_PARSE(app, argc, argv);

  Graph g = resolve_graph(graph_arg);
  uint64_t b = (uint64_t)budget;

  Verdict serial, parallel;
  double ts = run(g, k, b, 1, serial);
  double tp = run(g, k, b, jobs, parallel);

  std::printf("graph=%s k=%d covers=%llu\n", graph_arg.c_str(), k,
              (unsigned long long)serial.covers_checked);
  std::printf("serial    : %8.3fs  (%.2f Mcovers/s)\n", ts, serial.covers_checked / ts / 1e6);
  std::printf("jobs=%-4d : %8.3fs  (%.2f Mcovers/s)  speedup %.2fx\n", jobs, tp,
              parallel.covers_checked / tp / 1e6, ts / tp);

  bool agree = serial.kind == parallel.kind && serial.covers_checked == parallel.covers_checked &&
               (serial.kind != VerdictKind::FAILS || serial.witness_index == parallel.witness_index);
  std::printf("verdicts  : %s\n", agree ? "agree" : "DISAGREE");
  return agree ? 0 : 1;
}

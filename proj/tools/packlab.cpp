#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "packlab/catalog.hpp"
#include "packlab/constructions.hpp"
#include "packlab/cover_io.hpp"
#include "packlab/derangement.hpp"
#include "packlab/fractional.hpp"
#include "packlab/packing.hpp"
#include "packlab/perm_family.hpp"
#include "packlab/verify.hpp"

using json = nlohmann::json;
using namespace packlab;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

uint64_t env_budget(uint64_t fallback) {
  const char* s = std::getenv("PACKLAB_BUDGET");
  if (!s || !*s) return fallback;
  return (uint64_t)std::stod(s);
}

std::string verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::HOLDS: return "HOLDS";
    case VerdictKind::FAILS: return "FAILS";
    default: return "INCONCLUSIVE";
  }
}

json graph_json(const Graph& g) {
  json j;
  j["n"] = g.n;
  auto& je = j["edges"] = json::array();
  for (auto [u, v] : g.edges) je.push_back({u, v});
  return j;
}

json report_json(const VerificationReport& r) {
  json j;
  j["lemma_id"] = r.lemma_id;
  j["status"] = status_name(r.status);
  j["cases_checked"] = r.cases_checked;
  j["elapsed"] = r.elapsed_seconds;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.status == VerifyStatus::REFUTED) j["witness"] = r.witness;
  if (r.status == VerifyStatus::TIMEOUT) j["resume_index"] = r.resume_index;
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << std::endl; }

int cmd_pack(const std::string& cover_path) {
  Cover c = read_cover_file(cover_path);
  Timer t;
  SearchStats st;
  auto p = find_packing(c, &st);
  json out;
  out["verdict"] = p ? "packs" : "no-packing";
  out["nodes_expanded"] = st.nodes;
  out["elapsed"] = t.seconds();
  if (p) {
    auto& cols = out["witness"]["columns"] = json::array();
    for (const auto& col : p->cols) cols.push_back(col);
  }
  emit(out);
  return 0;
}

int cmd_count(const std::string& cover_path) {
  Cover c = read_cover_file(cover_path);
  Timer t;
  uint64_t n = count_transversals(c);
  json out;
  out["count"] = n;
  out["elapsed"] = t.seconds();
  emit(out);
  return 0;
}

int cmd_upper(const std::string& graph_arg, int k, const std::string& mode, double budget,
              uint64_t start, int jobs) {
  Graph g = resolve_graph(graph_arg);
  uint64_t b = env_budget(budget >= 1e18 ? UINT64_MAX : (uint64_t)budget);
  Timer t;
  Verdict v = mode == "list" ? list_packing_upper(g, k, b)
                             : corr_packing_upper(g, k, b, start, jobs);
  json out;
  out["verdict"] = verdict_name(v.kind);
  out["covers_checked"] = v.covers_checked;
  out["nodes_expanded"] = v.nodes_expanded;
  out["elapsed"] = t.seconds();
  if (v.kind == VerdictKind::FAILS) {
    out["witness_index"] = v.witness_index;
    if (v.witness) out["witness"] = cover_to_json(*v.witness);
    if (!v.witness_lists.empty()) out["witness_lists"] = v.witness_lists;
  }
  if (v.kind == VerdictKind::INCONCLUSIVE) out["resume_index"] = v.resume_index;
  emit(out);
  return 0;
}

int cmd_derange(const std::string& perms_path, int k) {
  json out;
  if (!perms_path.empty()) {
    PermMatrix m = read_perm_matrix(perms_path);
    out["rows"] = m.rows.size();
    out["k"] = m.rows.empty() ? 0 : m.rows[0].size();
    out["common_derangements"] = common_derangements(m.rows);
  } else {
    out["k"] = k;
    out["derangements"] = count_derangements(k);
  }
  emit(out);
  return 0;
}

int cmd_permanent(const std::string& matrix_path) {
  BipartiteGraph g = read_bipartite_file(matrix_path);
  json out;
  out["n"] = g.n;
  out["permanent"] = permanent(g);
  emit(out);
  return 0;
}

int cmd_family(int mindeg, double budget, bool full) {
  uint64_t b = env_budget(budget >= 1e18 ? 2'000'000'000ull : (uint64_t)budget);
  Timer t;
  FamilyReport r = min_permanent_family(mindeg, full, b);
  json out;
  out["mindeg"] = r.d;
  out["complete"] = r.complete;
  out["graphs_checked"] = r.graphs_checked;
  out["min_permanent"] = r.min_permanent;
  out["attaining_classes"] = r.attaining_classes;
  if (r.d == 3) {
    out["zero_classes"] = r.zero_classes;
    out["min_augmented"] = r.min_augmented;
    out["regular_attaining_classes"] = r.regular_attaining_classes;
  }
  if (!r.notes.empty()) out["notes"] = r.notes;
  out["elapsed"] = t.seconds();
  emit(out);
  return 0;
}

int cmd_frac(const std::string& cover_path, bool certify, double budget) {
  Cover c = read_cover_file(cover_path);
  uint64_t b = env_budget(budget >= 1e18 ? 10'000'000ull : (uint64_t)budget);
  Timer t;
  FracResult r = has_fractional_packing(c, b);
  json out;
  out["feasible"] = r.feasible;
  out["transversal_count"] = r.transversal_count;
  if (r.feasible) {
    auto& jd = out["distribution"] = json::array();
    for (size_t i = 0; i < r.dist.support.size(); ++i)
      jd.push_back({{"transversal", r.dist.support[i]}, {"weight", to_string(r.dist.weights[i])}});
  } else {
    auto& jf = out["farkas"] = json::array();
    for (const auto& y : r.farkas) jf.push_back(to_string(y));
    if (r.has_clique) {
      auto& jw = out["clique"]["weights"] = json::array();
      for (const auto& row : r.clique.weights) {
        json jr = json::array();
        for (const auto& w : row) jr.push_back(to_string(w));
        jw.push_back(std::move(jr));
      }
      out["clique"]["total"] = to_string(r.clique.total);
    }
  }
  if (certify) {
    bool ok = true;
    if (r.feasible) {
      validate_distribution(c, r.dist);
    } else if (r.has_clique) {
      auto [valid, total] = verify_fractional_clique(c, r.clique);
      ok = valid && total == r.clique.total;
    }
    out["certified"] = ok;
  }
  out["elapsed"] = t.seconds();
  emit(out);
  return 0;
}

int cmd_construct(const std::string& name, int g, const std::string& out_dir) {
  ConstructedInstance inst = construct_by_name(name, g);
  std::filesystem::create_directories(out_dir);
  auto path = [&](const std::string& f) { return (std::filesystem::path(out_dir) / f).string(); };
  std::ofstream(path("graph.json")) << graph_json(inst.graph).dump(2) << '\n';
  write_cover_file(path("cover.json"), inst.cover);
  json claims = json::array();
  for (const auto& c : inst.claims)
    claims.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
  json manifest;
  manifest["name"] = inst.name;
  manifest["claims"] = claims;
  std::ofstream(path("claims.json")) << manifest.dump(2) << '\n';
  emit(manifest);
  return inst.all_hold() ? 0 : 1;
}

// enumeration-backed checks checkpoint every 10^6 cases into the state file
int cmd_verify(const std::string& id, const std::string& tier, const std::string& resume_path,
               int jobs) {
  uint64_t budget = env_budget(UINT64_MAX);
  if (id == "all") {
    auto reports = run_all(tier, budget, jobs);
    json out = json::array();
    bool all_ok = true;
    for (const auto& r : reports) {
      out.push_back(report_json(r));
      all_ok = all_ok && r.verified();
    }
    emit(out);
    return all_ok ? 0 : 1;
  }

  bool resumable = id.rfind("covers-", 0) == 0;
  uint64_t start = 0;
  if (resumable && !resume_path.empty()) {
    std::ifstream in(resume_path);
    std::string sid;
    uint64_t idx;
    if (in >> sid >> idx && sid == id) start = idx;
  }

  VerificationReport total;
  total.lemma_id = id;
  const uint64_t slice = 1'000'000;
  for (;;) {
    uint64_t this_slice = resumable ? std::min(slice, budget - total.cases_checked) : budget;
    VerificationReport r = verify_by_id(id, this_slice, start, jobs);
    total.status = r.status;
    total.cases_checked += r.cases_checked;
    total.elapsed_seconds += r.elapsed_seconds;
    total.witness = r.witness;
    total.detail = r.detail;
    total.resume_index = r.resume_index;
    if (r.status != VerifyStatus::TIMEOUT) break;
    start = r.resume_index;
    if (!resume_path.empty()) std::ofstream(resume_path) << id << ' ' << start << '\n';
    if (total.cases_checked >= budget) break;
  }
  if (total.status == VerifyStatus::VERIFIED && resumable && !resume_path.empty())
    std::filesystem::remove(resume_path);
  emit(report_json(total));
  return total.verified() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for list and correspondence packing"};
  app.require_subcommand(1);

  std::string cover_path, graph_arg, mode = "corr", perms_path, matrix_path;
  std::string name, out_dir, lemma_id, tier = "fast", resume_path;
  int k = 4, mindeg = 6, girth_param = 5, jobs = 1;
  double budget = 1e18;
  uint64_t start = 0;
  bool full = false, certify = false;

  auto* pack = app.add_subcommand("pack", "search one packing of a cover");
  pack->add_option("--cover", cover_path, "cover JSON file")->required();

  auto* count = app.add_subcommand("count", "count independent transversals of a cover");
  count->add_option("--cover", cover_path, "cover JSON file")->required();

  auto* upper = app.add_subcommand("upper", "do all k-fold covers of a graph pack");
  upper->add_option("--graph", graph_arg, "catalog name or graph file")->required();
  upper->add_option("--k", k, "fold / list size")->required();
  upper->add_option("--mode", mode, "corr or list")->check(CLI::IsMember({"corr", "list"}));
  upper->add_option("--budget", budget, "max covers to check");
  upper->add_option("--start", start, "resume enumeration index");
  upper->add_option("--jobs", jobs, "worker threads");

  auto* der = app.add_subcommand("derange", "derangement counts");
  der->add_option("--perms", perms_path, "file of permutation rows");
  der->add_option("--k", k, "plain derangement count of [k]");

  auto* perm = app.add_subcommand("permanent", "permanent of a 0/1 matrix");
  perm->add_option("--matrix", matrix_path, "file: n, then n rows of 0/1")->required();

  auto* fam = app.add_subcommand("family", "extremal matching counts of K8,8 subgraphs");
  fam->add_option("--mindeg", mindeg, "minimum degree")->required();
  fam->add_option("--budget", budget, "enumeration budget");
  fam->add_flag("--full", full, "exhaust the full tier");

  auto* frac = app.add_subcommand("frac", "fractional packing LP with exact certificates");
  frac->add_option("--cover", cover_path, "cover JSON file")->required();
  frac->add_flag("--certify", certify, "re-validate the emitted certificate");
  frac->add_option("--budget", budget, "transversal enumeration budget");

  auto* cons = app.add_subcommand("construct", "generate a named graph-and-cover instance");
  cons->add_option("name", name, "construction name")->required();
  cons->add_option("--g", girth_param, "girth parameter for the cycle construction");
  cons->add_option("--out", out_dir, "output directory")->required();

  auto* ver = app.add_subcommand("verify", "re-run a computer-checked lemma");
  ver->add_option("lemma-id", lemma_id, "lemma id, or 'all'");
  ver->add_option("--tier", tier, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  ver->add_option("--resume", resume_path, "checkpoint state file");
  ver->add_option("--jobs", jobs, "worker threads");
  bool list_ids = false;
  ver->add_flag("--list", list_ids, "list lemma ids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(pack)) return cmd_pack(cover_path);
    if (app.got_subcommand(count)) return cmd_count(cover_path);
    if (app.got_subcommand(upper)) return cmd_upper(graph_arg, k, mode, budget, start, jobs);
    if (app.got_subcommand(der)) return cmd_derange(perms_path, k);
    if (app.got_subcommand(perm)) return cmd_permanent(matrix_path);
    if (app.got_subcommand(fam)) return cmd_family(mindeg, budget, full);
    if (app.got_subcommand(frac)) return cmd_frac(cover_path, certify, budget);
    if (app.got_subcommand(cons)) return cmd_construct(name, girth_param, out_dir);
    if (app.got_subcommand(ver)) {
      if (list_ids) {
        json out = json::array();
        for (const auto& e : lemma_table())
          out.push_back({{"id", e.id},
                         {"description", e.description},
                         {"tier", e.fast_tier ? "fast" : "full"}});
        emit(out);
        return 0;
      }
      if (lemma_id.empty()) {
        std::cerr << "verify: lemma-id required (or --list)\n";
        return 2;
      }
      return cmd_verify(lemma_id, tier, resume_path, jobs);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

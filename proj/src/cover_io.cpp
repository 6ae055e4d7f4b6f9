#include "packlab/cover_io.hpp"

#include <fstream>
#include <stdexcept>

namespace packlab {

using nlohmann::json;

json cover_to_json(const Cover& c) {
  json j;
  j["graph"]["n"] = c.g.n;
  auto& je = j["graph"]["edges"] = json::array();
  for (auto [u, v] : c.g.edges) je.push_back({u, v});
  auto& jl = j["lists"] = json::array();
  if (c.labels.empty()) {
    for (int s : c.list_size) jl.push_back(s);
  } else {
    for (const auto& lab : c.labels) jl.push_back(lab);
  }
  auto& jm = j["matchings"] = json::array();
  for (int e = 0; e < c.g.m(); ++e) {
    json m;
    m["edge"] = {c.g.edges[e].first, c.g.edges[e].second};
    auto& mp = m["map"] = json::array();
    for (int i = 0; i < (int)c.match[e].size(); ++i)
      if (c.match[e][i] >= 0) mp.push_back({i, c.match[e][i]});
    jm.push_back(std::move(m));
  }
  return j;
}

Cover cover_from_json(const json& j) {
  int n = j.at("graph").at("n").get<int>();
  std::vector<std::pair<int, int>> es;
  for (const auto& e : j.at("graph").at("edges")) es.push_back({e.at(0), e.at(1)});
  Cover c;
  c.g = Graph(n, es);
  for (const auto& l : j.at("lists")) {
    if (l.is_number_integer()) {
      c.list_size.push_back(l.get<int>());
    } else {
      c.labels.push_back(l.get<std::vector<std::string>>());
      c.list_size.push_back((int)c.labels.back().size());
    }
  }
  if (!c.labels.empty() && (int)c.labels.size() != n)
    throw std::runtime_error("cover json: mixed size/label lists");
  c.match.resize(c.g.m());
  for (int e = 0; e < c.g.m(); ++e) {
    auto [u, v] = c.g.edges[e];
    (void)v;
    c.match[e].assign(c.list_size[u], -1);
  }
  for (const auto& m : j.at("matchings")) {
    int u = m.at("edge").at(0), v = m.at("edge").at(1);
    int e = c.g.edge_index(u, v);
    if (e < 0) throw std::runtime_error("cover json: matching on non-edge");
    bool forward = (u == c.g.edges[e].first);
    for (const auto& p : m.at("map")) {
      int i = p.at(0), jj = p.at(1);
      if (forward)
        c.match[e][i] = jj;
      else
        c.match[e][jj] = i;
    }
  }
  c.validate();
  return c;
}

std::string cover_to_json_string(const Cover& c) { return cover_to_json(c).dump(2); }

Cover cover_from_json_string(const std::string& s) { return cover_from_json(json::parse(s)); }

Cover read_cover_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return cover_from_json(j);
}

void write_cover_file(const std::string& path, const Cover& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << cover_to_json_string(c) << '\n';
}

}  // namespace packlab

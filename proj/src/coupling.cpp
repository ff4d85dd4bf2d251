#include "qsearch/coupling.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace qsearch {

CouplingGraph::CouplingGraph(int n_nodes, std::vector<std::pair<int, int>> edges)
    : n_nodes_(n_nodes) {
  if (n_nodes <= 0) throw std::invalid_argument("graph needs at least one node");
  for (auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("self-loop edge");
    if (a < 0 || b < 0 || a >= n_nodes || b >= n_nodes)
      throw std::invalid_argument("edge endpoint out of range");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  // all-pairs BFS distances
  const int unreachable = std::numeric_limits<int>::max() / 2;
  dist_.assign(static_cast<std::size_t>(n_nodes_),
               std::vector<int>(static_cast<std::size_t>(n_nodes_), unreachable));
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_nodes_));
  for (const auto& [a, b] : edges_) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (int s = 0; s < n_nodes_; ++s) {
    auto& row = dist_[static_cast<std::size_t>(s)];
    row[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : adj[static_cast<std::size_t>(v)])
        if (row[static_cast<std::size_t>(w)] > row[static_cast<std::size_t>(v)] + 1) {
          row[static_cast<std::size_t>(w)] = row[static_cast<std::size_t>(v)] + 1;
          queue.push_back(w);
        }
    }
    for (int t = 0; t < n_nodes_; ++t)
      if (row[static_cast<std::size_t>(t)] >= unreachable)
        throw std::invalid_argument("graph must be connected");
  }
}

CouplingGraph CouplingGraph::full(int n_nodes) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n_nodes; ++a)
    for (int b = a + 1; b < n_nodes; ++b) edges.emplace_back(a, b);
  return CouplingGraph(n_nodes, std::move(edges));
}

CouplingGraph CouplingGraph::line(int n_nodes) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a + 1 < n_nodes; ++a) edges.emplace_back(a, a + 1);
  return CouplingGraph(n_nodes, std::move(edges));
}

CouplingGraph CouplingGraph::t_tree6() {
  return CouplingGraph(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}});
}

CouplingGraph CouplingGraph::preset(const std::string& name) {
  if (name == "full5") return full(5);
  if (name == "full6") return full(6);
  if (name == "line6") return line(6);
  if (name == "lagos_t") return t_tree6();
  throw std::invalid_argument("unknown coupling preset: " + name);
}

CouplingGraph CouplingGraph::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return CouplingGraph(j.at("n_nodes").get<int>(), std::move(edges));
}

std::string CouplingGraph::to_json() const {
  nlohmann::json j;
  j["n_nodes"] = n_nodes_;
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : edges_) j["edges"].push_back(nlohmann::json::array({a, b}));
  return j.dump(2);
}

bool CouplingGraph::adjacent(int a, int b) const { return distance(a, b) == 1; }

int CouplingGraph::distance(int a, int b) const {
  if (a < 0 || b < 0 || a >= n_nodes_ || b >= n_nodes_)
    throw std::out_of_range("node out of range");
  return dist_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

bool CouplingGraph::fully_connected() const {
  return static_cast<int>(edges_.size()) == n_nodes_ * (n_nodes_ - 1) / 2;
}

int CouplingGraph::degree(int node) const {
  int d = 0;
  for (const auto& [a, b] : edges_) d += (a == node || b == node) ? 1 : 0;
  return d;
}

int CouplingGraph::hub() const {
  int best = 0;
  for (int v = 1; v < n_nodes_; ++v)
    if (degree(v) > degree(best)) best = v;
  return best;
}

}  // namespace qsearch

#pragma once

// Hardware coupling graphs and the preset topologies used by the
// transpiler: fully connected registers, a six-qubit line, and a six-qubit
// tree shaped like a T (one degree-three hub, one two-qubit tail).

#include <string>
#include <utility>
#include <vector>

namespace qsearch {

class CouplingGraph {
 public:
  CouplingGraph(int n_nodes, std::vector<std::pair<int, int>> edges);

  static CouplingGraph full(int n_nodes);
  static CouplingGraph line(int n_nodes);
  static CouplingGraph t_tree6();
  // preset names: full5, full6, line6, lagos_t
  static CouplingGraph preset(const std::string& name);
  static CouplingGraph from_json(const std::string& text);

  int n_nodes() const { return n_nodes_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int a, int b) const;
  int distance(int a, int b) const;
  bool fully_connected() const;
  int degree(int node) const;
  // a maximum-degree node, smallest index on ties
  int hub() const;
  std::string to_json() const;

 private:
  int n_nodes_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> dist_;
};

}  // namespace qsearch

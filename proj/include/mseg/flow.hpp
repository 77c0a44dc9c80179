#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mseg/rank_triangle.hpp"

namespace mseg {

// One vertex v_{Δ,a} per segment instance and covered value a, grouped into
// levels V_a. Every edge drops the value level by exactly one and follows the
// precedes relation, so the graph is acyclic.
struct PrecedenceGraph {
  struct Vertex {
    int segment_index;  // canonical index into the source multisegment
    Value value;
  };

  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;    // u -> v with level(u) = level(v) + 1
  std::map<Value, std::vector<int>> levels;  // V_a as vertex ids
};

PrecedenceGraph build_precedence_graph(const Multisegment& alpha);

// DOT dump for debugging; vertices are named D<k>_<a> by canonical segment
// index and value.
std::string to_dot(const PrecedenceGraph& graph);

// A small directed network with integer capacities.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes = 0) : head_(nodes, -1) {}

  int add_node() {
    head_.push_back(-1);
    return static_cast<int>(head_.size()) - 1;
  }
  void add_arc(int from, int to, int capacity = 1);
  void set_terminals(int source, int sink) {
    source_ = source;
    sink_ = sink;
  }

  int node_count() const { return static_cast<int>(head_.size()); }
  int source() const { return source_; }
  int sink() const { return sink_; }

 private:
  struct Arc {
    int to;
    int next;
    int capacity;
  };
  std::vector<Arc> arcs_;
  std::vector<int> head_;
  int source_ = -1;
  int sink_ = -1;

  friend int max_flow(FlowNetwork network);
};

// Exact integral maximum flow by breadth-first augmentation. The argument is
// taken by value, so the caller's network is left untouched.
int max_flow(FlowNetwork network);

// Dual ranks: r~_{i,j} is the maximum number of vertex-disjoint paths from
// V_j to V_i, computed as a maximum flow on the node-split network (each
// vertex v becomes v0 -> v1 of capacity 1); r~_{i,i} = |V_i|.
RankTriangle dual_ranks(const Multisegment& alpha);

// multisegment_from_ranks(dual_ranks(alpha)); agrees with mw_dual.
Multisegment flow_dual(const Multisegment& alpha);

}  // namespace mseg

#pragma once

#include <cstdint>
#include <vector>

namespace abc {

struct FlowArc {
  int from;
  int to;
  std::int64_t capacity;
  std::int64_t lower;
  std::int64_t cost;
};

class FlowNetwork {
 public:
  FlowNetwork(int nodes, int source, int sink);

  int add_node();
  int add_arc(int from, int to, std::int64_t capacity, std::int64_t cost = 0, std::int64_t lower = 0);

  int num_nodes() const { return nodes_; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  const std::vector<FlowArc>& arcs() const { return arcs_; }

 private:
  int nodes_;
  int source_;
  int sink_;
  std::vector<FlowArc> arcs_;
};

struct FlowResult {
  bool feasible = false;
  std::int64_t cost = 0;
  std::vector<std::int64_t> flow;  // per arc, in insertion order
};

// Minimum-cost flow of exactly `required` units from source to sink meeting
// every lower bound. Successive shortest paths with Bellman-Ford; the network
// must not contain a negative-cost cycle (throws std::invalid_argument).
FlowResult min_cost_flow(const FlowNetwork& net, std::int64_t required);

}  // namespace abc

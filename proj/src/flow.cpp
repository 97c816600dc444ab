#include "abc/flow.hpp"

#include <deque>
#include <limits>
#include <stdexcept>

namespace abc {

FlowNetwork::FlowNetwork(int nodes, int source, int sink) : nodes_(nodes), source_(source), sink_(sink) {
  if (source < 0 || source >= nodes || sink < 0 || sink >= nodes) throw std::invalid_argument("terminal out of range");
  if (source == sink) throw std::invalid_argument("source and sink must differ");
}

int FlowNetwork::add_node() { return nodes_++; }

int FlowNetwork::add_arc(int from, int to, std::int64_t capacity, std::int64_t cost, std::int64_t lower) {
  if (from < 0 || from >= nodes_ || to < 0 || to >= nodes_) throw std::invalid_argument("arc endpoint out of range");
  if (lower < 0 || capacity < lower) throw std::invalid_argument("arc needs 0 <= lower <= capacity");
  arcs_.push_back({from, to, capacity, lower, cost});
  return static_cast<int>(arcs_.size()) - 1;
}

namespace {

struct Residual {
  struct Edge {
    int to;
    std::int64_t cap;
    std::int64_t cost;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out;

  explicit Residual(int nodes) : out(nodes) {}

  int add(int from, int to, std::int64_t cap, std::int64_t cost) {
    out[from].push_back(static_cast<int>(edges.size()));
    edges.push_back({to, cap, cost});
    out[to].push_back(static_cast<int>(edges.size()));
    edges.push_back({from, 0, -cost});
    return static_cast<int>(edges.size()) - 2;
  }
};

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// SPFA shortest path tree; throws on a reachable negative cycle.
bool shortest_path(const Residual& g, int s, int t, std::vector<int>& via) {
  const int n = static_cast<int>(g.out.size());
  std::vector<std::int64_t> dist(n, kInf);
  std::vector<int> relax_count(n, 0);
  std::vector<bool> queued(n, false);
  via.assign(n, -1);
  std::deque<int> queue{s};
  dist[s] = 0;
  queued[s] = true;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    queued[u] = false;
    for (int e : g.out[u]) {
      const auto& edge = g.edges[e];
      if (edge.cap <= 0 || dist[u] + edge.cost >= dist[edge.to]) continue;
      dist[edge.to] = dist[u] + edge.cost;
      via[edge.to] = e;
      if (!queued[edge.to]) {
        if (++relax_count[edge.to] > n) throw std::invalid_argument("flow network has a negative-cost cycle");
        queued[edge.to] = true;
        queue.push_back(edge.to);
      }
    }
  }
  return dist[t] < kInf;
}

}  // namespace

FlowResult min_cost_flow(const FlowNetwork& net, std::int64_t required) {
  if (required < 0) throw std::invalid_argument("required flow must be non-negative");
  const int n = net.num_nodes();
  const int super_source = n;
  const int super_sink = n + 1;
  Residual g(n + 2);
  std::vector<std::int64_t> excess(n, 0);
  std::int64_t base_cost = 0;
  std::vector<int> handle;
  handle.reserve(net.arcs().size());
  for (const auto& arc : net.arcs()) {
    handle.push_back(g.add(arc.from, arc.to, arc.capacity - arc.lower, arc.cost));
    excess[arc.to] += arc.lower;
    excess[arc.from] -= arc.lower;
    base_cost += arc.lower * arc.cost;
  }
  // Return arc sink -> source fixed at `required` units.
  excess[net.source()] += required;
  excess[net.sink()] -= required;
  std::int64_t demand = 0;
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      g.add(super_source, v, excess[v], 0);
      demand += excess[v];
    } else if (excess[v] < 0) {
      g.add(v, super_sink, -excess[v], 0);
    }
  }

  std::int64_t shipped = 0;
  std::int64_t cost = base_cost;
  std::vector<int> via;
  while (shipped < demand && shortest_path(g, super_source, super_sink, via)) {
    std::int64_t push = demand - shipped;
    for (int v = super_sink; v != super_source; v = g.edges[via[v] ^ 1].to) {
      push = std::min(push, g.edges[via[v]].cap);
    }
    for (int v = super_sink; v != super_source; v = g.edges[via[v] ^ 1].to) {
      g.edges[via[v]].cap -= push;
      g.edges[via[v] ^ 1].cap += push;
      cost += push * g.edges[via[v]].cost;
    }
    shipped += push;
  }

  FlowResult result;
  result.feasible = shipped == demand;
  if (!result.feasible) return result;
  result.cost = cost;
  result.flow.reserve(net.arcs().size());
  for (std::size_t a = 0; a < net.arcs().size(); ++a) {
    result.flow.push_back(net.arcs()[a].lower + g.edges[handle[a] ^ 1].cap);
  }
  return result;
}

}  // namespace abc

// Copyright 2026 The examsched Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "examsched/flow.hpp"

#include <cassert>
#include <limits>
#include <queue>

namespace examsched {

namespace {

// Residual graph with paired forward/backward edges (id ^ 1 inverts).
class ResidualGraph {
 public:
  explicit ResidualGraph(int node_count) : adjacency_(node_count) {}

  int add_edge(int from, int to, long long capacity) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back({to, capacity});
    edges_.push_back({from, 0});
    adjacency_[from].push_back(id);
    adjacency_[to].push_back(id + 1);
    return id;
  }

  // BFS augmenting paths (Edmonds-Karp): polynomial and, with the fixed
  // adjacency order, fully deterministic.
  long long run(int source, int sink) {
    long long total = 0;
    const int n = static_cast<int>(adjacency_.size());
    std::vector<int> parent_edge(n);
    while (true) {
      std::vector<int> visited(n, 0);
      std::queue<int> queue;
      queue.push(source);
      visited[source] = 1;
      while (!queue.empty() && !visited[sink]) {
        int node = queue.front();
        queue.pop();
        for (int id : adjacency_[node]) {
          const Edge& edge = edges_[id];
          if (edge.capacity > 0 && !visited[edge.to]) {
            visited[edge.to] = 1;
            parent_edge[edge.to] = id;
            queue.push(edge.to);
          }
        }
      }
      if (!visited[sink]) break;

      long long bottleneck = std::numeric_limits<long long>::max();
      for (int node = sink; node != source;) {
        const Edge& edge = edges_[parent_edge[node]];
        bottleneck = std::min(bottleneck, edge.capacity);
        node = edges_[parent_edge[node] ^ 1].to;
      }
      for (int node = sink; node != source;) {
        int id = parent_edge[node];
        edges_[id].capacity -= bottleneck;
        edges_[id ^ 1].capacity += bottleneck;
        node = edges_[id ^ 1].to;
      }
      total += bottleneck;
    }
    return total;
  }

  // Flow sent along the forward edge `id` = capacity accumulated on its twin.
  long long flow_on(int id) const { return edges_[id ^ 1].capacity; }

 private:
  struct Edge {
    int to;
    long long capacity;
  };

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& network) {
  ResidualGraph graph(network.node_count);
  std::vector<int> edge_ids;
  edge_ids.reserve(network.arcs.size());
  for (const auto& arc : network.arcs) {
    assert(arc.lower == 0);
    edge_ids.push_back(graph.add_edge(arc.from, arc.to, arc.upper));
  }

  MaxFlowResult result;
  result.value = graph.run(network.source, network.sink);
  result.arc_flows.reserve(network.arcs.size());
  for (int id : edge_ids) result.arc_flows.push_back(graph.flow_on(id));
  return result;
}

std::optional<std::vector<long long>> feasible_flow_with_lower_bounds(
    const FlowNetwork& network) {
  // Send each arc's mandatory part up front and balance the resulting
  // node excesses through auxiliary terminals; the original terminals are
  // tied together so flow may circulate.
  const int excess_source = network.node_count;
  const int excess_sink = network.node_count + 1;
  ResidualGraph graph(network.node_count + 2);

  std::vector<long long> excess(network.node_count, 0);
  std::vector<int> edge_ids;
  edge_ids.reserve(network.arcs.size());
  for (const auto& arc : network.arcs) {
    assert(arc.lower >= 0 && arc.lower <= arc.upper);
    edge_ids.push_back(graph.add_edge(arc.from, arc.to, arc.upper - arc.lower));
    excess[arc.to] += arc.lower;
    excess[arc.from] -= arc.lower;
  }

  long long circulation_bound = 0;
  for (const auto& arc : network.arcs) circulation_bound += arc.upper;
  graph.add_edge(network.sink, network.source, circulation_bound);

  long long required = 0;
  for (int node = 0; node < network.node_count; ++node) {
    if (excess[node] > 0) {
      graph.add_edge(excess_source, node, excess[node]);
      required += excess[node];
    } else if (excess[node] < 0) {
      graph.add_edge(node, excess_sink, -excess[node]);
    }
  }

  if (graph.run(excess_source, excess_sink) != required) {
    return std::nullopt;
  }

  std::vector<long long> flows;
  flows.reserve(network.arcs.size());
  for (size_t i = 0; i < network.arcs.size(); ++i) {
    flows.push_back(network.arcs[i].lower + graph.flow_on(edge_ids[i]));
  }
  return flows;
}

}  // namespace examsched

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

#ifndef EXAMSCHED_FLOW_HPP
#define EXAMSCHED_FLOW_HPP

#include <optional>
#include <vector>

namespace examsched {

// Directed network with per-arc flow bounds. Node ids are dense integers
// assigned by the caller; the solver never sees labels.
struct FlowNetwork {
  struct Arc {
    int from = 0;
    int to = 0;
    long long lower = 0;
    long long upper = 0;
  };

  int node_count = 0;
  std::vector<Arc> arcs;
  int source = 0;
  int sink = 0;
};

struct MaxFlowResult {
  long long value = 0;
  std::vector<long long> arc_flows;  // aligned with network.arcs
};

// Shortest-augmenting-path max flow. All arithmetic is integral, so the
// returned flows are integers. Arc order is preserved, which makes the
// result a pure function of the input. Requires every lower bound zero.
MaxFlowResult max_flow(const FlowNetwork& network);

// Feasible flow under lower bounds via the standard excess-node
// transformation plus an unbounded circulation arc sink -> source.
// Returns per-arc flows with lower <= flow <= upper and conservation at
// every node other than source and sink, or nullopt when infeasible.
std::optional<std::vector<long long>> feasible_flow_with_lower_bounds(
    const FlowNetwork& network);

}  // namespace examsched

#endif  // EXAMSCHED_FLOW_HPP

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "blomkit/field.hpp"
#include "blomkit/rng.hpp"

namespace blomkit {

/// Undirected graph on node ids 1..n. Edges are stored canonically as
/// (min, max) pairs, sorted and deduplicated; self-loops are rejected.
class NetworkTopology {
public:
    using Edge = std::pair<NodeId, NodeId>;

    NetworkTopology(std::size_t n, std::vector<Edge> edges);

    std::size_t node_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(NodeId i, NodeId j) const;

    /// Sorted neighbor ids of node i.
    const std::vector<NodeId>& neighbors(NodeId i) const;

    bool connected() const;

    friend bool operator==(const NetworkTopology&, const NetworkTopology&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<NodeId>> adjacency_;  // index k-1 -> neighbors of node k
};

/// Erdos-Renyi style draw: each unordered pair becomes an edge with the
/// given probability.
NetworkTopology random_topology(std::size_t n, double edge_probability, Rng& rng);

/// Redraws until the graph is connected, at most max_attempts times; throws
/// std::runtime_error when every draw came out disconnected.
NetworkTopology random_connected_topology(std::size_t n, double edge_probability, Rng& rng,
                                          int max_attempts = 100);

} // namespace blomkit

#include "blomkit/topology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace blomkit {

NetworkTopology::NetworkTopology(std::size_t n, std::vector<Edge> edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("NetworkTopology: need at least one node");
    edges_.reserve(edges.size());
    for (auto [i, j] : edges) {
        if (i == j) {
            throw std::invalid_argument("NetworkTopology: self-loop at node " + std::to_string(i));
        }
        if (i < 1 || i > n || j < 1 || j > n) {
            throw std::invalid_argument("NetworkTopology: edge endpoint outside 1.." +
                                        std::to_string(n));
        }
        edges_.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adjacency_.assign(n, {});
    for (auto [i, j] : edges_) {
        adjacency_[i - 1].push_back(j);
        adjacency_[j - 1].push_back(i);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool NetworkTopology::adjacent(NodeId i, NodeId j) const {
    const auto& list = neighbors(i);
    return std::binary_search(list.begin(), list.end(), j);
}

const std::vector<NodeId>& NetworkTopology::neighbors(NodeId i) const {
    if (i < 1 || i > n_) {
        throw std::out_of_range("NetworkTopology: node id " + std::to_string(i) +
                                " outside 1.." + std::to_string(n_));
    }
    return adjacency_[i - 1];
}

bool NetworkTopology::connected() const {
    std::vector<bool> seen(n_, false);
    std::vector<NodeId> stack{1};
    seen[0] = true;
    std::size_t visited = 0;
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        ++visited;
        for (NodeId w : adjacency_[v - 1]) {
            if (!seen[w - 1]) {
                seen[w - 1] = true;
                stack.push_back(w);
            }
        }
    }
    return visited == n_;
}

NetworkTopology random_topology(std::size_t n, double edge_probability, Rng& rng) {
    if (edge_probability < 0.0 || edge_probability > 1.0) {
        throw std::invalid_argument("random_topology: probability outside [0, 1]");
    }
    std::vector<NetworkTopology::Edge> edges;
    for (NodeId i = 1; i <= n; ++i) {
        for (NodeId j = i + 1; j <= n; ++j) {
            if (rng.unit() < edge_probability) edges.emplace_back(i, j);
        }
    }
    return NetworkTopology(n, std::move(edges));
}

NetworkTopology random_connected_topology(std::size_t n, double edge_probability, Rng& rng,
                                          int max_attempts) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        NetworkTopology topo = random_topology(n, edge_probability, rng);
        if (topo.connected()) return topo;
    }
    throw std::runtime_error("random_connected_topology: no connected draw in " +
                             std::to_string(max_attempts) + " attempts");
}

} // namespace blomkit

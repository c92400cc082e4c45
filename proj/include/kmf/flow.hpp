#pragma once

#include <cstdint>
#include <vector>

namespace kmf {

/// Dinic max-flow on a directed graph with integer capacities.
///
/// Deterministic: adjacency lists are scanned in insertion order, so the
/// lowest-index edge always wins ties. Capacities may be raised between calls
/// to `augment`; the current flow is kept and extended.
class MaxFlow {
public:
    explicit MaxFlow(int nodes);

    /// Adds an arc and returns its id.
    int add_edge(int from, int to, std::int64_t capacity);

    /// Raises (or lowers, down to the current flow) the capacity of an arc.
    void set_capacity(int edge, std::int64_t capacity);

    std::int64_t flow(int edge) const { return arcs_[static_cast<std::size_t>(2 * edge)].flow; }
    std::int64_t capacity(int edge) const { return arcs_[static_cast<std::size_t>(2 * edge)].cap; }

    /// Pushes as much additional flow from source to sink as possible and
    /// returns the amount pushed.
    std::int64_t augment(int source, int sink);

    int node_count() const { return static_cast<int>(head_.size()); }

private:
    struct Arc {
        int to;
        int next;
        std::int64_t cap;
        std::int64_t flow;
    };

    bool build_levels(int source, int sink);
    std::int64_t push(int node, int sink, std::int64_t limit);

    std::vector<Arc> arcs_;
    std::vector<int> head_;
    std::vector<int> tail_;
    std::vector<int> level_;
    std::vector<int> cursor_;
};

} // namespace kmf

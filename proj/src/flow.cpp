#include "kmf/flow.hpp"

#include "kmf/error.hpp"

#include <algorithm>
#include <limits>

namespace kmf {

MaxFlow::MaxFlow(int nodes)
    : head_(static_cast<std::size_t>(nodes), -1), tail_(static_cast<std::size_t>(nodes), -1)
{
}

int MaxFlow::add_edge(int from, int to, std::int64_t capacity)
{
    if (from < 0 || to < 0 || from >= node_count() || to >= node_count() || capacity < 0) {
        throw ParameterError("MaxFlow::add_edge: bad arc");
    }
    const int id = static_cast<int>(arcs_.size() / 2);
    // Forward arc at 2*id, residual twin at 2*id+1. Lists are appended at the
    // tail so traversal follows insertion order.
    auto link = [this](int node, int arc) {
        arcs_[static_cast<std::size_t>(arc)].next = -1;
        if (tail_[static_cast<std::size_t>(node)] < 0) {
            head_[static_cast<std::size_t>(node)] = arc;
        } else {
            arcs_[static_cast<std::size_t>(tail_[static_cast<std::size_t>(node)])].next = arc;
        }
        tail_[static_cast<std::size_t>(node)] = arc;
    };
    arcs_.push_back(Arc{to, -1, capacity, 0});
    arcs_.push_back(Arc{from, -1, 0, 0});
    link(from, 2 * id);
    link(to, 2 * id + 1);
    return id;
}

void MaxFlow::set_capacity(int edge, std::int64_t capacity)
{
    auto& fwd = arcs_[static_cast<std::size_t>(2 * edge)];
    if (capacity < fwd.flow) {
        throw ParameterError("MaxFlow::set_capacity below current flow");
    }
    fwd.cap = capacity;
}

bool MaxFlow::build_levels(int source, int sink)
{
    level_.assign(head_.size(), -1);
    std::vector<int> queue;
    queue.reserve(head_.size());
    queue.push_back(source);
    level_[static_cast<std::size_t>(source)] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
        const int u = queue[q];
        for (int a = head_[static_cast<std::size_t>(u)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
            const auto& arc = arcs_[static_cast<std::size_t>(a)];
            if (arc.cap > arc.flow && level_[static_cast<std::size_t>(arc.to)] < 0) {
                level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(u)] + 1;
                queue.push_back(arc.to);
            }
        }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
}

std::int64_t MaxFlow::push(int node, int sink, std::int64_t limit)
{
    if (node == sink) {
        return limit;
    }
    for (int& a = cursor_[static_cast<std::size_t>(node)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
        auto& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap <= arc.flow
            || level_[static_cast<std::size_t>(arc.to)] != level_[static_cast<std::size_t>(node)] + 1) {
            continue;
        }
        const std::int64_t pushed = push(arc.to, sink, std::min(limit, arc.cap - arc.flow));
        if (pushed > 0) {
            arc.flow += pushed;
            arcs_[static_cast<std::size_t>(a ^ 1)].flow -= pushed;
            return pushed;
        }
    }
    return 0;
}

std::int64_t MaxFlow::augment(int source, int sink)
{
    std::int64_t total = 0;
    while (build_levels(source, sink)) {
        cursor_ = head_;
        while (const std::int64_t pushed = push(source, sink, std::numeric_limits<std::int64_t>::max())) {
            total += pushed;
        }
    }
    return total;
}

} // namespace kmf

#include "kmf/baranyai.hpp"

#include "kmf/error.hpp"
#include "kmf/flow.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace kmf {

namespace {

struct Cell {
    Mask set;            // partial edge, local bits 0..g-1
    std::uint64_t count; // multiplicity within the class
};

std::string plan_name(const PartitionPlan& plan)
{
    return "[" + std::to_string(plan.first) + "," + std::to_string(plan.last) + "], k="
        + std::to_string(plan.k);
}

void validate(const PartitionPlan& plan, std::uint64_t cap)
{
    if (plan.first < 1 || plan.last > kMaxLabels || plan.k < 1 || plan.ground_size() < plan.k) {
        throw PlanError("partition plan " + plan_name(plan) + " has no hyperedges");
    }
    const std::uint64_t total = binomial(static_cast<std::uint64_t>(plan.ground_size()),
                                         static_cast<std::uint64_t>(plan.k));
    if (total > cap) {
        throw ResourceError("partition plan " + plan_name(plan) + " has " + std::to_string(total)
                            + " hyperedges, above the cap of " + std::to_string(cap));
    }
    if (plan.sizes.empty()) {
        throw PlanError("partition plan " + plan_name(plan) + " has no classes");
    }
    std::uint64_t sum = 0;
    for (auto a : plan.sizes) {
        if (a == 0) {
            throw PlanError("partition plan " + plan_name(plan) + " has a zero class size");
        }
        sum += a;
        if (sum > total) {
            break;
        }
    }
    if (sum != total) {
        throw PlanError("partition plan " + plan_name(plan) + ": sizes sum to " + std::to_string(sum)
                        + ", expected C(" + std::to_string(plan.ground_size()) + ","
                        + std::to_string(plan.k) + ") = " + std::to_string(total));
    }
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return a / b + (a % b != 0 ? 1 : 0); }

// One label-addition step: decides how much of each cell moves to S + {m}.
// Returns, per row, the moved amount of every cell (same layout as rows).
std::vector<std::vector<std::uint64_t>> round_step(const std::vector<std::vector<Cell>>& rows,
                                                   int k, int remaining, int label)
{
    const auto rem = static_cast<std::uint64_t>(remaining);
    const int row_count = static_cast<int>(rows.size());

    std::vector<std::vector<std::uint64_t>> moved(rows.size());
    std::vector<std::uint64_t> row_lo(rows.size());
    std::vector<std::uint64_t> row_hi(rows.size());

    // Column totals: every partial edge S must send exactly C(rem-1, k-|S|-1)
    // units forward, summed over classes.
    std::unordered_map<Mask, std::uint64_t> floor_sum;
    std::vector<Mask> fractional_sets;

    for (int j = 0; j < row_count; ++j) {
        const auto& row = rows[static_cast<std::size_t>(j)];
        auto& out = moved[static_cast<std::size_t>(j)];
        out.resize(row.size());
        std::uint64_t numerator = 0;
        std::uint64_t floors = 0;
        for (std::size_t c = 0; c < row.size(); ++c) {
            const auto missing = static_cast<std::uint64_t>(k - std::popcount(row[c].set));
            const std::uint64_t share = row[c].count * missing;
            numerator += share;
            out[c] = share / rem;
            floors += out[c];
            floor_sum[row[c].set] += out[c];
            if (share % rem != 0) {
                fractional_sets.push_back(row[c].set);
            }
        }
        row_lo[static_cast<std::size_t>(j)] = numerator / rem - floors;
        row_hi[static_cast<std::size_t>(j)] = ceil_div(numerator, rem) - floors;
    }

    std::sort(fractional_sets.begin(), fractional_sets.end());
    fractional_sets.erase(std::unique(fractional_sets.begin(), fractional_sets.end()), fractional_sets.end());
    if (fractional_sets.empty()) {
        for (int j = 0; j < row_count; ++j) {
            if (row_lo[static_cast<std::size_t>(j)] != 0) {
                throw ConstructionError("rounding step at label " + std::to_string(label)
                                        + ": integral shares miss a row target");
            }
        }
        return moved;
    }

    const int source = 0;
    const int sink = 1;
    const int first_row = 2;
    const int first_col = first_row + row_count;
    MaxFlow net(first_col + static_cast<int>(fractional_sets.size()));

    std::vector<int> row_edges(rows.size());
    std::int64_t lo_total = 0;
    for (int j = 0; j < row_count; ++j) {
        const auto lo = static_cast<std::int64_t>(row_lo[static_cast<std::size_t>(j)]);
        row_edges[static_cast<std::size_t>(j)] = net.add_edge(source, first_row + j, lo);
        lo_total += lo;
    }

    auto column_of = [&](Mask set) {
        auto it = std::lower_bound(fractional_sets.begin(), fractional_sets.end(), set);
        return static_cast<int>(it - fractional_sets.begin());
    };

    // Cell arcs carry the 0/1 rounding-up decision.
    std::vector<std::vector<int>> cell_edges(rows.size());
    for (int j = 0; j < row_count; ++j) {
        const auto& row = rows[static_cast<std::size_t>(j)];
        auto& edges = cell_edges[static_cast<std::size_t>(j)];
        edges.assign(row.size(), -1);
        for (std::size_t c = 0; c < row.size(); ++c) {
            const auto missing = static_cast<std::uint64_t>(k - std::popcount(row[c].set));
            if ((row[c].count * missing) % rem != 0) {
                edges[c] = net.add_edge(first_row + j, first_col + column_of(row[c].set), 1);
            }
        }
    }

    std::int64_t need_total = 0;
    for (std::size_t c = 0; c < fractional_sets.size(); ++c) {
        const Mask set = fractional_sets[c];
        const int missing = k - std::popcount(set);
        const std::uint64_t target = missing >= 1
            ? binomial(rem - 1, static_cast<std::uint64_t>(missing - 1))
            : 0;
        const std::uint64_t have = floor_sum[set];
        if (target < have) {
            throw ConstructionError("rounding step at label " + std::to_string(label)
                                    + ": column floor exceeds its target");
        }
        const auto need = static_cast<std::int64_t>(target - have);
        net.add_edge(first_col + static_cast<int>(c), sink, need);
        need_total += need;
    }

    // Satisfy the row lower bounds first, then open rows up to their ceilings.
    // Augmenting paths never reduce flow on source arcs, so the lower bounds
    // stay met.
    std::int64_t pushed = net.augment(source, sink);
    if (pushed != lo_total) {
        throw ConstructionError("rounding step at label " + std::to_string(label)
                                + ": row lower bounds infeasible");
    }
    for (int j = 0; j < row_count; ++j) {
        net.set_capacity(row_edges[static_cast<std::size_t>(j)],
                         static_cast<std::int64_t>(row_hi[static_cast<std::size_t>(j)]));
    }
    pushed += net.augment(source, sink);
    if (pushed != need_total) {
        throw ConstructionError("rounding step at label " + std::to_string(label)
                                + ": column targets infeasible");
    }

    for (int j = 0; j < row_count; ++j) {
        const auto& edges = cell_edges[static_cast<std::size_t>(j)];
        auto& out = moved[static_cast<std::size_t>(j)];
        for (std::size_t c = 0; c < edges.size(); ++c) {
            if (edges[c] >= 0) {
                out[c] += static_cast<std::uint64_t>(net.flow(edges[c]));
            }
        }
    }
    return moved;
}

} // namespace

PartitionPlan PartitionPlan::uniform(int first, int last, int k, std::uint64_t block_size)
{
    PartitionPlan plan{first, last, k, {}};
    if (first < 1 || last > kMaxLabels || k < 1 || last - first + 1 < k) {
        throw PlanError("uniform plan on [" + std::to_string(first) + "," + std::to_string(last)
                        + "] has no " + std::to_string(k) + "-subsets");
    }
    const std::uint64_t total = binomial(static_cast<std::uint64_t>(last - first + 1),
                                         static_cast<std::uint64_t>(k));
    if (block_size == 0 || block_size > total) {
        throw PlanError("block size " + std::to_string(block_size) + " outside [1, "
                        + std::to_string(total) + "]");
    }
    plan.sizes.assign(total / block_size, block_size);
    if (total % block_size != 0) {
        plan.sizes.push_back(total % block_size);
    }
    return plan;
}

std::vector<std::uint64_t> label_degrees(std::span<const KSet> members, int first, int last)
{
    std::vector<std::uint64_t> deg(static_cast<std::size_t>(std::max(0, last - first + 1)), 0);
    for (const auto& x : members) {
        for (Mask rest = x.bits(); rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest) + 1;
            if (v >= first && v <= last) {
                ++deg[static_cast<std::size_t>(v - first)];
            }
        }
    }
    return deg;
}

std::uint64_t degree_spread(std::span<const KSet> members, int first, int last)
{
    const auto deg = label_degrees(members, first, last);
    if (deg.empty()) {
        return 0;
    }
    const auto [lo, hi] = std::minmax_element(deg.begin(), deg.end());
    return *hi - *lo;
}

AlmostRegularPartition almost_regular_partition(const PartitionPlan& plan, std::uint64_t cap)
{
    validate(plan, cap);
    const int g = plan.ground_size();
    const int k = plan.k;

    std::vector<std::vector<Cell>> rows;
    rows.reserve(plan.sizes.size());
    for (auto a : plan.sizes) {
        rows.push_back({Cell{0, a}});
    }

    for (int m = 0; m < g; ++m) {
        const auto moved = round_step(rows, k, g - m, plan.first + m);
        const Mask bit = Mask{1} << m;
        for (std::size_t j = 0; j < rows.size(); ++j) {
            const auto& row = rows[j];
            std::vector<Cell> stay;
            std::vector<Cell> go;
            for (std::size_t c = 0; c < row.size(); ++c) {
                const std::uint64_t y = moved[j][c];
                if (y > row[c].count) {
                    throw ConstructionError("rounding moved more than a cell holds");
                }
                if (row[c].count > y) {
                    stay.push_back(Cell{row[c].set, row[c].count - y});
                }
                if (y > 0) {
                    go.push_back(Cell{row[c].set | bit, y});
                }
            }
            // Every S + {m} exceeds every mask below bit m, so appending keeps
            // the row sorted.
            stay.insert(stay.end(), go.begin(), go.end());
            rows[j] = std::move(stay);
        }
    }

    AlmostRegularPartition out{plan, {}};
    out.classes.reserve(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
        Block cls;
        cls.reserve(plan.sizes[j]);
        for (const auto& cell : rows[j]) {
            if (cell.count != 1 || std::popcount(cell.set) != k) {
                throw ConstructionError("class " + std::to_string(j) + " ended with a partial edge");
            }
            cls.emplace_back(cell.set << (plan.first - 1));
        }
        if (cls.size() != plan.sizes[j]) {
            throw ConstructionError("class " + std::to_string(j) + " has the wrong size");
        }
        if (degree_spread(cls, plan.first, plan.last) > 1) {
            throw ConstructionError("class " + std::to_string(j) + " is not almost regular");
        }
        out.classes.push_back(std::move(cls));
    }
    return out;
}

namespace {

CoveredPartition augment_partition(AlmostRegularPartition base, int fixed_label, std::uint64_t l,
                                   int floor, const char* what)
{
    CoveredPartition out;
    out.fixed_label = fixed_label;
    out.coverage_floor = floor;
    out.blocks.reserve(base.classes.size());
    for (const auto& cls : base.classes) {
        Block b;
        b.reserve(cls.size());
        for (const auto& x : cls) {
            b.push_back(x.with(fixed_label));
        }
        // Adding a fixed label to every member preserves colex order.
        out.blocks.push_back(std::move(b));
    }
    out.guaranteed_blocks = 0;
    for (const auto& b : out.blocks) {
        if (b.size() == l) {
            ++out.guaranteed_blocks;
        }
    }
    if (out.guaranteed_blocks < out.blocks.size() - (out.blocks.empty() ? 0 : 1)) {
        throw ConstructionError(std::string(what) + ": unexpected block layout");
    }
    for (std::uint64_t j = 0; j < out.guaranteed_blocks; ++j) {
        const int covered = covered_labels(out.blocks[j]).size();
        if (covered < floor) {
            throw ConstructionError(std::string(what) + ": block " + std::to_string(j + 1) + " covers "
                                    + std::to_string(covered) + " labels, below the floor "
                                    + std::to_string(floor));
        }
    }
    out.base = std::move(base);
    return out;
}

} // namespace

CoveredPartition partition_A(int i, const Params& p, std::uint64_t l)
{
    if (i < 1 || i > p.n - p.k + 1) {
        throw ParameterError("partition_A: i = " + std::to_string(i) + " outside [1, "
                             + std::to_string(p.n - p.k + 1) + "]");
    }
    const std::uint64_t family = binomial(static_cast<std::uint64_t>(p.n - i),
                                          static_cast<std::uint64_t>(p.k - 1));
    if (l < 1 || l > family) {
        throw ParameterError("partition_A: l = " + std::to_string(l) + " outside [1, "
                             + std::to_string(family) + "]");
    }
    auto base = almost_regular_partition(PartitionPlan::uniform(i + 1, p.n, p.k - 1, l));
    const auto reach = static_cast<std::uint64_t>(p.n - i + 1);
    const std::uint64_t spread = l * static_cast<std::uint64_t>(p.k - 1) + 1;
    return augment_partition(std::move(base), i, l, static_cast<int>(std::min(reach, spread)),
                             "partition_A");
}

CoveredPartition partition_C(const Params& p, std::uint64_t l)
{
    const std::uint64_t family = binomial(static_cast<std::uint64_t>(p.n - 1),
                                          static_cast<std::uint64_t>(p.k - 1));
    if (l < 2 || l > family) {
        throw ParameterError("partition_C: l = " + std::to_string(l) + " outside [2, "
                             + std::to_string(family) + "]");
    }
    auto base = almost_regular_partition(PartitionPlan::uniform(1, p.n - 1, p.k - 1, l));
    const auto reach = static_cast<std::uint64_t>(p.n);
    const std::uint64_t spread = l * static_cast<std::uint64_t>(p.k - 1) + 1;
    return augment_partition(std::move(base), p.n, l, static_cast<int>(std::min(reach, spread)),
                             "partition_C");
}

} // namespace kmf

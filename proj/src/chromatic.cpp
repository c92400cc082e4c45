#include "kmf/chromatic.hpp"

#include "kmf/baranyai.hpp"
#include "kmf/error.hpp"

#include <string>

namespace kmf {

std::uint64_t chi(const Params& p)
{
    const std::uint64_t total = binomial(static_cast<std::uint64_t>(p.n), static_cast<std::uint64_t>(p.k));
    const auto per_class = static_cast<std::uint64_t>(p.n / p.k);
    return total / per_class + (total % per_class != 0 ? 1 : 0);
}

ColoringCertificate build_coloring(const Params& p, std::uint64_t cap)
{
    const auto per_class = static_cast<std::uint64_t>(p.n / p.k);
    auto partition = almost_regular_partition(PartitionPlan::uniform(1, p.n, p.k, per_class), cap);
    ColoringCertificate out{p.n, p.k, std::move(partition.classes), true};
    if (out.classes.size() != chi(p)) {
        throw ConstructionError("coloring has " + std::to_string(out.classes.size())
                                + " classes, expected " + std::to_string(chi(p)));
    }
    return out;
}

namespace {

struct PackingSearch {
    int n;
    int k;
    std::vector<std::vector<KSet>> by_min_label; // index: label - 1
    int best = 0;

    // Decide labels in increasing order: `label` is either left uncovered or
    // covered by a k-set whose smallest label it is.
    void run(int label, Mask used, int chosen)
    {
        const int free_labels = n - label + 1 - std::popcount(used >> (label - 1));
        if (chosen + free_labels / k <= best) {
            return;
        }
        if (label > n - k + 1) {
            best = std::max(best, chosen);
            return;
        }
        if ((used >> (label - 1) & 1U) == 0) {
            for (const auto& x : by_min_label[static_cast<std::size_t>(label - 1)]) {
                if ((x.bits() & used) == 0) {
                    run(label + 1, used | x.bits(), chosen + 1);
                }
            }
        }
        run(label + 1, used, chosen);
    }
};

} // namespace

int alpha_oracle(const Params& p)
{
    const std::uint64_t total = binomial(static_cast<std::uint64_t>(p.n), static_cast<std::uint64_t>(p.k));
    if (total > kAlphaOracleCap) {
        throw ResourceError("alpha_oracle: C(" + std::to_string(p.n) + "," + std::to_string(p.k) + ") = "
                            + std::to_string(total) + " exceeds the brute-force cap of "
                            + std::to_string(kAlphaOracleCap));
    }
    PackingSearch search{p.n, p.k, std::vector<std::vector<KSet>>(static_cast<std::size_t>(p.n)), 0};
    for (const auto& x : enumerate_family(1, p.n, p.k)) {
        search.by_min_label[static_cast<std::size_t>(x.min_label() - 1)].push_back(x);
    }
    search.run(1, 0, 0);
    return search.best;
}

} // namespace kmf

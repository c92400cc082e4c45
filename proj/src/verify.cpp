#include "kmf/verify.hpp"

#include "kmf/error.hpp"

#include <algorithm>
#include <sstream>
#include <thread>
#include <tuple>
#include <unordered_map>

namespace kmf {

namespace {

constexpr std::size_t kMaxReported = 5;

void require_ksets(const std::vector<Block>& groups, int n, int k, const char* what)
{
    const Mask ground = interval_mask(1, n);
    for (std::size_t b = 0; b < groups.size(); ++b) {
        if (groups[b].empty()) {
            throw StructuralError(std::string(what) + " " + std::to_string(b) + " is empty");
        }
        for (std::size_t m = 0; m < groups[b].size(); ++m) {
            const auto x = groups[b][m];
            if (x.size() != k || (x.bits() & ~ground) != 0) {
                throw StructuralError(std::string(what) + " " + std::to_string(b) + ", member "
                                      + std::to_string(m) + ": " + x.to_string() + " is not a "
                                      + std::to_string(k) + "-subset of [" + std::to_string(n) + "]");
            }
        }
    }
}

// First group index holding each vertex; reports vertices seen twice.
CheckResult check_disjoint(const std::vector<Block>& groups, const char* name, const char* what)
{
    std::unordered_map<Mask, std::size_t> owner;
    std::vector<std::string> problems;
    std::size_t failures = 0;
    for (std::size_t b = 0; b < groups.size(); ++b) {
        for (const auto& x : groups[b]) {
            auto [it, fresh] = owner.emplace(x.bits(), b);
            if (!fresh) {
                if (++failures <= kMaxReported) {
                    problems.push_back("vertex " + x.to_string() + " appears in " + what + " "
                                       + std::to_string(it->second) + " and " + what + " " + std::to_string(b));
                }
            }
        }
    }
    CheckResult r{name, failures == 0, {}};
    if (failures == 0) {
        r.detail = std::to_string(owner.size()) + " distinct vertices";
    } else {
        std::ostringstream os;
        os << failures << " duplicate(s): ";
        for (std::size_t i = 0; i < problems.size(); ++i) {
            os << (i ? "; " : "") << problems[i];
        }
        r.detail = os.str();
    }
    return r;
}

// Index of the first member not reachable from member 0, or -1.
long unreachable_member(const Block& b)
{
    std::vector<char> seen(b.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < b.size(); ++v) {
            if (!seen[v] && intersects(b[u], b[v])) {
                seen[v] = 1;
                stack.push_back(v);
            }
        }
    }
    auto it = std::find(seen.begin(), seen.end(), 0);
    return it == seen.end() ? -1 : static_cast<long>(it - seen.begin());
}

struct MissingPair {
    std::size_t first;
    std::size_t second;
};

// A member of block a meets the union of block b iff it meets some member of
// b, so one scan of a against b's covered labels decides the pair.
std::vector<MissingPair> pairs_without_edge(const std::vector<Block>& blocks)
{
    std::vector<Mask> cover(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        cover[b] = covered_labels(blocks[b]).bits();
    }
    const std::size_t count = blocks.size();
    const unsigned workers = std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
    std::vector<std::vector<MissingPair>> found(workers);
    auto scan = [&](unsigned w) {
        for (std::size_t a = w; a < count; a += workers) {
            for (std::size_t b = a + 1; b < count; ++b) {
                const bool joined = std::any_of(blocks[a].begin(), blocks[a].end(),
                                                [&](KSet x) { return (x.bits() & cover[b]) != 0; });
                if (!joined) {
                    found[w].push_back({a, b});
                }
            }
        }
    };
    if (workers == 1 || count < 256) {
        for (unsigned w = 0; w < workers; ++w) {
            scan(w);
        }
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(scan, w);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    std::vector<MissingPair> all;
    for (auto& f : found) {
        all.insert(all.end(), f.begin(), f.end());
    }
    std::sort(all.begin(), all.end(), [](const MissingPair& x, const MissingPair& y) {
        return std::tie(x.first, x.second) < std::tie(y.first, y.second);
    });
    return all;
}

} // namespace

bool VerificationReport::pass() const
{
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(const std::string& name) const
{
    for (const auto& c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

std::string VerificationReport::summary() const
{
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
    os << (pass() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

VerificationReport verify_minor(const MinorCertificate& c)
{
    if (c.n < 1 || c.n > kMaxLabels || c.k < 1 || c.k > c.n) {
        throw StructuralError("certificate has invalid (n, k) = (" + std::to_string(c.n) + ", "
                              + std::to_string(c.k) + ")");
    }
    require_ksets(c.blocks, c.n, c.k, "block");
    VerificationReport report;

    report.checks.push_back(check_disjoint(c.blocks, "disjoint", "block"));

    {
        CheckResult r{"connected", true, {}};
        std::size_t failures = 0;
        std::ostringstream os;
        for (std::size_t b = 0; b < c.blocks.size(); ++b) {
            const long lost = unreachable_member(c.blocks[b]);
            if (lost >= 0) {
                if (++failures <= kMaxReported) {
                    os << (failures > 1 ? "; " : "") << "block " << b << " is disconnected: member "
                       << c.blocks[b][static_cast<std::size_t>(lost)].to_string() << " unreachable from "
                       << c.blocks[b][0].to_string();
                }
            }
        }
        r.pass = failures == 0;
        r.detail = failures == 0 ? std::to_string(c.blocks.size()) + " blocks connected"
                                 : std::to_string(failures) + " disconnected block(s): " + os.str();
        report.checks.push_back(std::move(r));
    }

    {
        const auto missing = pairs_without_edge(c.blocks);
        CheckResult r{"crossing_edges", missing.empty(), {}};
        if (missing.empty()) {
            const std::uint64_t n = c.blocks.size();
            r.detail = std::to_string(n * (n - (n > 0 ? 1 : 0)) / 2) + " block pairs joined";
        } else {
            std::ostringstream os;
            os << missing.size() << " pair(s) without a crossing edge: ";
            for (std::size_t i = 0; i < std::min(missing.size(), kMaxReported); ++i) {
                os << (i ? "; " : "") << "blocks " << missing[i].first << " and " << missing[i].second;
            }
            r.detail = os.str();
        }
        report.checks.push_back(std::move(r));
    }

    report.checks.push_back(CheckResult{"order", c.blocks.size() == c.claimed_order,
                                        "order " + std::to_string(c.blocks.size()) + ", claimed "
                                            + std::to_string(c.claimed_order)});
    return report;
}

VerificationReport verify_coloring(const ColoringCertificate& c)
{
    const auto p = Params::make(c.n, c.k);
    require_ksets(c.classes, c.n, c.k, "class");
    VerificationReport report;

    {
        auto r = check_disjoint(c.classes, "partition", "class");
        std::uint64_t members = 0;
        for (const auto& cls : c.classes) {
            members += cls.size();
        }
        const std::uint64_t total = binomial(static_cast<std::uint64_t>(c.n), static_cast<std::uint64_t>(c.k));
        if (r.pass && members != total) {
            r.pass = false;
            r.detail = "classes hold " + std::to_string(members) + " of the " + std::to_string(total)
                + " vertices";
            // Name one missing vertex.
            std::vector<Mask> present;
            for (const auto& cls : c.classes) {
                for (const auto& x : cls) {
                    present.push_back(x.bits());
                }
            }
            std::sort(present.begin(), present.end());
            for (const auto& x : enumerate_family(1, c.n, c.k)) {
                if (!std::binary_search(present.begin(), present.end(), x.bits())) {
                    r.detail += "; missing " + x.to_string();
                    break;
                }
            }
        } else if (r.pass) {
            r.detail = "all " + std::to_string(total) + " vertices covered exactly once";
        }
        report.checks.push_back(std::move(r));
    }

    {
        CheckResult r{"independent", true, {}};
        std::size_t failures = 0;
        std::ostringstream os;
        for (std::size_t j = 0; j < c.classes.size(); ++j) {
            const auto& cls = c.classes[j];
            Mask seen = 0;
            for (std::size_t m = 0; m < cls.size(); ++m) {
                if ((seen & cls[m].bits()) != 0) {
                    auto other = std::find_if(cls.begin(), cls.begin() + static_cast<long>(m),
                                              [&](KSet x) { return intersects(x, cls[m]); });
                    if (++failures <= kMaxReported) {
                        os << (failures > 1 ? "; " : "") << "class " << j << ": " << other->to_string()
                           << " meets " << cls[m].to_string();
                    }
                    break;
                }
                seen |= cls[m].bits();
            }
        }
        r.pass = failures == 0;
        r.detail = failures == 0 ? std::to_string(c.classes.size()) + " classes pairwise disjoint"
                                 : std::to_string(failures) + " class(es) with an edge: " + os.str();
        report.checks.push_back(std::move(r));
    }

    {
        const std::uint64_t expected = chi(p);
        CheckResult r{"optimal", true, {}};
        if (c.optimal) {
            r.pass = c.classes.size() == expected;
            r.detail = std::to_string(c.classes.size()) + " classes, chi = " + std::to_string(expected);
        } else {
            r.detail = "not claimed (" + std::to_string(c.classes.size()) + " classes, chi = "
                + std::to_string(expected) + ")";
        }
        report.checks.push_back(std::move(r));
    }
    return report;
}

VerificationReport verify_partition(const AlmostRegularPartition& a)
{
    const auto& plan = a.plan;
    if (plan.first < 1 || plan.last > kMaxLabels || plan.k < 1 || plan.ground_size() < plan.k) {
        throw StructuralError("partition has an empty ground family");
    }
    const Mask ground = interval_mask(plan.first, plan.last);
    for (std::size_t j = 0; j < a.classes.size(); ++j) {
        for (std::size_t m = 0; m < a.classes[j].size(); ++m) {
            const auto x = a.classes[j][m];
            if (x.size() != plan.k || (x.bits() & ~ground) != 0) {
                throw StructuralError("class " + std::to_string(j) + ", member " + std::to_string(m) + ": "
                                      + x.to_string() + " is not a " + std::to_string(plan.k)
                                      + "-subset of the ground");
            }
        }
    }
    VerificationReport report;

    {
        CheckResult r{"sizes", true, {}};
        if (a.classes.size() != plan.sizes.size()) {
            r.pass = false;
            r.detail = std::to_string(a.classes.size()) + " classes, plan has " + std::to_string(plan.sizes.size());
        } else {
            for (std::size_t j = 0; j < a.classes.size(); ++j) {
                if (a.classes[j].size() != plan.sizes[j]) {
                    r.pass = false;
                    r.detail = "class " + std::to_string(j) + " has " + std::to_string(a.classes[j].size())
                        + " members, plan says " + std::to_string(plan.sizes[j]);
                    break;
                }
            }
            if (r.pass) {
                r.detail = std::to_string(a.classes.size()) + " classes at prescribed sizes";
            }
        }
        report.checks.push_back(std::move(r));
    }

    {
        auto r = check_disjoint(a.classes, "disjoint_union", "class");
        std::uint64_t members = 0;
        for (const auto& cls : a.classes) {
            members += cls.size();
        }
        const std::uint64_t total = binomial(static_cast<std::uint64_t>(plan.ground_size()),
                                             static_cast<std::uint64_t>(plan.k));
        if (r.pass && members != total) {
            r.pass = false;
            r.detail = "classes hold " + std::to_string(members) + " of " + std::to_string(total) + " hyperedges";
        } else if (r.pass) {
            r.detail = "all " + std::to_string(total) + " hyperedges covered exactly once";
        }
        report.checks.push_back(std::move(r));
    }

    {
        CheckResult r{"almost_regular", true, {}};
        std::size_t failures = 0;
        std::ostringstream os;
        for (std::size_t j = 0; j < a.classes.size(); ++j) {
            const auto deg = label_degrees(a.classes[j], plan.first, plan.last);
            const auto [lo, hi] = std::minmax_element(deg.begin(), deg.end());
            if (*hi - *lo > 1) {
                if (++failures <= kMaxReported) {
                    os << (failures > 1 ? "; " : "") << "class " << j << ": deg(" << plan.first + (hi - deg.begin())
                       << ") = " << *hi << ", deg(" << plan.first + (lo - deg.begin()) << ") = " << *lo;
                }
            }
        }
        r.pass = failures == 0;
        r.detail = failures == 0 ? "every class has degree spread <= 1"
                                 : std::to_string(failures) + " class(es) with spread > 1: " + os.str();
        report.checks.push_back(std::move(r));
    }
    return report;
}

} // namespace kmf

// kmf: complete-minor and coloring certificates for complements of Kneser graphs.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 out-of-scope parameters, 4 resource cap exceeded.

#include "kmf/baranyai.hpp"
#include "kmf/chromatic.hpp"
#include "kmf/error.hpp"
#include "kmf/minor.hpp"
#include "kmf/serialize.hpp"
#include "kmf/table.hpp"
#include "kmf/verify.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : kmf::Error {
    using kmf::Error::Error;
    int exit_code() const noexcept override { return kExitUsage; }
};

int cmd_chi(int n, int k)
{
    std::cout << kmf::chi(kmf::Params::make(n, k)) << '\n';
    return kExitOk;
}

int cmd_minor(int n, int k, const std::string& out_path)
{
    const auto p = kmf::Params::make(n, k);
    const auto cert = kmf::build_minor(p);
    const auto report = kmf::verify_minor(cert);
    const bool ok = report.pass() && cert.order() >= kmf::chi(p);
    if (!out_path.empty()) {
        kmf::save_json(out_path, kmf::to_json(cert));
    }
    std::cout << "order=" << cert.order() << " chi=" << kmf::chi(p) << (ok ? " PASS" : " FAIL") << '\n';
    if (!ok) {
        std::cerr << report.summary();
    }
    return ok ? kExitOk : kExitFail;
}

int cmd_verify(const std::string& kind, const std::string& path, bool json)
{
    kmf::Json doc;
    try {
        doc = kmf::load_json(path);
    } catch (const kmf::StructuralError& e) {
        // Not a JSON document at all: bad input, not a failed certificate.
        throw UsageError(e.what());
    }
    std::string actual;
    try {
        actual = kmf::document_kind(doc);
    } catch (const kmf::StructuralError& e) {
        throw UsageError(path + ": " + e.what());
    }
    if (!kind.empty() && kind != actual) {
        throw UsageError(path + " holds a " + actual + ", not a " + kind);
    }
    kmf::VerificationReport report;
    try {
        report = kmf::verify_document(doc);
    } catch (const kmf::StructuralError& e) {
        report.checks.push_back({"structure", false, e.what()});
    }
    if (json) {
        std::cout << kmf::render(kmf::to_json(report));
    } else {
        std::cout << report.summary();
    }
    return report.pass() ? kExitOk : kExitFail;
}

int cmd_table(int n_min, int n_max)
{
    if (n_min < 12 || n_max > 35 || n_min > n_max) {
        throw UsageError("table range must satisfy 12 <= n-min <= n-max <= 35");
    }
    bool ok = true;
    std::cout << std::setw(4) << "n" << std::setw(4) << "l" << std::setw(8) << "f" << std::setw(8) << "g"
              << std::setw(8) << "chi" << "  notes\n";
    for (int n = n_min; n <= n_max; ++n) {
        const auto row = kmf::k3_table_row(n);
        const auto* ref = kmf::k3_reference(n);
        std::vector<std::string> notes;
        auto expect = [&](bool cond, const std::string& what) {
            if (!cond) {
                ok = false;
                notes.push_back("MISMATCH " + what);
            }
        };
        expect(kmf::Rational(row.f) >= row.g, "f < g");
        if (ref != nullptr) {
            expect(row.l == ref->l, "l (reference " + std::to_string(ref->l) + ")");
            expect(row.chi == ref->chi, "chi (reference " + std::to_string(ref->chi) + ")");
            if (ref->f) {
                expect(row.f == *ref->f, "f (reference " + std::to_string(*ref->f) + ")");
                notes.push_back("f listed");
            }
            if (ref->g_floor) {
                expect(row.g_floor == *ref->g_floor, "g (reference " + std::to_string(*ref->g_floor) + ")");
                notes.push_back("g listed");
            }
        }
        if (row.built_below) {
            notes.push_back(n == 14 ? "minor extends the n=13 build" : "minor built inside [n-1]");
        } else {
            expect(row.f >= row.chi, "f < chi");
        }
        std::cout << std::setw(4) << n << std::setw(4) << row.l << std::setw(8) << row.f << std::setw(8)
                  << row.g_floor.str() << std::setw(8) << row.chi << " ";
        for (const auto& note : notes) {
            std::cout << ' ' << note << ';';
        }
        std::cout << '\n';
    }
    std::cout << (ok ? "table: PASS" : "table: FAIL") << '\n';
    return ok ? kExitOk : kExitFail;
}

int cmd_partition(int n, int k, std::uint64_t block_size, const std::vector<std::uint64_t>& sizes,
                  const std::string& out_path)
{
    if ((block_size == 0) == sizes.empty()) {
        throw UsageError("give exactly one of --block-size and --sizes");
    }
    if (n < 1 || n > kmf::kMaxLabels || k < 1 || k > n) {
        throw UsageError("partition needs 1 <= k <= n <= 64");
    }
    kmf::PartitionPlan plan = block_size != 0 ? kmf::PartitionPlan::uniform(1, n, k, block_size)
                                              : kmf::PartitionPlan{1, n, k, sizes};
    const auto partition = kmf::almost_regular_partition(plan);
    const auto report = kmf::verify_partition(partition);
    if (!out_path.empty()) {
        kmf::save_json(out_path, kmf::to_json(partition));
    }
    std::cout << "classes=" << partition.classes.size() << " hyperedges="
              << kmf::binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k))
              << (report.pass() ? " PASS" : " FAIL") << '\n';
    if (!report.pass()) {
        std::cerr << report.summary();
    }
    return report.pass() ? kExitOk : kExitFail;
}

struct GridResult {
    int n = 0;
    int k = 0;
    std::string line;
    bool pass = false;
    int error_code = 0;
};

GridResult run_instance(int n, int k, std::uint64_t cap)
{
    GridResult r{n, k, {}, false, 0};
    std::ostringstream os;
    os << std::setw(4) << n << std::setw(3) << k;
    try {
        const auto p = kmf::Params::make(n, k);
        const auto minor = kmf::build_minor(p, cap);
        const auto coloring = kmf::build_coloring(p, cap);
        const bool minor_ok = kmf::verify_minor(minor).pass();
        const bool coloring_ok = kmf::verify_coloring(coloring).pass();
        const auto x = kmf::chi(p);
        r.pass = minor_ok && coloring_ok && minor.order() >= x;
        os << std::setw(14) << kmf::to_string(kmf::route_case(p)) << std::setw(8) << minor.order() << std::setw(8)
           << x << std::setw(8) << coloring.classes.size() << "  minor " << (minor_ok ? "ok" : "BAD")
           << ", coloring " << (coloring_ok ? "ok" : "BAD") << (r.pass ? "  PASS" : "  FAIL");
    } catch (const kmf::Error& e) {
        r.error_code = e.exit_code();
        os << "  ERROR " << e.what();
    }
    r.line = os.str();
    return r;
}

int cmd_grid(const std::vector<int>& ks, std::uint64_t cap)
{
    for (int k : ks) {
        if (k < 3) {
            throw kmf::OutOfScopeError("k = " + std::to_string(k) + " is out of scope (need k >= 3)");
        }
    }
    std::vector<std::pair<int, int>> instances;
    for (int k : ks) {
        for (int n = 2 * k + 1; n <= kmf::kMaxLabels; ++n) {
            if (kmf::binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)) > cap) {
                break;
            }
            instances.emplace_back(n, k);
        }
    }
    std::vector<GridResult> results(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < instances.size(); i = next++) {
            results[i] = run_instance(instances[i].first, instances[i].second, cap);
        }
    };
    const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    for (auto& t : pool) {
        t.join();
    }

    std::cout << std::setw(4) << "n" << std::setw(3) << "k" << std::setw(14) << "case" << std::setw(8) << "order"
              << std::setw(8) << "chi" << std::setw(8) << "colors" << '\n';
    std::size_t passed = 0;
    int worst_error = 0;
    for (const auto& r : results) {
        std::cout << r.line << '\n';
        passed += r.pass ? 1 : 0;
        worst_error = std::max(worst_error, r.error_code);
    }
    const bool ok = passed == results.size();
    std::cout << "grid: " << passed << "/" << results.size() << " instances pass" << (ok ? " PASS" : " FAIL")
              << '\n';
    if (worst_error > kExitFail) {
        return worst_error;
    }
    return ok ? kExitOk : kExitFail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Complete-minor and coloring certificates for complements of Kneser graphs"};
    app.require_subcommand(1);

    int n = 0;
    int k = 0;
    std::string out_path;

    auto* chi_cmd = app.add_subcommand("chi", "Print the chromatic number of the complement Kneser graph");
    chi_cmd->add_option("--n", n, "ground set size")->required();
    chi_cmd->add_option("--k", k, "subset size")->required();

    auto* minor_cmd = app.add_subcommand("minor", "Build, self-verify and optionally write a minor certificate");
    minor_cmd->add_option("--n", n, "ground set size")->required();
    minor_cmd->add_option("--k", k, "subset size")->required();
    minor_cmd->add_option("--out", out_path, "certificate JSON path");

    std::string kind;
    std::string in_path;
    bool json_report = false;
    auto* verify_cmd = app.add_subcommand("verify", "Verify a certificate or partition file");
    verify_cmd->add_option("--kind", kind, "expected kind")->check(CLI::IsMember({"minor", "coloring", "partition"}));
    verify_cmd->add_option("--in,in", in_path, "document path")->required();
    verify_cmd->add_flag("--json", json_report, "print the report as JSON");

    int n_min = 12;
    int n_max = 35;
    auto* table_cmd = app.add_subcommand("table", "Print the k = 3 order table");
    table_cmd->add_option("--n-min", n_min, "first n");
    table_cmd->add_option("--n-max", n_max, "last n");

    std::uint64_t block_size = 0;
    std::vector<std::uint64_t> sizes;
    auto* part_cmd = app.add_subcommand("partition", "Almost regular partition of all k-subsets of [n]");
    part_cmd->add_option("--n", n, "ground set size")->required();
    part_cmd->add_option("--k", k, "subset size")->required();
    auto* bs_opt = part_cmd->add_option("--block-size", block_size, "uniform class size (remainder last)");
    auto* sz_opt = part_cmd->add_option("--sizes", sizes, "explicit class sizes")->delimiter(',');
    bs_opt->excludes(sz_opt);
    part_cmd->add_option("--out", out_path, "partition JSON path");

    std::vector<int> ks{3, 4, 5, 6};
    std::uint64_t cap = kmf::hyperedge_cap();
    auto* grid_cmd = app.add_subcommand("grid", "Build and verify every instance with C(n,k) <= cap");
    grid_cmd->add_option("--k", ks, "subset sizes")->delimiter(',');
    grid_cmd->add_option("--cap", cap, "largest C(n,k) to include");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*chi_cmd) {
            return cmd_chi(n, k);
        }
        if (*minor_cmd) {
            return cmd_minor(n, k, out_path);
        }
        if (*verify_cmd) {
            return cmd_verify(kind, in_path, json_report);
        }
        if (*table_cmd) {
            return cmd_table(n_min, n_max);
        }
        if (*part_cmd) {
            return cmd_partition(n, k, block_size, sizes, out_path);
        }
        if (*grid_cmd) {
            return cmd_grid(ks, cap);
        }
    } catch (const kmf::StructuralError& e) {
        // Unreadable input document.
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    } catch (const kmf::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}

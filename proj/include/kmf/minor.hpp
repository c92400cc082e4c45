#pragma once

#include "kmf/combinatorics.hpp"
#include "kmf/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace kmf {

/// Construction regime for a complete minor of the complement Kneser graph.
enum class CaseTag {
    S2_CASE1,     ///< s = 2, t <= k-2
    S2_CASE2,     ///< s = 2, t = k-1
    S3_CASE1,     ///< s = 3, t <= k-3
    S3_CASE2,     ///< s = 3, t = k-2
    S3_CASE3,     ///< s = 3, t = k-1
    S4_KGE4,      ///< s >= 4, k >= 4
    S4_K3,        ///< s >= 4, k = 3
    S4_K3_SHIFT,  ///< k = 3, n in {18, 22, 26}: built inside [n-1]
    SPECIAL_14_3, ///< (14, 3): the n = 13 build plus size-4 blocks through label 14
};

std::string_view to_string(CaseTag tag);
/// Throws StructuralError on an unknown name.
CaseTag case_tag_from_string(std::string_view name);

/// Block-size parameters for s >= 4, k >= 4.
struct S4Params {
    int l_prime = 0; ///< floor((n-1)/(k-1))
    int l = 0;       ///< block size
    int n_prime = 0; ///< number of A_i families used: n - l(k-1)

    static S4Params compute(const Params& p);
};

/// Outcome of the three block-size inequalities for s >= 4, k >= 4.
struct S4Inequalities {
    bool a = false; ///< l <= (l'+2)/2 <= (s + 3 + (s-1)/(k-1)) / 2
    bool b = false; ///< n/2 < l(k-1)+1 <= (n-1)/2 + k
    bool c = false; ///< C(n-n', k-1) / l > n'

    bool all() const { return a && b && c; }
};

S4Inequalities check_s4_inequalities(const Params& p, const S4Params& q);

/// Block-size parameters for k = 3, s >= 4, with n = 4s' + t'.
struct K3Params {
    int s_prime = 0;
    int t_prime = 0;
    int l = 0;       ///< s' for t' in {0,1}, s'+1 for t' in {2,3}
    int n_prime = 0; ///< n - 2l

    static K3Params compute(int n);

    /// (n-1)/2 <= 2l <= n/2 + 1.
    static bool window_holds(int n, int l) { return n - 1 <= 4 * l && 4 * l <= n + 2; }
};

/// One construction step. `params` always carries n, k, l and `blocks`, the
/// number of branch sets the step contributes.
struct TraceStep {
    CaseTag tag = CaseTag::S2_CASE1;
    std::map<std::string, std::int64_t> params;

    std::int64_t at(const std::string& key) const;
    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// Claimed complete minor of the complement Kneser graph K̄(n,k).
struct MinorCertificate {
    int n = 0;
    int k = 0;
    std::vector<Block> blocks;
    /// Steps in application order; blocks are the concatenation of the steps'
    /// contributions.
    std::vector<TraceStep> trace;
    std::uint64_t claimed_order = 0;

    std::uint64_t order() const { return blocks.size(); }
};

/// Regime for (n, k). Throws OutOfScopeError for k < 3 or n <= 2k.
CaseTag route_case(const Params& p);

/// Builds the complete minor for (n, k) with order >= chi(n, k).
/// Throws ResourceError when C(n, k) exceeds `cap`.
MinorCertificate build_minor(const Params& p, std::uint64_t cap = hyperedge_cap());

/// s = 2, 1 <= t <= k-2: singletons of A_1 plus size-2 blocks of A_2..A_k.
MinorCertificate build_s2_case1(const Params& p);
/// s = 2, t = k-1: the case-1 build at n-1 plus size-3 blocks of C(n,k).
MinorCertificate build_s2_case2(const Params& p);
/// s = 3, any t: singletons plus size-3 A-blocks; t = k-2 and t = k-1 add
/// size-4 C-blocks on top of the build at n-1.
MinorCertificate build_s3(const Params& p);
/// s >= 4, k >= 4: size-l blocks of A_1..A_{n'}.
MinorCertificate build_s4_kge4(const Params& p);
/// s >= 4, k = 3, n != 14; n in {18,22,26} is built inside [n-1].
MinorCertificate build_s4_k3(const Params& p);
/// (14, 3): 88 blocks from n = 13 plus 19 size-4 C-blocks.
MinorCertificate build_14_3();

/// Rebuilds a certificate from its trace alone. Throws StructuralError when
/// a step is malformed or its recorded block count does not match.
MinorCertificate replay_trace(int n, int k, const std::vector<TraceStep>& trace);

/// sum_{i=1}^{n'} floor(C(n-i, 3-1) / l) for k = 3 with the K3Params of n.
std::uint64_t k3_order(int n);

/// Closed-form lower bound on the minor order for s in {2, 3}, evaluated
/// exactly. Throws ParameterError for other s.
Rational closed_form_lower_bound(const Params& p);

/// Exact bound analytics for s >= 4, k >= 4.
struct S4BoundReport {
    S4Params q;
    Rational f;        ///< C(l(k-1)+1, k) / C(n, k)
    Rational g;        ///< prod_{j<k} (1/2 + (k - (j+1)/2) / (n-j))
    Rational g_sk;     ///< the same product at n = sk
    Rational threshold; ///< tabulated upper bound for g(sk, k) by (k, s)
    bool f_le_g = false;
    bool g_le_g_sk = false;
    bool g_sk_le_threshold = false;
    bool covers_l = false; ///< (1 - g) s >= l

    bool pass() const { return f_le_g && g_le_g_sk && g_sk_le_threshold && covers_l; }
};

/// Throws ParameterError unless s >= 4 and k >= 4.
S4BoundReport bound_check_s4(const Params& p);

} // namespace kmf

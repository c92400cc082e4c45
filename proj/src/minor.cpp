#include "kmf/minor.hpp"

#include "kmf/baranyai.hpp"
#include "kmf/chromatic.hpp"
#include "kmf/error.hpp"

#include <array>
#include <utility>

namespace kmf {

namespace {

constexpr std::array<std::pair<CaseTag, std::string_view>, 9> kTagNames{{
    {CaseTag::S2_CASE1, "S2_CASE1"},
    {CaseTag::S2_CASE2, "S2_CASE2"},
    {CaseTag::S3_CASE1, "S3_CASE1"},
    {CaseTag::S3_CASE2, "S3_CASE2"},
    {CaseTag::S3_CASE3, "S3_CASE3"},
    {CaseTag::S4_KGE4, "S4_KGE4"},
    {CaseTag::S4_K3, "S4_K3"},
    {CaseTag::S4_K3_SHIFT, "S4_K3_SHIFT"},
    {CaseTag::SPECIAL_14_3, "SPECIAL_14_3"},
}};

std::string instance(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

std::uint64_t choose(int a, int b)
{
    if (a < 0 || b < 0) {
        return 0;
    }
    return binomial(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
}

// Builder-side property, stronger than the verifier's connectivity check.
void require_common_label(const Block& b, CaseTag tag)
{
    if (b.size() <= 1) {
        return;
    }
    Mask common = ~Mask{0};
    for (const auto& x : b) {
        common &= x.bits();
    }
    if (common == 0) {
        throw ConstructionError(std::string(to_string(tag)) + ": block without a common label");
    }
}

void append_guaranteed(const CoveredPartition& part, std::vector<Block>& out, CaseTag tag)
{
    for (const auto& b : part.guaranteed()) {
        require_common_label(b, tag);
        out.push_back(b);
    }
}

enum class StepShape { SingletonsAndA, CBlocks, ARange };

StepShape shape_of(CaseTag tag)
{
    switch (tag) {
    case CaseTag::S2_CASE1:
    case CaseTag::S3_CASE1:
        return StepShape::SingletonsAndA;
    case CaseTag::S2_CASE2:
    case CaseTag::S3_CASE2:
    case CaseTag::S3_CASE3:
    case CaseTag::SPECIAL_14_3:
        return StepShape::CBlocks;
    case CaseTag::S4_KGE4:
    case CaseTag::S4_K3:
    case CaseTag::S4_K3_SHIFT:
        return StepShape::ARange;
    }
    throw ConstructionError("unknown case tag");
}

// Emits the branch sets a step contributes. The step's own parameters are
// the only input, so builders and replay share one code path.
std::vector<Block> realize(const TraceStep& step)
{
    const int k = static_cast<int>(step.at("k"));
    const auto l = static_cast<std::uint64_t>(step.at("l"));
    std::vector<Block> out;
    switch (shape_of(step.tag)) {
    case StepShape::SingletonsAndA: {
        const auto p = Params::make(static_cast<int>(step.at("n")), k);
        for (const auto& x : family_A(1, p)) {
            out.push_back(Block{x});
        }
        for (int i = 2; i <= p.k; ++i) {
            append_guaranteed(partition_A(i, p, l), out, step.tag);
        }
        break;
    }
    case StepShape::CBlocks: {
        const auto p = Params::make(static_cast<int>(step.at("n")), k);
        append_guaranteed(partition_C(p, l), out, step.tag);
        break;
    }
    case StepShape::ARange: {
        const int n_eff = static_cast<int>(step.tag == CaseTag::S4_K3_SHIFT ? step.at("n_eff") : step.at("n"));
        const auto p = Params::make(n_eff, k);
        const int n_prime = static_cast<int>(step.at("n_prime"));
        if (n_prime < 1 || n_prime > p.n - p.k + 1) {
            throw StructuralError("trace step " + std::string(to_string(step.tag)) + ": n_prime out of range");
        }
        for (int i = 1; i <= n_prime; ++i) {
            append_guaranteed(partition_A(i, p, l), out, step.tag);
        }
        break;
    }
    }
    return out;
}

void apply(MinorCertificate& cert, TraceStep step)
{
    auto blocks = realize(step);
    step.params["blocks"] = static_cast<std::int64_t>(blocks.size());
    for (auto& b : blocks) {
        cert.blocks.push_back(std::move(b));
    }
    cert.trace.push_back(std::move(step));
    cert.claimed_order = cert.blocks.size();
}

TraceStep make_step(CaseTag tag, const Params& p, int l)
{
    return TraceStep{tag, {{"n", p.n}, {"k", p.k}, {"l", l}}};
}

MinorCertificate empty_certificate(const Params& p) { return MinorCertificate{p.n, p.k, {}, {}, 0}; }

void reframe(MinorCertificate& cert, const Params& p)
{
    // Identity embedding: K̄(n-1,k) is an induced subgraph of K̄(n,k).
    cert.n = p.n;
    cert.k = p.k;
}

} // namespace

std::string_view to_string(CaseTag tag)
{
    for (const auto& [t, name] : kTagNames) {
        if (t == tag) {
            return name;
        }
    }
    return "UNKNOWN";
}

CaseTag case_tag_from_string(std::string_view name)
{
    for (const auto& [t, text] : kTagNames) {
        if (text == name) {
            return t;
        }
    }
    throw StructuralError("unknown case tag '" + std::string(name) + "'");
}

std::int64_t TraceStep::at(const std::string& key) const
{
    auto it = params.find(key);
    if (it == params.end()) {
        throw StructuralError("trace step " + std::string(to_string(tag)) + " lacks parameter '" + key + "'");
    }
    return it->second;
}

S4Params S4Params::compute(const Params& p)
{
    S4Params q;
    q.l_prime = (p.n - 1) / (p.k - 1);
    q.l = (p.n == 19 && p.k == 4) ? (q.l_prime + 1) / 2 : (q.l_prime + 2) / 2;
    q.n_prime = p.n - q.l * (p.k - 1);
    return q;
}

S4Inequalities check_s4_inequalities(const Params& p, const S4Params& q)
{
    S4Inequalities r;
    const Rational half_lp2 = Rational(q.l_prime + 2, 2);
    const Rational cap_a = (Rational(p.s + 3) + Rational(p.s - 1, p.k - 1)) / 2;
    r.a = Rational(q.l) <= half_lp2 && half_lp2 <= cap_a;

    const Rational reach = Rational(q.l * (p.k - 1) + 1);
    r.b = Rational(p.n, 2) < reach && reach <= Rational(p.n - 1, 2) + p.k;

    r.c = Rational(choose(p.n - q.n_prime, p.k - 1), q.l) > Rational(q.n_prime);
    return r;
}

K3Params K3Params::compute(int n)
{
    K3Params q;
    q.s_prime = n / 4;
    q.t_prime = n % 4;
    q.l = q.t_prime <= 1 ? q.s_prime : q.s_prime + 1;
    q.n_prime = n - 2 * q.l;
    return q;
}

std::uint64_t k3_order(int n)
{
    const auto q = K3Params::compute(n);
    std::uint64_t total = 0;
    for (int i = 1; i <= q.n_prime; ++i) {
        total += choose(n - i, 2) / static_cast<std::uint64_t>(q.l);
    }
    return total;
}

CaseTag route_case(const Params& p)
{
    if (p.s == 2) {
        return p.t <= p.k - 2 ? CaseTag::S2_CASE1 : CaseTag::S2_CASE2;
    }
    if (p.s == 3) {
        if (p.t <= p.k - 3) {
            return CaseTag::S3_CASE1;
        }
        return p.t == p.k - 2 ? CaseTag::S3_CASE2 : CaseTag::S3_CASE3;
    }
    if (p.k >= 4) {
        return CaseTag::S4_KGE4;
    }
    if (p.n == 14) {
        return CaseTag::SPECIAL_14_3;
    }
    if (p.n == 18 || p.n == 22 || p.n == 26) {
        return CaseTag::S4_K3_SHIFT;
    }
    return CaseTag::S4_K3;
}

MinorCertificate build_s2_case1(const Params& p)
{
    if (p.s != 2 || p.t < 1 || p.t > p.k - 2) {
        throw ParameterError("build_s2_case1: " + instance(p.n, p.k) + " is not s = 2, 1 <= t <= k-2");
    }
    auto cert = empty_certificate(p);
    apply(cert, make_step(CaseTag::S2_CASE1, p, 2));
    return cert;
}

MinorCertificate build_s2_case2(const Params& p)
{
    if (p.s != 2 || p.t != p.k - 1) {
        throw ParameterError("build_s2_case2: " + instance(p.n, p.k) + " is not s = 2, t = k-1");
    }
    auto cert = build_s2_case1(Params::make(p.n - 1, p.k));
    reframe(cert, p);
    apply(cert, make_step(CaseTag::S2_CASE2, p, 3));
    return cert;
}

MinorCertificate build_s3(const Params& p)
{
    if (p.s != 3) {
        throw ParameterError("build_s3: " + instance(p.n, p.k) + " does not have s = 3");
    }
    if (p.t <= p.k - 3) {
        auto cert = empty_certificate(p);
        apply(cert, make_step(CaseTag::S3_CASE1, p, 3));
        return cert;
    }
    auto cert = build_s3(Params::make(p.n - 1, p.k));
    reframe(cert, p);
    apply(cert, make_step(p.t == p.k - 2 ? CaseTag::S3_CASE2 : CaseTag::S3_CASE3, p, 4));
    return cert;
}

MinorCertificate build_s4_kge4(const Params& p)
{
    if (p.s < 4 || p.k < 4) {
        throw ParameterError("build_s4_kge4: " + instance(p.n, p.k) + " needs s >= 4, k >= 4");
    }
    const auto q = S4Params::compute(p);
    const auto ineq = check_s4_inequalities(p, q);
    if (!ineq.all()) {
        throw ConstructionError("build_s4_kge4: block-size inequalities fail at " + instance(p.n, p.k));
    }
    auto step = make_step(CaseTag::S4_KGE4, p, q.l);
    step.params["l_prime"] = q.l_prime;
    step.params["n_prime"] = q.n_prime;
    auto cert = empty_certificate(p);
    apply(cert, std::move(step));
    return cert;
}

MinorCertificate build_s4_k3(const Params& p)
{
    if (p.s < 4 || p.k != 3) {
        throw ParameterError("build_s4_k3: " + instance(p.n, p.k) + " needs s >= 4, k = 3");
    }
    if (p.n == 14) {
        throw ParameterError("build_s4_k3: (14,3) is handled by build_14_3");
    }
    const bool shift = p.n == 18 || p.n == 22 || p.n == 26;
    const int n_eff = shift ? p.n - 1 : p.n;
    const auto q = K3Params::compute(n_eff);
    if (!K3Params::window_holds(n_eff, q.l)) {
        throw ConstructionError("build_s4_k3: (n-1)/2 <= 2l <= n/2+1 fails at n = " + std::to_string(n_eff));
    }
    auto step = make_step(shift ? CaseTag::S4_K3_SHIFT : CaseTag::S4_K3, p, q.l);
    step.params["s_prime"] = q.s_prime;
    step.params["t_prime"] = q.t_prime;
    step.params["n_prime"] = q.n_prime;
    if (shift) {
        step.params["n_eff"] = n_eff;
    }
    auto cert = empty_certificate(p);
    apply(cert, std::move(step));
    return cert;
}

MinorCertificate build_14_3()
{
    const auto p = Params::make(14, 3);
    auto cert = build_s4_k3(Params::make(13, 3));
    reframe(cert, p);
    apply(cert, make_step(CaseTag::SPECIAL_14_3, p, 4));
    return cert;
}

MinorCertificate build_minor(const Params& p, std::uint64_t cap)
{
    const std::uint64_t total = choose(p.n, p.k);
    if (total > cap) {
        throw ResourceError("C(" + std::to_string(p.n) + "," + std::to_string(p.k) + ") = "
                            + std::to_string(total) + " exceeds the cap of " + std::to_string(cap));
    }
    MinorCertificate cert;
    switch (route_case(p)) {
    case CaseTag::S2_CASE1:
        cert = build_s2_case1(p);
        break;
    case CaseTag::S2_CASE2:
        cert = build_s2_case2(p);
        break;
    case CaseTag::S3_CASE1:
    case CaseTag::S3_CASE2:
    case CaseTag::S3_CASE3:
        cert = build_s3(p);
        break;
    case CaseTag::S4_KGE4:
        cert = build_s4_kge4(p);
        break;
    case CaseTag::S4_K3:
    case CaseTag::S4_K3_SHIFT:
        cert = build_s4_k3(p);
        break;
    case CaseTag::SPECIAL_14_3:
        cert = build_14_3();
        break;
    }
    if (cert.order() < chi(p)) {
        throw ConstructionError("minor of order " + std::to_string(cert.order()) + " below chi = "
                                + std::to_string(chi(p)) + " at " + instance(p.n, p.k));
    }
    return cert;
}

MinorCertificate replay_trace(int n, int k, const std::vector<TraceStep>& trace)
{
    MinorCertificate cert{n, k, {}, {}, 0};
    for (const auto& step : trace) {
        const auto recorded = step.at("blocks");
        std::vector<Block> blocks;
        try {
            blocks = realize(step);
        } catch (const StructuralError&) {
            throw;
        } catch (const Error& e) {
            throw StructuralError("trace step " + std::string(to_string(step.tag)) + ": " + e.what());
        }
        if (static_cast<std::int64_t>(blocks.size()) != recorded) {
            throw StructuralError("trace step " + std::string(to_string(step.tag)) + " records "
                                  + std::to_string(recorded) + " blocks, replay gives "
                                  + std::to_string(blocks.size()));
        }
        for (auto& b : blocks) {
            cert.blocks.push_back(std::move(b));
        }
        cert.trace.push_back(step);
    }
    cert.claimed_order = cert.blocks.size();
    return cert;
}

Rational closed_form_lower_bound(const Params& p)
{
    const int n = p.n;
    const int k = p.k;
    auto C = [](int a, int b) { return Rational(BigInt(choose(a, b))); };
    if (p.s == 2) {
        if (p.t <= k - 2) {
            return C(n, k) / 2 + C(n - 1, k - 1) / 2 - C(n - k, k) / 2 - Rational(k - 1, 2);
        }
        return C(n, k) / 2 + C(n - 1, k - 1) / 6 - C(n - 1 - k, k) / 2 - Rational(k - 1, 2) - Rational(2, 3);
    }
    if (p.s == 3) {
        if (p.t <= k - 3) {
            return C(n, k) / 3 + C(n - 1, k - 1) * 2 / 3 - C(n - k, k) / 3 - Rational(2 * (k - 2), 3);
        }
        if (p.t == k - 2) {
            return C(n, k) / 3 + C(n - 1, k - 1) / 3 - C(n - k - 1, k) / 3 - Rational(2 * (k - 2), 3)
                - Rational(3, 4);
        }
        if (k == 3) {
            return Rational(60);
        }
        if (k == 4) {
            return Rational(505);
        }
        return C(n, k) / 3 + C(n - 1, k - 1) / 6 + C(n - 1, k - 1) / (6 * (n - 1)) - C(n - k - 2, k) / 3
            - Rational(2 * (k - 2), 3) - Rational(3, 2);
    }
    throw ParameterError("closed_form_lower_bound: no closed form for s = " + std::to_string(p.s));
}

namespace {

Rational g_product(int n, int k)
{
    Rational g = 1;
    for (int j = 0; j < k; ++j) {
        g *= Rational(1, 2) + (Rational(k) - Rational(j + 1, 2)) / (n - j);
    }
    return g;
}

Rational g_threshold(int k, int s)
{
    if (k >= 5) {
        if (s == 4) {
            return Rational(211, 1000);
        }
        return s == 5 ? Rational(151, 1000) : Rational(119, 1000);
    }
    switch (s) {
    case 4:
        return Rational(224, 1000);
    case 5:
        return Rational(176, 1000);
    case 6:
        return Rational(149, 1000);
    default:
        return Rational(133, 1000);
    }
}

} // namespace

S4BoundReport bound_check_s4(const Params& p)
{
    if (p.s < 4 || p.k < 4) {
        throw ParameterError("bound_check_s4: " + instance(p.n, p.k) + " needs s >= 4, k >= 4");
    }
    S4BoundReport r;
    r.q = S4Params::compute(p);
    r.f = Rational(BigInt(choose(r.q.l * (p.k - 1) + 1, p.k))) / Rational(BigInt(choose(p.n, p.k)));
    r.g = g_product(p.n, p.k);
    r.g_sk = g_product(p.s * p.k, p.k);
    r.threshold = g_threshold(p.k, p.s);
    r.f_le_g = r.f <= r.g;
    r.g_le_g_sk = r.g <= r.g_sk;
    r.g_sk_le_threshold = r.g_sk <= r.threshold;
    r.covers_l = (1 - r.g) * p.s >= r.q.l;
    return r;
}

} // namespace kmf

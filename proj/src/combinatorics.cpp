#include "kmf/combinatorics.hpp"

#include "kmf/error.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace kmf {

std::uint64_t hyperedge_cap()
{
    const char* env = std::getenv("KMF_CAP");
    if (env == nullptr || *env == '\0') {
        return kDefaultHyperedgeCap;
    }
    std::uint64_t value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value == 0) {
        return kDefaultHyperedgeCap;
    }
    return value;
}

LabelSet::LabelSet(std::initializer_list<int> labels)
    : LabelSet(from_labels(std::span<const int>(labels.begin(), labels.size())))
{
}

LabelSet LabelSet::from_labels(std::span<const int> labels)
{
    Mask bits = 0;
    for (int v : labels) {
        if (v < 1 || v > kMaxLabels) {
            throw ParameterError("label " + std::to_string(v) + " outside [1, 64]");
        }
        const Mask bit = Mask{1} << (v - 1);
        if ((bits & bit) != 0) {
            throw ParameterError("label " + std::to_string(v) + " repeated");
        }
        bits |= bit;
    }
    return LabelSet(bits);
}

LabelSet LabelSet::with(int label) const
{
    if (label < 1 || label > kMaxLabels) {
        throw ParameterError("label " + std::to_string(label) + " outside [1, 64]");
    }
    return LabelSet(bits_ | (Mask{1} << (label - 1)));
}

LabelSet LabelSet::without(int label) const
{
    if (label < 1 || label > kMaxLabels) {
        return *this;
    }
    return LabelSet(bits_ & ~(Mask{1} << (label - 1)));
}

std::vector<int> LabelSet::labels() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Mask rest = bits_; rest != 0; rest &= rest - 1) {
        out.push_back(std::countr_zero(rest) + 1);
    }
    return out;
}

std::string LabelSet::to_string() const
{
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (int v : labels()) {
        if (!first) {
            os << ',';
        }
        os << v;
        first = false;
    }
    os << ']';
    return os.str();
}

Params Params::make(int n, int k)
{
    if (k < 3) {
        throw OutOfScopeError("k = " + std::to_string(k) + " is out of scope (need k >= 3)");
    }
    if (n < 2 * k + 1) {
        throw OutOfScopeError("n = " + std::to_string(n) + " is out of scope (need n >= 2k+1 = "
                              + std::to_string(2 * k + 1) + ")");
    }
    if (n > kMaxLabels) {
        throw OutOfScopeError("n = " + std::to_string(n) + " exceeds the 64-label cap");
    }
    return Params{n, k, n / k, n % k};
}

std::uint64_t binomial(std::uint64_t a, std::uint64_t b)
{
    if (b > a) {
        return 0;
    }
    b = std::min(b, a - b);
    // result_i = C(a - b + i, i), integral at every step.
    __extension__ using Wide = unsigned __int128;
    Wide result = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        result = result * (a - b + i) / i;
        if (result > std::numeric_limits<std::uint64_t>::max()) {
            throw OutOfScopeError("binomial(" + std::to_string(a) + ", " + std::to_string(b)
                                  + ") overflows 64 bits");
        }
    }
    return static_cast<std::uint64_t>(result);
}

Mask interval_mask(int first, int last)
{
    if (first > last) {
        return 0;
    }
    const int width = last - first + 1;
    const Mask ones = width >= 64 ? ~Mask{0} : ((Mask{1} << width) - 1);
    return ones << (first - 1);
}

std::vector<KSet> enumerate_family(int first, int last, int k)
{
    if (first < 1 || last > kMaxLabels) {
        throw ParameterError("interval [" + std::to_string(first) + ", " + std::to_string(last)
                             + "] outside [1, 64]");
    }
    const int width = last - first + 1;
    if (k < 1 || width < k) {
        throw ParameterError("interval [" + std::to_string(first) + ", " + std::to_string(last)
                             + "] has no " + std::to_string(k) + "-subsets");
    }
    const std::uint64_t count = binomial(static_cast<std::uint64_t>(width), static_cast<std::uint64_t>(k));
    std::vector<KSet> out;
    out.reserve(count);
    // Gosper's hack on local bits 0..width-1 walks masks in increasing
    // numeric order, which is colex order.
    Mask v = k >= 64 ? ~Mask{0} : ((Mask{1} << k) - 1);
    for (std::uint64_t n = 0; n < count; ++n) {
        out.emplace_back(v << (first - 1));
        if (n + 1 == count) {
            break;
        }
        const Mask t = v | (v - 1);
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
    return out;
}

std::vector<KSet> family_A(int i, const Params& p)
{
    if (i < 1 || i > p.n - p.k + 1) {
        throw ParameterError("family_A: i = " + std::to_string(i) + " outside [1, "
                             + std::to_string(p.n - p.k + 1) + "]");
    }
    auto tails = enumerate_family(i + 1, p.n, p.k - 1);
    for (auto& x : tails) {
        x = x.with(i);
    }
    return tails;
}

std::vector<KSet> family_C(const Params& p)
{
    auto heads = enumerate_family(1, p.n - 1, p.k - 1);
    for (auto& x : heads) {
        x = x.with(p.n);
    }
    return heads;
}

LabelSet covered_labels(std::span<const KSet> block)
{
    Mask bits = 0;
    for (const auto& x : block) {
        bits |= x.bits();
    }
    return LabelSet(bits);
}

std::pair<std::uint64_t, std::uint64_t> hockey_stick(std::uint64_t a, std::uint64_t b)
{
    if (b > a) {
        throw ParameterError("hockey_stick requires a >= b");
    }
    std::uint64_t sum = 0;
    for (std::uint64_t i = 0; i <= a; ++i) {
        sum += binomial(i, b);
    }
    return {sum, binomial(a + 1, b + 1)};
}

} // namespace kmf

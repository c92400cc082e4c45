#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kmf {

using Mask = std::uint64_t;

/// Largest n a label set can hold: one bit per label in a machine word.
inline constexpr int kMaxLabels = 64;

/// Default cap on the number of hyperedges the partition engine and the
/// builders accept. Overridden at runtime by the KMF_CAP environment variable.
inline constexpr std::uint64_t kDefaultHyperedgeCap = 20000;

/// Effective hyperedge cap: KMF_CAP if set to a positive integer, else the default.
std::uint64_t hyperedge_cap();

/// Set of labels from [1, 64], stored as a bit-set (label v is bit v-1).
///
/// Used both for the k-subsets that are vertices of the complement Kneser
/// graph and for label sets covered by a family. Ordering is colexicographic,
/// which coincides with numeric order of the underlying mask.
class LabelSet {
public:
    constexpr LabelSet() = default;
    constexpr explicit LabelSet(Mask bits) : bits_(bits) {}
    LabelSet(std::initializer_list<int> labels);

    /// Throws ParameterError on labels outside [1, 64] or repeated labels.
    static LabelSet from_labels(std::span<const int> labels);

    constexpr Mask bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int label) const
    {
        return label >= 1 && label <= kMaxLabels && ((bits_ >> (label - 1)) & 1U) != 0;
    }
    /// Smallest label; the set must be nonempty.
    constexpr int min_label() const { return std::countr_zero(bits_) + 1; }
    /// Largest label; the set must be nonempty.
    constexpr int max_label() const { return kMaxLabels - std::countl_zero(bits_); }

    LabelSet with(int label) const;
    LabelSet without(int label) const;

    /// Strictly increasing label list.
    std::vector<int> labels() const;

    /// Canonical text form, e.g. "[1,4,7]".
    std::string to_string() const;

    constexpr LabelSet operator|(LabelSet other) const { return LabelSet(bits_ | other.bits_); }
    constexpr LabelSet operator&(LabelSet other) const { return LabelSet(bits_ & other.bits_); }
    constexpr auto operator<=>(const LabelSet&) const = default;

private:
    Mask bits_ = 0;
};

/// A vertex of the complement Kneser graph / a hyperedge of K_n^k.
using KSet = LabelSet;

/// Ordered list of distinct k-sets: a branch set or a partition class.
using Block = std::vector<KSet>;

/// Validated (n, k) with n = s*k + t, 0 <= t < k.
///
/// Requires k >= 3, 2k + 1 <= n <= 64; anything else raises OutOfScopeError.
struct Params {
    int n = 0;
    int k = 0;
    int s = 0;
    int t = 0;

    static Params make(int n, int k);

    friend bool operator==(const Params&, const Params&) = default;
};

/// Exact C(a, b); zero when b > a. Throws OutOfScopeError when the value
/// does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t a, std::uint64_t b);

/// All k-subsets of the label interval [first, last] in colex order.
/// Throws ParameterError when the interval has fewer than k labels or k < 1.
std::vector<KSet> enumerate_family(int first, int last, int k);

/// k-subsets of [n] whose smallest label is i.
std::vector<KSet> family_A(int i, const Params& p);

/// k-subsets of [n] containing n.
std::vector<KSet> family_C(const Params& p);

/// Edge test of the complement Kneser graph (nonempty intersection).
constexpr bool intersects(KSet a, KSet b) { return (a.bits() & b.bits()) != 0; }

/// Union of the labels of all members.
LabelSet covered_labels(std::span<const KSet> block);

/// (sum_{i=0}^{a} C(i, b), C(a + 1, b + 1)); the two must agree.
std::pair<std::uint64_t, std::uint64_t> hockey_stick(std::uint64_t a, std::uint64_t b);

/// Bit mask of the labels [first, last].
Mask interval_mask(int first, int last);

} // namespace kmf

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace skewpair {

/// 0-based index into the ground set {0, ..., n-1}.
using Label = std::uint32_t;

/// A finite set of labels, stored as a sorted vector without duplicates.
///
/// Sets in this library are small (at most the per-side size cap) while the
/// ground set can be large, so a sorted vector beats a bitmap here.  All
/// operations keep the sorted-unique invariant.
class LabelSet {
public:
    LabelSet() = default;
    LabelSet(std::initializer_list<Label> labels);

    /// Builds a set from arbitrary input; sorts and drops duplicates.
    static LabelSet from_labels(std::vector<Label> labels);

    bool contains(Label e) const;

    /// True iff the two sets share at least one label.
    bool intersects(const LabelSet& other) const;

    bool empty() const { return labels_.empty(); }
    std::size_t size() const { return labels_.size(); }

    /// Largest label; set must be nonempty.
    Label max_label() const { return labels_.back(); }

    void insert(Label e);
    bool erase(Label e);

    /// In-place set union.
    void merge(const LabelSet& other);

    std::span<const Label> labels() const { return labels_; }
    auto begin() const { return labels_.begin(); }
    auto end() const { return labels_.end(); }

    bool operator==(const LabelSet&) const = default;
    auto operator<=>(const LabelSet&) const = default;

private:
    std::vector<Label> labels_;
};

/// One pair of the system; a_set and b_set must be disjoint.
struct SetPair {
    LabelSet a_set;
    LabelSet b_set;

    bool operator==(const SetPair&) const = default;
    auto operator<=>(const SetPair&) const = default;
};

/// An ordered sequence of disjoint set pairs over the ground set {0,...,n-1}.
///
/// Pair order is significant: the skew condition constrains A_i against B_j
/// only for i < j.  The constructor validates every label against n and every
/// pair's disjointness; instances are immutable values afterwards.
class SetPairSystem {
public:
    SetPairSystem() = default;

    /// Throws validation_error naming the first offending pair.
    SetPairSystem(std::vector<SetPair> pairs, Label n);

    std::size_t m() const { return pairs_.size(); }
    Label n() const { return n_; }
    const std::vector<SetPair>& pairs() const { return pairs_; }
    const SetPair& pair(std::size_t i) const { return pairs_[i]; }

    std::size_t max_a_size() const;
    std::size_t max_b_size() const;

    bool operator==(const SetPairSystem&) const = default;

private:
    std::vector<SetPair> pairs_;
    Label n_ = 0;
};

/// Everything the verifier computes in one pass.  `violations` lists every
/// ordered pair (i, j), i != j and 0-based, with A_i and B_j disjoint; both
/// predicates are derivable from it.
struct SystemReport {
    bool is_skew = true;
    bool is_symmetric_bollobas = true;
    std::vector<std::pair<std::size_t, std::size_t>> violations;
    std::size_t m = 0;
    std::size_t union_a_size = 0;
    std::size_t union_b_size = 0;
    std::size_t ground_size = 0;
    std::size_t max_a_size = 0;
    std::size_t max_b_size = 0;
};

/// True iff A_i intersects B_j for all i < j.
bool is_skew_bollobas(const SetPairSystem& system);

/// True iff A_i intersects B_j for all i != j (the symmetric condition).
bool is_bollobas(const SetPairSystem& system);

SystemReport report(const SetPairSystem& system);

/// Reverses pair order and swaps A/B within each pair.  An involution;
/// preserves the skew predicate and swaps the two union sizes.
SetPairSystem dual(const SetPairSystem& system);

/// Grows every A_i to exactly `a` labels and every B_i to exactly `b` by
/// appending fresh labels (>= the input's n, ascending, A-side of each pair
/// first, pairs in order).  Input must be skew; caps must cover the current
/// maximum sizes.
SetPairSystem pad(const SetPairSystem& system, std::size_t a, std::size_t b);

/// Relabels to 0..k-1 in order of first occurrence (pairs in order, A-set
/// before B-set, ascending within a set); n becomes the count of used labels.
SetPairSystem normalize(const SetPairSystem& system);

/// Concatenates s1's pairs then s2's with s2's labels shifted by s1.n().
/// Makes no skewness claim about the result.
SetPairSystem disjoint_union_relabel(const SetPairSystem& s1, const SetPairSystem& s2);

} // namespace skewpair

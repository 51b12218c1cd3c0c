#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "skewpair/errors.hpp"
#include "skewpair/system.hpp"

namespace skewpair::peel {

/// One level of the peeling decomposition.
///
/// m_set is the level's kept index set M_j (0-based original pair indices,
/// ascending).  removed maps each kept index to the private element deleted
/// from its A-set at this level.  b_family holds the level's B-sets after any
/// repairs; the repairs that produced it from the previous level's B-sets are
/// listed in order of application.
struct PeelLevel {
    struct Repair {
        std::size_t v = 0;
        Label old_element = 0;
        Label new_element = 0;

        bool operator==(const Repair&) const = default;
    };

    std::size_t j = 0;  // 1-based level index
    std::vector<std::size_t> m_set;
    std::map<std::size_t, Label> removed;
    std::map<std::size_t, LabelSet> b_family;
    std::vector<Repair> repairs;

    bool operator==(const PeelLevel&) const = default;
};

/// The full decomposition of an exact-size skew system: one PeelLevel per
/// j = 1..a.  On a valid certificate the level index sets are nested, each
/// level's reconstructed sub-system is skew, |M_j| <= C(a-j+1+b, a-j+1), and
/// the level sizes sum to |union of A_i|.
struct PeelCertificate {
    SetPairSystem input;
    std::size_t a = 0;
    std::size_t b = 0;
    std::vector<PeelLevel> levels;

    bool operator==(const PeelCertificate&) const = default;
};

/// Thrown when the B-repair loop exceeds its iteration cap (or reaches a
/// state the proof strategy cannot repair); carries everything built so far.
class repair_failure_error : public error {
public:
    repair_failure_error(const std::string& what, PeelCertificate partial)
        : error(what), partial_(std::move(partial)) {}

    const PeelCertificate& partial() const { return partial_; }

private:
    PeelCertificate partial_;
};

/// Inclusion-minimal subset of `indices` whose sets cover the same union.
///
/// Scans indices in descending order and drops any index whose set is covered
/// by the union of the sets still kept; every survivor therefore owns an
/// element no other survivor has.  `sets` is indexed by pair index and must
/// cover every index in `indices`.  Returns kept indices in ascending order.
std::vector<std::size_t> minimal_union_subset(std::span<const std::size_t> indices,
                                              std::span<const LabelSet> sets);

/// Runs the peeling decomposition.  Requires a skew system with every
/// |A_i| == a and |B_i| == b exactly (pad first if needed); throws
/// precondition_error otherwise and repair_failure_error if the B-repair
/// loop trips its cap of |M_j|^2 * b replacements per level.
PeelCertificate peel(const SetPairSystem& system, std::size_t a, std::size_t b);

/// Result of re-checking a certificate from scratch.
struct CertReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::size_t sum_m_sizes = 0;
    std::size_t union_a_size = 0;
};

/// Recomputes every certificate invariant independently of how the
/// certificate was produced: input validity and exact sizes, nesting of the
/// M_j, the private-element property of each removed map, distinctness of
/// removed elements, replay of the recorded repairs, skewness of every
/// reconstructed level system, the per-level bound |M_j| <= C(a-j+1+b, a-j+1),
/// the sum identity over |M_j|, and the binomial identity
/// sum_k C(k+b, k) - 1 = C(a+b+1, a) - 1 backing the bound table.
CertReport verify_certificate(const PeelCertificate& cert);

} // namespace skewpair::peel

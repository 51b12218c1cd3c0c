#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "skewpair/system.hpp"

namespace skewpair::search {

enum class Mode { skew, symmetric };

enum class Objective { union_a, union_b, ground, pairs };

/// An exact-optimization instance over ordered set-pair systems on {0,...,n-1}
/// with |A_i| <= a and |B_i| <= b.  Requires n <= 64 (sets are single-word
/// bit masks).  break_symmetry is a debug switch: when off, the search walks
/// raw label assignments instead of only normalized prefixes; optima are
/// unchanged, runtime is much worse.
struct SearchProblem {
    unsigned a = 0;
    unsigned b = 0;
    unsigned n = 0;
    Mode mode = Mode::skew;
    Objective objective = Objective::union_a;
    std::optional<std::uint64_t> node_limit;
    bool break_symmetry = true;
    unsigned threads = 1;
};

struct SearchResult {
    std::size_t optimum = 0;
    SetPairSystem witness;  // normalized; attains optimum under the mode's predicate
    std::uint64_t nodes_explored = 0;
    bool proven_optimal = true;  // false iff node_limit tripped
};

/// Depth-first maximization of the objective.  The result is deterministic
/// and independent of the thread count: first-level subtrees are searched
/// with independent bounds and merged in candidate order, so the witness is
/// always the first optimum in DFS order.  (Under a node_limit with
/// threads > 1 the partial best-so-far may vary between runs.)
SearchResult max_objective(const SearchProblem& problem);

struct EnumerateResult {
    std::uint64_t visit_count = 0;
    bool complete = true;  // false iff node_limit tripped
};

using SystemVisitor = std::function<void(const SetPairSystem&)>;

/// Visits every normalized system satisfying the mode's predicate and size
/// caps, each exactly once, in DFS order (the empty system first).  Always
/// single-threaded.  Ignores `objective`; honors node_limit as a visit cap.
EnumerateResult enumerate_systems(const SearchProblem& problem, const SystemVisitor& visitor);

} // namespace skewpair::search

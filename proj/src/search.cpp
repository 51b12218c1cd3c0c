#include "skewpair/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "skewpair/bounds.hpp"
#include "skewpair/errors.hpp"

namespace skewpair::search {

namespace {

using Mask = std::uint64_t;

Mask low_bits(unsigned count) {
    return count >= 64 ? ~Mask{0} : (Mask{1} << count) - 1;
}

// Lexicographic order on the ascending label sequences the masks encode.
bool label_lex_less(Mask x, Mask y) {
    while (x != 0 && y != 0) {
        const unsigned lx = static_cast<unsigned>(std::countr_zero(x));
        const unsigned ly = static_cast<unsigned>(std::countr_zero(y));
        if (lx != ly) return lx < ly;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

struct Candidate {
    Mask a_mask = 0;
    Mask b_mask = 0;
    unsigned new_used = 0;  // used-label count after the append (symmetry-broken runs)
};

bool candidate_less(const Candidate& lhs, const Candidate& rhs) {
    if (lhs.a_mask != rhs.a_mask) return label_lex_less(lhs.a_mask, rhs.a_mask);
    return label_lex_less(lhs.b_mask, rhs.b_mask);
}

void gen_combos(unsigned universe, unsigned k, unsigned start, Mask cur, std::vector<Mask>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (unsigned e = start; e + k <= universe; ++e)
        gen_combos(universe, k - 1, e + 1, cur | (Mask{1} << e), out);
}

std::vector<Mask> subsets_up_to(unsigned universe, unsigned max_size) {
    std::vector<Mask> out;
    for (unsigned k = 0; k <= std::min(universe, max_size); ++k)
        gen_combos(universe, k, 0, 0, out);
    return out;
}

// Candidate pairs appendable when `used` labels are already introduced.
// Fresh labels must be the consecutive block starting at `used`, A-side
// first, so the DFS only ever builds normalized prefixes.
std::vector<Candidate> symmetry_broken_candidates(const SearchProblem& prob, unsigned used) {
    std::vector<Candidate> out;
    for (unsigned fa = 0; fa <= prob.a && used + fa <= prob.n; ++fa) {
        const Mask fresh_a = low_bits(fa) << used;
        for (const Mask old_a : subsets_up_to(used, prob.a - fa)) {
            const Mask a_mask = old_a | fresh_a;
            for (unsigned fb = 0; fb <= prob.b && used + fa + fb <= prob.n; ++fb) {
                const Mask fresh_b = low_bits(fb) << (used + fa);
                for (const Mask old_b : subsets_up_to(used, prob.b - fb)) {
                    if ((old_b & old_a) != 0) continue;
                    out.push_back({a_mask, old_b | fresh_b, used + fa + fb});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), candidate_less);
    return out;
}

std::vector<Candidate> raw_candidates(const SearchProblem& prob) {
    std::vector<Candidate> out;
    for (const Mask a_mask : subsets_up_to(prob.n, prob.a))
        for (const Mask b_mask : subsets_up_to(prob.n, prob.b))
            if ((a_mask & b_mask) == 0) out.push_back({a_mask, b_mask, 0});
    std::sort(out.begin(), out.end(), candidate_less);
    return out;
}

// Lazily materialized per-used-count candidate lists (shared across workers).
class CandidateTable {
public:
    explicit CandidateTable(const SearchProblem& prob) : prob_(prob) {}

    const std::vector<Candidate>& at(unsigned used) {
        const unsigned key = prob_.break_symmetry ? used : 0;
        std::lock_guard lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) {
            it = table_.emplace(key, prob_.break_symmetry
                                         ? symmetry_broken_candidates(prob_, used)
                                         : raw_candidates(prob_))
                     .first;
        }
        return it->second;
    }

private:
    SearchProblem prob_;
    std::mutex mutex_;
    std::map<unsigned, std::vector<Candidate>> table_;
};

struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    std::optional<std::uint64_t> limit;

    // False once the visit budget is exhausted; callers stop expanding.
    bool count_node() {
        if (limit && nodes.load(std::memory_order_relaxed) >= *limit) return false;
        nodes.fetch_add(1, std::memory_order_relaxed);
        return true;
    }
};

std::uint64_t theorem_depth_cap(const SearchProblem& prob) {
    const bounds::BigInt cap = bounds::binomial(prob.a + prob.b, prob.a);
    if (cap > std::numeric_limits<std::int64_t>::max())
        return std::numeric_limits<std::uint64_t>::max() / 2;
    return cap.convert_to<std::uint64_t>();
}

SetPairSystem masks_to_system(std::span<const std::pair<Mask, Mask>> stack, Label n) {
    std::vector<SetPair> pairs;
    pairs.reserve(stack.size());
    for (const auto& [am, bm] : stack) {
        std::vector<Label> a_labels, b_labels;
        for (Mask m = am; m != 0; m &= m - 1)
            a_labels.push_back(static_cast<Label>(std::countr_zero(m)));
        for (Mask m = bm; m != 0; m &= m - 1)
            b_labels.push_back(static_cast<Label>(std::countr_zero(m)));
        pairs.push_back(SetPair{LabelSet::from_labels(std::move(a_labels)),
                                LabelSet::from_labels(std::move(b_labels))});
    }
    return SetPairSystem(std::move(pairs), n);
}

struct SubtreeOutcome {
    std::size_t value = 0;
    bool has_witness = false;
    std::vector<std::pair<Mask, Mask>> witness;
    bool complete = true;
};

class Dfs {
public:
    Dfs(const SearchProblem& prob, CandidateTable& table, Shared& shared)
        : prob_(prob), table_(table), shared_(shared), max_depth_(theorem_depth_cap(prob)) {}

    // Searches the subtree rooted at `first` appended to the empty system.
    // Uses only its own best value so the outcome (including node counts) is
    // identical whether subtrees run sequentially or on worker threads.
    SubtreeOutcome search_subtree(const Candidate& first) {
        out_ = SubtreeOutcome{};
        if (!push_feasible(first)) {
            out_.complete = false;  // only the node budget can reject the first pair
            return out_;
        }
        descend_max();
        pop();
        return out_;
    }

    bool enumerate(const SystemVisitor& visitor) {
        if (!shared_.count_node()) return false;
        visit(visitor);
        return descend_enum(visitor);
    }

private:
    std::size_t value() const {
        switch (prob_.objective) {
            case Objective::pairs: return stack_.size();
            case Objective::union_a: return static_cast<std::size_t>(std::popcount(union_a_));
            case Objective::union_b: return static_cast<std::size_t>(std::popcount(union_b_));
            case Objective::ground: return static_cast<std::size_t>(std::popcount(used_mask_));
        }
        return 0;
    }

    // Admissible upper bound over the whole subtree below the current node.
    std::size_t bound(std::size_t current) const {
        const std::uint64_t remaining = max_depth_ - stack_.size();
        std::size_t per_pair = 0;
        switch (prob_.objective) {
            case Objective::pairs: per_pair = 1; break;
            case Objective::union_a: per_pair = prob_.a; break;
            case Objective::union_b: per_pair = prob_.b; break;
            case Objective::ground: per_pair = prob_.a + prob_.b; break;
        }
        std::size_t ub;
        if (per_pair != 0 && remaining > (std::numeric_limits<std::size_t>::max() - current) / per_pair)
            ub = std::numeric_limits<std::size_t>::max();
        else
            ub = current + static_cast<std::size_t>(remaining) * per_pair;
        if (prob_.objective != Objective::pairs) ub = std::min<std::size_t>(ub, prob_.n);
        return ub;
    }

    bool feasible(const Candidate& c) const {
        for (const auto& [am, bm] : stack_) {
            if ((am & c.b_mask) == 0) return false;
            if (prob_.mode == Mode::symmetric && (c.a_mask & bm) == 0) return false;
        }
        return true;
    }

    void push(const Candidate& c) {
        saved_.push_back({union_a_, union_b_, used_mask_, used_});
        stack_.emplace_back(c.a_mask, c.b_mask);
        union_a_ |= c.a_mask;
        union_b_ |= c.b_mask;
        used_mask_ |= c.a_mask | c.b_mask;
        used_ = prob_.break_symmetry ? c.new_used : prob_.n;
    }

    bool push_feasible(const Candidate& c) {
        if (!feasible(c) || !shared_.count_node()) return false;
        push(c);
        return true;
    }

    void pop() {
        const Saved& s = saved_.back();
        union_a_ = s.union_a;
        union_b_ = s.union_b;
        used_mask_ = s.used_mask;
        used_ = s.used;
        saved_.pop_back();
        stack_.pop_back();
    }

    void record(std::size_t v) {
        if (!out_.has_witness || v > out_.value) {
            out_.value = v;
            out_.witness = stack_;
            out_.has_witness = true;
        }
    }

    void descend_max() {
        const std::size_t v = value();
        record(v);
        if (stack_.size() >= max_depth_) return;  // Frankl-Kalai depth bound
        if (bound(v) <= out_.value) return;
        for (const Candidate& c : table_.at(used_)) {
            if (!feasible(c)) continue;
            if (!shared_.count_node()) {
                out_.complete = false;
                return;
            }
            push(c);
            descend_max();
            pop();
            if (!out_.complete) return;
        }
    }

    bool descend_enum(const SystemVisitor& visitor) {
        for (const Candidate& c : table_.at(used_)) {
            if (!feasible(c)) continue;
            if (!shared_.count_node()) return false;
            push(c);
            visit(visitor);
            const bool complete = descend_enum(visitor);
            pop();
            if (!complete) return false;
        }
        return true;
    }

    void visit(const SystemVisitor& visitor) {
        if (!visitor) return;
        const Label n = prob_.break_symmetry ? static_cast<Label>(used_) : prob_.n;
        visitor(masks_to_system(stack_, n));
    }

    struct Saved {
        Mask union_a;
        Mask union_b;
        Mask used_mask;
        unsigned used;
    };

    const SearchProblem& prob_;
    CandidateTable& table_;
    Shared& shared_;
    const std::uint64_t max_depth_;

    std::vector<std::pair<Mask, Mask>> stack_;
    std::vector<Saved> saved_;
    Mask union_a_ = 0;
    Mask union_b_ = 0;
    Mask used_mask_ = 0;
    unsigned used_ = 0;

    SubtreeOutcome out_;
};

void validate(const SearchProblem& prob) {
    if (prob.n > 64) {
        throw precondition_error("search requires n <= 64 (sets are single-word bit masks)");
    }
}

} // namespace

SearchResult max_objective(const SearchProblem& problem) {
    validate(problem);
    CandidateTable table(problem);
    Shared shared;
    shared.limit = problem.node_limit;

    SearchResult result;
    result.optimum = 0;
    result.witness = SetPairSystem();  // the root: empty system, value 0
    result.proven_optimal = shared.count_node();

    const std::vector<Candidate> roots = table.at(0);
    std::vector<SubtreeOutcome> outcomes(roots.size());

    const unsigned workers =
        std::max(1u, std::min<unsigned>(problem.threads, static_cast<unsigned>(roots.size())));
    if (workers <= 1 || !result.proven_optimal) {
        Dfs dfs(problem, table, shared);
        for (std::size_t i = 0; i < roots.size(); ++i)
            outcomes[i] = dfs.search_subtree(roots[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                Dfs dfs(problem, table, shared);
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= roots.size()) break;
                    outcomes[i] = dfs.search_subtree(roots[i]);
                }
            });
        }
        for (std::thread& t : pool) t.join();
    }

    std::vector<std::pair<Mask, Mask>> best_stack;
    for (const SubtreeOutcome& out : outcomes) {
        if (out.has_witness && out.value > result.optimum) {
            result.optimum = out.value;
            best_stack = out.witness;
        }
        result.proven_optimal = result.proven_optimal && out.complete;
    }
    if (!best_stack.empty()) {
        result.witness = normalize(masks_to_system(best_stack, problem.n));
    }
    result.nodes_explored = shared.nodes.load();
    return result;
}

EnumerateResult enumerate_systems(const SearchProblem& problem, const SystemVisitor& visitor) {
    validate(problem);
    CandidateTable table(problem);
    Shared shared;
    shared.limit = problem.node_limit;

    Dfs dfs(problem, table, shared);
    EnumerateResult result;
    result.complete = dfs.enumerate(visitor);
    result.visit_count = shared.nodes.load();
    return result;
}

} // namespace skewpair::search

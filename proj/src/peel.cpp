#include "skewpair/peel.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "skewpair/bounds.hpp"

namespace skewpair::peel {

namespace {

bool subset_of(const LabelSet& s, const LabelSet& of) {
    return std::all_of(s.begin(), s.end(), [&](Label e) { return of.contains(e); });
}

LabelSet union_over(std::span<const std::size_t> indices, std::span<const LabelSet> sets,
                    std::optional<std::size_t> skip = std::nullopt) {
    LabelSet u;
    for (std::size_t i : indices)
        if (!skip || i != *skip) u.merge(sets[i]);
    return u;
}

} // namespace

std::vector<std::size_t> minimal_union_subset(std::span<const std::size_t> indices,
                                              std::span<const LabelSet> sets) {
    std::vector<std::size_t> kept(indices.begin(), indices.end());
    std::sort(kept.begin(), kept.end());

    std::vector<std::size_t> scan(kept.rbegin(), kept.rend());
    for (std::size_t i : scan) {
        LabelSet others = union_over(kept, sets, i);
        if (subset_of(sets[i], others)) {
            kept.erase(std::find(kept.begin(), kept.end(), i));
        }
    }
    return kept;
}

namespace {

// Smallest element of sets[i] owned by no other kept index; exists whenever
// the kept set is inclusion-minimal.
std::optional<Label> private_element(std::size_t i, std::span<const std::size_t> kept,
                                     std::span<const LabelSet> sets) {
    for (Label e : sets[i]) {
        bool owned_elsewhere = false;
        for (std::size_t l : kept) {
            if (l != i && sets[l].contains(e)) {
                owned_elsewhere = true;
                break;
            }
        }
        if (!owned_elsewhere) return e;
    }
    return std::nullopt;
}

} // namespace

PeelCertificate peel(const SetPairSystem& system, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < system.m(); ++i) {
        const SetPair& p = system.pair(i);
        if (p.a_set.size() != a || p.b_set.size() != b) {
            std::ostringstream msg;
            msg << "peel requires exact sizes |A_i| = " << a << " and |B_i| = " << b
                << ", but pair " << i + 1 << " has (" << p.a_set.size() << ","
                << p.b_set.size() << ")";
            throw precondition_error(msg.str());
        }
    }
    if (!is_skew_bollobas(system)) {
        throw precondition_error("peel requires a skew Bollobas system");
    }

    PeelCertificate cert;
    cert.input = system;
    cert.a = a;
    cert.b = b;

    std::vector<LabelSet> a_sets, b_sets;
    a_sets.reserve(system.m());
    b_sets.reserve(system.m());
    for (const SetPair& p : system.pairs()) {
        a_sets.push_back(p.a_set);
        b_sets.push_back(p.b_set);
    }
    std::vector<std::size_t> kept(system.m());
    std::iota(kept.begin(), kept.end(), std::size_t{0});
    std::map<std::size_t, Label> prev_removed;

    for (std::size_t j = 1; j <= a; ++j) {
        std::vector<std::size_t> level_set = minimal_union_subset(kept, a_sets);

        std::map<std::size_t, Label> removed;
        for (std::size_t i : level_set) {
            auto e = private_element(i, level_set, a_sets);
            if (!e) {
                // unreachable: minimal_union_subset certifies the property
                throw repair_failure_error("internal: kept index " + std::to_string(i + 1) +
                                               " has no private element at level " +
                                               std::to_string(j),
                                           cert);
            }
            removed[i] = *e;
        }

        // From level 2 on, the current B-sets may no longer make the level's
        // pairs skew once the previous level's private elements are gone from
        // the A-sets.  Repair: the blocked intersection must be exactly the
        // element removed last level, so swap it for this level's private
        // element (present in the A-set, absent from both sets of pair v).
        std::vector<PeelLevel::Repair> repairs;
        if (j >= 2) {
            const std::size_t cap = level_set.size() * level_set.size() * b;
            for (;;) {
                std::optional<std::pair<std::size_t, std::size_t>> violation;
                for (std::size_t ui = 0; ui < level_set.size() && !violation; ++ui) {
                    for (std::size_t vi = ui + 1; vi < level_set.size(); ++vi) {
                        const std::size_t u = level_set[ui], v = level_set[vi];
                        if (!a_sets[u].intersects(b_sets[v])) {
                            violation = {u, v};
                            break;
                        }
                    }
                }
                if (!violation) break;
                if (repairs.size() >= cap) {
                    std::ostringstream msg;
                    msg << "B-repair loop at level " << j << " exceeded its cap of " << cap
                        << " replacements";
                    throw repair_failure_error(msg.str(), cert);
                }
                const auto [u, v] = *violation;
                const Label old_e = prev_removed.at(u);
                const Label new_e = removed.at(u);
                if (!b_sets[v].contains(old_e) || b_sets[v].contains(new_e) ||
                    a_sets[v].contains(new_e)) {
                    std::ostringstream msg;
                    msg << "B-repair at level " << j << " cannot fix pair (" << u + 1 << ","
                        << v + 1 << ")";
                    throw repair_failure_error(msg.str(), cert);
                }
                b_sets[v].erase(old_e);
                b_sets[v].insert(new_e);
                repairs.push_back({v, old_e, new_e});
            }
        }

        PeelLevel level;
        level.j = j;
        level.m_set = level_set;
        level.removed = removed;
        for (std::size_t i : level_set) level.b_family[i] = b_sets[i];
        level.repairs = std::move(repairs);
        cert.levels.push_back(std::move(level));

        for (std::size_t i : level_set) a_sets[i].erase(removed.at(i));
        kept = std::move(level_set);
        prev_removed = std::move(removed);
    }
    return cert;
}

namespace {

std::string level_tag(std::size_t j) { return "level " + std::to_string(j) + ": "; }

} // namespace

CertReport verify_certificate(const PeelCertificate& cert) {
    CertReport rep;
    auto fail = [&rep](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };

    const std::size_t m = cert.input.m();
    for (std::size_t i = 0; i < m; ++i) {
        const SetPair& p = cert.input.pair(i);
        if (p.a_set.size() != cert.a)
            fail("input pair " + std::to_string(i + 1) + ": |A| != a");
        if (p.b_set.size() != cert.b)
            fail("input pair " + std::to_string(i + 1) + ": |B| != b");
    }
    if (!is_skew_bollobas(cert.input)) fail("input system is not skew");
    if (cert.levels.size() != cert.a)
        fail("certificate has " + std::to_string(cert.levels.size()) + " levels, expected " +
             std::to_string(cert.a));

    std::vector<LabelSet> a_sets, b_sets;
    for (const SetPair& p : cert.input.pairs()) {
        a_sets.push_back(p.a_set);
        b_sets.push_back(p.b_set);
    }
    std::vector<std::size_t> prev(m);
    std::iota(prev.begin(), prev.end(), std::size_t{0});

    rep.union_a_size = union_over(prev, a_sets).size();
    rep.sum_m_sizes = 0;

    for (std::size_t li = 0; li < cert.levels.size(); ++li) {
        const PeelLevel& lv = cert.levels[li];
        const std::size_t j = li + 1;
        if (lv.j != j) {
            fail(level_tag(j) + "level records index " + std::to_string(lv.j));
        }

        bool structure_ok = std::is_sorted(lv.m_set.begin(), lv.m_set.end()) &&
                            std::adjacent_find(lv.m_set.begin(), lv.m_set.end()) == lv.m_set.end();
        for (std::size_t i : lv.m_set) structure_ok = structure_ok && i < m;
        if (!structure_ok) {
            fail(level_tag(j) + "index set is not a sorted set of valid pair indices");
            break;
        }
        if (!std::includes(prev.begin(), prev.end(), lv.m_set.begin(), lv.m_set.end())) {
            fail(level_tag(j) + "index set is not contained in the previous level's");
        }
        rep.sum_m_sizes += lv.m_set.size();

        // M_j must keep the union of the A-sets it was chosen from.
        if (union_over(lv.m_set, a_sets) != union_over(prev, a_sets)) {
            fail(level_tag(j) + "index set does not preserve the union of A-sets");
        }

        // Replay this level's repairs onto the running B-state.
        if (j == 1 && !lv.repairs.empty()) fail(level_tag(j) + "first level cannot have repairs");
        for (const PeelLevel::Repair& r : lv.repairs) {
            if (r.v >= m || !std::binary_search(lv.m_set.begin(), lv.m_set.end(), r.v)) {
                fail(level_tag(j) + "repair targets index " + std::to_string(r.v + 1) +
                     " outside the level's index set");
                continue;
            }
            if (!b_sets[r.v].erase(r.old_element)) {
                fail(level_tag(j) + "repair removes element " + std::to_string(r.old_element) +
                     " absent from B_" + std::to_string(r.v + 1));
            }
            b_sets[r.v].insert(r.new_element);
        }

        // The recorded B-family must be exactly the replayed state.
        if (lv.b_family.size() != lv.m_set.size()) {
            fail(level_tag(j) + "B-family does not cover the index set");
        }
        for (std::size_t i : lv.m_set) {
            auto it = lv.b_family.find(i);
            if (it == lv.b_family.end()) {
                fail(level_tag(j) + "B-family misses index " + std::to_string(i + 1));
            } else if (it->second != b_sets[i]) {
                fail(level_tag(j) + "B_" + std::to_string(i + 1) +
                     " does not match the replayed repairs");
            }
        }

        // Private-element property of the removed map.
        if (lv.removed.size() != lv.m_set.size())
            fail(level_tag(j) + "removed map does not cover the index set");
        LabelSet seen;
        for (std::size_t i : lv.m_set) {
            auto it = lv.removed.find(i);
            if (it == lv.removed.end()) {
                fail(level_tag(j) + "no removed element for index " + std::to_string(i + 1));
                continue;
            }
            const Label x = it->second;
            if (!a_sets[i].contains(x)) {
                fail(level_tag(j) + "removed element " + std::to_string(x) + " is not in A_" +
                     std::to_string(i + 1));
                continue;
            }
            for (std::size_t l : lv.m_set) {
                if (l != i && a_sets[l].contains(x)) {
                    fail(level_tag(j) + "removed element " + std::to_string(x) + " of pair " +
                         std::to_string(i + 1) + " is not private (also in A_" +
                         std::to_string(l + 1) + ")");
                }
            }
            if (seen.contains(x)) {
                fail(level_tag(j) + "removed element " + std::to_string(x) + " repeats");
            }
            seen.insert(x);
        }

        // The level's sub-system, in original pair order, must be skew.
        std::vector<SetPair> sub;
        for (std::size_t i : lv.m_set) {
            auto it = lv.b_family.find(i);
            sub.push_back(SetPair{a_sets[i], it == lv.b_family.end() ? LabelSet{} : it->second});
        }
        try {
            SetPairSystem level_system(std::move(sub), cert.input.n());
            SystemReport sys = report(level_system);
            if (!sys.is_skew) {
                for (auto [u, v] : sys.violations) {
                    if (u < v) {
                        fail(level_tag(j) + "sub-system is not skew: pair (" +
                             std::to_string(lv.m_set[u] + 1) + "," +
                             std::to_string(lv.m_set[v] + 1) + ")");
                    }
                }
            }
        } catch (const validation_error& e) {
            fail(level_tag(j) + "sub-system invalid: " + e.what());
        }

        // |M_j| <= C(a-j+1+b, a-j+1)
        const bounds::BigInt cap =
            bounds::binomial(static_cast<long long>(cert.a - j + 1 + cert.b),
                             static_cast<long long>(cert.a - j + 1));
        if (bounds::BigInt(lv.m_set.size()) > cap) {
            std::ostringstream msg;
            msg << level_tag(j) << "|M_j| = " << lv.m_set.size() << " exceeds the bound " << cap;
            fail(msg.str());
        }

        for (std::size_t i : lv.m_set) {
            auto it = lv.removed.find(i);
            if (it != lv.removed.end()) a_sets[i].erase(it->second);
        }
        prev = lv.m_set;
    }

    if (rep.sum_m_sizes != rep.union_a_size) {
        fail("sum of |M_j| = " + std::to_string(rep.sum_m_sizes) +
             " does not equal |union of A_i| = " + std::to_string(rep.union_a_size));
    }

    // Consistency of the telescoped per-level bounds with the bound table.
    bounds::BigInt level_sum = 0;
    for (std::size_t k = 0; k <= cert.a; ++k)
        level_sum += bounds::binomial(static_cast<long long>(k + cert.b),
                                      static_cast<long long>(k));
    const bounds::BigInt s1 =
        bounds::binomial(static_cast<long long>(cert.a + cert.b + 1),
                         static_cast<long long>(cert.a)) - 1;
    if (level_sum - 1 != s1) {
        fail("binomial identity sum_k C(k+b, k) - 1 != C(a+b+1, a) - 1");
    }

    return rep;
}

} // namespace skewpair::peel

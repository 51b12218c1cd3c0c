#include "skewpair/system.hpp"

#include <algorithm>
#include <string>

#include "skewpair/errors.hpp"

namespace skewpair {

LabelSet::LabelSet(std::initializer_list<Label> labels)
    : labels_(labels) {
    std::sort(labels_.begin(), labels_.end());
    labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

LabelSet LabelSet::from_labels(std::vector<Label> labels) {
    LabelSet s;
    s.labels_ = std::move(labels);
    std::sort(s.labels_.begin(), s.labels_.end());
    s.labels_.erase(std::unique(s.labels_.begin(), s.labels_.end()), s.labels_.end());
    return s;
}

bool LabelSet::contains(Label e) const {
    return std::binary_search(labels_.begin(), labels_.end(), e);
}

bool LabelSet::intersects(const LabelSet& other) const {
    auto i = labels_.begin();
    auto j = other.labels_.begin();
    while (i != labels_.end() && j != other.labels_.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i; else ++j;
    }
    return false;
}

void LabelSet::insert(Label e) {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), e);
    if (it == labels_.end() || *it != e) labels_.insert(it, e);
}

bool LabelSet::erase(Label e) {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), e);
    if (it == labels_.end() || *it != e) return false;
    labels_.erase(it);
    return true;
}

void LabelSet::merge(const LabelSet& other) {
    std::vector<Label> out;
    out.reserve(labels_.size() + other.labels_.size());
    std::set_union(labels_.begin(), labels_.end(),
                   other.labels_.begin(), other.labels_.end(),
                   std::back_inserter(out));
    labels_ = std::move(out);
}

SetPairSystem::SetPairSystem(std::vector<SetPair> pairs, Label n)
    : pairs_(std::move(pairs)), n_(n) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        const SetPair& p = pairs_[i];
        for (const LabelSet* s : {&p.a_set, &p.b_set}) {
            if (!s->empty() && s->max_label() >= n_) {
                throw validation_error("pair " + std::to_string(i + 1) + ": label " +
                                       std::to_string(s->max_label()) +
                                       " outside ground set of size " + std::to_string(n_));
            }
        }
        if (p.a_set.intersects(p.b_set)) {
            throw validation_error("pair " + std::to_string(i + 1) +
                                   ": A and B are not disjoint");
        }
    }
}

std::size_t SetPairSystem::max_a_size() const {
    std::size_t best = 0;
    for (const SetPair& p : pairs_) best = std::max(best, p.a_set.size());
    return best;
}

std::size_t SetPairSystem::max_b_size() const {
    std::size_t best = 0;
    for (const SetPair& p : pairs_) best = std::max(best, p.b_set.size());
    return best;
}

bool is_skew_bollobas(const SetPairSystem& system) {
    const auto& pairs = system.pairs();
    for (std::size_t j = 1; j < pairs.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (!pairs[i].a_set.intersects(pairs[j].b_set)) return false;
    return true;
}

bool is_bollobas(const SetPairSystem& system) {
    const auto& pairs = system.pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = 0; j < pairs.size(); ++j)
            if (i != j && !pairs[i].a_set.intersects(pairs[j].b_set)) return false;
    return true;
}

SystemReport report(const SetPairSystem& system) {
    SystemReport rep;
    const auto& pairs = system.pairs();
    rep.m = pairs.size();
    rep.max_a_size = system.max_a_size();
    rep.max_b_size = system.max_b_size();

    LabelSet union_a, union_b, ground;
    for (const SetPair& p : pairs) {
        union_a.merge(p.a_set);
        union_b.merge(p.b_set);
    }
    ground = union_a;
    ground.merge(union_b);
    rep.union_a_size = union_a.size();
    rep.union_b_size = union_b.size();
    rep.ground_size = ground.size();

    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            if (i == j) continue;
            if (!pairs[i].a_set.intersects(pairs[j].b_set)) {
                rep.violations.emplace_back(i, j);
                rep.is_symmetric_bollobas = false;
                if (i < j) rep.is_skew = false;
            }
        }
    }
    return rep;
}

SetPairSystem dual(const SetPairSystem& system) {
    std::vector<SetPair> out(system.m());
    for (std::size_t i = 0; i < system.m(); ++i) {
        const SetPair& p = system.pair(system.m() - 1 - i);
        out[i] = SetPair{p.b_set, p.a_set};
    }
    return SetPairSystem(std::move(out), system.n());
}

SetPairSystem pad(const SetPairSystem& system, std::size_t a, std::size_t b) {
    if (a < system.max_a_size() || b < system.max_b_size()) {
        throw size_error("pad caps (" + std::to_string(a) + "," + std::to_string(b) +
                         ") below current maximum sizes (" +
                         std::to_string(system.max_a_size()) + "," +
                         std::to_string(system.max_b_size()) + ")");
    }
    if (!is_skew_bollobas(system)) {
        throw precondition_error("pad requires a skew Bollobas system");
    }
    Label next = system.n();
    std::vector<SetPair> out = system.pairs();
    for (SetPair& p : out) {
        while (p.a_set.size() < a) p.a_set.insert(next++);
        while (p.b_set.size() < b) p.b_set.insert(next++);
    }
    return SetPairSystem(std::move(out), next);
}

SetPairSystem normalize(const SetPairSystem& system) {
    constexpr Label kUnmapped = ~Label{0};
    std::vector<Label> map(system.n(), kUnmapped);
    Label next = 0;
    auto relabel = [&](const LabelSet& s) {
        std::vector<Label> out;
        out.reserve(s.size());
        for (Label e : s) {
            if (map[e] == kUnmapped) map[e] = next++;
            out.push_back(map[e]);
        }
        return LabelSet::from_labels(std::move(out));
    };
    std::vector<SetPair> out;
    out.reserve(system.m());
    for (const SetPair& p : system.pairs())
        out.push_back(SetPair{relabel(p.a_set), relabel(p.b_set)});
    return SetPairSystem(std::move(out), next);
}

SetPairSystem disjoint_union_relabel(const SetPairSystem& s1, const SetPairSystem& s2) {
    std::vector<SetPair> out = s1.pairs();
    out.reserve(s1.m() + s2.m());
    const Label shift = s1.n();
    auto shifted = [&](const LabelSet& s) {
        std::vector<Label> labels(s.begin(), s.end());
        for (Label& e : labels) e += shift;
        return LabelSet::from_labels(std::move(labels));
    };
    for (const SetPair& p : s2.pairs())
        out.push_back(SetPair{shifted(p.a_set), shifted(p.b_set)});
    return SetPairSystem(std::move(out), s1.n() + s2.n());
}

} // namespace skewpair

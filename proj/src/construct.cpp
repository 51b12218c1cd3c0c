#include "skewpair/construct.hpp"

#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

#include "skewpair/bounds.hpp"
#include "skewpair/errors.hpp"

namespace skewpair::construct {

namespace {

LabelSet range_set(Label count) {
    std::vector<Label> labels(count);
    std::iota(labels.begin(), labels.end(), Label{0});
    return LabelSet::from_labels(std::move(labels));
}

LabelSet shift_set(const LabelSet& s, Label shift) {
    std::vector<Label> labels(s.begin(), s.end());
    for (Label& e : labels) e += shift;
    return LabelSet::from_labels(std::move(labels));
}

} // namespace

SetPairSystem extremal_system(unsigned a, unsigned b) {
    if (a == 0) return SetPairSystem({SetPair{LabelSet{}, range_set(b)}}, b);
    if (b == 0) return SetPairSystem({SetPair{range_set(a), LabelSet{}}}, a);

    SetPairSystem left = extremal_system(a - 1, b);
    SetPairSystem right = extremal_system(a, b - 1);
    const Label n1 = left.n();
    const Label x = n1 + right.n();

    std::vector<SetPair> out;
    out.reserve(left.m() + right.m());
    for (const SetPair& p : left.pairs()) {
        SetPair q = p;
        q.a_set.insert(x);
        out.push_back(std::move(q));
    }
    for (const SetPair& p : right.pairs()) {
        SetPair q{shift_set(p.a_set, n1), shift_set(p.b_set, n1)};
        q.b_set.insert(x);
        out.push_back(std::move(q));
    }
    return SetPairSystem(std::move(out), x + 1);
}

namespace {

// Returns the node's ground-set size; appends one line per node.
Label trace_node(unsigned a, unsigned b, Label base, unsigned depth, std::ostringstream& out) {
    for (unsigned d = 0; d < depth; ++d) out << "  ";
    if (a == 0 || b == 0) {
        out << "(" << a << "," << b << ") leaf\n";
        return a + b;
    }
    std::ostringstream children;
    const Label n1 = trace_node(a - 1, b, base, depth + 1, children);
    const Label n2 = trace_node(a, b - 1, base + n1, depth + 1, children);
    const Label x = base + n1 + n2;
    out << "(" << a << "," << b << ") x=" << x << "\n" << children.str();
    return n1 + n2 + 1;
}

} // namespace

std::string construction_trace(unsigned a, unsigned b, std::size_t node_limit) {
    const bounds::BigInt nodes = 2 * bounds::binomial(a + b, a) - 1;
    if (nodes > node_limit) {
        std::ostringstream msg;
        msg << "construction tree for (" << a << "," << b << ") has " << nodes
            << " nodes, above the limit of " << node_limit;
        throw size_error(msg.str());
    }
    std::ostringstream out;
    trace_node(a, b, 0, 0, out);
    return out.str();
}

} // namespace skewpair::construct

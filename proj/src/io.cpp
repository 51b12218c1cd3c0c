#include "skewpair/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "skewpair/errors.hpp"

namespace skewpair::io {

namespace {

void render_set(std::ostringstream& out, const LabelSet& s) {
    out << "{";
    bool first = true;
    for (Label e : s) {
        if (!first) out << ",";
        out << e;
        first = false;
    }
    out << "}";
}

void render_pair_line(std::ostringstream& out, std::size_t index, const SetPair& p) {
    out << index + 1 << ": A = ";
    render_set(out, p.a_set);
    out << "; B = ";
    render_set(out, p.b_set);
    out << "\n";
}

// Character-level scanner for one line.
class LineScanner {
public:
    LineScanner(std::string_view text, std::size_t line_no) : text_(text), line_(line_no) {}

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool try_literal(std::string_view lit) {
        skip_ws();
        if (text_.substr(pos_).starts_with(lit)) {
            pos_ += lit.size();
            return true;
        }
        return false;
    }

    void expect_literal(std::string_view lit) {
        if (!try_literal(lit)) fail("expected '" + std::string(lit) + "'");
    }

    unsigned long long parse_uint(std::string_view what) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected " + std::string(what));
        unsigned long long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<unsigned long long>(text_[pos_] - '0');
            if (value > 0xffffffffull) fail(std::string(what) + " out of range");
            ++pos_;
        }
        return value;
    }

    LabelSet parse_set() {
        expect_literal("{");
        std::vector<Label> labels;
        skip_ws();
        if (!try_literal("}")) {
            for (;;) {
                labels.push_back(static_cast<Label>(parse_uint("element")));
                skip_ws();
                if (try_literal("}")) break;
                expect_literal(",");
            }
        }
        if (!std::is_sorted(labels.begin(), labels.end()) ||
            std::adjacent_find(labels.begin(), labels.end()) != labels.end())
            fail("set elements must be strictly ascending");
        return LabelSet::from_labels(std::move(labels));
    }

    void expect_end() {
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected trailing text");
    }

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(line_, msg); }

private:
    std::string_view text_;
    std::size_t line_ = 0;
    std::size_t pos_ = 0;
};

// Non-blank lines of the input, each with its original 1-based number.
struct Lines {
    std::vector<std::pair<std::string_view, std::size_t>> items;
    std::size_t pos = 0;

    explicit Lines(std::string_view text) {
        std::size_t line_no = 1;
        while (!text.empty()) {
            const std::size_t cut = text.find('\n');
            std::string_view line = text.substr(0, cut);
            if (line.ends_with('\r')) line.remove_suffix(1);
            if (line.find_first_not_of(" \t") != std::string_view::npos)
                items.emplace_back(line, line_no);
            if (cut == std::string_view::npos) break;
            text.remove_prefix(cut + 1);
            ++line_no;
        }
    }

    bool done() const { return pos >= items.size(); }

    LineScanner next(std::string_view expectation) {
        if (done()) {
            const std::size_t at = items.empty() ? 1 : items.back().second + 1;
            throw parse_error(at, "unexpected end of input, expected " + std::string(expectation));
        }
        LineScanner scanner(items[pos].first, items[pos].second);
        ++pos;
        return scanner;
    }

    std::string_view peek() const { return done() ? std::string_view{} : items[pos].first; }

    std::size_t line_no() const {
        return done() ? (items.empty() ? 1 : items.back().second + 1) : items[pos].second;
    }
};

SystemDocument parse_system_lines(Lines& lines) {
    LineScanner header = lines.next("system header");
    header.expect_literal("setpairs");
    const auto a_cap = header.parse_uint("cap a");
    const auto b_cap = header.parse_uint("cap b");
    const auto m = header.parse_uint("pair count m");
    const auto n = header.parse_uint("ground size n");
    header.expect_end();

    std::vector<SetPair> pairs;
    pairs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t line_no = lines.line_no();
        LineScanner body = lines.next("pair line");
        const auto index = body.parse_uint("pair index");
        if (index != i + 1)
            throw parse_error(line_no, "expected pair index " + std::to_string(i + 1));
        body.expect_literal(":");
        body.expect_literal("A");
        body.expect_literal("=");
        LabelSet a_set = body.parse_set();
        body.expect_literal(";");
        body.expect_literal("B");
        body.expect_literal("=");
        LabelSet b_set = body.parse_set();
        body.expect_end();

        for (const LabelSet* s : {&a_set, &b_set}) {
            if (!s->empty() && s->max_label() >= n)
                throw parse_error(line_no, "label " + std::to_string(s->max_label()) +
                                               " outside ground set of size " + std::to_string(n));
        }
        if (a_set.intersects(b_set))
            throw parse_error(line_no, "pair " + std::to_string(i + 1) + " is not disjoint");
        if (a_set.size() > a_cap)
            throw parse_error(line_no, "|A| = " + std::to_string(a_set.size()) +
                                           " exceeds declared cap a = " + std::to_string(a_cap));
        if (b_set.size() > b_cap)
            throw parse_error(line_no, "|B| = " + std::to_string(b_set.size()) +
                                           " exceeds declared cap b = " + std::to_string(b_cap));
        pairs.push_back(SetPair{std::move(a_set), std::move(b_set)});
    }

    SystemDocument doc;
    doc.system = SetPairSystem(std::move(pairs), static_cast<Label>(n));
    doc.a_cap = a_cap;
    doc.b_cap = b_cap;
    return doc;
}

} // namespace

std::string render_system(const SetPairSystem& system, std::size_t a_cap, std::size_t b_cap) {
    std::ostringstream out;
    out << "setpairs " << a_cap << " " << b_cap << " " << system.m() << " " << system.n() << "\n";
    for (std::size_t i = 0; i < system.m(); ++i) render_pair_line(out, i, system.pair(i));
    return out.str();
}

SystemDocument parse_system(std::string_view text) {
    Lines lines(text);
    SystemDocument doc = parse_system_lines(lines);
    if (!lines.done()) throw parse_error(lines.line_no(), "unexpected trailing line");
    return doc;
}

std::string render_certificate(const peel::PeelCertificate& cert) {
    std::ostringstream out;
    out << "peel " << cert.a << " " << cert.b << "\n";
    out << render_system(cert.input, cert.a, cert.b);
    for (const peel::PeelLevel& lv : cert.levels) {
        out << "level " << lv.j << " : M = {";
        bool first = true;
        for (std::size_t i : lv.m_set) {
            if (!first) out << ",";
            out << i + 1;
            first = false;
        }
        out << "}\n";
        for (const auto& [i, x] : lv.removed) out << "removed " << i + 1 << " -> " << x << "\n";
        for (const auto& [i, b_set] : lv.b_family) {
            out << "B " << i + 1 << " = ";
            render_set(out, b_set);
            out << "\n";
        }
        for (const peel::PeelLevel::Repair& r : lv.repairs)
            out << "repair " << r.v + 1 << " : " << r.old_element << " -> " << r.new_element
                << "\n";
    }
    return out.str();
}

peel::PeelCertificate parse_certificate(std::string_view text) {
    Lines lines(text);

    LineScanner header = lines.next("certificate header");
    header.expect_literal("peel");
    const auto a = header.parse_uint("a");
    const auto b = header.parse_uint("b");
    header.expect_end();

    peel::PeelCertificate cert;
    cert.a = a;
    cert.b = b;
    cert.input = parse_system_lines(lines).system;

    while (!lines.done()) {
        const std::size_t level_line = lines.line_no();
        LineScanner level = lines.next("level line");
        level.expect_literal("level");
        const auto j = level.parse_uint("level index");
        level.expect_literal(":");
        level.expect_literal("M");
        level.expect_literal("=");
        level.expect_literal("{");
        peel::PeelLevel lv;
        lv.j = j;
        level.skip_ws();
        if (!level.try_literal("}")) {
            for (;;) {
                const auto index = level.parse_uint("pair index");
                if (index == 0) throw parse_error(level_line, "pair indices are 1-based");
                lv.m_set.push_back(index - 1);
                level.skip_ws();
                if (level.try_literal("}")) break;
                level.expect_literal(",");
            }
        }
        level.expect_end();
        if (!std::is_sorted(lv.m_set.begin(), lv.m_set.end()) ||
            std::adjacent_find(lv.m_set.begin(), lv.m_set.end()) != lv.m_set.end())
            throw parse_error(level_line, "M must list distinct ascending indices");

        while (!lines.done() && !lines.peek().starts_with("level")) {
            const std::size_t line_no = lines.line_no();
            LineScanner item = lines.next("level item");
            if (item.try_literal("removed")) {
                const auto index = item.parse_uint("pair index");
                if (index == 0) throw parse_error(line_no, "pair indices are 1-based");
                item.expect_literal("->");
                const auto x = item.parse_uint("element");
                item.expect_end();
                if (!lv.removed.emplace(index - 1, static_cast<Label>(x)).second)
                    throw parse_error(line_no, "duplicate removed entry for pair " +
                                                   std::to_string(index));
            } else if (item.try_literal("B")) {
                const auto index = item.parse_uint("pair index");
                if (index == 0) throw parse_error(line_no, "pair indices are 1-based");
                item.expect_literal("=");
                LabelSet b_set = item.parse_set();
                item.expect_end();
                if (!lv.b_family.emplace(index - 1, std::move(b_set)).second)
                    throw parse_error(line_no,
                                      "duplicate B entry for pair " + std::to_string(index));
            } else if (item.try_literal("repair")) {
                const auto index = item.parse_uint("pair index");
                if (index == 0) throw parse_error(line_no, "pair indices are 1-based");
                item.expect_literal(":");
                const auto old_e = item.parse_uint("element");
                item.expect_literal("->");
                const auto new_e = item.parse_uint("element");
                item.expect_end();
                lv.repairs.push_back({static_cast<std::size_t>(index - 1),
                                      static_cast<Label>(old_e), static_cast<Label>(new_e)});
            } else {
                throw parse_error(line_no, "expected a removed/B/repair line");
            }
        }
        cert.levels.push_back(std::move(lv));
    }
    return cert;
}

} // namespace skewpair::io

// Command-line surface: construct, verify, peel, check-cert, search, bounds,
// dual.  Exit codes: 0 success, 1 predicate/certificate failure, 2 resource
// limit, 3 usage/precondition, 4 I/O, 5 parse.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewpair/bounds.hpp"
#include "skewpair/construct.hpp"
#include "skewpair/errors.hpp"
#include "skewpair/io.hpp"
#include "skewpair/peel.hpp"
#include "skewpair/search.hpp"
#include "skewpair/system.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPredicateFailure = 1;
constexpr int kExitResourceLimit = 2;
constexpr int kExitUsage = 3;
constexpr int kExitIo = 4;
constexpr int kExitParse = 5;

struct io_failure {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_failure{"cannot open " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw io_failure{"cannot read " + path};
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_failure{"cannot open " + path + " for writing"};
    out << text;
    if (!out) throw io_failure{"cannot write " + path};
}

int run_bounds(long long a, long long b) {
    const skewpair::bounds::BoundTable t = skewpair::bounds::bound_table(a, b);
    const bool identity = skewpair::bounds::identity_check(a, b);
    std::cout << "s1=" << t.s1 << " s2=" << t.s2 << " n_skew=" << t.n_skew
              << " m_max=" << t.frankl_kalai_m << " identity=" << (identity ? "OK" : "FAIL")
              << "\n";
    return identity ? kExitOk : kExitPredicateFailure;
}

int run_construct(unsigned a, unsigned b, const std::string& out_path, bool trace,
                  std::size_t trace_limit) {
    if (trace) std::cout << skewpair::construct::construction_trace(a, b, trace_limit);

    const skewpair::SetPairSystem system =
        skewpair::normalize(skewpair::construct::extremal_system(a, b));
    const std::string text = skewpair::io::render_system(system, a, b);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);

    const skewpair::SystemReport rep = skewpair::report(system);
    const skewpair::bounds::BoundTable t = skewpair::bounds::bound_table(a, b);
    bool ok = rep.is_skew;
    auto metric = [&ok](const char* name, std::size_t got, const char* bound_name,
                        const skewpair::bounds::BigInt& want) {
        const bool match = skewpair::bounds::BigInt(got) == want;
        ok = ok && match;
        std::cout << name << "=" << got << " (" << bound_name << "=" << want << ") "
                  << (match ? "OK" : "MISMATCH") << "\n";
    };
    metric("m", rep.m, "m_max", t.frankl_kalai_m);
    metric("union_a", rep.union_a_size, "S1", t.s1);
    metric("union_b", rep.union_b_size, "S2", t.s2);
    metric("ground", rep.ground_size, "n_skew", t.n_skew);
    std::cout << "skew=" << (rep.is_skew ? "true" : "false") << "\n";
    return ok ? kExitOk : kExitPredicateFailure;
}

int run_verify(const std::string& path, const std::string& mode,
               const std::vector<std::size_t>& strict_sizes) {
    const skewpair::io::SystemDocument doc = skewpair::io::parse_system(read_file(path));
    const skewpair::SystemReport rep = skewpair::report(doc.system);

    std::cout << "m=" << rep.m << " n=" << doc.system.n() << " union_a=" << rep.union_a_size
              << " union_b=" << rep.union_b_size << " ground=" << rep.ground_size
              << " max_a=" << rep.max_a_size << " max_b=" << rep.max_b_size << "\n";
    std::cout << "skew=" << (rep.is_skew ? "true" : "false") << "\n";
    std::cout << "symmetric=" << (rep.is_symmetric_bollobas ? "true" : "false") << "\n";
    if (!rep.violations.empty()) {
        std::cout << "violations:";
        for (const auto& [i, j] : rep.violations)
            std::cout << " (" << i + 1 << "," << j + 1 << ")";
        std::cout << "\n";
    }

    bool holds = mode == "symmetric" ? rep.is_symmetric_bollobas : rep.is_skew;
    if (!strict_sizes.empty()) {
        const bool exact =
            rep.m == 0 || (rep.max_a_size == strict_sizes[0] && rep.max_b_size == strict_sizes[1] &&
                           doc.system.m() > 0 &&
                           std::all_of(doc.system.pairs().begin(), doc.system.pairs().end(),
                                       [&](const skewpair::SetPair& p) {
                                           return p.a_set.size() == strict_sizes[0] &&
                                                  p.b_set.size() == strict_sizes[1];
                                       }));
        std::cout << "sizes_exact=" << (exact ? "true" : "false") << "\n";
        holds = holds && exact;
    }
    std::cout << "verify mode=" << mode << ": " << (holds ? "PASS" : "FAIL") << "\n";
    return holds ? kExitOk : kExitPredicateFailure;
}

int run_dual(const std::string& in_path, const std::string& out_path) {
    const skewpair::io::SystemDocument doc = skewpair::io::parse_system(read_file(in_path));
    const skewpair::SetPairSystem d = skewpair::dual(doc.system);
    write_file(out_path, skewpair::io::render_system(d, doc.b_cap, doc.a_cap));
    return kExitOk;
}

int run_peel(const std::string& in_path, std::optional<std::size_t> a,
             std::optional<std::size_t> b, bool do_pad, const std::string& out_path,
             const std::string& padded_out) {
    const skewpair::io::SystemDocument doc = skewpair::io::parse_system(read_file(in_path));
    const std::size_t cap_a = a.value_or(doc.a_cap);
    const std::size_t cap_b = b.value_or(doc.b_cap);

    skewpair::SetPairSystem system = doc.system;
    if (do_pad) {
        system = skewpair::pad(system, cap_a, cap_b);
        if (!padded_out.empty())
            write_file(padded_out, skewpair::io::render_system(system, cap_a, cap_b));
    } else {
        for (std::size_t i = 0; i < system.m(); ++i) {
            const skewpair::SetPair& p = system.pair(i);
            if (p.a_set.size() != cap_a || p.b_set.size() != cap_b) {
                std::cerr << "error: pair " << i + 1 << " does not have exact sizes (" << cap_a
                          << "," << cap_b << "); run with --pad to fill the sets first\n";
                return kExitUsage;
            }
        }
    }

    skewpair::peel::PeelCertificate cert;
    try {
        cert = skewpair::peel::peel(system, cap_a, cap_b);
    } catch (const skewpair::peel::repair_failure_error& e) {
        std::cerr << "certificate failure: " << e.what() << "\n";
        return kExitPredicateFailure;
    }

    std::cout << "levels:";
    for (const skewpair::peel::PeelLevel& lv : cert.levels)
        std::cout << " |M_" << lv.j << "|=" << lv.m_set.size();
    std::cout << "\n";
    const skewpair::peel::CertReport check = skewpair::peel::verify_certificate(cert);
    std::cout << "sum=" << check.sum_m_sizes << " union_a=" << check.union_a_size << "\n";

    const std::string text = skewpair::io::render_certificate(cert);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return kExitOk;
}

int run_check_cert(const std::string& path) {
    const skewpair::peel::PeelCertificate cert =
        skewpair::io::parse_certificate(read_file(path));
    const skewpair::peel::CertReport rep = skewpair::peel::verify_certificate(cert);
    if (rep.ok) {
        std::cout << "certificate OK: levels=" << cert.levels.size()
                  << " sum=" << rep.sum_m_sizes << " union_a=" << rep.union_a_size << "\n";
        return kExitOk;
    }
    std::cout << "certificate FAILED:\n";
    for (const std::string& f : rep.failures) std::cout << "  " << f << "\n";
    return kExitPredicateFailure;
}

int run_search(unsigned a, unsigned b, unsigned n, const std::string& mode,
               const std::string& objective, std::optional<std::uint64_t> node_limit,
               unsigned threads, bool no_symmetry_breaking, const std::string& witness_out) {
    skewpair::search::SearchProblem prob;
    prob.a = a;
    prob.b = b;
    prob.n = n;
    prob.mode = mode == "symmetric" ? skewpair::search::Mode::symmetric
                                    : skewpair::search::Mode::skew;
    if (objective == "union-a") prob.objective = skewpair::search::Objective::union_a;
    else if (objective == "union-b") prob.objective = skewpair::search::Objective::union_b;
    else if (objective == "ground") prob.objective = skewpair::search::Objective::ground;
    else prob.objective = skewpair::search::Objective::pairs;
    prob.node_limit = node_limit;
    prob.break_symmetry = !no_symmetry_breaking;
    prob.threads = threads;

    const skewpair::search::SearchResult result = skewpair::search::max_objective(prob);
    std::cerr << "nodes explored: " << result.nodes_explored << "\n";

    if (!witness_out.empty())
        write_file(witness_out, skewpair::io::render_system(result.witness, a, b));

    if (result.proven_optimal) {
        std::cout << "optimum " << result.optimum << " (proven)\n";
        return kExitOk;
    }
    std::cout << "optimum " << result.optimum << " (not proven: node limit reached)\n";
    return kExitResourceLimit;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"skew Bollobas set-pair systems: construct, verify, peel, search"};
    app.require_subcommand(1);

    long long bounds_a = 0, bounds_b = 0;
    CLI::App* cmd_bounds = app.add_subcommand("bounds", "print the closed-form bound table");
    cmd_bounds->add_option("--a", bounds_a, "A-side size cap")->required();
    cmd_bounds->add_option("--b", bounds_b, "B-side size cap")->required();

    unsigned con_a = 0, con_b = 0;
    std::string con_out;
    bool con_trace = false;
    std::size_t con_trace_limit = 65536;
    CLI::App* cmd_construct =
        app.add_subcommand("construct", "build the extremal system for caps (a, b)");
    cmd_construct->add_option("--a", con_a, "A-side size cap")->required();
    cmd_construct->add_option("--b", con_b, "B-side size cap")->required();
    cmd_construct->add_option("--out", con_out, "output file (stdout if omitted)");
    cmd_construct->add_flag("--trace", con_trace, "print the recursion tree first");
    cmd_construct->add_option("--trace-limit", con_trace_limit, "node cap for --trace");

    std::string verify_path, verify_mode = "skew";
    std::vector<std::size_t> strict_sizes;
    CLI::App* cmd_verify = app.add_subcommand("verify", "report on a system file");
    cmd_verify->add_option("file", verify_path, "system file")->required();
    cmd_verify->add_option("--mode", verify_mode, "predicate to check")
        ->check(CLI::IsMember({"skew", "symmetric"}));
    cmd_verify->add_option("--strict-sizes", strict_sizes, "require |A_i| = a and |B_i| = b")
        ->expected(2);

    std::string dual_in, dual_out;
    CLI::App* cmd_dual = app.add_subcommand("dual", "write the dual system");
    cmd_dual->add_option("input", dual_in, "system file")->required();
    cmd_dual->add_option("output", dual_out, "output file")->required();

    std::string peel_in, peel_out, peel_padded_out;
    std::optional<std::size_t> peel_a, peel_b;
    bool peel_pad = false;
    CLI::App* cmd_peel = app.add_subcommand("peel", "decompose an exact-size skew system");
    cmd_peel->add_option("input", peel_in, "system file")->required();
    cmd_peel->add_option("--a", peel_a, "exact A-set size (default: file header cap)");
    cmd_peel->add_option("--b", peel_b, "exact B-set size (default: file header cap)");
    cmd_peel->add_flag("--pad", peel_pad, "pad the system to exact sizes first");
    cmd_peel->add_option("--out", peel_out, "certificate file (stdout if omitted)");
    cmd_peel->add_option("--padded-out", peel_padded_out, "write the padded system here");

    std::string cert_path;
    CLI::App* cmd_check = app.add_subcommand("check-cert", "re-verify a peel certificate");
    cmd_check->add_option("certificate", cert_path, "certificate file")->required();

    unsigned search_a = 0, search_b = 0, search_n = 0, search_threads = 1;
    std::string search_mode = "skew", search_objective = "union-a", witness_out;
    std::optional<std::uint64_t> search_limit;
    bool no_symmetry_breaking = false;
    CLI::App* cmd_search = app.add_subcommand("search", "exact optimum over systems on [n]");
    cmd_search->add_option("--a", search_a, "A-side size cap")->required();
    cmd_search->add_option("--b", search_b, "B-side size cap")->required();
    cmd_search->add_option("--n", search_n, "ground-set size (<= 64)")->required();
    cmd_search->add_option("--mode", search_mode, "predicate")
        ->check(CLI::IsMember({"skew", "symmetric"}));
    cmd_search->add_option("--objective", search_objective, "quantity to maximize")
        ->check(CLI::IsMember({"union-a", "union-b", "ground", "pairs"}));
    cmd_search->add_option("--node-limit", search_limit, "abort after this many nodes");
    cmd_search->add_option("--threads", search_threads, "worker threads (default 1)");
    cmd_search->add_flag("--no-symmetry-breaking", no_symmetry_breaking,
                         "debug: explore raw label assignments");
    cmd_search->add_option("--witness-out", witness_out, "write the witness system here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_bounds) return run_bounds(bounds_a, bounds_b);
        if (*cmd_construct)
            return run_construct(con_a, con_b, con_out, con_trace, con_trace_limit);
        if (*cmd_verify) return run_verify(verify_path, verify_mode, strict_sizes);
        if (*cmd_dual) return run_dual(dual_in, dual_out);
        if (*cmd_peel)
            return run_peel(peel_in, peel_a, peel_b, peel_pad, peel_out, peel_padded_out);
        if (*cmd_check) return run_check_cert(cert_path);
        if (*cmd_search)
            return run_search(search_a, search_b, search_n, search_mode, search_objective,
                              search_limit, search_threads, no_symmetry_breaking, witness_out);
    } catch (const skewpair::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const io_failure& e) {
        std::cerr << "io error: " << e.message << "\n";
        return kExitIo;
    } catch (const skewpair::peel::repair_failure_error& e) {
        std::cerr << "certificate failure: " << e.what() << "\n";
        return kExitPredicateFailure;
    } catch (const skewpair::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

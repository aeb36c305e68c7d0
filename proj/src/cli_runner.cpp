#include "fiberosc/cli_runner.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "fiberosc/errors.hpp"
#include "fiberosc/generators.hpp"
#include "fiberosc/json_io.hpp"

namespace fiberosc {

namespace {

constexpr const char* kUsage =
    "usage: fiberosc <command> <input.json> [flags]\n"
    "\n"
    "commands:\n"
    "  validate      function.json                continuity check, violations in payload\n"
    "  oscillate     function.json                fiberwise oscillation profile\n"
    "  level-set     function.json --epsilon p/q  points with oscillation >= epsilon\n"
    "  c0-check      function.json                c0 membership with K_m chain certificate\n"
    "  fully-closed  space.json    [--seed n]     full-closedness analysis / witness\n"
    "  quotient      space.json    --keep list    collapse fibers outside the keep set\n"
    "  transfer      function.json --keep list    isometric transfer onto the quotient\n"
    "  metrizable    space.json                   metrizability of the model\n"
    "  approximate   function.json --keep list --c p/q\n"
    "                                             fiber flattening with exact bounds\n"
    "  distance      function.json --keep list    sandwich bounds for dist(h, Z_K)\n"
    "  bprime-chain  function.json [--c p/q]      K_m chain with certified decay\n"
    "  day-norm      vector.json                  squared Day norm\n"
    "  lur-probe     probe.json    [--tol p/q]    rotundity falsification probe\n"
    "\n"
    "flags: --keep a,b,c   --c p/q   --epsilon p/q   --tol p/q   --seed n\n";

struct CliError {
    std::string message;
};

struct Options {
    std::string command;
    std::string input_path;
    std::vector<Rational> keep;
    bool has_keep = false;
    Rational c = Rational(3, 2);
    bool has_c = false;
    Rational epsilon = Rational(0);
    bool has_epsilon = false;
    Rational tol = Rational(1, 1000);
    std::uint64_t seed = 0;
    bool has_seed = false;
};

Rational parse_rational_arg(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const ParseError&) {
        throw CliError{"flag " + flag + ": cannot parse rational '" + text + "'"};
    }
}

Options parse_args(const std::vector<std::string>& args) {
    if (args.empty()) throw CliError{"missing command"};
    Options opt;
    opt.command = args[0];
    std::size_t i = 1;
    while (i < args.size()) {
        const std::string& a = args[i];
        auto need_value = [&](const std::string& flag) -> const std::string& {
            if (i + 1 >= args.size()) throw CliError{"flag " + flag + " needs a value"};
            return args[++i];
        };
        if (a == "--keep") {
            std::stringstream ss(need_value(a));
            std::string item;
            opt.has_keep = true;
            while (std::getline(ss, item, ','))
                if (!item.empty()) opt.keep.push_back(parse_rational_arg(a, item));
        } else if (a == "--c") {
            opt.c = parse_rational_arg(a, need_value(a));
            opt.has_c = true;
        } else if (a == "--epsilon") {
            opt.epsilon = parse_rational_arg(a, need_value(a));
            opt.has_epsilon = true;
        } else if (a == "--tol") {
            opt.tol = parse_rational_arg(a, need_value(a));
        } else if (a == "--seed") {
            const std::string& v = need_value(a);
            try {
                opt.seed = std::stoull(v);
            } catch (...) {
                throw CliError{"flag --seed needs an unsigned integer"};
            }
            opt.has_seed = true;
        } else if (!a.empty() && a[0] == '-') {
            throw CliError{"unknown flag '" + a + "'"};
        } else if (opt.input_path.empty()) {
            opt.input_path = a;
        } else {
            throw CliError{"unexpected argument '" + a + "'"};
        }
        ++i;
    }
    if (opt.input_path.empty()) throw CliError{"missing input file"};
    return opt;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{"cannot open '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Invariants {
    Json list = Json::array();
    bool all_pass = true;
    void record(const std::string& name, bool pass) {
        list.push_back({{"name", name}, {"pass", pass}});
        all_pass = all_pass && pass;
    }
};

Json product_witness_invariants(const FullClosednessResult& res, Invariants& inv) {
    const NotFullyClosedWitness& w = *res.witness;
    inv.record("witness sets disjoint", w.set_a.fiber_coord != w.set_b.fiber_coord);
    XPoint pa = XPoint::on_interval(Rational(1, 2), w.set_a.fiber_coord);
    XPoint pb = XPoint::on_interval(Rational(1, 2), w.set_b.fiber_coord);
    inv.record("separating function is 0 on A and 1 on B",
               eval(w.separating, pa).is_zero() && eval(w.separating, pb) == Rational(1));
    LevelSet ls = level_set(w.separating, w.epsilon);
    inv.record("level set at epsilon is infinite", ls.is_infinite());
    inv.record("common image covers an interval", !w.common_image.empty() &&
                                                      w.common_image.lo < w.common_image.hi);
    return to_json(res);
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    auto t0 = std::chrono::steady_clock::now();
    Options opt;
    std::string input_text;
    Json input;
    try {
        opt = parse_args(args);
        input_text = read_file(opt.input_path);
        input = Json::parse(input_text, nullptr, true, false);
    } catch (const CliError& e) {
        err << "error: " << e.message << "\n" << kUsage;
        return 2;
    } catch (const Json::parse_error& e) {
        err << "error: input is not valid JSON: " << e.what() << "\n";
        return 2;
    }

    Json report;
    report["command"] = args;
    report["input_digest"] = fnv1a_hex(input_text);
    if (opt.has_seed) report["seed"] = opt.seed;
    Invariants inv;

    try {
        const std::string& cmd = opt.command;
        Json payload;

        if (cmd == "validate") {
            RepresentableFunction h = function_from_json(input);
            auto violations = validate(h);
            payload = Json{{"ok", violations.empty()}, {"violations", to_json(violations)}};
        } else if (cmd == "oscillate") {
            RepresentableFunction h = function_from_json(input);
            payload = to_json(oscillate(h));
        } else if (cmd == "level-set") {
            if (!opt.has_epsilon) throw CliError{"level-set needs --epsilon"};
            RepresentableFunction h = function_from_json(input);
            payload = to_json(level_set(h, opt.epsilon));
        } else if (cmd == "c0-check") {
            RepresentableFunction h = function_from_json(input);
            C0Certificate cert = in_c0(h);
            bool increasing = true;
            for (std::size_t i = 0; i + 1 < cert.chain.size(); ++i)
                if (!std::includes(cert.chain[i + 1].second.begin(), cert.chain[i + 1].second.end(),
                                   cert.chain[i].second.begin(), cert.chain[i].second.end()))
                    increasing = false;
            if (cert.member) inv.record("K_m chain increasing", increasing);
            payload = to_json(cert);
        } else if (cmd == "fully-closed") {
            FiberedSpaceModel m = space_from_json(input);
            FullClosednessResult res = full_closedness(m, opt.seed);
            if (!res.fully_closed && res.witness) {
                payload = product_witness_invariants(res, inv);
            } else {
                inv.record("sampled level sets finite", true);
                payload = to_json(res);
            }
        } else if (cmd == "quotient") {
            if (!opt.has_keep) throw CliError{"quotient needs --keep"};
            FiberedSpaceModel m = space_from_json(input);
            QuotientModel q = build_quotient(m, opt.keep);
            Rng rng(opt.seed);
            bool compose = true;
            for (int i = 0; i < 64; ++i) {
                XPoint x = random_point(rng, m);
                if (q.to_base(q.project(x)) != m.canonical_base(x.base)) compose = false;
            }
            inv.record("pi_A composed with f_A equals f on samples", compose);
            payload = to_json(q);
        } else if (cmd == "transfer") {
            if (!opt.has_keep) throw CliError{"transfer needs --keep"};
            RepresentableFunction h = function_from_json(input);
            TransferResult t = transfer_TA(h, opt.keep);
            inv.record("sup norm preserved", sup_norm(t.transferred) == sup_norm(h));
            bool images = true;
            for (const Rational& y : t.quotient.keep)
                if (fiber_range(t.transferred, y) != fiber_range(h, y)) images = false;
            inv.record("fiber images preserved over the keep set", images);
            payload = to_json(t);
        } else if (cmd == "metrizable") {
            FiberedSpaceModel m = space_from_json(input);
            payload = Json{{"metrizable", is_metrizable(m)}};
        } else if (cmd == "approximate") {
            if (!opt.has_keep) throw CliError{"approximate needs --keep (may be empty: --keep \"\")"};
            RepresentableFunction h = function_from_json(input);
            ApproximationPlan plan = flatten(h, opt.keep, opt.c);
            inv.record("result passes the continuity validator", is_valid(plan.result));
            inv.record("oscillation support inside the keep set", true);
            inv.record("error within c * s", plan.achieved_error <= plan.error_bound);
            bool disjoint = true;
            for (std::size_t i = 0; i + 1 < plan.bridges.size(); ++i)
                if (!(plan.bridges[i].hi < plan.bridges[i + 1].lo)) disjoint = false;
            inv.record("bridge intervals pairwise disjoint", disjoint);
            payload = to_json(plan);
        } else if (cmd == "distance") {
            if (!opt.has_keep) throw CliError{"distance needs --keep (may be empty: --keep \"\")"};
            RepresentableFunction h = function_from_json(input);
            DistBounds d = dist_bounds(h, opt.keep);
            inv.record("lower bound below upper bound", d.lower <= d.upper);
            inv.record("upper bound within c_min * s", d.upper <= Rational(17, 16) * d.s);
            payload = to_json(d);
        } else if (cmd == "bprime-chain") {
            RepresentableFunction h = function_from_json(input);
            ChainReport rep = bprime_chain(h, {opt.c});
            inv.record("keep sets increasing", true);
            inv.record("distance decay certified", true);
            inv.record("exact zero at exhaustion", rep.exact_zero_at_exhaustion);
            payload = to_json(rep);
        } else if (cmd == "day-norm") {
            SparseVector v = vector_from_json(input);
            payload = Json{{"norm_sq", to_json(day_norm_squared(v))}};
        } else if (cmd == "lur-probe") {
            SparseVector x = vector_from_json(input.contains("x") ? input.at("x") : input);
            std::vector<SparseVector> seq;
            if (input.contains("sequence"))
                for (const Json& e : input.at("sequence")) seq.push_back(vector_from_json(e));
            ProbeReport rep = lur_probe(x, seq, opt.tol);
            inv.record("probe consistent", rep.consistent);
            payload = to_json(rep);
        } else {
            throw CliError{"unknown command '" + cmd + "'"};
        }

        report["result"] = std::move(payload);
        report["invariants"] = std::move(inv.list);
    } catch (const CliError& e) {
        err << "error: " << e.message << "\n" << kUsage;
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const MembershipError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedTopology& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        // internal invariant tripped: still emit a report, exit 1
        inv.record(std::string("internal: ") + e.what(), false);
        report["result"] = nullptr;
        report["invariants"] = std::move(inv.list);
        out << report.dump() << "\n";
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        err << "wall_ms=" << ms << "\n";
        return 1;
    }

    out << report.dump() << "\n";
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    err << "wall_ms=" << ms << "\n";
    return inv.all_pass ? 0 : 1;
}

}  // namespace fiberosc

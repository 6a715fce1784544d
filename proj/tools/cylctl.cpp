// cylctl: command-line front end for the cylindric algebra workbench.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "cyl/builders.hpp"
#include "cyl/constructions.hpp"
#include "cyl/eval.hpp"
#include "cyl/oracle.hpp"
#include "cyl/parser.hpp"
#include "cyl/proof.hpp"
#include "cyl/rational.hpp"
#include "cyl/validity.hpp"
#include "json.hpp"

using namespace ca;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kTruncated = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

class Report {
public:
    explicit Report(std::string command) : command_(std::move(command)), start_(Clock::now()) {}

    json config = json::object();
    json results = json::object();

    void check(const std::string& name, bool ok, const std::string& detail = "", json witness = nullptr) {
        json c{{"name", name}, {"result", ok ? "pass" : "fail"}};
        if (!detail.empty()) c["detail"] = detail;
        if (!witness.is_null()) c["witness"] = std::move(witness);
        checks_.push_back(std::move(c));
        if (!ok) failed_ = true;
    }
    void unknown(const std::string& name, const std::string& detail) {
        checks_.push_back({{"name", name}, {"result", "unknown"}, {"detail", detail}});
        truncated_ = true;
    }
    void phase(const std::string& name) {
        auto now = Clock::now();
        timings_[name] = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
    }
    void start_phases() { last_ = Clock::now(); }

    int exit_code() const { return failed_ ? kFail : truncated_ ? kTruncated : kPass; }

    json to_json(bool timing) const {
        json j{{"schema_version", kSchemaVersion}, {"command", command_}, {"config", config}, {"checks", checks_},
               {"results", results}, {"exit_code", exit_code()}};
        j["status"] = failed_ ? "fail" : truncated_ ? "truncated" : "pass";
        if (timing) {
            json t = timings_;
            t["total"] = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
            j["elapsed_ms"] = t;
        }
        return j;
    }

    std::string to_text(bool timing) const {
        std::ostringstream os;
        os << command_ << '\n';
        for (auto& c : checks_) {
            std::string r = c["result"];
            for (auto& ch : r) ch = static_cast<char>(std::toupper(ch));
            os << r << ' ' << c["name"].get<std::string>();
            if (c.contains("detail")) os << ": " << c["detail"].get<std::string>();
            os << '\n';
            if (c.contains("witness")) os << "  witness " << c["witness"].dump() << '\n';
        }
        for (auto& [k, v] : results.items()) os << k << " = " << v.dump() << '\n';
        if (timing) os << "elapsed_ms = " << to_json(true)["elapsed_ms"]["total"].get<double>() << '\n';
        return os.str();
    }

private:
    std::string command_;
    Clock::time_point start_, last_{Clock::now()};
    std::vector<json> checks_;
    std::map<std::string, double> timings_;
    bool failed_ = false, truncated_ = false;
};

struct Common {
    std::string format = "text";
    std::string output;
    bool no_timing = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> cell_budget, carrier_budget, atom_budget;

    Limits limits() const {
        Limits l;
        auto env = [](const char* name, std::uint64_t& slot) {
            if (const char* v = std::getenv(name)) {
                try {
                    slot = std::stoull(v);
                } catch (...) {
                    throw UsageError(std::string("bad value for ") + name);
                }
            }
        };
        env("CYLWB_CELL_BUDGET", l.cell_budget);
        env("CYLWB_CARRIER_BUDGET", l.carrier_budget);
        env("CYLWB_ATOM_BUDGET", l.atom_budget);
        if (cell_budget) l.cell_budget = *cell_budget;
        if (carrier_budget) l.carrier_budget = *carrier_budget;
        if (atom_budget) l.atom_budget = *atom_budget;
        return l;
    }
    std::uint64_t need_seed(const char* what) const {
        if (!seed) throw UsageError(std::string(what) + " is sampled and needs --seed");
        return *seed;
    }
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app->add_option("--output", c.output, "write the report here instead of stdout");
    app->add_flag("--no-timing", c.no_timing, "omit elapsed times (byte-identical reports)");
    app->add_option("--seed", c.seed, "seed for every sampled step");
    app->add_option("--cell-budget", c.cell_budget);
    app->add_option("--carrier-budget", c.carrier_budget);
    app->add_option("--atom-budget", c.atom_budget);
    app->add_option("--config", "JSON file with flag values (flags given later win)");
}

json witness_json(const Assignment& a) {
    json w = json::object();
    for (auto& [v, X] : a) {
        std::vector<std::size_t> cells;
        X.bits().for_each([&](std::size_t c) { cells.push_back(c); });
        w[v] = {{"points", X.to_string()}, {"cells", cells}};
    }
    return w;
}

json witness_json(const AtomAlgebra& A, const std::map<std::string, BitVector>& a) {
    json w = json::object();
    for (auto& [v, X] : a) w[v] = A.element_to_string(X);
    return w;
}

// --- spaces and carriers

struct SpaceArgs {
    Index dim = 3;
    std::uint32_t base = 2;
    std::string gens = "diagonals";
    std::string space_file;
    std::uint64_t cap = 0;
};

void add_space(CLI::App* app, SpaceArgs& s) {
    app->add_option("--dim", s.dim, "dimension");
    app->add_option("--base", s.base, "base size |U|");
    app->add_option("--gens", s.gens,
                    "diagonals | full | random:N | point sets separated by ';', e.g. {(0,1,0)};{(1,1,1)}");
    app->add_option("--space", s.space_file, "space descriptor JSON {dim, base_size, generators}");
    app->add_option("--cap", s.cap, "atom cap for the closure (default: atom budget)");
}

struct Carrier {
    SpacePtr sp;
    SetAlgebra alg;
    json describe;
};

Carrier make_carrier(SpaceArgs s, const Common& c, const Limits& lim) {
    std::vector<std::string> gen_specs;
    if (!s.space_file.empty()) {
        std::ifstream in(s.space_file);
        if (!in) throw UsageError("cannot read " + s.space_file);
        json j = json::parse(in);
        s.dim = j.at("dim");
        s.base = j.at("base_size");
        s.gens.clear();
        for (auto& g : j.value("generators", json::array())) {
            if (g.is_string()) gen_specs.push_back(g);
            else if (g.is_array()) {
                std::string lit = "cells:";
                for (auto& cell : g) lit += std::to_string(cell.get<std::size_t>()) + ",";
                gen_specs.push_back(lit);
            } else throw UsageError("generator entries are strings or cell lists");
        }
    } else {
        std::stringstream ss(s.gens);
        std::string part;
        while (std::getline(ss, part, ';'))
            if (!part.empty()) gen_specs.push_back(part);
    }
    Carrier out;
    out.sp = CylSpace::make(s.dim, s.base, lim);
    bool full = false;
    std::vector<PointSet> gens;
    for (auto& g : gen_specs) {
        if (g == "diagonals" || g == "none") continue;
        if (g == "full") {
            full = true;
            continue;
        }
        if (g.rfind("random:", 0) == 0) {
            std::mt19937_64 rng(c.need_seed("random generators"));
            int n = std::stoi(g.substr(7));
            for (int k = 0; k < n; ++k) gens.push_back(PointSet::random(out.sp, rng));
            continue;
        }
        if (g.rfind("cells:", 0) == 0) {
            BitVector b(out.sp->cells());
            std::stringstream cs(g.substr(6));
            std::string cell;
            while (std::getline(cs, cell, ','))
                if (!cell.empty()) {
                    auto k = std::stoull(cell);
                    if (k >= out.sp->cells()) throw UsageError("cell " + cell + " out of range");
                    b.set(k);
                }
            gens.emplace_back(out.sp, std::move(b));
            continue;
        }
        gens.push_back(parse_point_set(out.sp, g));
    }
    if (full && !gens.empty()) throw UsageError("'full' cannot be combined with generators");
    out.alg = full ? SetAlgebra::full(out.sp) : SetAlgebra::generate(out.sp, gens, s.cap ? s.cap : lim.atom_budget);
    out.describe = {{"dim", s.dim}, {"base_size", s.base}, {"carrier", full ? "full" : "generated"},
                    {"generators", gens.size()}};
    if (!full) {
        out.describe["atoms"] = out.alg.atom_count();
        out.describe["truncated"] = out.alg.truncated();
    }
    return out;
}

// --- config handling

std::vector<std::string> config_tokens(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const std::exception& e) {
        throw UsageError("config " + path + ": " + e.what());
    }
    if (!j.is_object()) throw UsageError("config must be a JSON object");
    std::vector<std::string> out;
    for (auto& [k, v] : j.items()) {
        std::string flag = "--" + k;
        if (v.is_boolean()) {
            if (v.get<bool>()) out.push_back(flag);
        } else if (v.is_array()) {
            std::string joined;
            for (auto& e : v) joined += (joined.empty() ? "" : ",") + (e.is_string() ? e.get<std::string>() : e.dump());
            out.push_back(flag);
            out.push_back(joined);
        } else {
            out.push_back(flag);
            out.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        }
    }
    return out;
}

// argv with config-file values spliced in right after the subcommand name.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string path;
    for (std::size_t k = 0; k < args.size(); ++k) {
        if (args[k] == "--config" && k + 1 < args.size()) path = args[k + 1];
        else if (args[k].rfind("--config=", 0) == 0) path = args[k].substr(9);
    }
    if (path.empty() || args.empty()) return args;
    auto extra = config_tokens(path);
    args.insert(args.begin() + 1, extra.begin(), extra.end());
    return args;
}

std::vector<unsigned> parse_list(const std::string& s) {
    std::vector<unsigned> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        try {
            out.push_back(static_cast<unsigned>(std::stoul(part)));
        } catch (...) {
            throw UsageError("bad number list: " + s);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cylctl: finite cylindric algebra workbench"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    Common common;
    SpaceArgs space;

    auto* parse_cmd = app.add_subcommand("parse", "echo the canonical form of a term or equation");
    std::string expr;
    parse_cmd->add_option("expr", expr)->required();

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a term in a full set algebra");
    std::string term_text;
    std::vector<std::string> assigns;
    eval_cmd->add_option("--term", term_text)->required();
    eval_cmd->add_option("--assign", assigns, "x={(0,1,0)}")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

    auto* check_cmd = app.add_subcommand("check", "validity of an equation over a carrier");
    std::string eq_text, mode = "exhaustive";
    std::uint64_t samples = 200;
    check_cmd->add_option("--eq", eq_text)->required();
    check_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
    check_cmd->add_option("--samples", samples);

    auto* closure_cmd = app.add_subcommand("closure", "generate a carrier and report its size");

    auto* split_cmd = app.add_subcommand("split-demo", "split-atom algebra: axioms and Henkin matrix");
    std::string sizes_text = "1,2,2";
    std::uint64_t rep_samples = 1000;
    split_cmd->add_option("--sizes", sizes_text);
    split_cmd->add_option("--samples", rep_samples, "random set-algebra assignments for e_01");

    auto* part_cmd = app.add_subcommand("partition-demo", "partition witness: e_k matrix vs oracle");
    unsigned pn = 2, pblocks = 2;
    std::string ks_text = "2,3,4";
    part_cmd->add_option("--n", pn);
    part_cmd->add_option("--blocks", pblocks);
    part_cmd->add_option("--ks", ks_text);

    auto* oc_cmd = app.add_subcommand("oracle-compare", "direct-semantics oracle vs term evaluation");
    std::string kind = "express";
    unsigned on = 2;
    oc_cmd->add_option("--kind", kind)->check(CLI::IsMember({"express", "equiv"}));
    oc_cmd->add_option("--n", on);
    oc_cmd->add_option("--samples", samples);

    auto* rat_cmd = app.add_subcommand("rational-demo", "rational construction: membership, cut witnesses, order maps");
    unsigned points = 200, trunc = 8, pl = 100, pairs = 1000;
    rat_cmd->add_option("--points", points);
    rat_cmd->add_option("--trunc", trunc);
    rat_cmd->add_option("--pl-instances", pl);
    rat_cmd->add_option("--pairs", pairs);

    auto* sym_cmd = app.add_subcommand("symmetrize", "product of all reducts; symmetry check");
    std::vector<std::string> sym_eqs;
    sym_cmd->add_option("--eq", sym_eqs)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

    auto* enum_cmd = app.add_subcommand("enumerate", "fair enumeration of derivable equations");
    EnumerationBounds bounds;
    std::size_t max_theorems = 1000, audit_trials = 0;
    bool no_inductive = false, derivations = false;
    enum_cmd->add_option("--index-bound", bounds.index_bound);
    enum_cmd->add_option("--depth", bounds.term_depth);
    enum_cmd->add_option("--vars", bounds.variable_count);
    enum_cmd->add_option("--budget", bounds.step_budget, "rule applications");
    enum_cmd->add_option("--max-theorems", max_theorems);
    enum_cmd->add_flag("--no-inductive", no_inductive);
    enum_cmd->add_flag("--derivations", derivations, "include derivation records (json)");
    enum_cmd->add_option("--audit", audit_trials, "audit every theorem in this many random algebras");

    for (auto* sc : {parse_cmd, eval_cmd, check_cmd, closure_cmd, split_cmd, part_cmd, oc_cmd, rat_cmd, sym_cmd, enum_cmd})
        add_common(sc, common);
    for (auto* sc : {eval_cmd, check_cmd, closure_cmd, oc_cmd, sym_cmd, split_cmd, part_cmd}) {
        if (sc == eval_cmd || sc == oc_cmd) {
            sc->add_option("--dim", space.dim);
            sc->add_option("--base", space.base);
        } else if (sc == split_cmd) {
            sc->add_option("--dim", space.dim);
        } else if (sc == part_cmd) {
            space.dim = 4;
            sc->add_option("--dim", space.dim);
        } else add_space(sc, space);
    }

    std::vector<std::string> args;
    try {
        args = expand_config(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "cylctl: " << e.what() << '\n';
        return kUsage;
    }
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    CLI::App* cmd = app.get_subcommands().front();
    Report rep(cmd->get_name());
    auto emit = [&]() {
        std::string text = common.format == "json" ? rep.to_json(!common.no_timing).dump(2) + "\n"
                                                   : rep.to_text(!common.no_timing);
        if (common.output.empty()) std::cout << text;
        else {
            std::ofstream out(common.output);
            out << text;
        }
        return rep.exit_code();
    };
    for (auto* opt : cmd->get_options()) {
        if (opt->get_name() == "--help" || opt->get_name() == "--config" || opt->get_name() == "--output" ||
            opt->count() == 0)
            continue;
        auto name = opt->get_name();
        while (!name.empty() && name[0] == '-') name.erase(0, 1);
        auto scalar = [](const std::string& v) -> json {
            if (!v.empty() && v.find_first_not_of("0123456789") == std::string::npos && v.size() < 19) return std::stoull(v);
            return v;
        };
        auto res = opt->results();
        if (opt->get_type_size() == 0) rep.config[name] = true;
        else if (res.size() == 1 && opt->get_items_expected_max() <= 1) rep.config[name] = scalar(res[0]);
        else {
            json arr = json::array();
            for (auto& r : res) arr.push_back(scalar(r));
            rep.config[name] = arr;
        }
    }

    try {
        const Limits lim = common.limits();
        rep.config["limits"] = {{"cell_budget", lim.cell_budget},
                                {"carrier_budget", lim.carrier_budget},
                                {"atom_budget", lim.atom_budget}};
        rep.start_phases();

        if (cmd == parse_cmd) {
            auto v = parse(expr);
            std::string canon = std::holds_alternative<Term>(v) ? to_string(std::get<Term>(v)) : to_string(std::get<Equation>(v));
            rep.results["canonical"] = canon;
            rep.results["kind"] = std::holds_alternative<Term>(v) ? "term" : "equation";
            if (common.format == "text" && common.output.empty()) {
                std::cout << canon << '\n';
                return kPass;
            }
        } else if (cmd == eval_cmd) {
            auto sp = CylSpace::make(space.dim, space.base, lim);
            Term t = parse_term(term_text, {space.dim});
            Assignment a;
            for (auto& s : assigns) {
                auto eqpos = s.find('=');
                if (eqpos == std::string::npos) throw UsageError("--assign expects name=pointset");
                a[s.substr(0, eqpos)] = parse_point_set(sp, s.substr(eqpos + 1));
            }
            auto r = eval(sp, t, a);
            rep.results["term"] = to_string(t);
            rep.results["value"] = r.to_string();
            rep.results["count"] = r.count();
        } else if (cmd == check_cmd) {
            auto e = parse_equation(eq_text, {space.dim});
            auto car = make_carrier(space, common, lim);
            rep.phase("carrier");
            CheckMode m = mode == "exhaustive" ? CheckMode::exhaustive_mode() : CheckMode::sampled(samples, common.need_seed("--mode sampled"));
            auto v = holds(car.alg, e, m, lim);
            rep.phase("check");
            rep.results["space"] = car.describe;
            rep.results["equation"] = to_string(e);
            rep.results["verdict"] = to_string(v.kind);
            rep.results["method"] = v.method;
            if (v.kind == VerdictKind::UnknownTruncated) rep.unknown("validity", v.note.empty() ? "carrier truncated" : v.note);
            else rep.check("validity", v.valid(), v.method, v.fails() ? witness_json(v.point_witness) : json());
        } else if (cmd == closure_cmd) {
            auto car = make_carrier(space, common, lim);
            rep.phase("closure");
            rep.results["space"] = car.describe;
            if (!car.alg.is_full()) {
                rep.results["carrier_log2"] = car.alg.atom_count();
                if (car.alg.truncated()) rep.unknown("closure", "atom cap reached before the closure stabilized");
                else rep.check("closure", true, std::to_string(car.alg.atom_count()) + " atoms");
            } else rep.results["carrier_log2"] = car.sp->cells();
        } else if (cmd == split_cmd) {
            std::vector<std::uint32_t> sizes;
            for (auto s : parse_list(sizes_text)) sizes.push_back(s);
            auto S = SplitAlgebra::build(space.dim, sizes, lim);
            rep.phase("build");
            rep.results["base_atoms"] = S.base().atom_count();
            rep.results["split_atoms"] = S.atom_structure().atoms();
            rep.results["g_points"] = S.g().count();
            auto ax = check_ca_axioms(S.atom_structure(), {}, lim);
            json axj = json::array();
            for (auto& r : ax.results)
                if (!r.verdict.valid())
                    axj.push_back({{"axiom", r.axiom.group + "/" + r.axiom.schema}, {"equation", to_string(r.axiom.equation)},
                                   {"witness", witness_json(S.atom_structure(), r.verdict.witness)}});
            rep.check("axioms", ax.all_pass(), std::to_string(ax.results.size()) + " instances",
                      axj.empty() ? json() : axj);
            rep.phase("axioms");
            json matrix = json::object();
            for (auto& h : henkin_matrix(S, lim)) {
                std::string name = "e_" + std::to_string(h.i) + std::to_string(h.j);
                matrix[name] = h.verdict.valid() ? "PASS" : h.verdict.fails() ? "FAIL" : "UNKNOWN";
                if (h.j == 1 && h.i != 0) rep.check(name + " valid", h.verdict.valid(), h.verdict.method);
            }
            rep.results["henkin"] = matrix;
            rep.phase("henkin");
            // the witness pair (g, g')
            auto e01 = build_henkin(0, 1);
            auto g = S.from_base(S.g());
            auto look = [&](const std::string& v) { return v == "x" ? g : S.g_prime(); };
            auto lhs = evaluate(S, e01.lhs.left(), look);
            auto rhs = evaluate(S, e01.rhs, look);
            bool shape = lhs == S.cyl(1, g) && !(S.join(lhs, rhs) == rhs);
            std::vector<std::size_t> g_cells;
            S.g().bits().for_each([&](std::size_t c) { g_cells.push_back(c); });
            rep.check("e_01 fails at (g,g')", shape, "lhs = c1(g) not below rhs",
                      json{{"x", "g"}, {"y", "g'"}, {"g_cells", g_cells}, {"lhs", S.to_string(lhs)}, {"rhs", S.to_string(rhs)}});
            // the same equation in set algebras of the same size
            if (!common.seed) {
                rep.results["set_algebra_comparison"] = "skipped (needs --seed)";
                return emit();
            }
            std::uint64_t seed = *common.seed;
            auto sp = S.base().space();
            std::mt19937_64 rng(seed);
            std::uint64_t bad = 0;
            json first;
            for (std::uint64_t k = 0; k < rep_samples; ++k) {
                Assignment a{{"x", PointSet::random(sp, rng)}, {"y", PointSet::random(sp, rng)}};
                if (k % 2) a["y"] = a["y"] & a["x"];
                if (!holds_at(sp, e01, a)) {
                    if (!bad) first = witness_json(a);
                    ++bad;
                }
            }
            rep.check("e_01 holds in set algebras", bad == 0, std::to_string(rep_samples) + " seeded assignments", first);
            rep.phase("set-algebras");
        } else if (cmd == part_cmd) {
            auto w = build_partition_witness(space.dim, pn, pblocks, lim);
            rep.phase("build");
            rep.results["atoms"] = w.algebra.atom_count();
            rep.check("dimension set of g", dimension_set(w.g) == std::set<Index>{0, 1});
            auto irregular = find_irregular_element(w.algebra);
            rep.check("every carrier element regular", !irregular, "",
                      irregular ? json{{"x", irregular->to_string()}} : json());
            rep.phase("regularity");
            if (pn + 1 <= space.dim) {
                auto en = build_e_n(pn, space.dim);
                bool term_fails = !holds_at(w.g.space(), en, {{"x", w.g}});
                std::vector<Index> ks;
                for (Index i = 2; i <= pn; ++i) ks.push_back(i);
                PointSet a = w.g;
                for (auto i : ks) a = cyl(i, a);
                bool oracle_fails = !equiv_oracle(a, pn);
                std::vector<std::size_t> g_cells;
                w.g.bits().for_each([&](std::size_t c) { g_cells.push_back(c); });
                std::string en_name = "e_" + std::to_string(pn);
                rep.results[en_name + " at g"] = {{"term", term_fails ? "FAIL" : "PASS"}, {"oracle", oracle_fails ? "FAIL" : "PASS"}};
                rep.check(en_name + " fails at g (term)", term_fails, "", json{{"x", {{"points", w.g.to_string()}, {"cells", g_cells}}}});
                rep.check(en_name + " fails at g (oracle)", oracle_fails);
            }
            json matrix = json::array();
            for (auto k : parse_list(ks_text)) {
                auto st = ek_status(space.dim, pn, pblocks, k, lim);
                matrix.push_back({{"k", k}, {"dim", st.dim}, {"term", to_string(st.term.kind)},
                                  {"oracle", st.oracle_holds ? "valid" : "fails"}, {"closed_elements", st.closed_elements}});
                rep.check("e_" + std::to_string(k) + " term agrees with oracle", st.term.valid() == st.oracle_holds);
            }
            rep.results["matrix"] = matrix;
            rep.phase("matrix");
        } else if (cmd == oc_cmd) {
            auto sp = CylSpace::make(space.dim, space.base, lim);
            std::mt19937_64 rng(common.need_seed("oracle-compare"));
            std::uint64_t disagree = 0;
            json first;
            auto master = build_master_equation(space.dim);
            for (std::uint64_t k = 0; k < samples; ++k) {
                auto X = PointSet::random(sp, rng);
                bool term, oracle;
                if (kind == "express") {
                    term = holds_at(sp, master, {{"x", X}});
                    oracle = express_oracle(X);
                } else {
                    for (Index i = 2; i <= on; ++i) X = cyl(i, X);
                    term = holds_at(sp, build_e_n(on, space.dim), {{"x", X}});
                    oracle = equiv_oracle(X, on);
                }
                if (term != oracle && !disagree++) first = {{"x", X.to_string()}, {"term", term}, {"oracle", oracle}};
            }
            rep.results["samples"] = samples;
            rep.check("oracle agrees with term evaluation", disagree == 0, std::to_string(disagree) + " disagreements", first);
        } else if (cmd == rat_cmd) {
            std::mt19937_64 rng(common.need_seed("rational-demo"));
            std::uint64_t cut_fail = 0, in_g = 0;
            json first;
            for (unsigned k = 0; k < points; ++k) {
                auto s = random_T_point(rng, trunc);
                in_g += rational_g_membership(s, trunc);
                for (Index i = 0; i < trunc; ++i) {
                    try {
                        cut_witnesses(s, i, trunc);
                    } catch (const std::logic_error& e) {
                        if (!cut_fail++) first = {{"s", s.to_string(trunc)}, {"i", i}, {"error", e.what()}};
                    }
                }
            }
            rep.results["points_in_g"] = in_g;
            rep.check("cut witnesses", cut_fail == 0, std::to_string(points) + " points x " + std::to_string(trunc) + " indices", first);
            std::uint64_t pl_fail = 0;
            for (unsigned k = 0; k < pl; ++k) {
                std::set<Rational> A, B;
                unsigned len = 1 + static_cast<unsigned>(rng() % 5);
                while (A.size() < len) A.insert(random_rational(rng));
                while (B.size() < len) B.insert(random_rational(rng));
                std::vector<Rational> a(A.begin(), A.end()), b(B.begin(), B.end());
                auto f = pl_automorphism(a, b);
                bool ok = true;
                for (std::size_t t = 0; t < len; ++t) ok = ok && f(a[t]) == b[t];
                for (unsigned t = 0; t < pairs && ok; ++t) {
                    auto x = random_rational(rng, 40, 30), y = random_rational(rng, 40, 30);
                    ok = ((x < y) == (f(x) < f(y))) && ((x == y) == (f(x) == f(y)));
                }
                pl_fail += !ok;
            }
            rep.check("order automorphisms", pl_fail == 0, std::to_string(pl) + " maps x " + std::to_string(pairs) + " pairs");
            rep.phase("rational");
        } else if (cmd == sym_cmd) {
            auto car = make_carrier(space, common, lim);
            if (car.alg.truncated()) throw BudgetError("carrier truncated");
            auto B = build_symmetrized(car.alg.atom_structure(), lim);
            rep.phase("build");
            rep.results["space"] = car.describe;
            rep.results["factors"] = B.factor_offsets().size();
            rep.results["atoms"] = B.atoms();
            std::vector<Equation> es;
            for (auto& s : sym_eqs) es.push_back(parse_equation(s, {space.dim}));
            if (es.empty()) {
                std::mt19937_64 rng(common.need_seed("symmetrize without --eq"));
                auto ax = ca_axiom_instances(space.dim);
                for (int k = 0; k < 5; ++k) es.push_back(ax[rng() % ax.size()].equation);
                if (space.dim >= 3) es.push_back(build_henkin(0, 1));
            }
            json verdicts = json::object();
            for (auto& e : es) {
                auto base = check(B, e, {}, lim).valid();
                bool same = true;
                for (auto& rho : all_permutations(space.dim)) same = same && check(B, rename(e, rho), {}, lim).valid() == base;
                verdicts[to_string(e)] = base ? "valid" : "fails";
                rep.check("symmetric: " + to_string(e), same);
            }
            rep.results["verdicts"] = verdicts;
            rep.phase("symmetry");
        } else if (cmd == enum_cmd) {
            bounds.inductive = !no_inductive;
            TheoremStore store;
            std::vector<std::size_t> ids;
            auto stats = enumerate(bounds, store, [&](const Theorem& t) {
                ids.push_back(t.id);
                return ids.size() < max_theorems;
            });
            rep.phase("enumerate");
            std::size_t inductive = 0, audit_fail = 0;
            json first;
            json list = json::array();
            for (auto id : ids) {
                const auto& t = store[id];
                inductive += t.has_rule(Rule::Inductive);
                if (audit_trials) {
                    auto a = audit_soundness(t, audit_trials, id);
                    if (!a.ok && !audit_fail++) first = {{"theorem", to_string(t.equation)}, {"algebra", a.describe()}};
                }
                json item = to_string(t.equation);
                if (derivations) {
                    json d{{"id", t.id}, {"equation", to_string(t.equation)}, {"rule", to_string(t.derivation.rule)},
                           {"premises", t.derivation.premises}, {"size", t.derivation.size}};
                    if (t.max_index_used) d["max_index_used"] = *t.max_index_used;
                    if (!t.alternatives.empty()) {
                        json alts = json::array();
                        for (auto& a : t.alternatives)
                            alts.push_back({{"rule", to_string(a.rule)}, {"premises", a.premises}});
                        d["alternatives"] = alts;
                    }
                    item = d;
                }
                list.push_back(item);
            }
            if (common.format == "text" && common.output.empty() && !audit_trials) {
                for (auto& item : list) std::cout << (item.is_string() ? item.get<std::string>() : item["equation"].get<std::string>()) << '\n';
                if (stats.truncated) std::cout << "# truncated: step budget exhausted\n";
                return kPass;
            }
            rep.results["theorems"] = list;
            rep.results["count"] = ids.size();
            rep.results["steps"] = stats.steps;
            rep.results["truncated"] = stats.truncated;
            rep.results["with_inductive_derivation"] = inductive;
            if (audit_trials)
                rep.check("soundness audit", audit_fail == 0, std::to_string(ids.size()) + " theorems", first);
            rep.phase("audit");
        }
    } catch (const UsageError& e) {
        std::cerr << "cylctl: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "cylctl: parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetError& e) {
        rep.unknown("budget", e.what());
    } catch (const MalformedPoint& e) {
        std::cerr << "cylctl: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "cylctl: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "cylctl: " << e.what() << '\n';
        return kUsage;
    }
    return emit();
}

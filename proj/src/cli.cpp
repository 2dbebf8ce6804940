#include "diplace/cli.hpp"

#include <chrono>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "diplace/atlas.hpp"
#include "diplace/bounds.hpp"
#include "diplace/census.hpp"
#include "diplace/conflict.hpp"
#include "diplace/expr.hpp"
#include "diplace/io.hpp"
#include "diplace/synth.hpp"

namespace diplace {

namespace {

// Thrown for results that fail their own check.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EvalOptions {
    std::string file;
    bool canonical = false, outcome = false, literal = false;
};

struct SynthOptions {
    std::string expr, output, dot;
    bool trace = false;
};

struct CompileOptions {
    std::string ruleset, file, output;
    bool check = false;
};

struct CensusOptions {
    unsigned max_n = 4, workers = 1;
    std::string output;
    bool allow_five = false;
};

struct BoundsOptions {
    unsigned b = 0;
    bool table = false;
};

std::string vertices(std::size_t n) { return std::to_string(n) + (n == 1 ? " vertex" : " vertices"); }

int eval(const EvalOptions& o, std::ostream& out)
{
    const DigraphGame g = load_digraph(o.file);
    const bool any = o.canonical || o.outcome || o.literal;
    if (o.canonical || !any) out << pretty(value(g)) << "\n";
    if (o.outcome) out << to_string(outcome(value(g))) << "\n";
    if (o.literal) out << bracket_encoding(to_literal(g)) << "\n";
    return kExitOk;
}

int sum(const std::vector<std::string>& files, const std::string& output, std::ostream& out)
{
    std::vector<DigraphGame> parts;
    std::vector<Game> values;
    for (const auto& f : files) {
        parts.push_back(load_digraph(f));
        values.push_back(value(parts.back()));
    }
    const DigraphGame whole = disjoint_union(parts);
    const Game v = value(whole);
    if (v != add_all(values)) throw VerificationFailure("value of the union differs from the sum of values");
    if (!output.empty()) write_file(output, emit_digraph_json(whole));
    out << pretty(v) << "\n";
    return kExitOk;
}

int synth(const SynthOptions& o, std::ostream& out)
{
    const Game target = parse_expr(o.expr);
    const SynthesisResult r = synthesize_traced(target);
    write_file(o.output, emit_digraph_json(r.digraph));
    if (!o.dot.empty()) write_file(o.dot, emit_digraph_dot(r.digraph));
    if (o.trace) {
        for (const SynthesisStep& s : r.trace)
            out << std::string(2 * s.depth, ' ') << to_string(s.rule) << " " << pretty(s.target) << " ("
                << vertices(s.order) << ")\n";
    }
    const Game back = value(load_digraph(o.output));
    if (back != target) throw VerificationFailure("written digraph evaluates to " + pretty(back));
    out << pretty(target) << ": " << vertices(r.digraph.order()) << " written to " << o.output << "\n";
    return kExitOk;
}

int compile_position(const CompileOptions& o, std::ostream& out)
{
    const std::string text = read_file(o.file);
    ConflictSpec spec;
    if (o.ruleset == "raw")
        spec = parse_conflict_spec(text);
    else if (o.ruleset == "poset")
        spec = to_conflict(parse_poset(text));
    else if (o.ruleset == "domineering")
        spec = to_conflict(parse_domineering(text));
    else if (o.ruleset == "nodekayles")
        spec = to_conflict(NodeKaylesPosition{parse_graph_position(text)});
    else
        spec = to_conflict(ColPosition{parse_graph_position(text)});
    const DigraphGame g = compile(spec);
    if (o.check && interpret(spec) != to_literal(g))
        throw VerificationFailure("compiled digraph changes the literal form");
    if (o.output.empty()) {
        out << emit_digraph_json(g);
    } else {
        write_file(o.output, emit_digraph_json(g));
        out << spec.moves.size() << " moves, value " << pretty(value(g)) << "\n";
    }
    return kExitOk;
}

int census(const CensusOptions& o, std::ostream& out)
{
    const auto start = std::chrono::steady_clock::now();
    const Census c = enumerate(o.max_n, o.workers, o.allow_five);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.output.empty()) write_file(o.output, census_json(c));
    out << "graphs " << c.graphs_visited << ", distinct values " << c.records.size() << ", " << seconds << " s\n";
    for (unsigned b = 0; b <= 2; ++b) {
        try {
            out << "F(" << b << ") = " << big_F(b, c) << "\n";
        } catch (const IncompleteCensus& e) {
            out << "F(" << b << ") > " << o.max_n << "\n";
        }
    }
    if (auto missing = missing_birthday_three(c))
        out << "birthday 3 value absent: " << pretty(*missing) << "\n";
    return kExitOk;
}

int atlas_verify(std::ostream& out)
{
    const AtlasReport report = check_atlas();
    for (const AtlasCheck& e : report.entries) {
        out << (e.pass ? "PASS " : "FAIL ") << e.name << " (" << vertices(e.vertices);
        if (e.vertices != e.drawn) out << ", drawn " << e.drawn;
        out << ")";
        if (e.actual != e.expected) out << " evaluates to " << pretty(e.actual);
        out << "\n";
    }
    return report.all_pass() ? kExitOk : kExitVerification;
}

int bounds(const BoundsOptions& o, std::ostream& out)
{
    const auto rows = extremal_table();
    if (o.table) {
        out << "b  a(b)  g(b)\n";
        for (const ReferenceRow& r : reference_table())
            out << r.b << "  " << (r.exact ? "" : "<= ") << BigBound(r.a).to_string() << "  " << (r.exact ? "" : "<= ")
                << BigBound(r.g).to_string() << "\n";
        out << "b  F(b) >=  F(b) <=\n";
        for (const ExtremalRow& r : rows)
            out << r.b << "  " << r.lower.to_string() << "  " << r.upper.to_string()
                << (r.upper_from_bounded_input ? " (upper-bound input)" : "") << "\n";
        return kExitOk;
    }
    if (o.b < rows.size()) {
        const ExtremalRow& r = rows[o.b];
        out << "F(" << o.b << ") >= " << r.lower.to_string() << "\n";
        out << "F(" << o.b << ") <= " << r.upper.to_string() << (r.upper_from_bounded_input ? " (upper-bound input)" : "")
            << "\n";
    } else {
        out << "F(" << o.b << ") >= " << bound_thm54(o.b).to_string() << "\n";
    }
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Digraph placement game engine", "diplace"};
    app.require_subcommand(1);

    EvalOptions eval_o;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a digraph file");
    eval_cmd->add_option("file", eval_o.file, "Digraph JSON")->required();
    eval_cmd->add_flag("--canonical", eval_o.canonical, "Print the canonical value");
    eval_cmd->add_flag("--outcome", eval_o.outcome, "Print the outcome class");
    eval_cmd->add_flag("--literal", eval_o.literal, "Print the literal form");

    std::string lhs, rhs;
    auto* compare_cmd = app.add_subcommand("compare", "Compare two value expressions");
    compare_cmd->add_option("lhs", lhs)->required();
    compare_cmd->add_option("rhs", rhs)->required();

    std::vector<std::string> sum_files;
    std::string sum_output;
    auto* sum_cmd = app.add_subcommand("sum", "Value of the disjoint union of digraph files");
    sum_cmd->add_option("files", sum_files)->required();
    sum_cmd->add_option("-o,--output", sum_output, "Write the union digraph");

    SynthOptions synth_o;
    auto* synth_cmd = app.add_subcommand("synth", "Build a digraph equal to a value");
    synth_cmd->add_option("expr", synth_o.expr)->required();
    synth_cmd->add_option("-o,--output", synth_o.output, "Digraph JSON output")->required();
    synth_cmd->add_option("--dot", synth_o.dot, "DOT output");
    synth_cmd->add_flag("--trace", synth_o.trace, "Print the construction steps");

    CompileOptions compile_o;
    auto* compile_cmd = app.add_subcommand("compile", "Compile a conflict placement position to a digraph");
    compile_cmd->add_option("--ruleset", compile_o.ruleset)
        ->required()
        ->check(CLI::IsMember({"poset", "domineering", "nodekayles", "col", "raw"}));
    compile_cmd->add_option("file", compile_o.file)->required();
    compile_cmd->add_option("-o,--output", compile_o.output);
    compile_cmd->add_flag("--check", compile_o.check, "Compare literal forms with direct play");

    CensusOptions census_o;
    auto* census_cmd = app.add_subcommand("census", "Enumerate all small digraphs");
    census_cmd->add_option("--max-n", census_o.max_n)->required();
    census_cmd->add_option("--workers", census_o.workers)->check(CLI::PositiveNumber);
    census_cmd->add_option("-o,--output", census_o.output);
    census_cmd->add_flag("--allow-five", census_o.allow_five, "Permit the 5-vertex census");

    auto* atlas_cmd = app.add_subcommand("atlas", "Day-2 atlas");
    atlas_cmd->add_subcommand("verify", "Evaluate every atlas digraph")->final_callback([] {});
    atlas_cmd->require_subcommand(1);

    BoundsOptions bounds_o;
    auto* bounds_cmd = app.add_subcommand("bounds", "Bounds on F(b)");
    bounds_cmd->add_option("--b", bounds_o.b);
    bounds_cmd->add_flag("--table", bounds_o.table, "Print the reference and extremal tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*eval_cmd) return eval(eval_o, out);
        if (*compare_cmd) {
            out << to_string(compare(parse_expr(lhs), parse_expr(rhs))) << "\n";
            return kExitOk;
        }
        if (*sum_cmd) return sum(sum_files, sum_output, out);
        if (*synth_cmd) return synth(synth_o, out);
        if (*compile_cmd) return compile_position(compile_o, out);
        if (*census_cmd) return census(census_o, out);
        if (*atlas_cmd) return atlas_verify(out);
        if (*bounds_cmd) return bounds(bounds_o, out);
    } catch (const VerificationFailure& e) {
        err << "verification failed: " << e.what() << "\n";
        return kExitVerification;
    } catch (const GadgetMismatch& e) {
        err << "verification failed: " << e.what() << "\n";
        return kExitVerification;
    } catch (const SynthesisFailure& e) {
        err << "verification failed: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace diplace

#pragma once

// Command-line driver: run | enumerate | reconcile | montecarlo.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 a fidelity or
// statistical invariant failed.

#include "mcqt/report.hpp"
#include "mcqt/state_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace mcqt::cli {

enum class Mode { Run, Enumerate, Reconcile, MonteCarlo };

inline constexpr std::string_view to_string(Mode m) {
    switch (m) {
    case Mode::Run: return "run";
    case Mode::Enumerate: return "enumerate";
    case Mode::Reconcile: return "reconcile";
    case Mode::MonteCarlo: return "montecarlo";
    }
    return "?";
}

struct RunSpec {
    Mode mode = Mode::Run;
    std::size_t n = 1;
    std::size_t m = 0;
    EprVariant epr = EprVariant::PhiPlus;
    TableProvenance table = TableProvenance::OracleDerived;
    std::uint64_t seed = 0;
    std::string message = "random"; ///< file path, "random" or "example3x2"
    std::size_t trials = 10000;
    std::string out;                ///< empty: stdout
    std::string format = "json";    ///< "text" is available for reconcile

    ProtocolConfig config() const { return {n, m, epr, table}; }

    friend bool operator==(const RunSpec&, const RunSpec&) = default;
};

/// Canonical flag list for a spec; parse_args(to_args(s)) == s.
inline std::vector<std::string> to_args(const RunSpec& s) {
    std::vector<std::string> a = {"--mode", std::string(to_string(s.mode)),
                                  "--n", std::to_string(s.n),
                                  "--m", std::to_string(s.m),
                                  "--epr", std::string(to_string(s.epr)),
                                  "--table", std::string(to_string(s.table)),
                                  "--seed", std::to_string(s.seed),
                                  "--message", s.message,
                                  "--trials", std::to_string(s.trials),
                                  "--format", s.format};
    if (!s.out.empty()) {
        a.push_back("--out");
        a.push_back(s.out);
    }
    return a;
}

/// Parses flags (without the program name). Throws CLI::ParseError for
/// malformed flags and ConfigError for inconsistent combinations; a
/// CLI::CallForHelp is thrown for --help.
inline RunSpec parse_args(std::vector<std::string> args) {
    RunSpec s;
    CLI::App app{"Multiparty controlled teleportation simulator", "mcqt"};
    const std::map<std::string, Mode> modes = {{"run", Mode::Run},
                                               {"enumerate", Mode::Enumerate},
                                               {"reconcile", Mode::Reconcile},
                                               {"montecarlo", Mode::MonteCarlo}};
    const std::map<std::string, EprVariant> eprs = {{"phi+", EprVariant::PhiPlus},
                                                    {"phi-", EprVariant::PhiMinus},
                                                    {"psi+", EprVariant::PsiPlus},
                                                    {"psi-", EprVariant::PsiMinus}};
    const std::map<std::string, TableProvenance> tables = {{"paper", TableProvenance::PaperStated},
                                                           {"derived", TableProvenance::OracleDerived}};
    auto keys = [](const auto& map) {
        std::vector<std::string> k;
        for (const auto& [name, value] : map) k.push_back(name);
        return k;
    };
    std::string mode, epr = "phi+", table = "derived";
    app.add_option("--mode", mode, "run | enumerate | reconcile | montecarlo")
        ->required()
        ->check(CLI::IsMember(keys(modes)));
    app.add_option("--n", s.n, "message qubits (N >= 1)")->check(CLI::PositiveNumber);
    app.add_option("--m", s.m, "controllers (M >= 0)")->check(CLI::NonNegativeNumber);
    app.add_option("--epr", epr, "channel pair state")->check(CLI::IsMember(keys(eprs)));
    app.add_option("--table", table, "correction rules: paper | derived")
        ->check(CLI::IsMember(keys(tables)));
    app.add_option("--seed", s.seed, "64-bit seed for the mt19937_64 engine");
    app.add_option("--message", s.message, "state file, 'random' or 'example3x2'");
    app.add_option("--trials", s.trials, "montecarlo trials")->check(CLI::PositiveNumber);
    app.add_option("--out", s.out, "report path (default stdout)");
    app.add_option("--format", s.format, "json | text (text: reconcile only)")
        ->check(CLI::IsMember({"json", "text"}));
    std::reverse(args.begin(), args.end());
    app.parse(args);
    s.mode = modes.at(mode);
    s.epr = eprs.at(epr);
    s.table = tables.at(table);

    if (s.format == "text" && s.mode != Mode::Reconcile) {
        throw ConfigError("--format text is only available for --mode reconcile");
    }
    if (s.message == "example3x2" && s.n != 3) {
        throw ConfigError("message example3x2 needs --n 3");
    }
    if (s.mode != Mode::Reconcile) s.config().validate();
    return s;
}

inline MessageState load_message(const RunSpec& s) {
    if (s.message == "random") {
        Rng rng(mix_seed(s.seed));
        return MessageState::random(s.n, rng);
    }
    if (s.message == "example3x2") return example_message();
    MessageState msg{read_state_file(s.message)};
    if (msg.n() != s.n) {
        throw ConfigError("message file holds " + std::to_string(msg.n()) + " qubits but --n is " +
                          std::to_string(s.n));
    }
    return msg;
}

inline Json header(const RunSpec& s) {
    return Json{{"schema_version", kReportSchemaVersion},
                {"mode", to_string(s.mode)},
                {"argv", to_args(s)}};
}

struct Outcome {
    int exit_code = 0;
    std::string report;
};

/// Executes a parsed spec and returns the report text plus exit code.
inline Outcome execute(const RunSpec& s) {
    Json j = header(s);
    int code = 0;
    switch (s.mode) {
    case Mode::Run: {
        const auto msg = load_message(s);
        Rng rng(s.seed);
        const Transcript t = run(s.config(), msg, rng);
        j["transcript"] = to_json(t);
        if (t.fidelity < 1.0 - kNormTolerance) code = 2;
        break;
    }
    case Mode::Enumerate: {
        const auto cfg = s.config();
        const auto msg = load_message(s);
        const auto reports = enumerate_branches(cfg, msg);
        const auto sum = summarize(cfg, reports);
        Json branches = Json::array();
        for (const auto& r : reports) branches.push_back(to_json(r));
        j["config"] = to_json(cfg);
        j["summary"] = to_json(sum);
        j["branches"] = branches;
        const std::size_t failures =
            s.table == TableProvenance::PaperStated ? sum.failures_paper : sum.failures_derived;
        const bool uniform_ok = sum.max_uniform_deviation <= kNormTolerance &&
                                std::abs(sum.probability_sum - 1.0) <= 1e-9;
        j["selected_table"] = to_string(s.table);
        j["failed_branches"] = failures;
        if (failures > 0 || !uniform_ok) code = 2;
        break;
    }
    case Mode::Reconcile: {
        ProtocolConfig cfg{s.n, s.m, s.epr};
        const auto derived = derive_corrections(cfg);
        const auto rep = reconcile(paper_table(s.epr), derived);
        if (s.format == "text") return {0, render_text(rep)};
        j["paper_table"] = to_json(paper_table(s.epr));
        j["derived_table"] = to_json(derived);
        j["reconciliation"] = to_json(rep);
        break;
    }
    case Mode::MonteCarlo: {
        const auto cfg = s.config();
        const auto msg = load_message(s);
        const auto st = sample_branches(cfg, msg, s.trials, s.seed);
        j["config"] = to_json(cfg);
        j["statistics"] = to_json(st);
        if (!st.within_bound()) code = 2;
        if (s.table == TableProvenance::OracleDerived && st.min_fidelity < 1.0 - kNormTolerance) code = 2;
        break;
    }
    }
    return {code, j.dump(2) + "\n"};
}

/// Full entry point: parse, execute, write. Diagnostics go to `err`.
inline int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunSpec spec;
    try {
        spec = parse_args(args);
    } catch (const CLI::CallForHelp&) {
        out << "usage: mcqt --mode {run,enumerate,reconcile,montecarlo} [--n N] [--m M]\n"
               "            [--epr {phi+,phi-,psi+,psi-}] [--table {paper,derived}] [--seed S]\n"
               "            [--message FILE|random|example3x2] [--trials T] [--out PATH]\n"
               "            [--format {json,text}]\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    Outcome result;
    try {
        result = execute(spec);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (spec.out.empty()) {
        out << result.report;
    } else {
        std::ofstream f(spec.out, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << spec.out << "\n";
            return 1;
        }
        f << result.report;
    }
    return result.exit_code;
}

} // namespace mcqt::cli

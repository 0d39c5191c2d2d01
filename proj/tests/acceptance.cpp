// Acceptance checks AC1..AC7. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include "mcqt/cli.hpp"
#include "mcqt/mcqt.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace mcqt;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
    bool pass;
    std::string detail;
};

MessageState seeded_message(std::size_t n, std::uint64_t seed) {
    Rng rng(mix_seed(seed));
    return MessageState::random(n, rng);
}

bool close_up_to_phase(const StateVector& expected, const StateVector& actual, double tol) {
    if (expected.dimension() != actual.dimension()) return false;
    const Amplitude ip = inner_product(actual, expected);
    const Amplitude phase = std::abs(ip) > 0 ? ip / std::abs(ip) : Amplitude{1.0};
    for (std::size_t k = 0; k < expected.dimension(); ++k) {
        if (std::abs(expected[k] - phase * actual[k]) > tol) return false;
    }
    return true;
}

Verdict ac1_correctness() {
    const auto t0 = Clock::now();
    std::size_t runs = 0, branches = 0, failures = 0;
    double worst = 1.0;
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::size_t m = 0; m <= 3; ++m) {
            for (EprVariant v : kAllEprVariants) {
                const ProtocolConfig cfg{n, m, v};
                for (std::uint64_t seed = 1; seed <= 20; ++seed) {
                    const auto reports = enumerate_branches(cfg, seeded_message(n, seed));
                    ++runs;
                    for (const auto& r : reports) {
                        ++branches;
                        worst = std::min(worst, r.fidelity_derived);
                        if (r.fidelity_derived < 1.0 - 1e-10) ++failures;
                    }
                }
            }
        }
    }
    const double secs = seconds_since(t0);
    char buf[200];
    std::snprintf(buf, sizeof buf, "%zu enumerations, %zu branches, %zu below 1-1e-10, min fidelity %.15f, %.1fs",
                  runs, branches, failures, worst, secs);
    return {failures == 0 && secs < 120.0, buf};
}

Verdict ac2_statistics() {
    double worst_dev = 0.0;
    double worst_sum = 0.0;
    bool counts_ok = true;
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::size_t m = 0; m <= 3; ++m) {
            for (EprVariant v : kAllEprVariants) {
                const ProtocolConfig cfg{n, m, v};
                const auto reports = enumerate_branches(cfg, seeded_message(n, 1000 + n * 10 + m));
                const auto s = summarize(cfg, reports);
                worst_dev = std::max(worst_dev, s.max_uniform_deviation);
                worst_sum = std::max(worst_sum, std::abs(s.probability_sum - 1.0));
                counts_ok = counts_ok && s.branches == branch_count(cfg);
            }
        }
    }
    const auto st = sample_branches({2, 2}, seeded_message(2, 2), 10000, 20240601);
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "max |p - 4^-N 2^-M| = %.2e, max |sum - 1| = %.2e; montecarlo 10^4 at (2,2): max |z| = %.2f over %zu branches",
                  worst_dev, worst_sum, st.max_abs_z, st.counts.size());
    return {counts_ok && worst_dev <= 1e-10 && st.within_bound(), buf};
}

Verdict ac3_worked_example() {
    const ProtocolConfig cfg{3, 2};
    const RegisterLayout L(cfg);
    const auto msg = example_message();
    Session s(cfg, msg);
    s.measure_pair(BellOutcome::PhiPlus);
    s.measure_pair(BellOutcome::PsiMinus);
    s.measure_ghz_pair(BellOutcome::PhiMinus);

    // Bob's qubits and the controllers after U_i (and the step-4 corrections):
    // x_k on |k> (x) |00> for even k, |k> (x) |11> for odd k.
    std::vector<Qubit> bc = L.b_qubits();
    for (Qubit c : L.c_qubits()) bc.push_back(c);
    std::vector<Amplitude> expected(32, Amplitude{0.0});
    for (std::size_t k = 0; k < 8; ++k) expected[k * 4 + ((k & 1) ? 3 : 0)] = msg.state[k];
    const bool intermediate = close_up_to_phase(unchecked_state(5, expected), extract_subsystem(s.state(), bc), 1e-10);

    s.controllers_hadamard();
    bool finals = true;
    std::string finals_detail;
    for (int c1 : {0, 1}) {
        for (int c2 : {0, 1}) {
            Session b = s;
            b.measure_controller(c1);
            b.measure_controller(c2);
            const double f = b.apply_final_correction();
            finals = finals && f >= 1.0 - 1e-10 && close_up_to_phase(msg.state, b.transcript().bob_state, 1e-10);
            finals_detail += " " + std::to_string(c1) + std::to_string(c2) + "->" +
                             std::string(to_string(b.transcript().final_correction));
        }
    }
    return {intermediate && finals,
            std::string("intermediate state ") + (intermediate ? "matches" : "differs") +
                "; all controller-bit branches recover the message after" + finals_detail};
}

Verdict ac4_reconciliation() {
    const auto rep = reconcile(paper_table(EprVariant::PhiPlus), derive_corrections({3, 2}));
    std::size_t t12 = 0, t12_ok = 0;
    for (const auto& c : rep.cells) {
        if (c.cell.table == "I" || c.cell.table == "II") {
            ++t12;
            t12_ok += c.match ? 1 : 0;
        }
    }
    bool inverted = !rep.parity.empty();
    for (const auto& p : rep.parity) inverted = inverted && p.ones_reading == RuleVerdict::Inverted;

    std::size_t typos = 0;
    bool typo_cells_ok = true;
    for (EprVariant v : {EprVariant::PsiPlus, EprVariant::PsiMinus}) {
        const auto r = reconcile(paper_table(v), derive_corrections({3, 2, v}));
        for (const auto& c : r.cells) {
            if (!c.cell.typo) continue;
            ++typos;
            typo_cells_ok = typo_cells_ok && (c.cell.table == "V" || c.cell.table == "VI") &&
                            c.cell.column == TableColumn::PairCorrection;
        }
    }
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "Tables I-II: %zu/%zu cells certified; Table III parity column %s; %zu malformed cells flagged in Tables V-VI",
                  t12_ok, t12, inverted ? "inverted" : "NOT inverted", typos);
    return {t12 == 12 && t12_ok == 12 && inverted && typos == 4 && typo_cells_ok, buf};
}

Verdict ac5_control() {
    const ProtocolConfig cfg{2, 2};
    const auto msg = seeded_message(2, 5);
    std::size_t impure = 0, total = 0;
    double worst = 0.0;
    for (BellOutcome o1 : kAllBellOutcomes) {
        for (BellOutcome o2 : kAllBellOutcomes) {
            Session s(cfg, msg);
            s.measure_pair(o1);
            s.measure_ghz_pair(o2);
            ++total;
            try {
                (void)s.bob_state();
            } catch (const SubsystemNotPure&) {
                ++impure;
            }
            worst = std::max(worst, reduce(s.state(), s.layout().b_qubits()).max_eigenvalue);
        }
    }
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "truncated after step 4: %zu/%zu branches leave Bob impure (largest eigenvalue %.6f)", impure,
                  total, worst);
    return {impure == total, buf};
}

Verdict ac6_determinism() {
    const std::vector<std::vector<std::string>> commands = {
        {"--mode", "run", "--n", "3", "--m", "2", "--seed", "99", "--epr", "psi-"},
        {"--mode", "enumerate", "--n", "2", "--m", "3", "--seed", "99"},
        {"--mode", "montecarlo", "--n", "2", "--m", "1", "--trials", "2000", "--seed", "99"},
        {"--mode", "reconcile", "--m", "2"},
    };
    std::size_t identical = 0;
    for (const auto& args : commands) {
        std::ostringstream a, b, err;
        const int ca = cli::main(args, a, err);
        const int cb = cli::main(args, b, err);
        if (ca == cb && a.str() == b.str() && !a.str().empty()) ++identical;
    }
    Rng r1(7), r2(7);
    const auto msg = seeded_message(3, 7);
    bool transcripts = true;
    for (int k = 0; k < 50; ++k) {
        const auto t1 = run({3, 3}, msg, r1);
        const auto t2 = run({3, 3}, msg, r2);
        transcripts = transcripts && to_json(t1).dump() == to_json(t2).dump() && t1.final_state == t2.final_state;
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "%zu/%zu CLI reports byte-identical across repeated runs; 50 seeded transcripts %s",
                  identical, commands.size(), transcripts ? "identical" : "differ");
    return {identical == commands.size() && transcripts, buf};
}

Verdict ac7_scale() {
    const ProtocolConfig cfg{4, 4};
    const auto t0 = Clock::now();
    const auto reports = enumerate_branches(cfg, seeded_message(4, 4));
    const double secs = seconds_since(t0);
    const auto s = summarize(cfg, reports);
    char buf[200];
    std::snprintf(buf, sizeof buf, "(n=4, m=4): %zu-qubit register, %zu branches, %zu failures, %.2fs",
                  cfg.register_size(), s.branches, s.failures_derived, secs);
    return {s.branches == 4096 && s.failures_derived == 0 && secs < 60.0, buf};
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"AC1 teleportation correctness", ac1_correctness},
        {"AC2 branch statistics", ac2_statistics},
        {"AC3 worked example", ac3_worked_example},
        {"AC4 reconciliation", ac4_reconciliation},
        {"AC5 control property", ac5_control},
        {"AC6 determinism", ac6_determinism},
        {"AC7 scale guard", ac7_scale},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %s: %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
        std::fflush(stdout);
        failed += v.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}

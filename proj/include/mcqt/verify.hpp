#pragma once

// Exhaustive branch enumeration, the brute-force correction oracle, and the
// cell-by-cell comparison of printed against derived correction rules.

#include "mcqt/protocol.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <future>
#include <sstream>
#include <string>
#include <vector>

namespace mcqt {

inline constexpr std::uint64_t kDefaultBranchBudget = std::uint64_t{1} << 20;

inline std::uint64_t branch_count(const ProtocolConfig& c) {
    if (2 * c.n + c.m >= 64) return ~std::uint64_t{0};
    return std::uint64_t{1} << (2 * c.n + c.m);
}

//------------------------------------------------------------------------------
// Branch enumeration
//------------------------------------------------------------------------------

struct BranchReport {
    std::vector<BellOutcome> bell; ///< (A_1,D_1) .. (A_N,D_N)
    std::vector<int> bits;         ///< C_1 .. C_M
    double probability = 0.0;
    double fidelity_paper = 0.0;
    double fidelity_derived = 0.0;
    Pauli final_paper = Pauli::Identity;
    Pauli final_derived = Pauli::Identity;

    /// "phi+.psi-.phi-|01"
    std::string id() const {
        std::string s;
        for (std::size_t i = 0; i < bell.size(); ++i) {
            if (i) s += '.';
            s += to_string(bell[i]);
        }
        s += '|';
        for (int b : bits) s += static_cast<char>('0' + b);
        return s;
    }
};

namespace detail {

using Leaf = std::function<void(const Session&)>;

inline void descend(Session s, const Leaf& leaf) {
    try {
        switch (s.phase()) {
        case Session::Phase::PairMeasurements:
            for (BellOutcome o : kAllBellOutcomes) {
                Session next = s;
                next.measure_pair(o);
                descend(std::move(next), leaf);
            }
            return;
        case Session::Phase::GhzMeasurement:
            for (BellOutcome o : kAllBellOutcomes) {
                Session next = s;
                next.measure_ghz_pair(o);
                descend(std::move(next), leaf);
            }
            return;
        case Session::Phase::ControllerHadamards:
            s.controllers_hadamard();
            descend(std::move(s), leaf);
            return;
        case Session::Phase::ControllerMeasurements:
            for (int bit : {0, 1}) {
                Session next = s;
                next.measure_controller(bit);
                descend(std::move(next), leaf);
            }
            return;
        case Session::Phase::FinalCorrection:
            s.apply_final_correction();
            leaf(s);
            return;
        case Session::Phase::Done:
            leaf(s);
            return;
        }
    } catch (const ImpossibleBranch&) {
        // zero-weight branch: nothing to report
    }
}

/// Leaves in lexicographic (enum-order) branch order. The four subtrees of the
/// first measurement run concurrently and are concatenated in order.
inline std::vector<Transcript> all_leaves(const ProtocolConfig& config,
                                          const MessageState& message, CorrectionTable table) {
    Session root(config, message, std::move(table));
    std::vector<std::future<std::vector<Transcript>>> parts;
    for (BellOutcome o : kAllBellOutcomes) {
        parts.push_back(std::async(std::launch::async, [root, o] {
            std::vector<Transcript> out;
            Session s = root;
            try {
                if (s.phase() == Session::Phase::PairMeasurements) {
                    s.measure_pair(o);
                } else {
                    s.measure_ghz_pair(o);
                }
            } catch (const ImpossibleBranch&) {
                return out;
            }
            descend(std::move(s), [&out](const Session& leaf) {
                Transcript t = leaf.transcript();
                t.final_state = StateVector{}; // not needed; keeps memory flat
                out.push_back(std::move(t));
            });
            return out;
        }));
    }
    std::vector<Transcript> all;
    for (auto& p : parts) {
        auto chunk = p.get();
        std::move(chunk.begin(), chunk.end(), std::back_inserter(all));
    }
    return all;
}

} // namespace detail

/// Runs every branch (all N Bell outcomes x all M controller bits) through
/// forced projections, once with the printed rules and once with the derived
/// rules. Zero-probability branches are skipped.
inline std::vector<BranchReport> enumerate_branches(const ProtocolConfig& config,
                                                    const MessageState& message,
                                                    std::uint64_t budget = kDefaultBranchBudget) {
    config.validate();
    if (branch_count(config) > budget) {
        throw BudgetExceeded(std::to_string(branch_count(config)) +
                             " branches exceed the budget of " + std::to_string(budget));
    }
    auto derived = std::async(std::launch::async, [&] {
        return detail::all_leaves(config, message, derived_table_for(config.epr_variant, config.m));
    });
    auto paper = detail::all_leaves(config, message, paper_table(config.epr_variant));
    auto with_derived = derived.get();

    std::vector<BranchReport> out;
    out.reserve(with_derived.size());
    for (std::size_t k = 0; k < with_derived.size(); ++k) {
        const Transcript& d = with_derived[k];
        BranchReport r;
        r.bell = d.bell_outcomes;
        r.bits = d.controller_bits;
        r.probability = d.branch_probability;
        r.fidelity_derived = d.fidelity;
        r.final_derived = d.final_correction;
        // Same branch order on both passes; outcome weights do not depend on
        // the corrections, so the lists line up one to one.
        if (k < paper.size() && paper[k].bell_outcomes == d.bell_outcomes &&
            paper[k].controller_bits == d.controller_bits) {
            r.fidelity_paper = paper[k].fidelity;
            r.final_paper = paper[k].final_correction;
        } else {
            throw std::logic_error("paper and derived enumerations diverged at branch " +
                                   std::to_string(k));
        }
        out.push_back(std::move(r));
    }
    return out;
}

struct EnumerationSummary {
    std::size_t branches = 0;
    double probability_sum = 0.0;
    double max_uniform_deviation = 0.0; ///< max |p - 4^-N 2^-M|
    double min_fidelity_paper = 1.0;
    double min_fidelity_derived = 1.0;
    std::size_t failures_paper = 0;     ///< fidelity below 1 - 1e-10
    std::size_t failures_derived = 0;
};

inline EnumerationSummary summarize(const ProtocolConfig& config,
                                    std::span<const BranchReport> reports) {
    EnumerationSummary s;
    const double uniform = 1.0 / static_cast<double>(branch_count(config));
    for (const auto& r : reports) {
        ++s.branches;
        s.probability_sum += r.probability;
        s.max_uniform_deviation = std::max(s.max_uniform_deviation, std::abs(r.probability - uniform));
        s.min_fidelity_paper = std::min(s.min_fidelity_paper, r.fidelity_paper);
        s.min_fidelity_derived = std::min(s.min_fidelity_derived, r.fidelity_derived);
        if (r.fidelity_paper < 1.0 - kNormTolerance) ++s.failures_paper;
        if (r.fidelity_derived < 1.0 - kNormTolerance) ++s.failures_derived;
    }
    return s;
}

//------------------------------------------------------------------------------
// Sampled runs
//------------------------------------------------------------------------------

struct MonteCarloStats {
    std::size_t trials = 0;
    std::vector<std::size_t> counts; ///< per branch, enumeration order
    double expected_per_branch = 0.0;
    double max_abs_z = 0.0;          ///< worst |count - T p| / sqrt(T p (1 - p))
    double z_bound = 5.0;
    double min_fidelity = 1.0;

    bool within_bound() const { return max_abs_z <= z_bound; }
};

/// Index of a branch in enumeration order: Bell outcomes as base-4 digits
/// (first pair most significant), then controller bits.
inline std::size_t branch_index(std::span<const BellOutcome> bell, std::span<const int> bits) {
    std::size_t idx = 0;
    for (BellOutcome o : bell) idx = idx * 4 + index_of(o);
    for (int b : bits) idx = idx * 2 + static_cast<std::size_t>(b);
    return idx;
}

/// `trials` sampled runs drawing from one engine seeded with `seed`, checked
/// against the uniform branch distribution with a per-branch 5-sigma bound.
inline MonteCarloStats sample_branches(const ProtocolConfig& config, const MessageState& message,
                                       std::size_t trials, std::uint64_t seed,
                                       std::uint64_t budget = kDefaultBranchBudget) {
    config.validate();
    if (branch_count(config) > budget) throw BudgetExceeded("too many branches to tabulate");
    MonteCarloStats st;
    st.trials = trials;
    st.counts.assign(branch_count(config), 0);
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const Transcript tr = run(config, message, rng);
        ++st.counts[branch_index(tr.bell_outcomes, tr.controller_bits)];
        st.min_fidelity = std::min(st.min_fidelity, tr.fidelity);
    }
    const double p = 1.0 / static_cast<double>(st.counts.size());
    st.expected_per_branch = static_cast<double>(trials) * p;
    const double sigma = std::sqrt(static_cast<double>(trials) * p * (1.0 - p));
    for (std::size_t c : st.counts) {
        const double dev = std::abs(static_cast<double>(c) - st.expected_per_branch);
        st.max_abs_z = std::max(st.max_abs_z, sigma > 0.0 ? dev / sigma : dev);
    }
    return st;
}

//------------------------------------------------------------------------------
// Correction oracle
//------------------------------------------------------------------------------

inline constexpr std::uint64_t kProbeSeed = 0x0DDB'A11ULL;

/// All 2^n basis states plus one full-support state with distinct phases.
/// Basis states pin the bit flips; the dense probe pins relative signs.
inline std::vector<MessageState> oracle_probes(std::size_t n) {
    std::vector<MessageState> probes;
    for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) probes.push_back({make_basis_state(n, k)});
    Rng rng(kProbeSeed);
    probes.push_back(MessageState::random(n, rng));
    return probes;
}

struct OracleResult {
    CorrectionTable table;
    /// Step-4 (U_N, U_Cj) pairs that restore the GHZ code word up to a phase
    /// Bob can still undo on B_N, per step-4 outcome.
    std::array<std::vector<std::pair<Pauli, Pauli>>, 4> admissible_ghz;
};

namespace detail {

inline StateVector pairs_state(EprVariant v, std::size_t count) {
    StateVector s;
    for (std::size_t i = 0; i < count; ++i) s = tensor(s, bell_state(as_bell(v)));
    return s;
}

/// Message with its last qubit copied onto `copies` extra qubits:
/// |k_1 .. k_N> -> |k_1 .. k_N k_N .. k_N>.
inline StateVector encode_last_qubit(const StateVector& msg, std::size_t copies) {
    const std::size_t n = msg.num_qubits();
    std::vector<Amplitude> amps(std::size_t{1} << (n + copies), Amplitude{0.0});
    const std::size_t ones = (std::size_t{1} << copies) - 1;
    for (std::size_t k = 0; k < msg.dimension(); ++k) {
        const std::size_t idx = (k << copies) | ((k & 1) ? ones : 0);
        amps[idx] = msg[k];
    }
    return unchecked_state(n + copies, std::move(amps));
}

inline bool matches(const StateVector& a, const StateVector& b) {
    return fidelity(a, b) >= 1.0 - kNormTolerance;
}

inline std::string list(const std::vector<Pauli>& ps) {
    std::string s;
    for (Pauli p : ps) {
        if (!s.empty()) s += ", ";
        s += to_string(p);
    }
    return s;
}

/// Unique Pauli on pair i's Bob qubit, per outcome. Pairs j != i stay
/// unmeasured; the target moves the message's i-th qubit onto B_i.
inline PauliMap derive_pair_corrections(const ProtocolConfig& config) {
    const RegisterLayout L(config);
    const auto probes = oracle_probes(config.n);
    PauliMap result{};
    std::array<bool, 4> seen{};
    for (std::size_t i = 0; i + 1 < config.n; ++i) {
        // Kept: message slots (with B_i replacing A_i), the untouched pairs, then
        // the GHZ qubits.
        std::vector<Qubit> keep;
        for (std::size_t k = 0; k < config.n; ++k) keep.push_back(k == i ? L.b(i) : L.a(k));
        for (std::size_t j = 0; j + 1 < config.n; ++j) {
            if (j == i) continue;
            keep.push_back(L.d(j));
            keep.push_back(L.b(j));
        }
        keep.push_back(L.d(config.n - 1));
        keep.push_back(L.b(config.n - 1));
        for (std::size_t j = 0; j < config.m; ++j) keep.push_back(L.c(j));
        const StateVector rest =
            tensor(pairs_state(config.epr_variant, config.n - 2), ghz_state(config.m + 2));
        const Qubit bi_pos = i;

        for (BellOutcome o : kAllBellOutcomes) {
            std::vector<Pauli> ok(kAllPaulis.begin(), kAllPaulis.end());
            for (const auto& probe : probes) {
                const StateVector sys =
                    compose_system(probe, prepare_channel(config), L);
                auto proj = bell_project(sys, L.a(i), L.d(i), o);
                if (!proj.possible()) throw OracleError("impossible pair outcome during derivation");
                const StateVector kept = extract_subsystem(*proj.state, keep);
                const StateVector target = tensor(probe.state, rest);
                std::erase_if(ok, [&](Pauli p) { return !matches(apply_pauli(kept, bi_pos, p), target); });
            }
            if (ok.empty()) {
                throw OracleError("no Pauli on B_" + std::to_string(i + 1) + " recovers the message after " +
                                  std::string(to_string(o)));
            }
            if (ok.size() > 1) {
                throw OracleError("ambiguous pair correction after " + std::string(to_string(o)) +
                                  ": " + list(ok));
            }
            const auto idx = index_of(o);
            if (seen[idx] && result[idx] != ok.front()) {
                throw OracleError("pair corrections differ between pairs");
            }
            result[idx] = ok.front();
            seen[idx] = true;
        }
    }
    return result;
}

/// Projects (A_N, D_N) with outcome o for every probe and returns the state of
/// everything except A_N, D_N in the order
/// A_1..A_{N-1}, B_N, C_1..C_M, (D_i, B_i) for i < N, plus the matching target
/// (message with its last qubit spread over B_N and the controllers).
struct GhzStage {
    std::vector<StateVector> kept;
    std::vector<StateVector> targets;
};

inline GhzStage ghz_stage(const ProtocolConfig& config, BellOutcome o) {
    const RegisterLayout L(config);
    std::vector<Qubit> keep;
    for (std::size_t k = 0; k + 1 < config.n; ++k) keep.push_back(L.a(k));
    keep.push_back(L.b(config.n - 1));
    for (std::size_t j = 0; j < config.m; ++j) keep.push_back(L.c(j));
    for (std::size_t i = 0; i + 1 < config.n; ++i) {
        keep.push_back(L.d(i));
        keep.push_back(L.b(i));
    }
    const StateVector pairs = pairs_state(config.epr_variant, config.n - 1);
    GhzStage out;
    for (const auto& probe : oracle_probes(config.n)) {
        const StateVector sys = compose_system(probe, prepare_channel(config), L);
        auto proj = bell_project(sys, L.a(config.n - 1), L.d(config.n - 1), o);
        if (!proj.possible()) throw OracleError("impossible GHZ outcome during derivation");
        out.kept.push_back(extract_subsystem(*proj.state, keep));
        out.targets.push_back(tensor(encode_last_qubit(probe.state, config.m), pairs));
    }
    return out;
}

/// 0: not admissible, 1: exact, 2: exact up to Z on B_N.
inline int ghz_fit(const ProtocolConfig& config, const GhzStage& stage, Pauli un, Pauli uc) {
    const Qubit bn_pos = config.n - 1;
    bool exact = true, twisted = true;
    for (std::size_t p = 0; p < stage.kept.size(); ++p) {
        StateVector s = stage.kept[p];
        s.apply(bn_pos, un);
        for (std::size_t j = 0; j < config.m; ++j) s.apply(bn_pos + 1 + j, uc);
        exact = exact && matches(s, stage.targets[p]);
        twisted = twisted && matches(s, apply_pauli(stage.targets[p], bn_pos, Pauli::Z));
        if (!exact && !twisted) return 0;
    }
    return exact ? 1 : 2;
}

} // namespace detail

/// Brute-force derivation of every correction rule for one configuration.
///
///  * U_i: the unique Pauli restoring the message after each pair outcome.
///  * U_N: the unique Pauli that is exact with no controllers (plain
///    teleportation through the GHZ qubit pair).
///  * U_Cj: among the Paulis that restore the GHZ code word (up to a Z Bob can
///    still apply), controllers copy U_N when a bit flip is needed and do
///    nothing otherwise. The flip part is checked to be unique.
///  * final U_N: for every controller bit string, the unique Pauli on B_N
///    giving fidelity 1; it must depend on the bits only through their parity.
inline OracleResult run_oracle(const ProtocolConfig& config) {
    config.validate();
    OracleResult res;
    CorrectionTable& t = res.table;
    t.epr_variant = config.epr_variant;
    t.provenance = TableProvenance::OracleDerived;
    t.m_parity = parity_of_count(config.m);

    // Step 3. With n = 1 there are no pairs; derive on a two-qubit message.
    ProtocolConfig pair_cfg = config;
    if (config.n < 2) pair_cfg = {2, 0, config.epr_variant};
    t.u_i = detail::derive_pair_corrections(pair_cfg);

    // Step 4.
    ProtocolConfig bare = config;
    bare.m = 0;
    for (BellOutcome o : kAllBellOutcomes) {
        const auto oi = index_of(o);
        const auto bare_stage = detail::ghz_stage(bare, o);
        std::vector<Pauli> exact_un;
        for (Pauli u : kAllPaulis) {
            if (detail::ghz_fit(bare, bare_stage, u, Pauli::Identity) == 1) exact_un.push_back(u);
        }
        if (exact_un.size() != 1) {
            throw OracleError("step-4 correction on B_N after " + std::string(to_string(o)) +
                              (exact_un.empty() ? " does not exist" : " is ambiguous: " + detail::list(exact_un)));
        }
        const Pauli un = exact_un.front();

        const auto stage = detail::ghz_stage(config, o);
        for (Pauli u : kAllPaulis) {
            for (Pauli c : kAllPaulis) {
                if (detail::ghz_fit(config, stage, u, c) != 0) res.admissible_ghz[oi].emplace_back(u, c);
            }
        }
        auto& adm = res.admissible_ghz[oi];
        if (adm.empty()) throw OracleError("no step-4 correction restores the GHZ code word");
        for (const auto& [u, c] : adm) {
            const bool same_flip = flips_bit(u) == flips_bit(adm.front().first) &&
                                   (config.m == 0 || flips_bit(c) == flips_bit(adm.front().second));
            if (!same_flip) throw OracleError("step-4 bit-flip correction is ambiguous");
        }
        const bool controllers_flip = config.m > 0 ? flips_bit(adm.front().second) : flips_bit(un);
        if (controllers_flip != flips_bit(un)) {
            throw OracleError("controllers and Bob need different bit flips");
        }
        const Pauli uc = controllers_flip ? un : Pauli::Identity;
        if (std::find(adm.begin(), adm.end(), std::pair{un, uc}) == adm.end()) {
            throw OracleError("canonical step-4 correction is not admissible");
        }
        t.u_n[oi] = un;
        t.u_c[oi] = uc;
    }

    // Steps 5-6.
    const RegisterLayout L(config);
    std::vector<Qubit> keep;
    for (std::size_t k = 0; k + 1 < config.n; ++k) keep.push_back(L.a(k));
    keep.push_back(L.b(config.n - 1));
    for (std::size_t i = 0; i + 1 < config.n; ++i) {
        keep.push_back(L.d(i));
        keep.push_back(L.b(i));
    }
    const Qubit bn_pos = config.n - 1;
    const StateVector pairs = detail::pairs_state(config.epr_variant, config.n - 1);
    const auto probes = oracle_probes(config.n);

    for (BellOutcome o : kAllBellOutcomes) {
        const auto oi = index_of(o);
        std::vector<StateVector> after_h;
        for (const auto& probe : probes) {
            StateVector sys = compose_system(probe, prepare_channel(config), L);
            auto proj = bell_project(std::move(sys), L.a(config.n - 1), L.d(config.n - 1), o);
            StateVector s = std::move(*proj.state);
            s.apply(L.b(config.n - 1), t.u_n[oi]);
            for (std::size_t j = 0; j < config.m; ++j) s.apply(L.c(j), t.u_c[oi]);
            for (std::size_t j = 0; j < config.m; ++j) s.apply_hadamard(L.c(j));
            after_h.push_back(std::move(s));
        }
        std::array<std::optional<Pauli>, 2> rule;
        for (std::size_t bits = 0; bits < (std::size_t{1} << config.m); ++bits) {
            std::vector<Pauli> ok(kAllPaulis.begin(), kAllPaulis.end());
            for (std::size_t p = 0; p < probes.size(); ++p) {
                StateVector s = after_h[p];
                for (std::size_t j = 0; j < config.m; ++j) {
                    const int bit = static_cast<int>((bits >> (config.m - 1 - j)) & 1);
                    auto proj = z_project(std::move(s), L.c(j), bit);
                    if (!proj.possible()) throw OracleError("impossible controller outcome");
                    s = std::move(*proj.state);
                }
                const StateVector kept = extract_subsystem(s, keep);
                const StateVector target = tensor(probes[p].state, pairs);
                std::erase_if(ok, [&](Pauli f) {
                    return !detail::matches(apply_pauli(kept, bn_pos, f), target);
                });
            }
            if (ok.size() != 1) {
                throw OracleError("final correction after " + std::string(to_string(o)) + " is " +
                                  (ok.empty() ? "missing" : "ambiguous: " + detail::list(ok)));
            }
            const auto pi = index_of(parity_of_count(static_cast<std::size_t>(std::popcount(bits))));
            if (rule[pi] && *rule[pi] != ok.front()) {
                throw OracleError("final correction depends on more than the parity of the bits");
            }
            rule[pi] = ok.front();
        }
        // With no controllers only the even row is reachable; the odd row is
        // filled with the Z-complement so the map stays total.
        if (!rule[1]) rule[1] = with_phase_flip(*rule[0]);
        t.final_u_n[oi] = {*rule[0], *rule[1]};
    }
    return res;
}

inline CorrectionTable derive_corrections(const ProtocolConfig& config) {
    return run_oracle(config).table;
}

//------------------------------------------------------------------------------
// Reconciliation
//------------------------------------------------------------------------------

struct CellVerdict {
    PrintedCell cell;
    Pauli derived;
    bool match = false; ///< printed value equals the derived value (never for typo cells)
};

enum class RuleVerdict : std::uint8_t { Matches, Inverted, Differs };

inline constexpr std::string_view to_string(RuleVerdict v) {
    switch (v) {
    case RuleVerdict::Matches: return "matches";
    case RuleVerdict::Inverted: return "inverted";
    case RuleVerdict::Differs: return "differs";
    }
    return "?";
}

/// Printed parity rule against the derived one for one step-4 outcome.
struct ParityVerdict {
    BellOutcome ghz_outcome;
    Parity m_parity;
    std::array<Pauli, 2> paper;   ///< [even, odd] count of "1" bits
    std::array<Pauli, 2> derived;
    RuleVerdict ones_reading;     ///< parity counts the announced 1s (as printed)
    RuleVerdict zeros_reading;    ///< parity counts the announced 0s instead
};

struct ReconciliationReport {
    EprVariant epr_variant;
    Parity m_parity;
    std::vector<CellVerdict> cells;
    std::vector<ParityVerdict> parity;

    std::size_t matches() const {
        return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.match; }));
    }
    std::size_t typos() const {
        return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.cell.typo; }));
    }
};

namespace detail {

inline RuleVerdict compare_rule(const std::array<Pauli, 2>& paper, const std::array<Pauli, 2>& derived) {
    if (paper == derived) return RuleVerdict::Matches;
    if (paper[0] == derived[1] && paper[1] == derived[0]) return RuleVerdict::Inverted;
    return RuleVerdict::Differs;
}

} // namespace detail

inline ReconciliationReport reconcile(const CorrectionTable& paper, const CorrectionTable& derived) {
    if (paper.epr_variant != derived.epr_variant) {
        throw std::invalid_argument("reconcile needs tables for the same EPR variant");
    }
    if (paper.provenance != TableProvenance::PaperStated ||
        derived.provenance != TableProvenance::OracleDerived || !derived.m_parity) {
        throw std::invalid_argument("reconcile takes (printed table, derived table)");
    }
    ReconciliationReport rep{paper.epr_variant, *derived.m_parity, {}, {}};
    for (const auto& cell : printed_cells(paper.epr_variant)) {
        Pauli d = Pauli::Identity;
        switch (cell.column) {
        case TableColumn::PairCorrection: d = derived.pair_correction(cell.outcome); break;
        case TableColumn::GhzCorrection: d = derived.ghz_correction(cell.outcome); break;
        case TableColumn::ControllerCorrection: d = derived.controller_correction(cell.outcome); break;
        case TableColumn::FinalCorrection: d = derived.final_correction(cell.outcome, *cell.parity); break;
        }
        rep.cells.push_back({cell, d, !cell.typo && cell.value == d});
    }
    for (BellOutcome o : kAllBellOutcomes) {
        const auto& pr = paper.final_u_n[index_of(o)];
        const auto& dr = derived.final_u_n[index_of(o)];
        // Counting zeros flips the parity exactly when M is odd.
        const std::array<Pauli, 2> zeros = rep.m_parity == Parity::Odd ? std::array{pr[1], pr[0]} : pr;
        rep.parity.push_back({o, rep.m_parity, pr, dr, detail::compare_rule(pr, dr),
                              detail::compare_rule(zeros, dr)});
    }
    return rep;
}

/// One row per printed cell, then one row per parity rule.
inline std::string render_text(const ReconciliationReport& rep) {
    std::ostringstream out;
    out << "# EPR variant " << to_string(rep.epr_variant) << ", controller count "
        << to_string(rep.m_parity) << "\n";
    out << "table\tcolumn\toutcome\tparity\tprinted\tpaper\tderived\tverdict\n";
    for (const auto& c : rep.cells) {
        out << c.cell.table << '\t' << to_string(c.cell.column) << '\t' << to_string(c.cell.outcome)
            << '\t' << (c.cell.parity ? to_string(*c.cell.parity) : "-") << '\t' << c.cell.printed
            << '\t' << (c.cell.value ? to_string(*c.cell.value) : "?") << '\t' << to_string(c.derived)
            << '\t' << (c.cell.typo ? "TYPO" : c.match ? "match" : "MISMATCH") << '\n';
    }
    out << "# parity rules [even, odd]\n";
    for (const auto& p : rep.parity) {
        out << "parity\t" << to_string(p.ghz_outcome) << "\tpaper=[" << to_string(p.paper[0]) << ", "
            << to_string(p.paper[1]) << "]\tderived=[" << to_string(p.derived[0]) << ", "
            << to_string(p.derived[1]) << "]\tcounting-ones: " << to_string(p.ones_reading)
            << "\tcounting-zeros: " << to_string(p.zeros_reading) << '\n';
    }
    return out.str();
}

} // namespace mcqt

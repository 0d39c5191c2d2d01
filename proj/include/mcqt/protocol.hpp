#pragma once

// Multiparty controlled teleportation of an N-qubit message over N-1 EPR pairs
// and one (M+2)-qubit GHZ state, run as an explicit six-step state machine.
//
// Register layout (fixed by n, m):
//   A_1..A_N  message              0 .. n-1
//   D_1..D_N  Alice's channel half n .. 2n-1     (D_N is her GHZ qubit)
//   B_1..B_N  Bob                  2n .. 3n-1
//   C_1..C_M  controllers          3n .. 3n+m-1
// Measured qubits stay in the register; Bob's result is read off B_1..B_N.

#include "mcqt/statevector.hpp"
#include "mcqt/tables.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace mcqt {

inline constexpr std::size_t kDefaultMaxRegister = 22;

enum class CorrectionTiming : std::uint8_t {
    PerBroadcast, ///< U_i right after each (A_i, D_i) broadcast
    Batched,      ///< all U_i in one pass once step 3 is complete
};

struct ProtocolConfig {
    std::size_t n = 1;
    std::size_t m = 0;
    EprVariant epr_variant = EprVariant::PhiPlus;
    TableProvenance table_source = TableProvenance::OracleDerived;
    std::size_t max_register = kDefaultMaxRegister;
    CorrectionTiming timing = CorrectionTiming::PerBroadcast;

    std::size_t register_size() const { return 3 * n + m; }

    void validate() const {
        if (n < 1) throw ConfigError("n must be at least 1");
        if (max_register > kMaxQubits) throw ConfigError("max_register exceeds simulator limit");
        if (register_size() > max_register) {
            throw ConfigError("register of " + std::to_string(register_size()) +
                              " qubits exceeds the maximum of " + std::to_string(max_register));
        }
    }

    friend bool operator==(const ProtocolConfig&, const ProtocolConfig&) = default;
};

struct RegisterLayout {
    std::size_t n = 1;
    std::size_t m = 0;

    RegisterLayout() = default;
    RegisterLayout(std::size_t n_, std::size_t m_) : n(n_), m(m_) {}
    explicit RegisterLayout(const ProtocolConfig& c) : n(c.n), m(c.m) {}

    // Zero-based party indices: a(0) is A_1.
    Qubit a(std::size_t i) const { return checked(i, n, 0); }
    Qubit d(std::size_t i) const { return checked(i, n, n); }
    Qubit b(std::size_t i) const { return checked(i, n, 2 * n); }
    Qubit c(std::size_t j) const { return checked(j, m, 3 * n); }
    std::size_t total() const { return 3 * n + m; }

    std::vector<Qubit> a_qubits() const { return range(0, n); }
    std::vector<Qubit> d_qubits() const { return range(n, n); }
    std::vector<Qubit> b_qubits() const { return range(2 * n, n); }
    std::vector<Qubit> c_qubits() const { return range(3 * n, m); }

    /// "A_1", "D_3", "C_2", ...
    std::string role(Qubit q) const {
        if (q >= total()) throw std::out_of_range("qubit outside layout");
        if (q < n) return "A_" + std::to_string(q + 1);
        if (q < 2 * n) return "D_" + std::to_string(q - n + 1);
        if (q < 3 * n) return "B_" + std::to_string(q - 2 * n + 1);
        return "C_" + std::to_string(q - 3 * n + 1);
    }

private:
    static Qubit checked(std::size_t i, std::size_t count, std::size_t offset) {
        if (i >= count) throw std::out_of_range("party index out of range");
        return offset + i;
    }
    static std::vector<Qubit> range(std::size_t first, std::size_t count) {
        std::vector<Qubit> out(count);
        std::iota(out.begin(), out.end(), first);
        return out;
    }
};

/// Alice's unknown N-qubit state. Any normalized state is accepted, including
/// basis states.
struct MessageState {
    StateVector state;

    std::size_t n() const { return state.num_qubits(); }

    static MessageState from_amplitudes(std::vector<Amplitude> amplitudes) {
        return {StateVector::from_amplitudes(std::move(amplitudes), 1e-6)};
    }
    static MessageState random(std::size_t n, Rng& rng) { return {random_dense_state(n, rng)}; }
};

inline constexpr std::uint64_t kExampleMessageSeed = 0x3C2A'11D5ULL;

/// Fixed full-support three-qubit message x_1|000> + ... + x_8|111> used by the
/// worked example and the CLI's "example3x2".
inline MessageState example_message() {
    Rng rng(kExampleMessageSeed);
    return MessageState::random(3, rng);
}

inline Parity parity(std::span<const int> bits) {
    std::size_t ones = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("controller bits must be 0 or 1");
        ones += static_cast<std::size_t>(b);
    }
    return parity_of_count(ones);
}

/// N-1 pairs of the configured variant on (D_i, B_i) and the GHZ state on
/// (D_N, B_N, C_1..C_M), returned over the channel qubits in layout order
/// D_1..D_N, B_1..B_N, C_1..C_M.
inline StateVector prepare_channel(const ProtocolConfig& config) {
    config.validate();
    const std::size_t n = config.n;
    const std::size_t m = config.m;
    // Natural order: (D_1 B_1) ... (D_{N-1} B_{N-1}) (D_N B_N C_1 .. C_M).
    StateVector natural;
    for (std::size_t i = 0; i + 1 < n; ++i) natural = tensor(natural, bell_state(as_bell(config.epr_variant)));
    natural = tensor(natural, ghz_state(m + 2));

    // order[j] = natural position of the j-th channel qubit in layout order.
    std::vector<Qubit> order;
    order.reserve(2 * n + m);
    for (std::size_t i = 0; i < n; ++i) order.push_back(2 * i);     // D_i
    for (std::size_t i = 0; i < n; ++i) order.push_back(2 * i + 1); // B_i
    for (std::size_t j = 0; j < m; ++j) order.push_back(2 * n + j);  // C_j
    return permute_qubits(natural, order);
}

inline StateVector compose_system(const MessageState& message, const StateVector& channel,
                                  const RegisterLayout& layout) {
    if (message.n() != layout.n || channel.num_qubits() != 2 * layout.n + layout.m) {
        throw std::invalid_argument("message/channel dimensions do not match the layout");
    }
    // A_1..A_N lead the layout, so the tensor product is already in place.
    return tensor(message.state, channel);
}

//------------------------------------------------------------------------------
// Transcript
//------------------------------------------------------------------------------

struct BellBroadcast {
    int step;                 ///< 3 for the EPR pairs, 4 for the GHZ pair
    std::size_t pair;         ///< 1-based i of (A_i, D_i)
    Qubit alice_qubit;
    Qubit channel_qubit;
    BellOutcome outcome;
    double probability;
};

struct CorrectionApplied {
    int step;
    std::string party;        ///< "Bob" or "Charlie_j"
    Qubit qubit;
    Pauli pauli;
};

struct HadamardApplied {
    std::size_t controller;   ///< 1-based
    Qubit qubit;
};

struct ControllerAnnouncement {
    std::size_t controller;   ///< 1-based
    Qubit qubit;
    int bit;
    double probability;
};

using TranscriptEvent =
    std::variant<BellBroadcast, CorrectionApplied, HadamardApplied, ControllerAnnouncement>;

struct ForcedOutcomes {
    std::vector<BellOutcome> bell; ///< N outcomes: (A_1,D_1) .. (A_N,D_N)
    std::vector<int> bits;         ///< M controller bits
};

struct Transcript {
    ProtocolConfig config;
    CorrectionTable table;
    std::vector<TranscriptEvent> events;
    std::vector<BellOutcome> bell_outcomes;
    std::vector<int> controller_bits;
    Parity controller_parity = Parity::Even;
    Pauli final_correction = Pauli::Identity;
    double branch_probability = 1.0;
    double fidelity = 0.0;
    StateVector final_state;
    StateVector bob_state;

    ForcedOutcomes forced_outcomes() const { return {bell_outcomes, controller_bits}; }
};

//------------------------------------------------------------------------------
// Session: the six steps with enforced ordering
//------------------------------------------------------------------------------

class Session {
public:
    enum class Phase { PairMeasurements, GhzMeasurement, ControllerHadamards,
                       ControllerMeasurements, FinalCorrection, Done };

    Session(const ProtocolConfig& config, MessageState message, CorrectionTable table)
        : layout_(config), message_(std::move(message)) {
        config.validate();
        if (message_.n() != config.n) {
            throw ConfigError("message has " + std::to_string(message_.n()) +
                              " qubits but n = " + std::to_string(config.n));
        }
        if (table.epr_variant != config.epr_variant) {
            throw ConfigError("correction table is for a different EPR variant");
        }
        state_ = compose_system(message_, prepare_channel(config), layout_);
        transcript_.config = config;
        transcript_.table = std::move(table);
        settle();
    }

    Session(const ProtocolConfig& config, MessageState message)
        : Session(config, std::move(message),
                  select_table(config.epr_variant, config.table_source, config.m)) {}

    Phase phase() const { return phase_; }
    const StateVector& state() const { return state_; }
    const RegisterLayout& layout() const { return layout_; }
    const Transcript& transcript() const { return transcript_; }
    const MessageState& message() const { return message_; }
    const CorrectionTable& table() const { return transcript_.table; }

    /// Step 3: Bell measurement of the next (A_i, D_i), i < N, and Bob's U_i.
    void measure_pair(BellOutcome outcome) {
        expect(Phase::PairMeasurements);
        record_pair(forced_bell(layout_.a(next_pair_), layout_.d(next_pair_), outcome), outcome);
    }
    BellOutcome measure_pair(Rng& rng) {
        expect(Phase::PairMeasurements);
        auto s = bell_sample(state_, layout_.a(next_pair_), layout_.d(next_pair_), rng);
        state_ = std::move(s.state);
        record_pair(s.probability, s.outcome);
        return s.outcome;
    }

    /// Step 4: Bell measurement of (A_N, D_N); Bob applies U_N, controllers U_Cj.
    void measure_ghz_pair(BellOutcome outcome) {
        expect(Phase::GhzMeasurement);
        const std::size_t i = layout_.n - 1;
        record_ghz(forced_bell(layout_.a(i), layout_.d(i), outcome), outcome);
    }
    BellOutcome measure_ghz_pair(Rng& rng) {
        expect(Phase::GhzMeasurement);
        const std::size_t i = layout_.n - 1;
        auto s = bell_sample(state_, layout_.a(i), layout_.d(i), rng);
        state_ = std::move(s.state);
        record_ghz(s.probability, s.outcome);
        return s.outcome;
    }

    /// Step 5: every controller applies a Hadamard to its qubit.
    void controllers_hadamard() {
        expect(Phase::ControllerHadamards);
        for (std::size_t j = 0; j < layout_.m; ++j) {
            state_.apply_hadamard(layout_.c(j));
            transcript_.events.emplace_back(HadamardApplied{j + 1, layout_.c(j)});
        }
        phase_ = Phase::ControllerMeasurements;
        settle();
    }

    /// Step 6, first half: the next controller measures in {|0>, |1>} and
    /// announces the bit.
    void measure_controller(int bit) {
        expect(Phase::ControllerMeasurements);
        const Qubit q = layout_.c(next_controller_);
        auto proj = z_project(state_, q, bit);
        if (!proj.possible()) {
            throw ImpossibleBranch("controller " + std::to_string(next_controller_ + 1) +
                                   " cannot announce " + std::to_string(bit));
        }
        state_ = std::move(*proj.state);
        record_controller(bit, proj.probability);
    }
    int measure_controller(Rng& rng) {
        expect(Phase::ControllerMeasurements);
        auto s = z_sample(state_, layout_.c(next_controller_), rng);
        state_ = std::move(s.state);
        record_controller(s.bit, s.probability);
        return s.bit;
    }

    /// Step 6, second half: Bob's parity-dependent correction on B_N. Returns
    /// the final fidelity of Bob's qubits against the message.
    double apply_final_correction() {
        expect(Phase::FinalCorrection);
        const Parity p = parity(transcript_.controller_bits);
        const BellOutcome ghz_outcome = transcript_.bell_outcomes.back();
        const Pauli u = table().final_correction(ghz_outcome, p);
        const Qubit bn = layout_.b(layout_.n - 1);
        state_.apply(bn, u);
        transcript_.controller_parity = p;
        transcript_.final_correction = u;
        transcript_.events.emplace_back(CorrectionApplied{6, "Bob", bn, u});

        transcript_.bob_state = bob_state();
        transcript_.fidelity = fidelity(transcript_.bob_state, message_.state);
        transcript_.final_state = state_;
        phase_ = Phase::Done;
        return transcript_.fidelity;
    }

    /// Bob's N qubits; throws SubsystemNotPure while they are still entangled
    /// with unmeasured parties.
    StateVector bob_state() const {
        const auto keep = layout_.b_qubits();
        return extract_subsystem(state_, keep);
    }

private:
    void expect(Phase p) const {
        if (phase_ != p) throw std::logic_error("protocol step called out of order");
    }

    // Skips phases that have nothing to do for this (n, m). Step 5 is always
    // called explicitly, even with no controllers.
    void settle() {
        if (phase_ == Phase::PairMeasurements && next_pair_ + 1 >= layout_.n) {
            phase_ = Phase::GhzMeasurement;
        }
        if (phase_ == Phase::ControllerMeasurements && next_controller_ >= layout_.m) {
            phase_ = Phase::FinalCorrection;
        }
    }

    double forced_bell(Qubit a, Qubit d, BellOutcome outcome) {
        auto proj = bell_project(state_, a, d, outcome);
        if (!proj.possible()) {
            throw ImpossibleBranch("Bell outcome " + std::string(to_string(outcome)) + " on (" +
                                   layout_.role(a) + ", " + layout_.role(d) +
                                   ") has zero probability");
        }
        state_ = std::move(*proj.state);
        return proj.probability;
    }

    void record_pair(double probability, BellOutcome outcome) {
        const std::size_t i = next_pair_++;
        transcript_.events.emplace_back(
            BellBroadcast{3, i + 1, layout_.a(i), layout_.d(i), outcome, probability});
        transcript_.bell_outcomes.push_back(outcome);
        transcript_.branch_probability *= probability;
        if (transcript_.config.timing == CorrectionTiming::PerBroadcast) {
            correct_pair(i, outcome);
        }
        settle();
    }

    void correct_pair(std::size_t i, BellOutcome outcome) {
        const Pauli u = table().pair_correction(outcome);
        state_.apply(layout_.b(i), u);
        transcript_.events.emplace_back(CorrectionApplied{3, "Bob", layout_.b(i), u});
    }

    void record_ghz(double probability, BellOutcome outcome) {
        if (transcript_.config.timing == CorrectionTiming::Batched) {
            for (std::size_t i = 0; i + 1 < layout_.n; ++i) {
                correct_pair(i, transcript_.bell_outcomes[i]);
            }
        }
        const std::size_t i = layout_.n - 1;
        transcript_.events.emplace_back(
            BellBroadcast{4, i + 1, layout_.a(i), layout_.d(i), outcome, probability});
        transcript_.bell_outcomes.push_back(outcome);
        transcript_.branch_probability *= probability;

        const Pauli un = table().ghz_correction(outcome);
        state_.apply(layout_.b(i), un);
        transcript_.events.emplace_back(CorrectionApplied{4, "Bob", layout_.b(i), un});
        const Pauli uc = table().controller_correction(outcome);
        for (std::size_t j = 0; j < layout_.m; ++j) {
            state_.apply(layout_.c(j), uc);
            transcript_.events.emplace_back(
                CorrectionApplied{4, "Charlie_" + std::to_string(j + 1), layout_.c(j), uc});
        }
        phase_ = Phase::ControllerHadamards;
        settle();
    }

    void record_controller(int bit, double probability) {
        const std::size_t j = next_controller_++;
        transcript_.events.emplace_back(
            ControllerAnnouncement{j + 1, layout_.c(j), bit, probability});
        transcript_.controller_bits.push_back(bit);
        transcript_.branch_probability *= probability;
        settle();
    }

    RegisterLayout layout_;
    MessageState message_;
    StateVector state_;
    Transcript transcript_;
    Phase phase_ = Phase::PairMeasurements;
    std::size_t next_pair_ = 0;
    std::size_t next_controller_ = 0;
};

//------------------------------------------------------------------------------
// Whole runs
//------------------------------------------------------------------------------

/// One run with every outcome sampled from the Born rule.
inline Transcript run(const ProtocolConfig& config, const MessageState& message, Rng& rng) {
    Session s(config, message);
    for (std::size_t i = 0; i + 1 < config.n; ++i) s.measure_pair(rng);
    s.measure_ghz_pair(rng);
    s.controllers_hadamard();
    for (std::size_t j = 0; j < config.m; ++j) s.measure_controller(rng);
    s.apply_final_correction();
    return s.transcript();
}

/// One run along a prescribed branch. Throws ImpossibleBranch if any forced
/// outcome has zero probability.
inline Transcript run(const ProtocolConfig& config, const MessageState& message,
                      const ForcedOutcomes& forced) {
    if (forced.bell.size() != config.n || forced.bits.size() != config.m) {
        throw ConfigError("forced outcomes need " + std::to_string(config.n) +
                          " Bell results and " + std::to_string(config.m) + " controller bits");
    }
    Session s(config, message);
    for (std::size_t i = 0; i + 1 < config.n; ++i) s.measure_pair(forced.bell[i]);
    s.measure_ghz_pair(forced.bell.back());
    s.controllers_hadamard();
    for (int bit : forced.bits) s.measure_controller(bit);
    s.apply_final_correction();
    return s.transcript();
}

} // namespace mcqt

#pragma once

// JSON reports. Keys are emitted in a fixed insertion order so identical runs
// produce byte-identical output.

#include "mcqt/verify.hpp"

#include <json.hpp>

#include <string>

namespace mcqt {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

inline Json to_json(const ProtocolConfig& c) {
    return Json{{"n", c.n},
                {"m", c.m},
                {"epr", to_string(c.epr_variant)},
                {"table", to_string(c.table_source)},
                {"register_qubits", c.register_size()}};
}

inline Json to_json(const StateVector& s) {
    Json amps = Json::array();
    for (const auto& a : s.amplitudes()) amps.push_back(Json::array({a.real(), a.imag()}));
    return amps;
}

inline Json to_json(const CorrectionTable& t) {
    auto map = [](const PauliMap& m) {
        Json j = Json::object();
        for (BellOutcome o : kAllBellOutcomes) j[std::string(to_string(o))] = to_string(m[index_of(o)]);
        return j;
    };
    Json final_rule = Json::object();
    for (BellOutcome o : kAllBellOutcomes) {
        final_rule[std::string(to_string(o))] =
            Json{{"even", to_string(t.final_correction(o, Parity::Even))},
                 {"odd", to_string(t.final_correction(o, Parity::Odd))}};
    }
    Json typos = Json::array();
    for (BellOutcome o : kAllBellOutcomes) {
        if (t.u_i_typo[index_of(o)]) typos.push_back(to_string(o));
    }
    return Json{{"epr", to_string(t.epr_variant)},
                {"provenance", to_string(t.provenance)},
                {"m_parity", t.m_parity ? Json(to_string(*t.m_parity)) : Json(nullptr)},
                {"u_i", map(t.u_i)},
                {"u_n", map(t.u_n)},
                {"u_c", map(t.u_c)},
                {"final_u_n", final_rule},
                {"u_i_typo_cells", typos}};
}

inline Json to_json(const TranscriptEvent& e, const RegisterLayout& layout) {
    return std::visit(
        [&](const auto& ev) -> Json {
            using T = std::decay_t<decltype(ev)>;
            if constexpr (std::is_same_v<T, BellBroadcast>) {
                return Json{{"type", "bell_broadcast"},
                            {"step", ev.step},
                            {"pair", ev.pair},
                            {"qubits", Json::array({layout.role(ev.alice_qubit), layout.role(ev.channel_qubit)})},
                            {"outcome", to_string(ev.outcome)},
                            {"probability", ev.probability}};
            } else if constexpr (std::is_same_v<T, CorrectionApplied>) {
                return Json{{"type", "correction"},
                            {"step", ev.step},
                            {"party", ev.party},
                            {"qubit", layout.role(ev.qubit)},
                            {"pauli", to_string(ev.pauli)}};
            } else if constexpr (std::is_same_v<T, HadamardApplied>) {
                return Json{{"type", "hadamard"},
                            {"step", 5},
                            {"controller", ev.controller},
                            {"qubit", layout.role(ev.qubit)}};
            } else {
                return Json{{"type", "controller_bit"},
                            {"step", 6},
                            {"controller", ev.controller},
                            {"qubit", layout.role(ev.qubit)},
                            {"bit", ev.bit},
                            {"probability", ev.probability}};
            }
        },
        e);
}

inline Json to_json(const Transcript& t) {
    const RegisterLayout layout(t.config);
    Json events = Json::array();
    for (const auto& e : t.events) events.push_back(to_json(e, layout));
    Json bell = Json::array();
    for (BellOutcome o : t.bell_outcomes) bell.push_back(to_string(o));
    return Json{{"config", to_json(t.config)},
                {"table_provenance", to_string(t.table.provenance)},
                {"events", events},
                {"bell_outcomes", bell},
                {"controller_bits", t.controller_bits},
                {"controller_parity", to_string(t.controller_parity)},
                {"final_correction", to_string(t.final_correction)},
                {"branch_probability", t.branch_probability},
                {"fidelity", t.fidelity},
                {"bob_state", to_json(t.bob_state)}};
}

inline Json to_json(const BranchReport& r) {
    Json bell = Json::array();
    for (BellOutcome o : r.bell) bell.push_back(to_string(o));
    return Json{{"id", r.id()},
                {"bell", bell},
                {"bits", r.bits},
                {"probability", r.probability},
                {"fidelity_paper", r.fidelity_paper},
                {"fidelity_derived", r.fidelity_derived},
                {"final_paper", to_string(r.final_paper)},
                {"final_derived", to_string(r.final_derived)}};
}

inline Json to_json(const EnumerationSummary& s) {
    return Json{{"branches", s.branches},
                {"probability_sum", s.probability_sum},
                {"max_uniform_deviation", s.max_uniform_deviation},
                {"min_fidelity_paper", s.min_fidelity_paper},
                {"min_fidelity_derived", s.min_fidelity_derived},
                {"failed_branches_paper", s.failures_paper},
                {"failed_branches_derived", s.failures_derived}};
}

inline Json to_json(const ReconciliationReport& rep) {
    Json cells = Json::array();
    for (const auto& c : rep.cells) {
        cells.push_back(Json{{"table", c.cell.table},
                             {"column", to_string(c.cell.column)},
                             {"outcome", to_string(c.cell.outcome)},
                             {"parity", c.cell.parity ? Json(to_string(*c.cell.parity)) : Json(nullptr)},
                             {"printed", c.cell.printed},
                             {"paper", c.cell.value ? Json(to_string(*c.cell.value)) : Json(nullptr)},
                             {"derived", to_string(c.derived)},
                             {"match", c.match},
                             {"typo", c.cell.typo}});
    }
    Json parity = Json::array();
    for (const auto& p : rep.parity) {
        parity.push_back(Json{{"ghz_outcome", to_string(p.ghz_outcome)},
                              {"m_parity", to_string(p.m_parity)},
                              {"paper", {{"even", to_string(p.paper[0])}, {"odd", to_string(p.paper[1])}}},
                              {"derived", {{"even", to_string(p.derived[0])}, {"odd", to_string(p.derived[1])}}},
                              {"counting_ones", to_string(p.ones_reading)},
                              {"counting_zeros", to_string(p.zeros_reading)}});
    }
    return Json{{"epr", to_string(rep.epr_variant)},
                {"m_parity", to_string(rep.m_parity)},
                {"cell_count", rep.cells.size()},
                {"matches", rep.matches()},
                {"typos", rep.typos()},
                {"cells", cells},
                {"parity_rules", parity}};
}

inline Json to_json(const MonteCarloStats& s) {
    return Json{{"trials", s.trials},
                {"branches", s.counts.size()},
                {"expected_per_branch", s.expected_per_branch},
                {"max_abs_z", s.max_abs_z},
                {"z_bound", s.z_bound},
                {"within_bound", s.within_bound()},
                {"min_fidelity", s.min_fidelity},
                {"counts", s.counts}};
}

} // namespace mcqt

#pragma once

// Classical correction rules as plain data.
//
// Two sources ship side by side:
//  * paper_table(): the printed correction tables, transcribed cell by cell
//    (see printed_cells()). Outer-product cells are normalized to the four
//    named Paulis:  |0><0|+|1><1| = I,  |0><0|-|1><1| = Z,
//                   |0><1|+|1><0| = X,  |0><1|-|1><0| = iY.
//  * derived_table(): rules certified by the brute-force oracle in verify.hpp.
//    They are hardcoded here and regenerated by the test suite.

#include "mcqt/statevector.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace mcqt {

/// State shared by the N-1 channel pairs of one run.
enum class EprVariant : std::uint8_t { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<EprVariant, 4> kAllEprVariants = {
    EprVariant::PhiPlus, EprVariant::PhiMinus, EprVariant::PsiPlus, EprVariant::PsiMinus};

inline constexpr BellOutcome as_bell(EprVariant v) { return static_cast<BellOutcome>(v); }

inline constexpr std::string_view to_string(EprVariant v) { return to_string(as_bell(v)); }

inline std::optional<EprVariant> epr_variant_from_string(std::string_view s) {
    if (auto o = bell_outcome_from_string(s)) return static_cast<EprVariant>(*o);
    return std::nullopt;
}

enum class Parity : std::uint8_t { Even, Odd };

inline constexpr std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }
inline constexpr std::size_t index_of(Parity p) { return static_cast<std::size_t>(p); }
inline constexpr Parity parity_of_count(std::size_t count) {
    return count % 2 == 0 ? Parity::Even : Parity::Odd;
}

enum class TableProvenance : std::uint8_t { PaperStated, OracleDerived };

inline constexpr std::string_view to_string(TableProvenance p) {
    return p == TableProvenance::PaperStated ? "paper" : "derived";
}

/// Indexed by BellOutcome.
using PauliMap = std::array<Pauli, 4>;

struct CorrectionTable {
    EprVariant epr_variant = EprVariant::PhiPlus;
    TableProvenance provenance = TableProvenance::OracleDerived;
    /// Parity of the controller count the rules were derived for. The printed
    /// tables do not depend on it and leave this empty.
    std::optional<Parity> m_parity;

    PauliMap u_i{};  ///< on B_i after the (A_i, D_i) broadcast, i < N
    PauliMap u_n{};  ///< on B_N after the (A_N, D_N) broadcast
    PauliMap u_c{};  ///< on every C_j after the (A_N, D_N) broadcast
    /// final_u_n[outcome of (A_N, D_N)][parity of controller 1-bits]
    std::array<std::array<Pauli, 2>, 4> final_u_n{};

    /// u_i cells whose printed operator is malformed; the oracle value is
    /// shipped in their place.
    std::array<bool, 4> u_i_typo{};

    Pauli pair_correction(BellOutcome o) const { return u_i[index_of(o)]; }
    Pauli ghz_correction(BellOutcome o) const { return u_n[index_of(o)]; }
    Pauli controller_correction(BellOutcome o) const { return u_c[index_of(o)]; }
    Pauli final_correction(BellOutcome o, Parity p) const {
        return final_u_n[index_of(o)][index_of(p)];
    }

    friend bool operator==(const CorrectionTable&, const CorrectionTable&) = default;
};

//------------------------------------------------------------------------------
// Transcription of the printed tables
//------------------------------------------------------------------------------

enum class TableColumn : std::uint8_t {
    PairCorrection,       ///< U_i
    GhzCorrection,        ///< U_N, applied right after the (A_N, D_N) broadcast
    ControllerCorrection, ///< U_Cj
    FinalCorrection,      ///< U_N chosen by the parity of the controllers' bits
};

inline constexpr std::string_view to_string(TableColumn c) {
    switch (c) {
    case TableColumn::PairCorrection: return "U_i";
    case TableColumn::GhzCorrection: return "U_N";
    case TableColumn::ControllerCorrection: return "U_Cj";
    case TableColumn::FinalCorrection: return "U_N(parity)";
    }
    return "?";
}

/// One logical cell of a printed table. Multirow cells written with +/- are
/// expanded into one cell per sign; `printed` quotes the cell as typeset.
struct PrintedCell {
    std::string_view table; ///< "I" .. "VI"
    EprVariant variant;
    TableColumn column;
    BellOutcome outcome;
    std::optional<Parity> parity; ///< FinalCorrection cells only
    std::string_view printed;
    std::optional<Pauli> value;   ///< empty when the printed operator is malformed
    bool typo = false;
};

namespace detail {

using enum BellOutcome;
using P = Pauli;

inline void add_pair_column(std::vector<PrintedCell>& out, std::string_view table, EprVariant v,
                            std::array<std::string_view, 4> printed,
                            std::array<std::optional<Pauli>, 4> values) {
    for (BellOutcome o : kAllBellOutcomes) {
        const auto i = index_of(o);
        out.push_back({table, v, TableColumn::PairCorrection, o, std::nullopt, printed[i],
                       values[i], !values[i].has_value()});
    }
}

// The controller and parity columns are identical in Tables III-VI because the
// GHZ part of the channel does not change with the EPR variant.
inline void add_ghz_columns(std::vector<PrintedCell>& out, std::string_view table, EprVariant v) {
    constexpr std::string_view identity = "|0><0|+|1><1|";
    out.push_back({table, v, TableColumn::ControllerCorrection, PhiPlus, std::nullopt, identity,
                   P::Identity, false});
    out.push_back({table, v, TableColumn::ControllerCorrection, PhiMinus, std::nullopt, identity,
                   P::Identity, false});
    out.push_back({table, v, TableColumn::ControllerCorrection, PsiPlus, std::nullopt,
                   "|0><1|±|1><0| (upper sign)", P::X, false});
    out.push_back({table, v, TableColumn::ControllerCorrection, PsiMinus, std::nullopt,
                   "|0><1|±|1><0| (lower sign)", P::iY, false});
    for (BellOutcome o : kAllBellOutcomes) {
        out.push_back({table, v, TableColumn::FinalCorrection, o, Parity::Odd, "odd: |0><0|+|1><1|",
                       P::Identity, false});
        out.push_back({table, v, TableColumn::FinalCorrection, o, Parity::Even,
                       "even: |0><0|-|1><1|", P::Z, false});
    }
}

inline std::vector<PrintedCell> build_printed_cells() {
    std::vector<PrintedCell> cells;
    const auto phi_p = EprVariant::PhiPlus;

    // Table I: U_i for the phi+ channel.
    add_pair_column(cells, "I", phi_p, {"I", "sigma_z", "sigma_x", "i sigma_y"},
                    {P::Identity, P::Z, P::X, P::iY});

    // Table II: U_N and U_Cj after the (A_N, D_N) broadcast.
    const std::array<std::string_view, 4> t2_un = {"I", "sigma_z", "sigma_x", "i sigma_y"};
    const std::array<Pauli, 4> t2_un_v = {P::Identity, P::Z, P::X, P::iY};
    const std::array<std::string_view, 4> t2_uc = {"I", "I", "sigma_x", "i sigma_y"};
    const std::array<Pauli, 4> t2_uc_v = {P::Identity, P::Identity, P::X, P::iY};
    for (BellOutcome o : kAllBellOutcomes) {
        const auto i = index_of(o);
        cells.push_back({"II", phi_p, TableColumn::GhzCorrection, o, std::nullopt, t2_un[i],
                         t2_un_v[i], false});
    }
    for (BellOutcome o : kAllBellOutcomes) {
        const auto i = index_of(o);
        cells.push_back({"II", phi_p, TableColumn::ControllerCorrection, o, std::nullopt,
                         t2_uc[i], t2_uc_v[i], false});
    }

    // Table III (phi+ pairs).
    add_ghz_columns(cells, "III", phi_p);
    add_pair_column(cells, "III", phi_p,
                    {"|0><0|±|1><1| (upper sign)", "|0><0|±|1><1| (lower sign)",
                     "|0><1|±|1><0| (upper sign)", "|0><1|±|1><0| (lower sign)"},
                    {P::Identity, P::Z, P::X, P::iY});

    // Table IV (phi- pairs).
    add_ghz_columns(cells, "IV", EprVariant::PhiMinus);
    add_pair_column(cells, "IV", EprVariant::PhiMinus,
                    {"|0><0|∓|1><1| (upper sign)", "|0><0|∓|1><1| (lower sign)",
                     "|0><1|∓|1><0| (upper sign)", "|0><1|∓|1><0| (lower sign)"},
                    {P::Z, P::Identity, P::iY, P::X});

    // Table V (psi+ pairs). The phi rows print |0><1|±|0><1|, which is not a
    // Pauli (nor unitary); flagged rather than guessed.
    add_ghz_columns(cells, "V", EprVariant::PsiPlus);
    add_pair_column(cells, "V", EprVariant::PsiPlus,
                    {"|0><1|±|0><1| (upper sign)", "|0><1|±|0><1| (lower sign)",
                     "|0><0|±|1><1| (upper sign)", "|0><0|±|1><1| (lower sign)"},
                    {std::nullopt, std::nullopt, P::Identity, P::Z});

    // Table VI (psi- pairs), same malformed phi rows as Table V.
    add_ghz_columns(cells, "VI", EprVariant::PsiMinus);
    add_pair_column(cells, "VI", EprVariant::PsiMinus,
                    {"|0><1|∓|0><1| (upper sign)", "|0><1|∓|0><1| (lower sign)",
                     "|0><0|∓|1><1| (upper sign)", "|0><0|∓|1><1| (lower sign)"},
                    {std::nullopt, std::nullopt, P::Z, P::Identity});
    return cells;
}

} // namespace detail

/// Every logical cell of the six printed tables, each exactly once.
inline const std::vector<PrintedCell>& printed_cells() {
    static const std::vector<PrintedCell> cells = detail::build_printed_cells();
    return cells;
}

inline std::vector<PrintedCell> printed_cells(EprVariant v) {
    std::vector<PrintedCell> out;
    for (const auto& c : printed_cells()) {
        if (c.variant == v) out.push_back(c);
    }
    return out;
}

/// Oracle-certified rules for a channel variant and controller-count parity.
///
/// Gauge: Z-type phases on the GHZ qubits can be moved freely between B_N, the
/// controllers and the final rule. The oracle fixes U_N to the plain
/// teleportation correction and lets controllers copy U_N only when a bit flip
/// is needed; with that choice (iY)^(M+1) on psi- leaves a (-1)^(M+1) relative
/// sign, which is why the psi- parity rule swaps for odd M.
inline CorrectionTable derived_table(EprVariant v, Parity m_parity) {
    using enum Pauli;
    CorrectionTable t;
    t.epr_variant = v;
    t.provenance = TableProvenance::OracleDerived;
    t.m_parity = m_parity;
    switch (v) {
    case EprVariant::PhiPlus: t.u_i = {Identity, Z, X, iY}; break;
    case EprVariant::PhiMinus: t.u_i = {Z, Identity, iY, X}; break;
    case EprVariant::PsiPlus: t.u_i = {X, iY, Identity, Z}; break;
    case EprVariant::PsiMinus: t.u_i = {iY, X, Z, Identity}; break;
    }
    t.u_n = {Identity, Z, X, iY};
    t.u_c = {Identity, Identity, X, iY};
    for (BellOutcome o : kAllBellOutcomes) t.final_u_n[index_of(o)] = {Identity, Z};
    if (m_parity == Parity::Odd) {
        t.final_u_n[index_of(BellOutcome::PsiMinus)] = {Z, Identity};
    }
    return t;
}

inline CorrectionTable derived_table_for(EprVariant v, std::size_t m) {
    return derived_table(v, parity_of_count(m));
}

/// The printed rules for a channel variant.
///
/// The appendix tables print no step-4 U_N column; Table II's column is used
/// for every variant since the GHZ state is the same in all of them. Malformed
/// cells carry the oracle value and are marked in `u_i_typo`.
inline CorrectionTable paper_table(EprVariant v) {
    CorrectionTable t;
    t.epr_variant = v;
    t.provenance = TableProvenance::PaperStated;
    const std::string_view pair_table = v == EprVariant::PhiPlus ? "I"
                                        : v == EprVariant::PhiMinus ? "IV"
                                        : v == EprVariant::PsiPlus  ? "V"
                                                                    : "VI";
    const std::string_view ghz_table = v == EprVariant::PhiPlus ? "III" : pair_table;
    const CorrectionTable fallback = derived_table(v, Parity::Even);

    for (const auto& c : printed_cells()) {
        const auto i = index_of(c.outcome);
        if (c.table == pair_table && c.column == TableColumn::PairCorrection) {
            t.u_i[i] = c.value.value_or(fallback.u_i[i]);
            t.u_i_typo[i] = c.typo;
        } else if (c.table == "II" && c.column == TableColumn::GhzCorrection) {
            t.u_n[i] = *c.value;
        } else if (c.table == ghz_table && c.column == TableColumn::ControllerCorrection) {
            t.u_c[i] = *c.value;
        } else if (c.table == ghz_table && c.column == TableColumn::FinalCorrection) {
            t.final_u_n[i][index_of(*c.parity)] = *c.value;
        }
    }
    return t;
}

inline CorrectionTable select_table(EprVariant v, TableProvenance source, std::size_t m) {
    return source == TableProvenance::PaperStated ? paper_table(v) : derived_table_for(v, m);
}

} // namespace mcqt

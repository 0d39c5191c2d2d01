#include "support.hpp"

#include <set>

using namespace mcqt;
using namespace mcqt::test;

TEST(Enumerate, SingleQubitNoControllers) {
    const auto reports = enumerate_branches({1, 0}, seeded_message(1, 1));
    ASSERT_EQ(reports.size(), 4u);
    for (const auto& r : reports) {
        EXPECT_NEAR(r.probability, 0.25, 1e-12);
        EXPECT_NEAR(r.fidelity_derived, 1.0, 1e-12);
    }
    EXPECT_EQ(reports[3].id(), "psi-|");
}

TEST(Enumerate, WorkedExampleSizeIsUniform) {
    const ProtocolConfig cfg{3, 2};
    const auto reports = enumerate_branches(cfg, example_message());
    ASSERT_EQ(reports.size(), 256u);
    const auto sum = summarize(cfg, reports);
    EXPECT_EQ(sum.branches, 256u);
    EXPECT_NEAR(sum.probability_sum, 1.0, 1e-12);
    EXPECT_LE(sum.max_uniform_deviation, 1e-10);
    EXPECT_EQ(sum.failures_derived, 0u);
    std::set<std::string> ids;
    for (const auto& r : reports) ids.insert(r.id());
    EXPECT_EQ(ids.size(), 256u);
    // Enumeration order is branch_index order.
    for (std::size_t k = 0; k < reports.size(); ++k) {
        EXPECT_EQ(branch_index(reports[k].bell, reports[k].bits), k);
    }
}

TEST(Enumerate, PrintedParityRuleFailsOnAFullSupportMessage) {
    const ProtocolConfig cfg{2, 2};
    const auto reports = enumerate_branches(cfg, seeded_message(2, 4));
    const auto sum = summarize(cfg, reports);
    EXPECT_EQ(sum.failures_derived, 0u);
    EXPECT_EQ(sum.failures_paper, reports.size());
    for (const auto& r : reports) EXPECT_NE(r.final_paper, r.final_derived);
}

TEST(Enumerate, BudgetIsEnforced) {
    EXPECT_EQ(branch_count({4, 4}), 4096u);
    EXPECT_THROW(enumerate_branches({3, 2}, example_message(), 255), BudgetExceeded);
}

TEST(MonteCarlo, FrequenciesWithinFiveSigma) {
    const auto st = sample_branches({2, 2}, seeded_message(2, 6), 10000, 42);
    EXPECT_EQ(st.counts.size(), 64u);
    std::size_t total = 0;
    for (auto c : st.counts) total += c;
    EXPECT_EQ(total, 10000u);
    EXPECT_TRUE(st.within_bound()) << st.max_abs_z;
    EXPECT_NEAR(st.min_fidelity, 1.0, 1e-10);
}

TEST(Oracle, ProbesCoverBasisAndOneDenseState) {
    const auto probes = oracle_probes(2);
    ASSERT_EQ(probes.size(), 5u);
    for (const auto& a : probes.back().state.amplitudes()) EXPECT_GT(std::abs(a), 0.0);
}

TEST(Oracle, AgreesWithShippedTables) {
    for (EprVariant v : kAllEprVariants) {
        for (std::size_t n = 1; n <= 3; ++n) {
            for (std::size_t m = 0; m <= 3; ++m) {
                const auto derived = derive_corrections({n, m, v});
                EXPECT_EQ(derived, derived_table_for(v, m))
                    << to_string(v) << " n=" << n << " m=" << m;
            }
        }
    }
}

TEST(Oracle, PhiPlusMatchesPrintedStepThreeAndFour) {
    const auto derived = derive_corrections({2, 2});
    const auto paper = paper_table(EprVariant::PhiPlus);
    EXPECT_EQ(derived.u_i, paper.u_i);
    EXPECT_EQ(derived.u_n, paper.u_n);
    EXPECT_EQ(derived.u_c, paper.u_c);
}

TEST(Oracle, StepFourGaugeIsReported) {
    // Z-type phases can move between B_N and the controllers; the oracle lists
    // every admissible pair and all of them agree on the bit flips.
    const auto res = run_oracle({1, 2});
    for (BellOutcome o : kAllBellOutcomes) {
        const auto& adm = res.admissible_ghz[index_of(o)];
        EXPECT_GT(adm.size(), 1u) << to_string(o);
        for (const auto& [u, c] : adm) {
            EXPECT_EQ(flips_bit(u), flips_bit(res.table.u_n[index_of(o)]));
            EXPECT_EQ(flips_bit(c), flips_bit(res.table.u_c[index_of(o)]));
        }
    }
}

TEST(Oracle, DerivedRulesRecoverEveryProbeOnEveryBranch) {
    for (EprVariant v : kAllEprVariants) {
        for (std::size_t m : {1u, 2u}) {
            const ProtocolConfig cfg{2, m, v};
            for (const auto& probe : oracle_probes(2)) {
                const auto sum = summarize(cfg, enumerate_branches(cfg, probe));
                EXPECT_EQ(sum.failures_derived, 0u) << to_string(v) << " m=" << m;
            }
        }
    }
}

TEST(Reconcile, PhiPlusVerdicts) {
    const auto rep = reconcile(paper_table(EprVariant::PhiPlus), derive_corrections({3, 2}));
    EXPECT_EQ(rep.cells.size(), 28u);
    EXPECT_EQ(rep.typos(), 0u);
    for (const auto& c : rep.cells) {
        const bool table_one_or_two = c.cell.table == "I" || c.cell.table == "II";
        const bool parity_cell = c.cell.column == TableColumn::FinalCorrection;
        if (table_one_or_two) {
            EXPECT_TRUE(c.match) << c.cell.table << " " << to_string(c.cell.outcome);
        }
        EXPECT_EQ(c.match, !parity_cell);
    }
    ASSERT_EQ(rep.parity.size(), 4u);
    for (const auto& p : rep.parity) {
        EXPECT_EQ(p.ones_reading, RuleVerdict::Inverted);
        EXPECT_EQ(p.zeros_reading, RuleVerdict::Inverted);
    }
}

TEST(Reconcile, OddControllerCount) {
    // With odd M the psi- row of the derived rule swaps, so the printed rule is
    // right for that outcome alone; counting zeros reverses every verdict.
    const auto rep = reconcile(paper_table(EprVariant::PhiPlus), derive_corrections({2, 3}));
    for (const auto& p : rep.parity) {
        const bool psi_minus = p.ghz_outcome == BellOutcome::PsiMinus;
        EXPECT_EQ(p.ones_reading, psi_minus ? RuleVerdict::Matches : RuleVerdict::Inverted);
        EXPECT_EQ(p.zeros_reading, psi_minus ? RuleVerdict::Inverted : RuleVerdict::Matches);
    }
}

TEST(Reconcile, MalformedCellsInTablesFiveAndSix) {
    for (EprVariant v : {EprVariant::PsiPlus, EprVariant::PsiMinus}) {
        const auto rep = reconcile(paper_table(v), derive_corrections({2, 2, v}));
        EXPECT_EQ(rep.typos(), 2u);
        for (const auto& c : rep.cells) {
            if (c.cell.typo) {
                EXPECT_FALSE(c.match);
                EXPECT_EQ(c.cell.column, TableColumn::PairCorrection);
                EXPECT_TRUE(c.cell.outcome == BellOutcome::PhiPlus || c.cell.outcome == BellOutcome::PhiMinus);
            } else if (c.cell.column == TableColumn::PairCorrection) {
                EXPECT_TRUE(c.match);
            }
        }
    }
    const auto iv = reconcile(paper_table(EprVariant::PhiMinus), derive_corrections({2, 2, EprVariant::PhiMinus}));
    EXPECT_EQ(iv.typos(), 0u);
}

TEST(Reconcile, RejectsSwappedArguments) {
    EXPECT_THROW(reconcile(derived_table_for(EprVariant::PhiPlus, 2), paper_table(EprVariant::PhiPlus)),
                 std::invalid_argument);
    EXPECT_THROW(reconcile(paper_table(EprVariant::PhiPlus), derived_table_for(EprVariant::PsiPlus, 2)),
                 std::invalid_argument);
}

TEST(Reconcile, TextRendering) {
    const auto text = render_text(reconcile(paper_table(EprVariant::PsiPlus), derive_corrections({1, 1, EprVariant::PsiPlus})));
    EXPECT_NE(text.find("TYPO"), std::string::npos);
    EXPECT_NE(text.find("counting-ones: inverted"), std::string::npos);
}

#pragma once

// Reference helpers for the tests. They work on raw amplitude vectors with
// explicit index arithmetic and never call the simulator's own kernels, so
// they can serve as oracles.

#include "mcqt/mcqt.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <vector>

namespace mcqt::test {

using Amps = std::vector<std::complex<double>>;

inline Amps amps_of(const StateVector& s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

inline int bit_at(std::size_t index, std::size_t n, std::size_t q) {
    return static_cast<int>((index >> (n - 1 - q)) & 1U);
}

inline double norm2(const Amps& a) {
    double s = 0.0;
    for (const auto& x : a) s += std::norm(x);
    return s;
}

/// |<a|b>|^2 / (|a|^2 |b|^2)
inline double overlap(const Amps& a, const Amps& b) {
    std::complex<double> ip{};
    for (std::size_t k = 0; k < a.size(); ++k) ip += std::conj(a[k]) * b[k];
    return std::norm(ip) / (norm2(a) * norm2(b));
}

/// Element-wise equality of the normalized vectors after removing the global
/// phase that best aligns `actual` to `expected`.
inline void expect_equal_up_to_phase(const Amps& expected, const Amps& actual, double tol = 1e-10) {
    ASSERT_EQ(expected.size(), actual.size());
    const double ne = std::sqrt(norm2(expected)), na = std::sqrt(norm2(actual));
    ASSERT_GT(ne, 0.0);
    ASSERT_GT(na, 0.0);
    std::complex<double> ip{};
    for (std::size_t k = 0; k < expected.size(); ++k) ip += std::conj(actual[k]) * expected[k];
    const auto phase = std::abs(ip) > 0 ? ip / std::abs(ip) : std::complex<double>{1.0};
    for (std::size_t k = 0; k < expected.size(); ++k) {
        EXPECT_NEAR(std::abs(expected[k] / ne - phase * actual[k] / na), 0.0, tol) << "index " << k;
    }
}

/// Bell vector components <ab|beta> for a, b in {0, 1}.
inline double bell_component(BellOutcome o, int a, int b) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (o) {
    case BellOutcome::PhiPlus: return a == b ? r : 0.0;
    case BellOutcome::PhiMinus: return a == b ? (a == 0 ? r : -r) : 0.0;
    case BellOutcome::PsiPlus: return a != b ? r : 0.0;
    case BellOutcome::PsiMinus: return a != b ? (a == 0 ? r : -r) : 0.0;
    }
    return 0.0;
}

/// Unnormalized (|beta><beta|_{qa qb} (x) 1) |psi>, computed entry by entry.
inline Amps brute_bell_project(const Amps& psi, std::size_t n, std::size_t qa, std::size_t qb,
                               BellOutcome o) {
    Amps out(psi.size());
    for (std::size_t g = 0; g < psi.size(); ++g) {
        std::complex<double> acc{};
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                std::size_t h = g;
                h &= ~(std::size_t{1} << (n - 1 - qa));
                h &= ~(std::size_t{1} << (n - 1 - qb));
                h |= static_cast<std::size_t>(a) << (n - 1 - qa);
                h |= static_cast<std::size_t>(b) << (n - 1 - qb);
                acc += bell_component(o, a, b) * psi[h];
            }
        }
        out[g] = bell_component(o, bit_at(g, n, qa), bit_at(g, n, qb)) * acc;
    }
    return out;
}

/// Amplitudes of the qubits in `keep` (in that order) with every other qubit
/// fixed to the values in `fixed` (a full-register index supplying them).
inline Amps slice(const Amps& psi, std::size_t n, const std::vector<std::size_t>& keep,
                  std::size_t fixed) {
    Amps out(std::size_t{1} << keep.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        std::size_t g = fixed;
        for (std::size_t j = 0; j < keep.size(); ++j) {
            const std::size_t mask = std::size_t{1} << (n - 1 - keep[j]);
            const bool one = (k >> (keep.size() - 1 - j)) & 1U;
            g = one ? (g | mask) : (g & ~mask);
        }
        out[k] = psi[g];
    }
    return out;
}

inline MessageState seeded_message(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return MessageState::random(n, rng);
}

} // namespace mcqt::test

#pragma once

// Dense pure-state simulator.
//
// Ordering convention: qubit 0 is the most significant bit of the basis index
// (big-endian), so a ket written |q0 q1 ... q_{n-1}> maps to the binary number
// q0 q1 ... q_{n-1}. Every operation in the project relies on this.

#include "mcqt/error.hpp"
#include "mcqt/random.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace mcqt {

using Amplitude = std::complex<double>;
using Qubit = std::size_t;

/// Tolerance for algebraic identities (norms, fidelities, probability sums).
inline constexpr double kNormTolerance = 1e-10;
/// Largest reduced-state eigenvalue must be within this of 1 to count as pure.
inline constexpr double kPurityTolerance = 1e-8;
/// Branch weights below this are treated as exactly zero.
inline constexpr double kImpossibleProbability = 1e-14;
/// Registers larger than this are refused outright (2^30 amplitudes).
inline constexpr std::size_t kMaxQubits = 30;

//------------------------------------------------------------------------------
// Pauli corrections and Bell outcomes
//------------------------------------------------------------------------------

/// The four correction unitaries. `iY` is i*sigma_y, which is the real matrix
/// [[0, 1], [-1, 0]].
enum class Pauli : std::uint8_t { Identity, X, iY, Z };

inline constexpr std::array<Pauli, 4> kAllPaulis = {Pauli::Identity, Pauli::X, Pauli::iY,
                                                    Pauli::Z};

/// Row-major 2x2 matrix.
using Matrix2 = std::array<Amplitude, 4>;

inline constexpr Matrix2 matrix(Pauli p) {
    switch (p) {
    case Pauli::Identity: return {1.0, 0.0, 0.0, 1.0};
    case Pauli::X: return {0.0, 1.0, 1.0, 0.0};
    case Pauli::iY: return {0.0, 1.0, -1.0, 0.0};
    case Pauli::Z: return {1.0, 0.0, 0.0, -1.0};
    }
    return {};
}

inline constexpr Matrix2 hadamard_matrix() {
    constexpr double h = std::numbers::sqrt2 / 2.0;
    return {h, h, h, -h};
}

/// True for X and iY, the corrections that exchange |0> and |1>.
inline constexpr bool flips_bit(Pauli p) { return p == Pauli::X || p == Pauli::iY; }

/// Z composed with `p`, up to global phase: I <-> Z, X <-> iY.
inline constexpr Pauli with_phase_flip(Pauli p) {
    switch (p) {
    case Pauli::Identity: return Pauli::Z;
    case Pauli::Z: return Pauli::Identity;
    case Pauli::X: return Pauli::iY;
    case Pauli::iY: return Pauli::X;
    }
    return p;
}

inline constexpr std::string_view to_string(Pauli p) {
    switch (p) {
    case Pauli::Identity: return "I";
    case Pauli::X: return "X";
    case Pauli::iY: return "iY";
    case Pauli::Z: return "Z";
    }
    return "?";
}

inline std::optional<Pauli> pauli_from_string(std::string_view s) {
    for (Pauli p : kAllPaulis) {
        if (to_string(p) == s) return p;
    }
    return std::nullopt;
}

/// Bell basis, defined on an ordered qubit pair (a, b) with a the more
/// significant: Phi(+/-) = (|00> +/- |11>)/sqrt2, Psi(+/-) = (|01> +/- |10>)/sqrt2.
enum class BellOutcome : std::uint8_t { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellOutcome, 4> kAllBellOutcomes = {
    BellOutcome::PhiPlus, BellOutcome::PhiMinus, BellOutcome::PsiPlus, BellOutcome::PsiMinus};

inline constexpr std::size_t index_of(BellOutcome o) { return static_cast<std::size_t>(o); }
inline constexpr std::size_t index_of(Pauli p) { return static_cast<std::size_t>(p); }

inline constexpr std::string_view to_string(BellOutcome o) {
    switch (o) {
    case BellOutcome::PhiPlus: return "phi+";
    case BellOutcome::PhiMinus: return "phi-";
    case BellOutcome::PsiPlus: return "psi+";
    case BellOutcome::PsiMinus: return "psi-";
    }
    return "?";
}

inline std::optional<BellOutcome> bell_outcome_from_string(std::string_view s) {
    for (BellOutcome o : kAllBellOutcomes) {
        if (to_string(o) == s) return o;
    }
    return std::nullopt;
}

//------------------------------------------------------------------------------
// StateVector
//------------------------------------------------------------------------------

class StateVector {
public:
    /// The zero-qubit state (a single amplitude 1), the unit of `tensor`.
    StateVector() : amplitudes_{Amplitude{1.0}} {}

    /// Builds a state from raw amplitudes. The length must be a power of two
    /// and the squared norm within `tolerance` of 1; the result is renormalized.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes,
                                       double tolerance = 1e-6) {
        const std::size_t dim = amplitudes.size();
        if (dim == 0 || (dim & (dim - 1)) != 0) {
            throw std::invalid_argument("amplitude count " + std::to_string(dim) +
                                        " is not a power of two");
        }
        std::size_t n = 0;
        while ((std::size_t{1} << n) < dim) ++n;
        if (n > kMaxQubits) throw std::invalid_argument("register too large");
        StateVector s(n, std::move(amplitudes));
        const double norm2 = s.norm_squared();
        if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > tolerance) {
            throw std::invalid_argument("state is not normalized (norm^2 = " +
                                        std::to_string(norm2) + ")");
        }
        s.normalize();
        return s;
    }

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const Amplitude> amplitudes() const { return amplitudes_; }
    const Amplitude& operator[](std::size_t i) const { return amplitudes_[i]; }

    double norm_squared() const {
        double acc = 0.0;
        for (const auto& a : amplitudes_) acc += std::norm(a);
        return acc;
    }

    /// Bit-for-bit equality.
    friend bool operator==(const StateVector&, const StateVector&) = default;

    //-- in-place operations (exclusive access) --------------------------------

    void apply(Qubit q, const Matrix2& u) {
        check_qubit(q);
        const std::size_t stride = bit(q);
        for (std::size_t base = 0; base < dimension(); base += 2 * stride) {
            for (std::size_t i = base; i < base + stride; ++i) {
                const Amplitude a0 = amplitudes_[i];
                const Amplitude a1 = amplitudes_[i + stride];
                amplitudes_[i] = u[0] * a0 + u[1] * a1;
                amplitudes_[i + stride] = u[2] * a0 + u[3] * a1;
            }
        }
    }

    void apply(Qubit q, Pauli p) {
        check_qubit(q);
        const std::size_t stride = bit(q);
        // Permutations and sign flips only; exact in floating point.
        for (std::size_t base = 0; base < dimension(); base += 2 * stride) {
            for (std::size_t i = base; i < base + stride; ++i) {
                Amplitude& a0 = amplitudes_[i];
                Amplitude& a1 = amplitudes_[i + stride];
                switch (p) {
                case Pauli::Identity: break;
                case Pauli::X: std::swap(a0, a1); break;
                case Pauli::iY: {
                    const Amplitude t = a0;
                    a0 = a1;
                    a1 = -t;
                    break;
                }
                case Pauli::Z: a1 = -a1; break;
                }
            }
        }
    }

    void apply_hadamard(Qubit q) { apply(q, hadamard_matrix()); }

    /// Projects qubits (a, b) onto a Bell state without renormalizing and
    /// returns the squared norm of the result.
    double project_bell_unnormalized(Qubit a, Qubit b, BellOutcome outcome) {
        check_pair(a, b);
        const std::size_t ma = bit(a);
        const std::size_t mb = bit(b);
        double weight = 0.0;
        for (std::size_t g = 0; g < dimension(); ++g) {
            if (g & (ma | mb)) continue;
            Amplitude& c00 = amplitudes_[g];
            Amplitude& c01 = amplitudes_[g | mb];
            Amplitude& c10 = amplitudes_[g | ma];
            Amplitude& c11 = amplitudes_[g | ma | mb];
            switch (outcome) {
            case BellOutcome::PhiPlus: {
                const Amplitude v = 0.5 * (c00 + c11);
                c00 = v; c11 = v; c01 = 0.0; c10 = 0.0;
                weight += 2.0 * std::norm(v);
                break;
            }
            case BellOutcome::PhiMinus: {
                const Amplitude v = 0.5 * (c00 - c11);
                c00 = v; c11 = -v; c01 = 0.0; c10 = 0.0;
                weight += 2.0 * std::norm(v);
                break;
            }
            case BellOutcome::PsiPlus: {
                const Amplitude v = 0.5 * (c01 + c10);
                c01 = v; c10 = v; c00 = 0.0; c11 = 0.0;
                weight += 2.0 * std::norm(v);
                break;
            }
            case BellOutcome::PsiMinus: {
                const Amplitude v = 0.5 * (c01 - c10);
                c01 = v; c10 = -v; c00 = 0.0; c11 = 0.0;
                weight += 2.0 * std::norm(v);
                break;
            }
            }
        }
        return weight;
    }

    /// Projects qubit q onto |bit> without renormalizing; returns the weight.
    double project_z_unnormalized(Qubit q, int value) {
        check_qubit(q);
        check_bit(value);
        const std::size_t mq = bit(q);
        double weight = 0.0;
        for (std::size_t g = 0; g < dimension(); ++g) {
            const bool set = (g & mq) != 0;
            if (set == (value == 1)) {
                weight += std::norm(amplitudes_[g]);
            } else {
                amplitudes_[g] = 0.0;
            }
        }
        return weight;
    }

    void normalize() {
        const double norm2 = norm_squared();
        if (norm2 <= 0.0) throw std::domain_error("cannot normalize the zero vector");
        const double scale = 1.0 / std::sqrt(norm2);
        for (auto& a : amplitudes_) a *= scale;
    }

    void check_qubit(Qubit q) const {
        if (q >= num_qubits_) {
            throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " +
                                    std::to_string(num_qubits_) + "-qubit register");
        }
    }

    /// Basis-index mask of qubit q under the big-endian convention.
    std::size_t bit(Qubit q) const { return std::size_t{1} << (num_qubits_ - 1 - q); }

private:
    StateVector(std::size_t n, std::vector<Amplitude> amplitudes)
        : num_qubits_(n), amplitudes_(std::move(amplitudes)) {}

    void check_pair(Qubit a, Qubit b) const {
        check_qubit(a);
        check_qubit(b);
        if (a == b) throw std::invalid_argument("Bell measurement needs two distinct qubits");
    }

    static void check_bit(int value) {
        if (value != 0 && value != 1) throw std::invalid_argument("bit must be 0 or 1");
    }

    friend StateVector make_basis_state(std::size_t, std::size_t);
    friend StateVector tensor(const StateVector&, const StateVector&);
    friend StateVector permute_qubits(const StateVector&, std::span<const Qubit>);
    friend StateVector unchecked_state(std::size_t, std::vector<Amplitude>);

    std::size_t num_qubits_ = 0;
    std::vector<Amplitude> amplitudes_;
};

/// Wraps amplitudes already known to be normalized (internal use).
inline StateVector unchecked_state(std::size_t n, std::vector<Amplitude> amplitudes) {
    return StateVector(n, std::move(amplitudes));
}

inline StateVector make_basis_state(std::size_t num_qubits, std::size_t basis_index) {
    if (num_qubits > kMaxQubits) throw std::invalid_argument("register too large");
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (basis_index >= dim) {
        throw std::out_of_range("basis index " + std::to_string(basis_index) +
                                " out of range for " + std::to_string(num_qubits) + " qubits");
    }
    std::vector<Amplitude> amps(dim, Amplitude{0.0});
    amps[basis_index] = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

/// a (x) b; a's qubits come first (more significant).
inline StateVector tensor(const StateVector& a, const StateVector& b) {
    const std::size_t n = a.num_qubits() + b.num_qubits();
    if (n > kMaxQubits) throw std::invalid_argument("register too large");
    std::vector<Amplitude> amps;
    amps.reserve(a.dimension() * b.dimension());
    for (const auto& x : a.amplitudes()) {
        for (const auto& y : b.amplitudes()) amps.push_back(x * y);
    }
    return StateVector(n, std::move(amps));
}

/// New register whose qubit j is the input's qubit order[j].
inline StateVector permute_qubits(const StateVector& s, std::span<const Qubit> order) {
    const std::size_t n = s.num_qubits();
    if (order.size() != n) throw std::invalid_argument("permutation has wrong length");
    std::vector<bool> seen(n, false);
    for (Qubit q : order) {
        s.check_qubit(q);
        if (seen[q]) throw std::invalid_argument("permutation repeats a qubit");
        seen[q] = true;
    }
    std::vector<Amplitude> amps(s.dimension());
    for (std::size_t g = 0; g < s.dimension(); ++g) {
        std::size_t h = 0;
        for (std::size_t j = 0; j < n; ++j) {
            h = (h << 1) | ((g & s.bit(order[j])) ? 1u : 0u);
        }
        amps[h] = s[g];
    }
    return StateVector(n, std::move(amps));
}

inline StateVector apply_pauli(StateVector s, Qubit q, Pauli p) {
    s.apply(q, p);
    return s;
}

inline StateVector apply_hadamard(StateVector s, Qubit q) {
    s.apply_hadamard(q);
    return s;
}

inline Amplitude inner_product(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("inner product of states with different qubit counts");
    }
    Amplitude acc{0.0};
    for (std::size_t i = 0; i < a.dimension(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

/// |<a|b>|^2, insensitive to global phase.
inline double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(inner_product(a, b));
}

//------------------------------------------------------------------------------
// Measurement
//------------------------------------------------------------------------------

struct MeasurementRecord {
    std::variant<BellOutcome, int> outcome;
    double probability = 0.0;
    std::vector<Qubit> qubits;
};

/// Result of a forced projection. `state` is empty for an impossible branch;
/// `probability` is always the exact pre-normalization branch weight.
struct Projection {
    std::optional<StateVector> state;
    double probability = 0.0;

    bool possible() const { return state.has_value(); }
};

struct BellSample {
    BellOutcome outcome;
    StateVector state;
    double probability;
};

struct BitSample {
    int bit;
    StateVector state;
    double probability;
};

inline std::array<double, 4> bell_probabilities(const StateVector& s, Qubit a, Qubit b) {
    s.check_qubit(a);
    s.check_qubit(b);
    if (a == b) throw std::invalid_argument("Bell measurement needs two distinct qubits");
    const std::size_t ma = s.bit(a);
    const std::size_t mb = s.bit(b);
    std::array<double, 4> p{};
    for (std::size_t g = 0; g < s.dimension(); ++g) {
        if (g & (ma | mb)) continue;
        const Amplitude c00 = s[g], c01 = s[g | mb], c10 = s[g | ma], c11 = s[g | ma | mb];
        p[0] += 0.5 * std::norm(c00 + c11);
        p[1] += 0.5 * std::norm(c00 - c11);
        p[2] += 0.5 * std::norm(c01 + c10);
        p[3] += 0.5 * std::norm(c01 - c10);
    }
    return p;
}

inline Projection bell_project(StateVector s, Qubit a, Qubit b, BellOutcome outcome) {
    const double w = s.project_bell_unnormalized(a, b, outcome);
    if (w < kImpossibleProbability) return {std::nullopt, w};
    s.normalize();
    return {std::move(s), w};
}

inline BellSample bell_sample(const StateVector& s, Qubit a, Qubit b, Rng& rng) {
    const auto p = bell_probabilities(s, a, b);
    const double total = p[0] + p[1] + p[2] + p[3];
    if (std::abs(total - 1.0) > kNormTolerance) {
        throw std::logic_error("Bell probabilities sum to " + std::to_string(total));
    }
    const double u = uniform01(rng) * total;
    double acc = 0.0;
    BellOutcome chosen = BellOutcome::PsiMinus;
    for (BellOutcome o : kAllBellOutcomes) {
        acc += p[index_of(o)];
        if (u < acc) {
            chosen = o;
            break;
        }
    }
    // Guard against landing on a zero-weight tail outcome through rounding.
    while (p[index_of(chosen)] < kImpossibleProbability) {
        chosen = static_cast<BellOutcome>(index_of(chosen) - 1);
    }
    auto proj = bell_project(s, a, b, chosen);
    return {chosen, std::move(*proj.state), proj.probability};
}

inline std::array<double, 2> z_probabilities(const StateVector& s, Qubit q) {
    s.check_qubit(q);
    const std::size_t mq = s.bit(q);
    std::array<double, 2> p{};
    for (std::size_t g = 0; g < s.dimension(); ++g) p[(g & mq) ? 1 : 0] += std::norm(s[g]);
    return p;
}

inline Projection z_project(StateVector s, Qubit q, int value) {
    const double w = s.project_z_unnormalized(q, value);
    if (w < kImpossibleProbability) return {std::nullopt, w};
    s.normalize();
    return {std::move(s), w};
}

inline BitSample z_sample(const StateVector& s, Qubit q, Rng& rng) {
    const auto p = z_probabilities(s, q);
    if (std::abs(p[0] + p[1] - 1.0) > kNormTolerance) {
        throw std::logic_error("Z probabilities do not sum to 1");
    }
    int value = uniform01(rng) * (p[0] + p[1]) < p[0] ? 0 : 1;
    if (p[value] < kImpossibleProbability) value = 1 - value;
    auto proj = z_project(s, q, value);
    return {value, std::move(*proj.state), proj.probability};
}

//------------------------------------------------------------------------------
// Subsystems
//------------------------------------------------------------------------------

/// Dominant eigenpair of the reduced density operator on `keep`.
struct ReducedState {
    double max_eigenvalue = 0.0;
    StateVector dominant; ///< on the kept qubits, in `keep` order
};

/// Power iteration on rho = sum_e |psi_e><psi_e| where psi_e are the kept-qubit
/// slices for each configuration e of the discarded qubits. It starts from the
/// heaviest slice, so a pure reduction converges in a single step.
inline ReducedState reduce(const StateVector& s, std::span<const Qubit> keep) {
    const std::size_t n = s.num_qubits();
    std::vector<bool> kept(n, false);
    for (Qubit q : keep) {
        s.check_qubit(q);
        if (kept[q]) throw std::invalid_argument("keep list repeats a qubit");
        kept[q] = true;
    }
    std::vector<Qubit> env;
    for (Qubit q = 0; q < n; ++q) {
        if (!kept[q]) env.push_back(q);
    }
    const std::size_t kdim = std::size_t{1} << keep.size();
    const std::size_t edim = std::size_t{1} << env.size();

    // slices[e * kdim + k]
    std::vector<Amplitude> slices(s.dimension());
    for (std::size_t g = 0; g < s.dimension(); ++g) {
        if (s[g] == Amplitude{0.0}) continue; // measured registers are mostly zeros
        std::size_t k = 0, e = 0;
        for (Qubit q : keep) k = (k << 1) | ((g & s.bit(q)) ? 1u : 0u);
        for (Qubit q : env) e = (e << 1) | ((g & s.bit(q)) ? 1u : 0u);
        slices[e * kdim + k] = s[g];
    }

    std::size_t heaviest = 0;
    double heaviest_weight = -1.0;
    std::vector<double> weights(edim, 0.0);
    for (std::size_t e = 0; e < edim; ++e) {
        for (std::size_t k = 0; k < kdim; ++k) weights[e] += std::norm(slices[e * kdim + k]);
        if (weights[e] > heaviest_weight) {
            heaviest_weight = weights[e];
            heaviest = e;
        }
    }

    std::vector<Amplitude> v(slices.begin() + heaviest * kdim,
                             slices.begin() + (heaviest + 1) * kdim);
    auto normalize_vec = [](std::vector<Amplitude>& x) {
        double nn = 0.0;
        for (const auto& a : x) nn += std::norm(a);
        const double scale = 1.0 / std::sqrt(nn);
        for (auto& a : x) a *= scale;
    };
    normalize_vec(v);

    double lambda = 0.0;
    std::vector<Amplitude> w(kdim);
    for (int iter = 0; iter < 500; ++iter) {
        std::fill(w.begin(), w.end(), Amplitude{0.0});
        for (std::size_t e = 0; e < edim; ++e) {
            if (weights[e] == 0.0) continue;
            const Amplitude* col = &slices[e * kdim];
            Amplitude overlap{0.0};
            for (std::size_t k = 0; k < kdim; ++k) overlap += std::conj(col[k]) * v[k];
            if (overlap == Amplitude{0.0}) continue;
            for (std::size_t k = 0; k < kdim; ++k) w[k] += col[k] * overlap;
        }
        Amplitude rayleigh{0.0};
        for (std::size_t k = 0; k < kdim; ++k) rayleigh += std::conj(v[k]) * w[k];
        const double next = rayleigh.real();
        v.swap(w);
        normalize_vec(v);
        const bool converged = std::abs(next - lambda) < 1e-15;
        lambda = next;
        if (converged || lambda > 1.0 - 1e-14) break;
    }

    // Fix the global phase so the result lines up with the heaviest slice.
    Amplitude align{0.0};
    const Amplitude* col = &slices[heaviest * kdim];
    for (std::size_t k = 0; k < kdim; ++k) align += std::conj(v[k]) * col[k];
    if (std::abs(align) > 0.0) {
        const Amplitude phase = align / std::abs(align);
        for (auto& a : v) a *= phase;
    }
    return {std::min(lambda, 1.0), unchecked_state(keep.size(), std::move(v))};
}

/// Pure state of the kept qubits (in `keep` order). Throws SubsystemNotPure
/// when the reduced state is mixed.
inline StateVector extract_subsystem(const StateVector& s, std::span<const Qubit> keep) {
    auto reduced = reduce(s, keep);
    if (reduced.max_eigenvalue < 1.0 - kPurityTolerance) {
        throw SubsystemNotPure("subsystem not pure: largest reduced eigenvalue " +
                               std::to_string(reduced.max_eigenvalue));
    }
    return std::move(reduced.dominant);
}

inline StateVector extract_subsystem(const StateVector& s, std::initializer_list<Qubit> keep) {
    return extract_subsystem(s, std::span<const Qubit>(keep.begin(), keep.size()));
}

//------------------------------------------------------------------------------
// Named states
//------------------------------------------------------------------------------

inline StateVector bell_state(BellOutcome o) {
    constexpr double h = std::numbers::sqrt2 / 2.0;
    switch (o) {
    case BellOutcome::PhiPlus: return unchecked_state(2, {h, 0.0, 0.0, h});
    case BellOutcome::PhiMinus: return unchecked_state(2, {h, 0.0, 0.0, -h});
    case BellOutcome::PsiPlus: return unchecked_state(2, {0.0, h, h, 0.0});
    case BellOutcome::PsiMinus: return unchecked_state(2, {0.0, h, -h, 0.0});
    }
    return {};
}

/// (|0...0> + |1...1>)/sqrt2 on k >= 1 qubits.
inline StateVector ghz_state(std::size_t k) {
    if (k == 0 || k > kMaxQubits) throw std::invalid_argument("GHZ state needs 1..30 qubits");
    const std::size_t dim = std::size_t{1} << k;
    std::vector<Amplitude> amps(dim, Amplitude{0.0});
    amps.front() = std::numbers::sqrt2 / 2.0;
    amps.back() = std::numbers::sqrt2 / 2.0;
    return unchecked_state(k, std::move(amps));
}

/// Normalized state with every amplitude nonzero: moduli in [0.5, 1] and
/// independent phases, drawn from `rng`.
inline StateVector random_dense_state(std::size_t n, Rng& rng) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Amplitude> amps(dim);
    for (auto& a : amps) {
        const double r = uniform(rng, 0.5, 1.0);
        const double theta = uniform(rng, 0.0, 2.0 * std::numbers::pi);
        a = std::polar(r, theta);
    }
    double nn = 0.0;
    for (const auto& a : amps) nn += std::norm(a);
    for (auto& a : amps) a /= std::sqrt(nn);
    return unchecked_state(n, std::move(amps));
}

} // namespace mcqt

#pragma once

#include <stdexcept>
#include <string>

namespace mcqt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A forced measurement outcome whose Born weight is zero.
struct ImpossibleBranch : Error {
    using Error::Error;
};

/// The kept qubits are still entangled with the rest of the register.
struct SubsystemNotPure : Error {
    using Error::Error;
};

/// The correction oracle found no valid Pauli assignment, or more than one.
struct OracleError : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace mcqt

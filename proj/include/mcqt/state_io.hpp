#pragma once

// Plain-text state files: one amplitude per line as "re im", 2^n lines in
// big-endian basis order. Blank lines and lines starting with '#' are skipped.

#include "mcqt/statevector.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace mcqt {

/// Tolerance on the squared norm of a loaded state before renormalization.
inline constexpr double kLoadNormTolerance = 1e-6;

inline StateVector read_state(std::istream& in) {
    std::vector<Amplitude> amps;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        double re = 0.0, im = 0.0;
        std::string extra;
        if (!(fields >> re >> im) || (fields >> extra)) {
            throw std::invalid_argument("state file line " + std::to_string(lineno) +
                                        ": expected two numbers \"re im\"");
        }
        amps.emplace_back(re, im);
    }
    return StateVector::from_amplitudes(std::move(amps), kLoadNormTolerance);
}

inline StateVector read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open state file: " + path);
    return read_state(in);
}

inline void write_state(std::ostream& out, const StateVector& s) {
    char buf[64];
    for (const auto& a : s.amplitudes()) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", a.real(), a.imag());
        out << buf;
    }
}

} // namespace mcqt

#pragma once

#include <stdexcept>
#include <string>

namespace radiole {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed configuration file. Carries the 1-based line and column of the
// offending token (column 0 when the error concerns the whole line).
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) +
                (column > 0 ? ", column " + std::to_string(column) : "") + ")"),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

// A configuration violates a structural invariant (disconnected, self-loop, ...).
class InvalidConfiguration : public Error {
public:
    using Error::Error;
};

// Leader election was requested for a configuration the classifier rejects.
class InfeasibleConfiguration : public Error {
public:
    using Error::Error;
};

// A node history failed to match any entry of a protocol list. In a correct
// execution of the canonical protocol a match always exists, so this signals
// either a corrupted history or an implementation bug.
class ProtocolMismatch : public Error {
public:
    using Error::Error;
};

// The simulator hit its round cap before every node terminated.
class SimulationLimit : public Error {
public:
    using Error::Error;
};

}  // namespace radiole

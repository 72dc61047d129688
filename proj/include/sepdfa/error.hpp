#pragma once

#include <stdexcept>
#include <string>

namespace sepdfa {

// Base of every error the library raises. Each subclass maps onto one CLI
// exit code (see cli.hpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: sample files, automaton dumps, conflicting labels.
class ParseError : public Error {
 public:
  using Error::Error;
};

// The external solver could not be run or produced output we cannot trust.
class SolverError : public Error {
 public:
  using Error::Error;
};

class SolverTimeout : public SolverError {
 public:
  using SolverError::SolverError;
};

// A learned automaton does not separate its samples.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// Broken invariant inside the library (encoder bug, inconsistent model, ...).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sepdfa

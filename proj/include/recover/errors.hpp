#pragma once

#include <stdexcept>
#include <string>

namespace recover {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Integration produced a non-finite or unbounded state.
class BlowUpError : public Error {
 public:
  BlowUpError(const std::string& msg, long step) : Error(msg), step(step) {}
  long step;
};

/// The dictionary lost column rank; carries the rank actually found.
class RankDeficientError : public Error {
 public:
  RankDeficientError(const std::string& msg, long rank) : Error(msg), rank(rank) {}
  long rank;
};

/// A solver iterate became non-finite.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& msg, int iteration) : Error(msg), iteration(iteration) {}
  int iteration;
};

/// Text-format parse failure; line is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, long line) : Error(msg), line(line) {}
  long line;
};

}  // namespace recover

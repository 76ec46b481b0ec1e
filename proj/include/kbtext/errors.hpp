#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kbtext {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed N-Triples input. Positions are 1-based; column counts bytes
// within the offending line.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& msg)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Seed pool for the requested classes is empty.
class NoSeedsError : public Error {
 public:
  using Error::Error;
};

// A sampling strategy found no candidate triples around its seed.
class EmptyNeighborhoodError : public Error {
 public:
  using Error::Error;
};

// No property met the coverage threshold when clustering.
class NoQualifyingPropertiesError : public Error {
 public:
  using Error::Error;
};

// Sentence merge was asked to combine clauses about different subjects.
class MixedSubjectsError : public Error {
 public:
  using Error::Error;
};

// A document slot could not be filled after the retry budget.
class GenerationExhaustedError : public Error {
 public:
  using Error::Error;
};

// Statistic undefined for the given input (short or constant series).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace kbtext

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace origami {

// Squares are numbered from 1, matching the usual labelling of square-tiled
// diagrams.  Ids stay signed 64-bit so that fiber pairings of infinite covers
// cannot overflow at the scales this library is meant for.
using SquareId = std::int64_t;

enum class Tribool { yes, no, unknown };

inline const char* to_string(Tribool t) {
  switch (t) {
    case Tribool::yes: return "yes";
    case Tribool::no: return "no";
    default: return "unknown";
  }
}

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// The two gluing permutations act on different square sets.
class DomainMismatch : public Error {
 public:
  explicit DomainMismatch(const std::string& what) : Error(what) {}
};

// A square unreachable from square 1 witnesses a disconnected gluing.
class NotConnected : public Error {
 public:
  NotConnected(SquareId witness, const std::string& what)
      : Error(what), witness_(witness) {}
  SquareId witness() const { return witness_; }

 private:
  SquareId witness_;
};

class NotConnectedCover : public Error {
 public:
  NotConnectedCover(SquareId witness, const std::string& what)
      : Error(what), witness_(witness) {}
  SquareId witness() const { return witness_; }

 private:
  SquareId witness_;
};

// Group elements from different kinds (or different degrees/ranks) were mixed
// in a single operation.
class MixedGroupKinds : public Error {
 public:
  explicit MixedGroupKinds(const std::string& what) : Error(what) {}
};

class CapExceeded : public Error {
 public:
  CapExceeded(std::int64_t cap, const std::string& what)
      : Error(what), cap_(cap) {}
  std::int64_t cap() const { return cap_; }

 private:
  std::int64_t cap_;
};

class NotFlat : public Error {
 public:
  explicit NotFlat(const std::string& what) : Error(what) {}
};

// A flatness check was asked to certify a region that does not contain every
// corner touched by the voltage support.
class RegionTooSmall : public Error {
 public:
  explicit RegionTooSmall(const std::string& what) : Error(what) {}
};

class NotGenerating : public Error {
 public:
  explicit NotGenerating(const std::string& what) : Error(what) {}
};

// A scheme that is flat by construction failed its flatness re-check; this
// indicates a bug, not bad input.
class FlatnessFailed : public Error {
 public:
  explicit FlatnessFailed(const std::string& what) : Error(what) {}
};

class CertificateFailed : public Error {
 public:
  explicit CertificateFailed(const std::string& what) : Error(what) {}
};

class MarkerNotFound : public Error {
 public:
  explicit MarkerNotFound(const std::string& what) : Error(what) {}
};

// Internal consistency guard: 2 - chi must be even for a closed oriented
// surface, so hitting this means the library itself is wrong.
class OddParity : public Error {
 public:
  explicit OddParity(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class SemanticError : public Error {
 public:
  SemanticError(int line, const std::string& what) : Error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace origami

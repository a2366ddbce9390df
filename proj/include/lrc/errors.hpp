#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input problems (exit status 2 in the CLI).
class ParseError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public ParseError {
 public:
  ShapeError(const std::string& path, const std::string& expected, const std::string& actual)
      : ParseError("shape error at " + path + ": expected " + expected + ", got " + actual),
        path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Structural failures of the engine or of inputs that slipped validation.
class DegreeOutOfRange : public Error {
 public:
  using Error::Error;
};
class NotASubspace : public Error {
 public:
  using Error::Error;
};
class InvalidComplex : public Error {
 public:
  using Error::Error;
};
class ConstructionInconsistent : public InvalidComplex {
 public:
  using InvalidComplex::InvalidComplex;
};
class IncompatibleFiltration : public Error {
 public:
  using Error::Error;
};
class FiltrationNotPreserved : public IncompatibleFiltration {
 public:
  using IncompatibleFiltration::IncompatibleFiltration;
};
class NotEquivariant : public Error {
 public:
  using Error::Error;
};
class NotWellDefined : public Error {
 public:
  using Error::Error;
};
class TruncationOverflow : public Error {
 public:
  using Error::Error;
};
class ExactnessFailure : public Error {
 public:
  ExactnessFailure(const std::string& what, std::size_t level, std::size_t degree)
      : Error(what), level_(level), degree_(degree) {}
  std::size_t level() const { return level_; }
  std::size_t degree() const { return degree_; }

 private:
  std::size_t level_, degree_;
};
class MismatchAt : public Error {
 public:
  MismatchAt(const std::string& what, std::size_t degree) : Error(what), degree_(degree) {}
  std::size_t degree() const { return degree_; }

 private:
  std::size_t degree_;
};
class DimMismatch : public Error {
 public:
  DimMismatch(const std::string& what, int p, int q) : Error(what), p_(p), q_(q) {}
  int p() const { return p_; }
  int q() const { return q_; }

 private:
  int p_, q_;
};

// One failed axiom instance. `witness` holds the basis indices that exhibit it.
struct Violation {
  std::string axiom;
  std::vector<std::size_t> witness;
  std::string detail;

  bool operator==(const Violation&) const = default;

  std::string to_string() const {
    std::ostringstream os;
    os << axiom << " (";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
    os << ")";
    if (!detail.empty()) os << ": " << detail;
    return os.str();
  }
};

using Violations = std::vector<Violation>;

inline void append_prefixed(Violations& out, const Violations& in, const std::string& prefix) {
  for (auto v : in) {
    v.axiom = prefix + v.axiom;
    out.push_back(std::move(v));
  }
}

}  // namespace lrc

#pragma once

#include <stdexcept>
#include <string>

namespace gramclass {

enum class Errc {
  // exact linear algebra
  NoSolution,
  NonIntegerSolution,
  Underdetermined,
  NotSquare,
  NotSymmetric,
  NotSkewSymmetric,
  // quiver validation
  HasLoop,
  Disconnected,
  InvalidVertex,
  InvalidWalk,
  InfeasibleShape,
  // unit forms and standard representatives
  InvalidShape,
  NotUnitForm,
  NotConnected,
  NotNonNegative,
  NotTypeA,
  // congruence pipeline
  LaplacianMismatch,
  CycleTypeMismatch,
  ShapeMismatch,
  NotPseudoEndo,
  NotPure,
  NoL,
  NotSkew,
  NotPureNormalForm,
  WNotInvertibleNormal,
  NotWeaklyCongruent,
  DifferentCoxeterPolynomial,
  // I/O and internal invariants
  ParseError,
  InvariantError,
  Internal,
};

const char* errc_name(Errc kind);

class Error : public std::runtime_error {
 public:
  Error(Errc kind, const std::string& message);
  Errc kind() const { return kind_; }

 private:
  Errc kind_;
};

[[noreturn]] void fail(Errc kind, const std::string& message);

inline void check(bool condition, Errc kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace gramclass

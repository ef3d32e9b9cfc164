#include "gramclass/error.hpp"

namespace gramclass {

const char* errc_name(Errc kind) {
  switch (kind) {
    case Errc::NoSolution: return "NoSolution";
    case Errc::NonIntegerSolution: return "NonIntegerSolution";
    case Errc::Underdetermined: return "Underdetermined";
    case Errc::NotSquare: return "NotSquare";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotSkewSymmetric: return "NotSkewSymmetric";
    case Errc::HasLoop: return "HasLoop";
    case Errc::Disconnected: return "Disconnected";
    case Errc::InvalidVertex: return "InvalidVertex";
    case Errc::InvalidWalk: return "InvalidWalk";
    case Errc::InfeasibleShape: return "InfeasibleShape";
    case Errc::InvalidShape: return "InvalidShape";
    case Errc::NotUnitForm: return "NotUnitForm";
    case Errc::NotConnected: return "NotConnected";
    case Errc::NotNonNegative: return "NotNonNegative";
    case Errc::NotTypeA: return "NotTypeA";
    case Errc::LaplacianMismatch: return "LaplacianMismatch";
    case Errc::CycleTypeMismatch: return "CycleTypeMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotPseudoEndo: return "NotPseudoEndo";
    case Errc::NotPure: return "NotPure";
    case Errc::NoL: return "NoL";
    case Errc::NotSkew: return "NotSkew";
    case Errc::NotPureNormalForm: return "NotPureNormalForm";
    case Errc::WNotInvertibleNormal: return "WNotInvertibleNormal";
    case Errc::NotWeaklyCongruent: return "NotWeaklyCongruent";
    case Errc::DifferentCoxeterPolynomial: return "DifferentCoxeterPolynomial";
    case Errc::ParseError: return "ParseError";
    case Errc::InvariantError: return "InvariantError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(Errc kind, const std::string& message)
    : std::runtime_error(std::string(errc_name(kind)) + ": " + message), kind_(kind) {}

void fail(Errc kind, const std::string& message) { throw Error(kind, message); }

}  // namespace gramclass

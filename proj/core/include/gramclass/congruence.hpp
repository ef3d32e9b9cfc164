#pragma once

#include <optional>

#include "gramclass/exactmat.hpp"
#include "gramclass/quiver.hpp"
#include "gramclass/standard.hpp"
#include "gramclass/unitform.hpp"

namespace gramclass {

// A matrix B with I(source) B = I(target) and I(target^dagger) B^T =
// I(source^dagger); such B always satisfies B^T G_source B = G_target.
struct PseudoMorphism {
  Quiver source;
  Quiver target;
  IntMatrix B;
};

// Adjoint B* = Ghat_target^{-1} B^T Ghat_source of a map from the form with
// Ghat_source into the form with Ghat_target.
IntMatrix star(const IntMatrix& B, const IntMatrix& ghat_source,
               const IntMatrix& ghat_target);

// Column-by-column construction of a pseudo-morphism from src onto the
// standard quiver tgt with the same Coxeter-Laplacian. Columns come from
// incidence vectors of descending walks and connecting walks of src.
PseudoMorphism build_pseudo_morphism(const Quiver& src, const Quiver& tgt);

// Permutation rho with rho * a * rho^{-1} = b, built by pairing cycles sorted
// by (length desc, min element asc) and mapping pointwise from the minimal
// members. CycleTypeMismatch when the cycle types differ.
Permutation conjugating_permutation(const Permutation& a, const Permutation& b);

// Upsilon(Z) = Id + K Z (Ghat K)^T: the endomorphism of the target attached
// to a c x c integer matrix Z. ShapeMismatch on bad dimensions.
IntMatrix upsilon(const IntMatrix& Z, const IntMatrix& K,
                  const IntMatrix& ghat);

// Inverse of Upsilon: the unique Z with E = Id + K Z (Ghat K)^T.
// NotPseudoEndo when E - Id does not factor through the kernel columns.
IntMatrix xi_of_endo(const IntMatrix& E, const IntMatrix& K,
                     const IntMatrix& ghat);

// Twisted composition: Z + Z' - Z W Z'.
IntMatrix circ_w(const IntMatrix& Z, const IntMatrix& Zp, const IntMatrix& W);

// Correction step: M with det(B + M) = +-1 for a pseudo-morphism B, computed
// from kernel completions K (source) and Kv (target). NotPure when the
// target pairing is not hyperbolic-unimodular; NoL when B Kv does not factor
// integrally through K.
IntMatrix correct_invertibility(const IntMatrix& B, const IntMatrix& K,
                                const IntMatrix& Kv, const IntMatrix& ghat_t);

// Solve Z = Y - Y^T + Y^T W Y for Y, where W is a pure skew normal form
// ((+)_i W1) (+) 0. By convention Y = 0 when Z = 0. NotSkew /
// NotPureNormalForm on invalid inputs.
IntMatrix skew_decompose_b(const IntMatrix& Z, const IntMatrix& W);

// Solve Z = Y^T W Y for invertible W = (+)_{i=1}^r W1 and skew Z.
// WNotInvertibleNormal / NotSkew on invalid inputs.
IntMatrix skew_factor_a(const IntMatrix& Z, const IntMatrix& W);

// Correction step: C = Upsilon(-Y^T) with (B C)^* (B C) = Id, for an already
// invertible weak morphism B onto the standard target.
IntMatrix correct_to_strong(const IntMatrix& B, const IntMatrix& Kv,
                            const IntMatrix& ghat_s, const IntMatrix& ghat_t);

struct CongruenceCertificate {
  Permutation rho;          // vertex relabeling applied to the source quiver
  IntMatrix B;              // strong congruence matrix, |det B| = 1
  Quiver source;            // the relabeled source quiver rho . Q
  Quiver target;            // the standard quiver
  Partition target_partition;
  int degeneracy = 0;
  bool verified = false;    // set after exact re-verification
};

// Kernel completion on the source side: a kernel basis of I(q) whose trailing
// c - 2d columns are the beta vectors (minus the dropped orbit), saturated.
IntMatrix source_kernel_completion(const Quiver& q, int d);

// Full pipeline from a connected quiver to its standard representative.
CongruenceCertificate congruence_to_standard(const Quiver& q);

// Same, starting from a unit form (validated, connectivity- and
// non-negativity-checked, then realized as a quiver).
CongruenceCertificate congruence_forms(const UnitForm& q);

struct BetweenResult {
  IntMatrix B;  // strong congruence from q to qp
  Partition cycle_type;
  int degeneracy = 0;
};

// Strong congruence between two forms, or the precise obstruction:
// NotWeaklyCongruent when (n, corank) differ, DifferentCoxeterPolynomial when
// the cycle types differ.
BetweenResult congruence_between(const UnitForm& q, const UnitForm& qp);

// C with C^T Ghat_q C = Ghat_q^T.
IntMatrix triangular_flip(const UnitForm& q);

struct VerifyReport {
  bool weak = false;
  bool strong = false;
  bool unimodular = false;
  Int determinant;
  std::optional<bool> corank_le1_shortcut;  // present iff psd and corank <= 1
};

// Exact verification that B is a (weak/strong) Gram congruence from q to qp.
VerifyReport verify(const IntMatrix& B, const UnitForm& q, const UnitForm& qp);

}  // namespace gramclass

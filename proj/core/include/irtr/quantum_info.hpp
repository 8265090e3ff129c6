#pragma once

#include <complex>

#include "irtr/model.hpp"

namespace irtr {

/// 2x2 Hermitian quantum geometric tensor: real diagonal, q21 = conj(q12).
/// The real part is the quantum Fisher information matrix; the imaginary part
/// of the off-diagonal drives measurement incompatibility.
struct GeometricTensor {
  double q11, q22;
  std::complex<double> q12;

  /// Smaller eigenvalue of the Hermitian matrix; >= -1e-12 for a valid tensor.
  double min_eigenvalue() const;
};

/// Symmetric 2x2 Fisher information matrix.
struct FisherMatrix {
  double f11 = 0.0;
  double f12 = 0.0;
  double f22 = 0.0;
};

/// Normalized square-root information regrets of the two parameters,
/// each in [0, 1].
struct RegretPair {
  double d1, d2;
};

/// Closed-form geometric tensor of the two-mode coherent encoding:
/// diagonal 2, off-diagonal 2 i mu.
///
/// Throws OutOfRangeMu unless 0 <= mu <= 1.
GeometricTensor geometric_tensor(double mu);

/// Numerical geometric tensor built from coherent-state overlaps and central
/// finite differences of the encoded state in the rescaled parameters, at
/// base point sig. Exact in the state (no basis truncation) and independent
/// of the closed form above.
GeometricTensor geometric_tensor_oracle(const EncodingParams& enc,
                                        const SignalParams& sig,
                                        double h = 1e-4);

/// Real part of the geometric tensor.
FisherMatrix qfim(const GeometricTensor& gt);

/// |Im q12| / sqrt(q11 q22). Throws DegenerateTensor if a diagonal vanishes.
double incompatibility(const GeometricTensor& gt);

/// d_j = sqrt(max(0, (qf_jj - cf_jj) / qf_jj)). Tiny negative regrets from
/// roundoff (>= -1e-12) are clamped to zero; throws CrbViolation if the
/// classical information exceeds the quantum bound beyond that slack.
RegretPair regrets(const FisherMatrix& qf, const FisherMatrix& cf);

}  // namespace irtr

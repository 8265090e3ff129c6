#include "irtr/quantum_info.hpp"

#include <cmath>
#include <complex>

#include "irtr/errors.hpp"

namespace irtr {

namespace {

using cplx = std::complex<double>;

// <alpha|beta> for single-mode coherent states.
cplx coherent_overlap(cplx a, cplx b) {
  return std::exp(-0.5 * std::norm(a) - 0.5 * std::norm(b) +
                  std::conj(a) * b);
}

cplx overlap(const TwoModeCoherentState& s, const TwoModeCoherentState& t) {
  return coherent_overlap(s.alpha1, t.alpha1) *
         coherent_overlap(s.alpha2, t.alpha2);
}

}  // namespace

double GeometricTensor::min_eigenvalue() const {
  const double tr = q11 + q22;
  const double disc =
      std::sqrt((q11 - q22) * (q11 - q22) + 4.0 * std::norm(q12));
  return 0.5 * (tr - disc);
}

GeometricTensor geometric_tensor(double mu) {
  if (!(mu >= 0.0 && mu <= 1.0))
    throw OutOfRangeMu("geometric_tensor: mu must lie in [0, 1]");
  return {2.0, 2.0, cplx(0.0, 2.0 * mu)};
}

GeometricTensor geometric_tensor_oracle(const EncodingParams& enc,
                                        const SignalParams& sig, double h) {
  if (!(h > 0.0))
    throw InvalidArgument("geometric_tensor_oracle: step must be positive");

  const double a0 = sig.a_resc;
  const double b0 = sig.b_resc;
  auto state = [&](double da, double db) {
    return encode_state(enc, SignalParams::from_rescaled(a0 + da, b0 + db));
  };
  const TwoModeCoherentState base = state(0.0, 0.0);
  const TwoModeCoherentState ap = state(+h, 0.0), am = state(-h, 0.0);
  const TwoModeCoherentState bp = state(0.0, +h), bm = state(0.0, -h);

  // <d_j psi | d_k psi> from the four displaced overlaps.
  auto deriv_inner = [&](const TwoModeCoherentState& jp,
                         const TwoModeCoherentState& jm,
                         const TwoModeCoherentState& kp,
                         const TwoModeCoherentState& km) {
    return (overlap(jp, kp) - overlap(jp, km) - overlap(jm, kp) +
            overlap(jm, km)) /
           (4.0 * h * h);
  };
  // <psi | d_k psi>.
  auto connection = [&](const TwoModeCoherentState& kp,
                        const TwoModeCoherentState& km) {
    return (overlap(base, kp) - overlap(base, km)) / (2.0 * h);
  };

  const cplx ga = connection(ap, am);
  const cplx gb = connection(bp, bm);
  const cplx qaa = 4.0 * (deriv_inner(ap, am, ap, am) - std::conj(ga) * ga);
  const cplx qbb = 4.0 * (deriv_inner(bp, bm, bp, bm) - std::conj(gb) * gb);
  const cplx qab = 4.0 * (deriv_inner(ap, am, bp, bm) - std::conj(ga) * gb);
  return {qaa.real(), qbb.real(), qab};
}

FisherMatrix qfim(const GeometricTensor& gt) {
  return {gt.q11, gt.q12.real(), gt.q22};
}

double incompatibility(const GeometricTensor& gt) {
  const double prod = gt.q11 * gt.q22;
  if (!(prod > 0.0))
    throw DegenerateTensor("incompatibility: tensor diagonal vanishes");
  return std::abs(gt.q12.imag()) / std::sqrt(prod);
}

RegretPair regrets(const FisherMatrix& qf, const FisherMatrix& cf) {
  auto one = [](double q, double c) {
    if (c - q > 1e-12)
      throw CrbViolation(
          "regrets: classical information exceeds the quantum bound");
    if (q <= 0.0) return 0.0;  // nothing to regret
    return std::sqrt(std::max(0.0, (q - c) / q));
  };
  return {one(qf.f11, cf.f11), one(qf.f22, cf.f22)};
}

}  // namespace irtr

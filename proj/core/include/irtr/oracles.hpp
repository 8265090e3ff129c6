#pragma once

#include "irtr/model.hpp"
#include "irtr/protocol.hpp"
#include "irtr/quantum_info.hpp"

namespace irtr {

// Cross-checks of the closed-form classical Fisher matrix that derive it from
// the outcome density alone. Both are independent of analytic_cfim; the
// second one is also independent of the analytic score.

/// Midpoint quadrature of the score outer product against the density,
/// integrated over an 8-sigma box; n grid points per axis.
FisherMatrix cfim_by_score_quadrature(double phi, double mu,
                                      const SignalParams& sig, int n = 384);

/// Same integral with the score replaced by central finite differences of
/// log_density in the true rescaled amplitudes (step h).
FisherMatrix cfim_by_log_density_fd(double phi, double mu,
                                    const SignalParams& sig, double h = 1e-5,
                                    int n = 384);

/// Total probability mass of the outcome density by quadrature; 1 up to the
/// quadrature error for a valid distribution.
double density_mass(double phi, double mu, const SignalParams& sig,
                    int n = 384);

}  // namespace irtr

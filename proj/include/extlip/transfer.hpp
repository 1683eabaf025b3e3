#ifndef EXTLIP_TRANSFER_HPP
#define EXTLIP_TRANSFER_HPP

#include <vector>

#include "extlip/metric_space.hpp"

namespace extlip {

/// The anchored multiplication operator: phi(x, h)(x') = d(x', x) h(x') + h(x).
/// Carries a bounded table h into a map that is Lipschitz at x, isometrically
/// for the sup norm of h.
VectorMap phi(std::size_t x, const VectorMap& h);

/// Inverse of phi: h(x') = (g(x') - g(x)) / d(x', x) off x, h(x) = g(x).
VectorMap phi_inv(std::size_t x, const VectorMap& g);

/// Intentionally wrong variant of phi (the anchor term is dropped). Exists so
/// the verification suite can prove its isometry and round-trip checks are
/// able to fail; never use it for real computation.
VectorMap phi_mutant(std::size_t x, const VectorMap& h);

struct TransferResult {
    VectorMap composed;     // phi(x2, phi_inv(x1, f))
    VectorMap closed_form;  // direct evaluation of the composed formula
    double max_discrepancy; // largest entrywise gap between the two routes
};

/// Transfer between anchor points x1 != x2, computed both by composing
/// phi/phi_inv and by the closed form
///   (d(x,x2)/d(x,x1)) (f(x) - f(x1)) + (f(x2) - f(x1))/d(x2,x1)   for x != x1,
///   d(x1,x2) f(x1)   +  (f(x2) - f(x1))/d(x2,x1)                  for x = x1.
TransferResult transfer_compose(std::size_t x1, std::size_t x2, const VectorMap& f);

struct VanishingViolation {
    std::size_t point;
    double fx_norm;        // ||f(x)||
    double equidist_gap;   // |d(x,x1) - d(x,x2)|
};

struct VanishingReport {
    bool is_fixed_point = false;
    bool vanishing_holds = false;
    bool pass = false;  // (not is_fixed_point) or vanishing_holds
    std::vector<VanishingViolation> violations;
};

/// Checks the implication: if f is a fixed point of the x1->x2 transfer then
/// f vanishes wherever d(x,x1) != d(x,x2). Stated for coordinate spaces;
/// equidistance and the fixed-point test use the same tolerance.
VanishingReport vanishing_check(const CoordSpace& X, const VectorMap& f, std::size_t x1,
                                std::size_t x2, double tol = default_tolerance);

}  // namespace extlip

#endif

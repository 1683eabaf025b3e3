#ifndef EXTLIP_EXTBOUND_HPP
#define EXTLIP_EXTBOUND_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "extlip/metric_space.hpp"

namespace extlip {

/// Thrown when an operation needs a retraction-closed sample and the input
/// is not one.
class closure_error : public std::runtime_error {
public:
    closure_error(std::string msg, std::vector<std::size_t> offenders)
        : std::runtime_error(std::move(msg)), offending_points(std::move(offenders)) {}
    std::vector<std::size_t> offending_points;
};

/// Extensive bound of a base-preserving map: max over x != 0 of
/// d(T(x), 0) / d(x, 0). When the map does not fix the base point the value
/// is undefined (NaN) and base_ok is false.
struct EConstant {
    double value = 0.0;
    std::optional<std::size_t> witness;
    bool base_ok = true;
};

template <MetricMap M>
EConstant e_constant(const M& f, double tol = default_tolerance) {
    EConstant out;
    out.base_ok = f.image_dist_to_zero(PointedMetricSpace::base()) <= tol;
    if (!out.base_ok) {
        out.value = std::nan("");
        return out;
    }
    const auto& src = f.src();
    for (std::size_t x = 1; x < src.size(); ++x) {
        const double v = f.image_dist_to_zero(x) / src.dist_to_base(x);
        if (!out.witness || v > out.value) {
            out.value = v;
            out.witness = x;
        }
    }
    return out;
}

/// The metric between extensively bounded maps with common source and
/// target: max over x != 0 of d(T(x), S(x)) / d(x, 0).
PointExtremumDecl;  // forward marker replaced below

}  // namespace extlip

#endif

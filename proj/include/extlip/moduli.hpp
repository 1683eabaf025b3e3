#ifndef EXTLIP_MODULI_HPP
#define EXTLIP_MODULI_HPP

#include <optional>
#include <utility>

#include "extlip/kernels.hpp"
#include "extlip/metric_space.hpp"

namespace extlip {

/// Value of a modulus of continuity at a given radius, with the attaining
/// pair (or point) when the admissible set is non-trivial.
struct ModulusValue {
    double t = 0.0;
    double value = 0.0;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

struct PairExtremum {
    double value = 0.0;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

struct PointExtremum {
    double value = 0.0;
    std::optional<std::size_t> witness;
};

/// Largest image distance over point pairs at source distance <= t.
/// Witnesses break ties toward the lexicographically first pair.
template <MetricMap M>
ModulusValue omega(const M& f, double t) {
    if (!(t > 0.0)) throw std::domain_error("omega requires t > 0");
    const auto& src = f.src();
    ModulusValue out{t, 0.0, std::nullopt};
    for (std::size_t i = 0; i < src.size(); ++i)
        for (std::size_t j = i + 1; j < src.size(); ++j) {
            if (src.dist(i, j) > t) continue;
            const double v = f.image_dist(i, j);
            if (!out.witness || v > out.value) {
                out.value = v;
                out.witness = {i, j};
            }
        }
    if (!out.witness) out.value = 0.0;
    return out;
}

/// Largest d(f(x), f(x0)) over x with d(x, x0) <= t.
template <MetricMap M>
ModulusValue omega_at(const M& f, std::size_t x0, double t) {
    if (!(t > 0.0)) throw std::domain_error("omega_at requires t > 0");
    const auto& src = f.src();
    if (x0 >= src.size()) throw std::invalid_argument("omega_at: x0 out of range");
    ModulusValue out{t, 0.0, std::nullopt};
    for (std::size_t x = 0; x < src.size(); ++x) {
        if (x == x0 || src.dist(x, x0) > t) continue;
        const double v = f.image_dist(x, x0);
        if (!out.witness || v > out.value) {
            out.value = v;
            out.witness = {x, x0};
        }
    }
    return out;
}

/// Exact Lipschitz constant: max image/source distance ratio over pairs.
template <MetricMap M>
PairExtremum lip_const(const M& f) {
    const auto& src = f.src();
    PairExtremum out;
    for (std::size_t i = 0; i < src.size(); ++i)
        for (std::size_t j = i + 1; j < src.size(); ++j) {
            const double v = f.image_dist(i, j) / src.dist(i, j);
            if (!out.witness || v > out.value) {
                out.value = v;
                out.witness = {i, j};
            }
        }
    return out;
}

/// Pointwise Lipschitz constant at x0: max over x != x0 of
/// d(f(x), f(x0)) / d(x, x0).
template <MetricMap M>
PointExtremum lip_at(const M& f, std::size_t x0) {
    const auto& src = f.src();
    if (x0 >= src.size()) throw std::invalid_argument("lip_at: x0 out of range");
    PointExtremum out;
    for (std::size_t x = 0; x < src.size(); ++x) {
        if (x == x0) continue;
        const double v = f.image_dist(x, x0) / src.dist(x, x0);
        if (!out.witness || v > out.value) {
            out.value = v;
            out.witness = x;
        }
    }
    return out;
}

/// max{ lip_at(f, x0), ||f(x0)|| } — the norm that makes the pointwise
/// Lipschitz space an l_inf space.
double norm_Lx(const VectorMap& f, std::size_t x0);

/// Supremum of omega_at(f, x0, t)/t over t > 0. On a finite space the
/// modulus is a step function that only changes at realized distances, and
/// the ratio is locally maximized there, so scanning the realized distances
/// is exact.
template <MetricMap M>
double sup_omega_ratio(const M& f, std::size_t x0) {
    const auto& src = f.src();
    if (x0 >= src.size()) throw std::invalid_argument("sup_omega_ratio: x0 out of range");
    double best = 0.0;
    for (std::size_t x = 0; x < src.size(); ++x) {
        if (x == x0) continue;
        const double t = src.dist(x, x0);
        best = std::max(best, omega_at(f, x0, t).value / t);
    }
    return best;
}

/// e-constant and Lipschitz estimate of a sampled real function.
struct SampledLip {
    double e_const = 0.0;           // max over x != 0 of |f(x)| / |x|
    std::size_t e_witness = 0;      // grid index attaining e_const
    double lip_est = 0.0;           // max slope over adjacent grid pairs (lower bound)
    std::size_t lip_witness = 0;    // left index of the attaining pair
    bool in_e = true;               // f(0) == 0 within tolerance
};

SampledLip sampled_lip_quantities(const RealFunctionSample& sample,
                                  double tol = default_tolerance);

}  // namespace extlip

#endif

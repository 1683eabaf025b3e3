#include "extlip/moduli.hpp"

namespace extlip {

double norm_Lx(const VectorMap& f, std::size_t x0) {
    if (x0 >= f.src().size()) throw std::invalid_argument("norm_Lx: x0 out of range");
    return std::max(lip_at(f, x0).value, vector_norm(f.value(x0), f.norm_tag()));
}

SampledLip sampled_lip_quantities(const RealFunctionSample& sample, double tol) {
    const std::size_t n = sample.size();
    if (n < 2) throw std::domain_error("sampled_lip_quantities requires at least 2 grid points");
    SampledLip out;
    out.in_e = std::abs(sample.f(sample.base())) <= tol;

    const std::size_t base = sample.base();
    const double* xs = sample.grid().data();
    const double* vs = sample.values().data();

    // n >= 2 guarantees at least one non-base grid point.
    const ScanBest e = argmax(n, [=](std::uint64_t i) {
        if (i == base) return -std::numeric_limits<double>::infinity();
        return std::abs(vs[i]) / std::abs(xs[i]);
    });
    out.e_const = e.value;
    out.e_witness = static_cast<std::size_t>(e.index);

    const ScanBest s = argmax(n - 1, [=](std::uint64_t i) {
        return std::abs((vs[i + 1] - vs[i]) / (xs[i + 1] - xs[i]));
    });
    out.lip_est = s.value;
    out.lip_witness = static_cast<std::size_t>(s.index);
    return out;
}

}  // namespace extlip

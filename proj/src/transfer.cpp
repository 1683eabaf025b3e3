#include "extlip/transfer.hpp"

#include <algorithm>

namespace extlip {

namespace {

void check_point(const VectorMap& m, std::size_t x, const char* who) {
    if (x >= m.src().size()) throw std::invalid_argument(std::string(who) + ": point out of range");
}

}  // namespace

VectorMap phi(std::size_t x, const VectorMap& h) {
    check_point(h, x, "phi");
    const auto& src = h.src();
    const std::size_t k = h.k();
    std::vector<double> out(src.size() * k);
    const auto hx = h.value(x);
    for (std::size_t i = 0; i < src.size(); ++i) {
        const double d = src.dist(i, x);
        const auto hi = h.value(i);
        for (std::size_t c = 0; c < k; ++c) out[i * k + c] = d * hi[c] + hx[c];
    }
    return VectorMap(src, k, std::move(out), h.norm_tag());
}

VectorMap phi_inv(std::size_t x, const VectorMap& g) {
    check_point(g, x, "phi_inv");
    const auto& src = g.src();
    const std::size_t k = g.k();
    std::vector<double> out(src.size() * k);
    const auto gx = g.value(x);
    for (std::size_t i = 0; i < src.size(); ++i) {
        const auto gi = g.value(i);
        if (i == x) {
            std::copy(gx.begin(), gx.end(), out.begin() + i * k);
        } else {
            const double d = src.dist(i, x);
            for (std::size_t c = 0; c < k; ++c) out[i * k + c] = (gi[c] - gx[c]) / d;
        }
    }
    return VectorMap(src, k, std::move(out), g.norm_tag());
}

VectorMap phi_mutant(std::size_t x, const VectorMap& h) {
    check_point(h, x, "phi_mutant");
    const auto& src = h.src();
    const std::size_t k = h.k();
    std::vector<double> out(src.size() * k);
    for (std::size_t i = 0; i < src.size(); ++i) {
        const double d = src.dist(i, x);
        const auto hi = h.value(i);
        for (std::size_t c = 0; c < k; ++c) out[i * k + c] = d * hi[c];
    }
    return VectorMap(src, k, std::move(out), h.norm_tag());
}

TransferResult transfer_compose(std::size_t x1, std::size_t x2, const VectorMap& f) {
    check_point(f, x1, "transfer_compose");
    check_point(f, x2, "transfer_compose");
    if (x1 == x2) throw std::invalid_argument("transfer_compose requires x1 != x2");

    VectorMap composed = phi(x2, phi_inv(x1, f));

    const auto& src = f.src();
    const std::size_t k = f.k();
    std::vector<double> cf(src.size() * k);
    const auto f1 = f.value(x1);
    const auto f2 = f.value(x2);
    const double d12 = src.dist(x2, x1);
    for (std::size_t i = 0; i < src.size(); ++i) {
        const auto fi = f.value(i);
        if (i == x1) {
            for (std::size_t c = 0; c < k; ++c)
                cf[i * k + c] = d12 * f1[c] + (f2[c] - f1[c]) / d12;
        } else {
            const double ratio = src.dist(i, x2) / src.dist(i, x1);
            for (std::size_t c = 0; c < k; ++c)
                cf[i * k + c] = ratio * (fi[c] - f1[c]) + (f2[c] - f1[c]) / d12;
        }
    }
    VectorMap closed_form(src, k, std::move(cf), f.norm_tag());

    double gap = 0.0;
    for (std::size_t i = 0; i < src.size(); ++i)
        gap = std::max(gap, vector_norm_diff(composed.value(i), closed_form.value(i),
                                             NormTag::sup));
    return {std::move(composed), std::move(closed_form), gap};
}

VanishingReport vanishing_check(const CoordSpace& X, const VectorMap& f, std::size_t x1,
                                std::size_t x2, double tol) {
    if (!f.src().same_as(induced_space(X)))
        throw std::invalid_argument("vanishing_check: map is not defined over the given space");
    VanishingReport report;
    const TransferResult tr = transfer_compose(x1, x2, f);

    double fixed_gap = 0.0;
    for (std::size_t i = 0; i < X.size(); ++i)
        fixed_gap = std::max(
            fixed_gap, vector_norm_diff(tr.composed.value(i), f.value(i), NormTag::sup));
    report.is_fixed_point = fixed_gap <= tol;

    report.vanishing_holds = true;
    for (std::size_t i = 0; i < X.size(); ++i) {
        const double gap = std::abs(vector_norm_diff(X.point(i), X.point(x1), X.norm_tag()) -
                                    vector_norm_diff(X.point(i), X.point(x2), X.norm_tag()));
        if (gap <= tol) continue;  // equidistant within tolerance, no claim
        const double fx = vector_norm(f.value(i), f.norm_tag());
        if (fx > tol) {
            report.vanishing_holds = false;
            report.violations.push_back({i, fx, gap});
        }
    }
    report.pass = !report.is_fixed_point || report.vanishing_holds;
    return report;
}

}  // namespace extlip

#include "extlip/metric_space.hpp"

#include <algorithm>
#include <limits>

namespace extlip {

std::string_view to_string(NormTag tag) {
    switch (tag) {
        case NormTag::one: return "one";
        case NormTag::two: return "two";
        case NormTag::sup: return "sup";
    }
    return "?";
}

std::optional<NormTag> norm_tag_from_string(std::string_view s) {
    if (s == "one" || s == "1" || s == "l1") return NormTag::one;
    if (s == "two" || s == "2" || s == "l2") return NormTag::two;
    if (s == "sup" || s == "inf" || s == "linf") return NormTag::sup;
    return std::nullopt;
}

NormTag conjugate(NormTag tag) {
    switch (tag) {
        case NormTag::one: return NormTag::sup;
        case NormTag::sup: return NormTag::one;
        case NormTag::two: return NormTag::two;
    }
    return NormTag::two;
}

double vector_norm(std::span<const double> v, NormTag tag) {
    double acc = 0.0;
    switch (tag) {
        case NormTag::one:
            for (double x : v) acc += std::abs(x);
            return acc;
        case NormTag::two:
            for (double x : v) acc += x * x;
            return std::sqrt(acc);
        case NormTag::sup:
            for (double x : v) acc = std::max(acc, std::abs(x));
            return acc;
    }
    return acc;
}

double vector_norm_diff(std::span<const double> a, std::span<const double> b, NormTag tag) {
    double acc = 0.0;
    switch (tag) {
        case NormTag::one:
            for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
            return acc;
        case NormTag::two:
            for (std::size_t i = 0; i < a.size(); ++i) {
                const double d = a[i] - b[i];
                acc += d * d;
            }
            return std::sqrt(acc);
        case NormTag::sup:
            for (std::size_t i = 0; i < a.size(); ++i) acc = std::max(acc, std::abs(a[i] - b[i]));
            return acc;
    }
    return acc;
}

namespace {

// Swaps index `base` with index 0 in labels and any square/row-major table.
template <class Swap>
void canonicalize(std::size_t n, std::size_t base, Swap&& swap_indices) {
    if (base >= n) throw std::invalid_argument("base index out of range");
    if (base != 0) swap_indices(base);
}

}  // namespace

PointedMetricSpace::PointedMetricSpace(std::vector<std::string> labels, std::size_t base,
                                       std::vector<double> dist_row_major)
    : labels_(std::move(labels)), dist_(std::move(dist_row_major)), n_(labels_.size()) {
    if (n_ == 0) throw std::invalid_argument("space must contain at least the base point");
    if (dist_.size() != n_ * n_)
        throw std::invalid_argument("distance matrix is not square of label count");
    canonicalize(n_, base, [&](std::size_t b) {
        std::swap(labels_[0], labels_[b]);
        for (std::size_t j = 0; j < n_; ++j) std::swap(dist_[0 * n_ + j], dist_[b * n_ + j]);
        for (std::size_t i = 0; i < n_; ++i) std::swap(dist_[i * n_ + 0], dist_[i * n_ + b]);
    });
}

std::optional<std::size_t> PointedMetricSpace::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < n_; ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

bool PointedMetricSpace::same_as(const PointedMetricSpace& other) const {
    return n_ == other.n_ && labels_ == other.labels_ && dist_ == other.dist_;
}

CoordSpace::CoordSpace(std::vector<std::string> labels, std::size_t base, std::size_t dim,
                       std::vector<double> coords_row_major, NormTag tag)
    : labels_(std::move(labels)),
      coords_(std::move(coords_row_major)),
      n_(labels_.size()),
      dim_(dim),
      tag_(tag) {
    if (n_ == 0) throw std::invalid_argument("coordinate space must contain the origin");
    if (dim_ == 0) throw std::invalid_argument("dimension must be positive");
    if (coords_.size() != n_ * dim_)
        throw std::invalid_argument("coordinate table does not match label count and dimension");
    canonicalize(n_, base, [&](std::size_t b) {
        std::swap(labels_[0], labels_[b]);
        for (std::size_t j = 0; j < dim_; ++j) std::swap(coords_[j], coords_[b * dim_ + j]);
    });
    for (std::size_t j = 0; j < dim_; ++j)
        if (coords_[j] != 0.0)
            throw std::invalid_argument("base point coordinates must be exactly zero");
}

std::optional<std::size_t> CoordSpace::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < n_; ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

PointMap::PointMap(PointedMetricSpace src, PointedMetricSpace dst, std::vector<std::size_t> table)
    : src_(std::move(src)), dst_(std::move(dst)), table_(std::move(table)) {
    if (table_.size() != src_.size())
        throw std::invalid_argument("map table length does not match source size");
    for (std::size_t t : table_)
        if (t >= dst_.size()) throw std::invalid_argument("map table entry out of range");
}

VectorMap::VectorMap(PointedMetricSpace src, std::size_t k, std::vector<double> values_row_major,
                     NormTag tag)
    : src_(std::move(src)), values_(std::move(values_row_major)), k_(k), tag_(tag) {
    if (k_ == 0) throw std::invalid_argument("target dimension must be positive");
    if (values_.size() != src_.size() * k_)
        throw std::invalid_argument("value table does not match source size and dimension");
}

RealFunctionSample::RealFunctionSample(std::vector<double> grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (grid_.empty()) throw std::invalid_argument("grid must be non-empty");
    if (values_.size() != grid_.size())
        throw std::invalid_argument("value table does not match grid size");
    for (std::size_t i = 1; i < grid_.size(); ++i)
        if (!(grid_[i - 1] < grid_[i]))
            throw std::invalid_argument("grid must be strictly increasing");
    auto it = std::lower_bound(grid_.begin(), grid_.end(), 0.0);
    if (it == grid_.end() || *it != 0.0)
        throw std::invalid_argument("grid must contain 0.0");
    base_ = static_cast<std::size_t>(it - grid_.begin());
}

std::string_view to_string(MetricAxiom axiom) {
    switch (axiom) {
        case MetricAxiom::zero_diagonal: return "zero_diagonal";
        case MetricAxiom::symmetry: return "symmetry";
        case MetricAxiom::positivity: return "positivity";
        case MetricAxiom::triangle: return "triangle";
    }
    return "?";
}

SpaceValidation validate_space(const PointedMetricSpace& space, double tol) {
    SpaceValidation report;
    const std::size_t n = space.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(space.dist(i, i)) > tol)
            report.violations.push_back(
                {MetricAxiom::zero_diagonal, i, i, 0, space.dist(i, i), 0.0});
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(space.dist(i, j) - space.dist(j, i)) > tol)
                report.violations.push_back(
                    {MetricAxiom::symmetry, i, j, 0, space.dist(i, j), space.dist(j, i)});
            if (!(space.dist(i, j) > tol))
                report.violations.push_back(
                    {MetricAxiom::positivity, i, j, 0, space.dist(i, j), 0.0});
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                const double direct = space.dist(i, j);
                const double detour = space.dist(i, k) + space.dist(k, j);
                if (direct > detour + tol)
                    report.violations.push_back({MetricAxiom::triangle, i, j, k, direct, detour});
            }
        }
    return report;
}

PointedMetricSpace induced_space(const CoordSpace& c) {
    const std::size_t n = c.size();
    std::vector<double> dist(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = vector_norm_diff(c.point(i), c.point(j), c.norm_tag());
            dist[i * n + j] = d;
            dist[j * n + i] = d;
        }
    return PointedMetricSpace(c.labels(), CoordSpace::base(), std::move(dist));
}

BallRestriction restrict_to_ball(const CoordSpace& c) {
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (i == CoordSpace::base() || c.point_norm(i) <= 1.0) kept.push_back(i);
    std::vector<std::string> labels;
    std::vector<double> coords;
    labels.reserve(kept.size());
    coords.reserve(kept.size() * c.dim());
    for (std::size_t i : kept) {
        labels.push_back(c.label(i));
        auto p = c.point(i);
        coords.insert(coords.end(), p.begin(), p.end());
    }
    return {CoordSpace(std::move(labels), 0, c.dim(), std::move(coords), c.norm_tag()),
            std::move(kept)};
}

}  // namespace extlip

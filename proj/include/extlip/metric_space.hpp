#ifndef EXTLIP_METRIC_SPACE_HPP
#define EXTLIP_METRIC_SPACE_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace extlip {

/// Absolute tolerance used by every approximate comparison in the library
/// unless the caller overrides it.
inline constexpr double default_tolerance = 1e-9;

enum class NormTag { one, two, sup };

std::string_view to_string(NormTag tag);
std::optional<NormTag> norm_tag_from_string(std::string_view s);
/// Conjugate exponent: one <-> sup, two -> two.
NormTag conjugate(NormTag tag);

double vector_norm(std::span<const double> v, NormTag tag);
double vector_norm_diff(std::span<const double> a, std::span<const double> b, NormTag tag);

/// Finite metric space with a distinguished point. The constructor remaps
/// indices so that the distinguished point always sits at index 0; callers
/// can rely on base() == 0 everywhere downstream.
///
/// Construction only enforces structural shape (square matrix, matching
/// label count). Metric axioms are checked separately by validate_space so
/// that defective inputs can be diagnosed rather than rejected blindly.
class PointedMetricSpace {
public:
    PointedMetricSpace(std::vector<std::string> labels, std::size_t base,
                       std::vector<double> dist_row_major);

    std::size_t size() const { return n_; }
    static constexpr std::size_t base() { return 0; }

    double dist(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }
    /// d(i, 0), the distance to the distinguished point.
    double dist_to_base(std::size_t i) const { return dist_[i * n_]; }

    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> index_of(std::string_view label) const;

    /// Structural equality: same labels and bitwise-equal distances.
    bool same_as(const PointedMetricSpace& other) const;

private:
    std::vector<std::string> labels_;
    std::vector<double> dist_;
    std::size_t n_ = 0;
};

/// Point cloud in R^d with a chosen norm and the origin as base point.
/// Base coordinates must be exactly zero.
class CoordSpace {
public:
    CoordSpace(std::vector<std::string> labels, std::size_t base,
               std::size_t dim, std::vector<double> coords_row_major, NormTag tag);

    std::size_t size() const { return n_; }
    std::size_t dim() const { return dim_; }
    static constexpr std::size_t base() { return 0; }
    NormTag norm_tag() const { return tag_; }

    std::span<const double> point(std::size_t i) const {
        return {coords_.data() + i * dim_, dim_};
    }
    double point_norm(std::size_t i) const { return vector_norm(point(i), tag_); }

    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> index_of(std::string_view label) const;

private:
    std::vector<std::string> labels_;
    std::vector<double> coords_;
    std::size_t n_ = 0;
    std::size_t dim_ = 0;
    NormTag tag_ = NormTag::two;
};

/// Map between two finite pointed spaces given as an index table.
class PointMap {
public:
    PointMap(PointedMetricSpace src, PointedMetricSpace dst, std::vector<std::size_t> table);

    const PointedMetricSpace& src() const { return src_; }
    const PointedMetricSpace& dst() const { return dst_; }
    std::size_t operator()(std::size_t i) const { return table_[i]; }
    const std::vector<std::size_t>& table() const { return table_; }

    double image_dist(std::size_t i, std::size_t j) const {
        return dst_.dist(table_[i], table_[j]);
    }
    double image_dist_to_zero(std::size_t i) const { return dst_.dist_to_base(table_[i]); }
    bool base_preserving() const { return table_[0] == PointedMetricSpace::base(); }

private:
    PointedMetricSpace src_;
    PointedMetricSpace dst_;
    std::vector<std::size_t> table_;
};

/// Map from a finite pointed space into R^k with a chosen target norm,
/// given as a per-point value table.
class VectorMap {
public:
    VectorMap(PointedMetricSpace src, std::size_t k, std::vector<double> values_row_major,
              NormTag tag);

    const PointedMetricSpace& src() const { return src_; }
    std::size_t k() const { return k_; }
    NormTag norm_tag() const { return tag_; }

    std::span<const double> value(std::size_t i) const { return {values_.data() + i * k_, k_}; }
    const std::vector<double>& values() const { return values_; }

    double image_dist(std::size_t i, std::size_t j) const {
        return vector_norm_diff(value(i), value(j), tag_);
    }
    double image_dist_to_zero(std::size_t i) const { return vector_norm(value(i), tag_); }
    bool base_preserving(double tol = default_tolerance) const {
        return image_dist_to_zero(PointedMetricSpace::base()) <= tol;
    }

private:
    PointedMetricSpace src_;
    std::vector<double> values_;
    std::size_t k_ = 0;
    NormTag tag_ = NormTag::two;
};

/// A real function sampled on a strictly increasing grid that contains 0.0.
class RealFunctionSample {
public:
    RealFunctionSample(std::vector<double> grid, std::vector<double> values);

    std::size_t size() const { return grid_.size(); }
    std::size_t base() const { return base_; }
    double x(std::size_t i) const { return grid_[i]; }
    double f(std::size_t i) const { return values_[i]; }
    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> grid_;
    std::vector<double> values_;
    std::size_t base_ = 0;
};

enum class MetricAxiom { zero_diagonal, symmetry, positivity, triangle };

std::string_view to_string(MetricAxiom axiom);

struct AxiomViolation {
    MetricAxiom axiom;
    std::size_t i, j, k;  // witness indices; k used only for triangle
    double lhs, rhs;
};

struct SpaceValidation {
    std::vector<AxiomViolation> violations;
    bool valid() const { return violations.empty(); }
};

/// Checks every metric axiom on the full index range and reports each
/// violation with the witnessing indices.
SpaceValidation validate_space(const PointedMetricSpace& space,
                               double tol = default_tolerance);

/// Metric space induced by the coordinate norm: dist[i][j] = ||c_i - c_j||.
PointedMetricSpace induced_space(const CoordSpace& c);

struct BallRestriction {
    CoordSpace ball;
    std::vector<std::size_t> kept;  // ball index -> original index
};

/// Keeps exactly the points with norm <= 1 (base always kept).
BallRestriction restrict_to_ball(const CoordSpace& c);

/// Concept shared by PointMap and VectorMap: enough structure to evaluate
/// distances between image points and to the target base point.
template <class M>
concept MetricMap = requires(const M& m, std::size_t i, std::size_t j) {
    { m.src() } -> std::convertible_to<const PointedMetricSpace&>;
    { m.image_dist(i, j) } -> std::convertible_to<double>;
    { m.image_dist_to_zero(i) } -> std::convertible_to<double>;
};

}  // namespace extlip

#endif

#pragma once

#include <Eigen/Core>

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace tsppc {

using Point = Eigen::Vector2d;

// Pairwise cost conventions. Euc2dRounded is the canonical TSPLIB EUC_2D
// distance (nearest integer); Euc2dContinuous is the plain Euclidean norm.
enum class Metric {
    Euc2dRounded,
    Euc2dContinuous,
};

const char* metric_name(Metric m);
std::optional<Metric> metric_from_name(std::string_view name);

double metric_distance(const Point& a, const Point& b, Metric m);

// Diagonal of the axis-aligned bounding box; 0 for a single point.
double bounding_box_diagonal(std::span<const Point> points);

Point centroid(std::span<const Point> points);

/// Convex hull of a planar point set by monotone chain.
///
/// Returns indices into `points`, counterclockwise, strict vertices only:
/// collinear boundary points are excluded and coincident coordinates are
/// represented by the first index that carries them. Degenerate inputs
/// (single point, two points, all collinear) yield the distinct extreme
/// points; the cycle starts at the lexicographically smallest point.
std::vector<int> convex_hull(std::span<const Point> points);

} // namespace tsppc

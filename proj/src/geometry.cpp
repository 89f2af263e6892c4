#include "tsppc/geometry.hpp"

#include "tsppc/errors.hpp"

#include <algorithm>
#include <cmath>

namespace tsppc {

const char* metric_name(Metric m) {
    switch (m) {
    case Metric::Euc2dRounded: return "EUC_2D";
    case Metric::Euc2dContinuous: return "EUC_2D_CONTINUOUS";
    }
    return "EUC_2D";
}

std::optional<Metric> metric_from_name(std::string_view name) {
    if (name == "EUC_2D" || name == "euc2d-rounded") return Metric::Euc2dRounded;
    if (name == "EUC_2D_CONTINUOUS" || name == "euc2d-continuous") return Metric::Euc2dContinuous;
    return std::nullopt;
}

double metric_distance(const Point& a, const Point& b, Metric m) {
    const double d = (a - b).norm();
    if (m == Metric::Euc2dRounded) return std::floor(d + 0.5);
    return d;
}

double bounding_box_diagonal(std::span<const Point> points) {
    if (points.empty()) return 0.0;
    Point lo = points.front();
    Point hi = points.front();
    for (const Point& p : points) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    return (hi - lo).norm();
}

Point centroid(std::span<const Point> points) {
    if (points.empty()) throw DomainError("centroid of empty point set");
    Point sum = Point::Zero();
    for (const Point& p : points) sum += p;
    return sum / static_cast<double>(points.size());
}

namespace {

double cross(const Point& o, const Point& a, const Point& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

bool lex_less(const Point& a, const Point& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
}

} // namespace

std::vector<int> convex_hull(std::span<const Point> points) {
    if (points.empty()) throw DomainError("convex hull of empty point set");
    for (const Point& p : points) {
        if (!p.allFinite()) throw DomainError("convex hull input has non-finite coordinate");
    }

    // Sort indices lexicographically, drop coincident coordinates (first
    // occurrence in input order wins).
    std::vector<int> idx(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) idx[i] = static_cast<int>(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (points[a].x() != points[b].x()) return points[a].x() < points[b].x();
        if (points[a].y() != points[b].y()) return points[a].y() < points[b].y();
        return a < b;
    });
    std::vector<int> distinct;
    distinct.reserve(idx.size());
    for (int i : idx) {
        if (!distinct.empty() && points[distinct.back()] == points[i]) continue;
        distinct.push_back(i);
    }

    const std::size_t n = distinct.size();
    if (n <= 2) return distinct;

    // Monotone chain, strict turns only (cross <= 0 pops), so collinear
    // boundary points never survive.
    std::vector<int> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(points[hull[k - 2]], points[hull[k - 1]], points[distinct[i]]) <= 0)
            --k;
        hull[k++] = distinct[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(points[hull[k - 2]], points[hull[k - 1]], points[distinct[i]]) <= 0)
            --k;
        hull[k++] = distinct[i];
    }
    hull.resize(k - 1);
    return hull;
}

} // namespace tsppc

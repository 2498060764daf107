#include "epiclust/geo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "epiclust/errors.hpp"

namespace epiclust {

bool is_valid(const GeoPoint& p) {
    return std::isfinite(p.lat) && std::isfinite(p.lon) && p.lat >= -90.0 && p.lat <= 90.0 &&
           p.lon >= -180.0 && p.lon <= 180.0;
}

void require_valid(const GeoPoint& p) {
    if (!is_valid(p)) {
        throw InvalidInputError("invalid coordinate: lat=" + std::to_string(p.lat) +
                                " lon=" + std::to_string(p.lon));
    }
}

double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }
double rad2deg(double rad) { return rad * 180.0 / std::numbers::pi; }

double dms_to_degrees(double degrees, double minutes, double seconds) {
    return degrees + minutes / 60.0 + seconds / 3600.0;
}

DistanceMetric DistanceMetric::haversine() { return {MetricKind::haversine, 0.0}; }

DistanceMetric DistanceMetric::equirectangular(double ref_lat_deg) {
    if (!std::isfinite(ref_lat_deg) || std::abs(ref_lat_deg) >= 90.0) {
        throw InvalidParameterError("equirectangular reference latitude must satisfy |lat| < 90, got " +
                                    std::to_string(ref_lat_deg));
    }
    return {MetricKind::equirectangular, ref_lat_deg};
}

DistanceMetric DistanceMetric::euclidean() { return {MetricKind::euclidean, 0.0}; }

double haversine_distance(const GeoPoint& a, const GeoPoint& b) {
    require_valid(a);
    require_valid(b);
    const double lat1 = deg2rad(a.lat);
    const double lat2 = deg2rad(b.lat);
    const double dlat = deg2rad(b.lat - a.lat);
    const double dlon = deg2rad(b.lon - a.lon);
    const double sl = std::sin(dlat / 2.0);
    const double so = std::sin(dlon / 2.0);
    double h = sl * sl + std::cos(lat1) * std::cos(lat2) * so * so;
    h = std::clamp(h, 0.0, 1.0);
    return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
}

double distance(const DistanceMetric& metric, const GeoPoint& a, const GeoPoint& b) {
    switch (metric.kind) {
        case MetricKind::haversine:
            return haversine_distance(a, b);
        case MetricKind::equirectangular: {
            const double c = std::cos(deg2rad(metric.ref_lat_deg));
            const double dx = kEarthRadiusKm * deg2rad(b.lon - a.lon) * c;
            const double dy = kEarthRadiusKm * deg2rad(b.lat - a.lat);
            return std::hypot(dx, dy);
        }
        case MetricKind::euclidean:
            return std::hypot(b.lat - a.lat, b.lon - a.lon);
    }
    return 0.0;  // unreachable
}

PlanarPoint project_equirectangular(const GeoPoint& p, double ref_lat_deg) {
    require_valid(p);
    if (!std::isfinite(ref_lat_deg) || std::abs(ref_lat_deg) >= 90.0) {
        throw InvalidParameterError("degenerate projection: reference latitude " +
                                    std::to_string(ref_lat_deg));
    }
    const double c = std::cos(deg2rad(ref_lat_deg));
    return {kEarthRadiusKm * deg2rad(p.lon) * c, kEarthRadiusKm * (deg2rad(p.lat) - deg2rad(ref_lat_deg))};
}

GeoPoint unproject_equirectangular(const PlanarPoint& p, double ref_lat_deg) {
    const double c = std::cos(deg2rad(ref_lat_deg));
    return {rad2deg(p.y / kEarthRadiusKm + deg2rad(ref_lat_deg)), rad2deg(p.x / (kEarthRadiusKm * c))};
}

double mean_latitude(const std::vector<GeoPoint>& points) {
    if (points.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& p : points) sum += p.lat;
    return sum / static_cast<double>(points.size());
}

PlanarPoint PlaneEmbedding::embed(const GeoPoint& p) const {
    if (metric.kind == MetricKind::euclidean) return {p.lon, p.lat};
    return project_equirectangular(p, ref_lat_deg);
}

GeoPoint PlaneEmbedding::to_geo(const PlanarPoint& p) const {
    if (metric.kind == MetricKind::euclidean) return {p.y, p.x};
    return unproject_equirectangular(p, ref_lat_deg);
}

PlaneEmbedding embed_points(const std::vector<GeoPoint>& points, const DistanceMetric& metric) {
    PlaneEmbedding embedding;
    embedding.metric = metric;
    switch (metric.kind) {
        case MetricKind::haversine:
            embedding.ref_lat_deg = mean_latitude(points);
            break;
        case MetricKind::equirectangular:
            embedding.ref_lat_deg = metric.ref_lat_deg;
            break;
        case MetricKind::euclidean:
            embedding.ref_lat_deg = 0.0;
            break;
    }
    embedding.points.reserve(points.size());
    for (const auto& p : points) embedding.points.push_back(embedding.embed(p));
    return embedding;
}

}  // namespace epiclust

#pragma once

#include <vector>

namespace epiclust {

inline constexpr double kEarthRadiusKm = 6371.0;

// Geographic coordinate in decimal degrees. lat in [-90, 90], lon in [-180, 180].
struct GeoPoint {
    double lat = 0.0;
    double lon = 0.0;

    friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

// Point in a local planar frame, km east (x) and km north (y).
struct PlanarPoint {
    double x = 0.0;
    double y = 0.0;
};

bool is_valid(const GeoPoint& p);

// Throws InvalidInputError when a coordinate is non-finite or out of range.
void require_valid(const GeoPoint& p);

double deg2rad(double deg);
double rad2deg(double rad);

// Sexagesimal to decimal degrees; 60" carries into the minute by plain addition.
double dms_to_degrees(double degrees, double minutes, double seconds);

enum class MetricKind { haversine, equirectangular, euclidean };

// The one distance definition every algorithm shares. haversine and
// equirectangular are in km; euclidean is unitless on raw (lat, lon) pairs.
struct DistanceMetric {
    MetricKind kind = MetricKind::haversine;
    double ref_lat_deg = 0.0;  // equirectangular only

    static DistanceMetric haversine();
    static DistanceMetric equirectangular(double ref_lat_deg);
    static DistanceMetric euclidean();

    friend bool operator==(const DistanceMetric&, const DistanceMetric&) = default;
};

// Great-circle distance in km on a sphere of radius 6371.0 km.
double haversine_distance(const GeoPoint& a, const GeoPoint& b);

double distance(const DistanceMetric& metric, const GeoPoint& a, const GeoPoint& b);

// x = R * lon_rad * cos(ref_lat), y = R * (lat_rad - ref_lat_rad).
// The plane origin sits at (ref_lat, 0). Throws when |ref_lat| >= 90.
PlanarPoint project_equirectangular(const GeoPoint& p, double ref_lat_deg);
GeoPoint unproject_equirectangular(const PlanarPoint& p, double ref_lat_deg);

double mean_latitude(const std::vector<GeoPoint>& points);

// Working plane shared by centroid math, the spatial index, and plotting.
// haversine picks the dataset mean latitude as reference; equirectangular uses
// the metric's own reference; euclidean maps (lon, lat) straight to (x, y).
struct PlaneEmbedding {
    std::vector<PlanarPoint> points;
    DistanceMetric metric;
    double ref_lat_deg = 0.0;

    PlanarPoint embed(const GeoPoint& p) const;
    GeoPoint to_geo(const PlanarPoint& p) const;
};

PlaneEmbedding embed_points(const std::vector<GeoPoint>& points, const DistanceMetric& metric);

}  // namespace epiclust

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "localdeg/features.hpp"
#include "localdeg/rng.hpp"

namespace localdeg {

struct CityRecord {
    std::string name;
    std::string country;
    double population = 0.0;
    double latitude = 0.0;   ///< degrees, [-90, 90]
    double longitude = 0.0;  ///< degrees, [-180, 180]
};

/// Reads `name,country,population,latitude,longitude` rows; malformed
/// rows are reported with their line number.
std::vector<CityRecord> load_city_records(const std::filesystem::path& path);

struct CityFeatures {
    FeatureDistribution distribution;  ///< Empirical over all rows, weights ~ population
    FeatureSet sample;                 ///< n draws with replacement
    std::vector<CityRecord> records;
};

/// Builds the empirical (latitude, longitude) distribution over every
/// row, weighted by population, and draws n features with replacement.
CityFeatures load_city_features(const std::filesystem::path& path, int n, RngStream& rng);

/// Coordinates of a named city (exact, case-sensitive match).
std::optional<std::vector<double>> find_city(const std::vector<CityRecord>& records,
                                             const std::string& name);

} // namespace localdeg

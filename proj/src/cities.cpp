#include "localdeg/cities.hpp"

#include <stdexcept>
#include <string>

#include "localdeg/csv.hpp"

namespace localdeg {

std::vector<CityRecord> load_city_records(const std::filesystem::path& path) {
    const auto rows = read_csv(path);
    if (rows.empty())
        throw std::runtime_error("city CSV " + path.string() + " is empty");
    const std::vector<std::string> expected{"name", "country", "population", "latitude",
                                            "longitude"};
    if (rows.front() != expected)
        throw std::runtime_error(
            "city CSV must start with header name,country,population,latitude,longitude");

    std::vector<CityRecord> out;
    out.reserve(rows.size() - 1);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto fail = [&](const std::string& why) {
            throw std::runtime_error("city CSV row " + std::to_string(i + 1) + ": " + why);
        };
        const auto& r = rows[i];
        if (r.size() != 5) fail("expected 5 fields, got " + std::to_string(r.size()));
        CityRecord c;
        c.name = r[0];
        c.country = r[1];
        try {
            c.population = std::stod(r[2]);
            c.latitude = std::stod(r[3]);
            c.longitude = std::stod(r[4]);
        } catch (const std::exception&) {
            fail("non-numeric population/latitude/longitude");
        }
        if (!(c.population >= 0.0)) fail("population must be >= 0");
        if (!(c.latitude >= -90.0 && c.latitude <= 90.0)) fail("latitude outside [-90, 90]");
        if (!(c.longitude >= -180.0 && c.longitude <= 180.0))
            fail("longitude outside [-180, 180]");
        out.push_back(std::move(c));
    }
    return out;
}

CityFeatures load_city_features(const std::filesystem::path& path, int n, RngStream& rng) {
    auto records = load_city_records(path);
    double total = 0.0;
    for (const auto& c : records) total += c.population;
    if (!(total > 0.0))
        throw std::runtime_error("city CSV " + path.string() + ": total population is zero");

    std::vector<double> points;
    std::vector<double> weights;
    points.reserve(records.size() * 2);
    weights.reserve(records.size());
    for (const auto& c : records) {
        points.push_back(c.latitude);
        points.push_back(c.longitude);
        weights.push_back(c.population);
    }

    CityFeatures out{
        FeatureDistribution::empirical(2, std::move(points), std::move(weights), true),
        {},
        std::move(records)};
    out.sample = out.distribution.sample(n, rng);
    return out;
}

std::optional<std::vector<double>> find_city(const std::vector<CityRecord>& records,
                                             const std::string& name) {
    for (const auto& c : records)
        if (c.name == name) return std::vector<double>{c.latitude, c.longitude};
    return std::nullopt;
}

} // namespace localdeg

#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "localdeg/rng.hpp"

namespace localdeg {

/// n points in R^d stored flat, row-major.
struct FeatureSet {
    int dim = 0;
    std::vector<double> data;

    FeatureSet() = default;
    FeatureSet(int d, int n) : dim(d), data(static_cast<std::size_t>(d) * n) {}

    int size() const { return dim == 0 ? 0 : static_cast<int>(data.size()) / dim; }
    std::span<const double> point(int i) const {
        return {data.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
    }
    std::span<double> point(int i) {
        return {data.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
    }
};

/// Distance on feature space. Euclidean is the model's native metric;
/// haversine (great-circle km on (latitude, longitude) degrees, d = 2)
/// is available for the city workflows.
struct Metric {
    enum class Kind { euclidean, haversine_km };
    Kind kind = Kind::euclidean;
    double earth_radius_km = 6371.0;

    double operator()(std::span<const double> a, std::span<const double> b) const;
};

struct GaussianComponent {
    double weight = 1.0;
    std::vector<double> mean;
    std::vector<double> covariance; ///< row-major d x d, symmetric positive definite
};

/// The latent feature law F. Immutable after construction; construction
/// validates all invariants (positive Beta shapes, SPD covariances,
/// normalizable weights, consistent dimensions).
class FeatureDistribution {
public:
    enum class Kind { beta_scalar, gaussian_mixture, uniform_cube, empirical };

    static FeatureDistribution beta_scalar(double a, double b);
    static FeatureDistribution gaussian_mixture(std::vector<GaussianComponent> components,
                                                std::optional<std::pair<std::vector<double>,
                                                                        std::vector<double>>>
                                                    truncation_box = std::nullopt);
    static FeatureDistribution uniform_cube(int dim);
    static FeatureDistribution empirical(int dim, std::vector<double> points,
                                         std::vector<double> sampling_weights,
                                         bool with_replacement = true);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }

    /// n i.i.d. draws. Truncated mixture draws are rejected and redrawn
    /// until they land in the box. For Empirical without replacement,
    /// n must not exceed the number of positive-weight points.
    FeatureSet sample(int n, RngStream& rng) const;

    /// Single draw appended into `out` (must have room for dim() values).
    void sample_one(RngStream& rng, double* out) const;

    // typed access for the truth computations
    struct BetaParams { double a, b; };
    const BetaParams* as_beta() const;
    struct EmpiricalView {
        const FeatureSet* points;
        std::span<const double> weights; ///< normalized
        bool with_replacement;
    };
    std::optional<EmpiricalView> as_empirical() const;

private:
    FeatureDistribution() = default;

    Kind kind_ = Kind::uniform_cube;
    int dim_ = 1;

    BetaParams beta_{2.0, 5.0};

    std::vector<GaussianComponent> comps_;
    std::vector<std::vector<double>> chol_;   ///< lower Cholesky factor per component
    std::vector<double> comp_cum_;            ///< cumulative normalized weights
    bool truncated_ = false;
    std::vector<double> box_lo_, box_hi_;

    FeatureSet emp_points_;
    std::vector<double> emp_weights_;         ///< normalized
    std::vector<double> emp_cum_;
    bool emp_with_replacement_ = true;
};

} // namespace localdeg

#include "localdeg/features.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace localdeg {

namespace {
constexpr double kPi = 3.14159265358979323846;

int pick_from_cumulative(const std::vector<double>& cum, double u) {
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    if (it == cum.end()) --it;
    return static_cast<int>(it - cum.begin());
}
} // namespace

double Metric::operator()(std::span<const double> a, std::span<const double> b) const {
    if (kind == Kind::euclidean) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double d = a[i] - b[i];
            s += d * d;
        }
        return std::sqrt(s);
    }
    if (a.size() != 2)
        throw std::invalid_argument("haversine metric requires (latitude, longitude) pairs");
    const double deg = kPi / 180.0;
    const double lat1 = a[0] * deg, lat2 = b[0] * deg;
    const double dlat = (b[0] - a[0]) * deg, dlon = (b[1] - a[1]) * deg;
    const double h = std::sin(dlat / 2) * std::sin(dlat / 2) +
                     std::cos(lat1) * std::cos(lat2) * std::sin(dlon / 2) * std::sin(dlon / 2);
    return 2.0 * earth_radius_km * std::asin(std::min(1.0, std::sqrt(h)));
}

FeatureDistribution FeatureDistribution::beta_scalar(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("beta_scalar: shape parameters must be > 0");
    FeatureDistribution d;
    d.kind_ = Kind::beta_scalar;
    d.dim_ = 1;
    d.beta_ = {a, b};
    return d;
}

FeatureDistribution FeatureDistribution::gaussian_mixture(
    std::vector<GaussianComponent> components,
    std::optional<std::pair<std::vector<double>, std::vector<double>>> truncation_box) {
    if (components.empty())
        throw std::invalid_argument("gaussian_mixture: no components");
    const int dim = static_cast<int>(components.front().mean.size());
    if (dim == 0) throw std::invalid_argument("gaussian_mixture: zero-dimensional mean");

    FeatureDistribution d;
    d.kind_ = Kind::gaussian_mixture;
    d.dim_ = dim;

    double total = 0.0;
    for (const auto& c : components) {
        if (static_cast<int>(c.mean.size()) != dim)
            throw std::invalid_argument("gaussian_mixture: mean dimension mismatch");
        if (static_cast<int>(c.covariance.size()) != dim * dim)
            throw std::invalid_argument("gaussian_mixture: covariance must be d x d");
        if (!(c.weight >= 0.0))
            throw std::invalid_argument("gaussian_mixture: negative component weight");
        total += c.weight;
    }
    if (!(total > 0.0))
        throw std::invalid_argument("gaussian_mixture: weights sum to zero");

    double cum = 0.0;
    for (auto& c : components) {
        Eigen::MatrixXd cov = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic,
                                                             Eigen::Dynamic, Eigen::RowMajor>>(
            c.covariance.data(), dim, dim);
        if (!cov.isApprox(cov.transpose(), 1e-12))
            throw std::invalid_argument("gaussian_mixture: covariance not symmetric");
        Eigen::LLT<Eigen::MatrixXd> llt(cov);
        if (llt.info() != Eigen::Success)
            throw std::invalid_argument("gaussian_mixture: covariance not positive definite");
        Eigen::MatrixXd L = llt.matrixL();
        std::vector<double> flat(static_cast<std::size_t>(dim) * dim, 0.0);
        for (int r = 0; r < dim; ++r)
            for (int cidx = 0; cidx <= r; ++cidx)
                flat[static_cast<std::size_t>(r) * dim + cidx] = L(r, cidx);
        d.chol_.push_back(std::move(flat));
        cum += c.weight / total;
        d.comp_cum_.push_back(cum);
    }
    d.comp_cum_.back() = 1.0;
    d.comps_ = std::move(components);

    if (truncation_box) {
        auto& [lo, hi] = *truncation_box;
        if (static_cast<int>(lo.size()) != dim || static_cast<int>(hi.size()) != dim)
            throw std::invalid_argument("gaussian_mixture: truncation box dimension mismatch");
        for (int i = 0; i < dim; ++i)
            if (!(lo[i] < hi[i]))
                throw std::invalid_argument("gaussian_mixture: empty truncation box");
        d.truncated_ = true;
        d.box_lo_ = lo;
        d.box_hi_ = hi;
    }
    return d;
}

FeatureDistribution FeatureDistribution::uniform_cube(int dim) {
    if (dim <= 0) throw std::invalid_argument("uniform_cube: dim must be >= 1");
    FeatureDistribution d;
    d.kind_ = Kind::uniform_cube;
    d.dim_ = dim;
    return d;
}

FeatureDistribution FeatureDistribution::empirical(int dim, std::vector<double> points,
                                                   std::vector<double> sampling_weights,
                                                   bool with_replacement) {
    if (dim <= 0) throw std::invalid_argument("empirical: dim must be >= 1");
    if (points.empty() || points.size() % static_cast<std::size_t>(dim) != 0)
        throw std::invalid_argument("empirical: point data must be a non-empty multiple of dim");
    const std::size_t n = points.size() / dim;
    if (sampling_weights.size() != n)
        throw std::invalid_argument("empirical: one weight per point required");
    double total = 0.0;
    for (double w : sampling_weights) {
        if (!(w >= 0.0)) throw std::invalid_argument("empirical: negative sampling weight");
        total += w;
    }
    if (!(total > 0.0)) throw std::invalid_argument("empirical: weights sum to zero");

    FeatureDistribution d;
    d.kind_ = Kind::empirical;
    d.dim_ = dim;
    d.emp_points_.dim = dim;
    d.emp_points_.data = std::move(points);
    d.emp_weights_.resize(n);
    d.emp_cum_.resize(n);
    double cum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        d.emp_weights_[i] = sampling_weights[i] / total;
        cum += d.emp_weights_[i];
        d.emp_cum_[i] = cum;
    }
    d.emp_cum_.back() = 1.0;
    d.emp_with_replacement_ = with_replacement;
    return d;
}

const FeatureDistribution::BetaParams* FeatureDistribution::as_beta() const {
    return kind_ == Kind::beta_scalar ? &beta_ : nullptr;
}

std::optional<FeatureDistribution::EmpiricalView> FeatureDistribution::as_empirical() const {
    if (kind_ != Kind::empirical) return std::nullopt;
    return EmpiricalView{&emp_points_, emp_weights_, emp_with_replacement_};
}

void FeatureDistribution::sample_one(RngStream& rng, double* out) const {
    switch (kind_) {
    case Kind::beta_scalar:
        out[0] = rng.beta(beta_.a, beta_.b);
        return;
    case Kind::uniform_cube:
        for (int i = 0; i < dim_; ++i) out[i] = rng.uniform01();
        return;
    case Kind::gaussian_mixture: {
        // rejection against the truncation box
        for (long attempt = 0; attempt < 100000000L; ++attempt) {
            const int c = pick_from_cumulative(comp_cum_, rng.uniform01());
            const auto& comp = comps_[c];
            const auto& L = chol_[c];
            // out = mean + L z
            for (int i = 0; i < dim_; ++i) out[i] = comp.mean[i];
            for (int j = 0; j < dim_; ++j) {
                const double z = rng.normal();
                for (int i = j; i < dim_; ++i)
                    out[i] += L[static_cast<std::size_t>(i) * dim_ + j] * z;
            }
            if (!truncated_) return;
            bool inside = true;
            for (int i = 0; i < dim_; ++i)
                if (out[i] < box_lo_[i] || out[i] > box_hi_[i]) { inside = false; break; }
            if (inside) return;
        }
        throw std::runtime_error("gaussian_mixture: truncation box mass too small to sample");
    }
    case Kind::empirical: {
        const int i = pick_from_cumulative(emp_cum_, rng.uniform01());
        const auto p = emp_points_.point(i);
        std::copy(p.begin(), p.end(), out);
        return;
    }
    }
    throw std::logic_error("unreachable");
}

FeatureSet FeatureDistribution::sample(int n, RngStream& rng) const {
    if (n < 0) throw std::invalid_argument("sample: n must be >= 0");
    FeatureSet out(dim_, n);

    if (kind_ == Kind::empirical && !emp_with_replacement_) {
        long positive = std::count_if(emp_weights_.begin(), emp_weights_.end(),
                                      [](double w) { return w > 0.0; });
        if (n > positive)
            throw std::invalid_argument("empirical sample without replacement: n exceeds support");
        std::vector<double> w = emp_weights_;
        for (int k = 0; k < n; ++k) {
            const double total = std::accumulate(w.begin(), w.end(), 0.0);
            double u = rng.uniform01() * total;
            std::size_t i = 0;
            for (; i + 1 < w.size(); ++i) {
                if (u < w[i]) break;
                u -= w[i];
            }
            while (w[i] <= 0.0 && i > 0) --i; // numerical edge: land on a live point
            const auto p = emp_points_.point(static_cast<int>(i));
            std::copy(p.begin(), p.end(), out.point(k).begin());
            w[i] = 0.0;
        }
        return out;
    }

    for (int k = 0; k < n; ++k) sample_one(rng, out.point(k).data());
    return out;
}

} // namespace localdeg

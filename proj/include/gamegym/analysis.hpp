#pragma once

#include <cmath>
#include <numeric>

#include "gamegym/scoring.hpp"

namespace gamegym::analysis {

using scoring::DimensionReport;
using scoring::ScoreMatrix;
using scoring::ScoringError;

/// adjust -> normalize -> dimension means, in one deterministic pass.
inline DimensionReport compute_leaderboard(const ScoreMatrix& matrix) {
    auto adjusted = scoring::adjust_scores(matrix);
    auto normalized = scoring::minmax_normalize(adjusted);
    return scoring::dimension_mean(matrix, normalized);
}

/// The normalized matrix the downstream analyses (PCA) consume.
inline std::vector<std::vector<double>> normalized_scores(const ScoreMatrix& matrix) {
    return scoring::minmax_normalize(scoring::adjust_scores(matrix));
}

// ---------------------------------------------------------------------------
// Stability: per-model mean and population stddev over dimension means
// ---------------------------------------------------------------------------

struct StabilityRow {
    std::string model;
    double mean = 0.0;
    double stddev = 0.0;
};

inline std::vector<StabilityRow> stability_stats(const DimensionReport& report) {
    if (report.dimensions.size() < 2)
        throw ScoringError("stability needs at least two dimensions");
    std::vector<StabilityRow> rows;
    for (std::size_t m = 0; m < report.models.size(); ++m) {
        const auto& xs = report.means[m];
        double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
        double var = 0.0;
        for (double x : xs) var += (x - mean) * (x - mean);
        var /= static_cast<double>(xs.size());
        rows.push_back({report.models[m], mean, std::sqrt(var)});
    }
    return rows;
}

// ---------------------------------------------------------------------------
// PCA (top two components via power iteration with deflation)
// ---------------------------------------------------------------------------

struct PcaResult {
    std::vector<std::vector<double>> components;   // 2 x games, orthonormal
    std::vector<std::vector<double>> projections;  // models x 2
    std::vector<double> explained_variance;        // 2 fractions, PC1 >= PC2
};

namespace detail {

inline constexpr double kPowerTolerance = 1e-12;
inline constexpr int kPowerMaxIterations = 10000;

inline std::vector<double> mat_vec(const std::vector<std::vector<double>>& a,
                                   const std::vector<double>& v) {
    std::vector<double> out(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

inline double norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Dominant eigenvector of a PSD matrix. The start vector comes from a fixed
/// RNG stream so reruns are bit-identical.
inline std::vector<double> power_iterate(const std::vector<std::vector<double>>& c) {
    std::size_t n = c.size();
    RngStream rng = RngStream::derive(1, "pca-power-start", 0);
    std::vector<double> v(n);
    for (auto& x : v) x = static_cast<double>(rng.below(2000001)) / 1000000.0 - 1.0;
    double nv = norm(v);
    for (auto& x : v) x /= nv;

    for (int it = 0; it < kPowerMaxIterations; ++it) {
        auto w = mat_vec(c, v);
        double nw = norm(w);
        if (nw == 0.0) return v;  // matrix annihilates v: any unit vector works
        for (auto& x : w) x /= nw;
        double delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) delta = std::max(delta, std::abs(w[i] - v[i]));
        v = w;
        if (delta < kPowerTolerance) break;
    }
    return v;
}

/// First nonzero coordinate made positive.
inline void fix_sign(std::vector<double>& v) {
    for (double x : v) {
        if (std::abs(x) > 1e-12) {
            if (x < 0.0)
                for (auto& y : v) y = -y;
            return;
        }
    }
}

}  // namespace detail

/// Top-2 PCA of a models x games matrix: columns are centered, the scatter
/// matrix is deflated after the first component, and explained fractions are
/// eigenvalue shares of the total variance.
inline PcaResult pca_top2(const std::vector<std::vector<double>>& matrix) {
    if (matrix.size() < 2 || matrix.front().size() < 2)
        throw ScoringError("pca needs at least 2 models and 2 games");
    std::size_t models = matrix.size(), games = matrix.front().size();

    auto centered = matrix;
    for (std::size_t g = 0; g < games; ++g) {
        double mean = 0.0;
        for (std::size_t m = 0; m < models; ++m) mean += matrix[m][g];
        mean /= static_cast<double>(models);
        for (std::size_t m = 0; m < models; ++m) centered[m][g] -= mean;
    }

    // scatter = X^T X over games; total variance is its trace
    std::vector<std::vector<double>> scatter(games, std::vector<double>(games, 0.0));
    for (std::size_t i = 0; i < games; ++i)
        for (std::size_t j = 0; j < games; ++j)
            for (std::size_t m = 0; m < models; ++m)
                scatter[i][j] += centered[m][i] * centered[m][j];
    double total = 0.0;
    for (std::size_t i = 0; i < games; ++i) total += scatter[i][i];
    if (total <= 0.0) throw ScoringError("degenerate input: zero variance matrix");

    auto v1 = detail::power_iterate(scatter);
    double lambda1 = detail::dot(v1, detail::mat_vec(scatter, v1));

    auto deflated = scatter;
    for (std::size_t i = 0; i < games; ++i)
        for (std::size_t j = 0; j < games; ++j) deflated[i][j] -= lambda1 * v1[i] * v1[j];

    std::vector<double> v2;
    double residual = 0.0;
    for (std::size_t i = 0; i < games; ++i) residual += std::abs(deflated[i][i]);
    if (residual / total < 1e-15) {
        // rank-1 input: pick any deterministic unit vector orthogonal to v1
        std::size_t k = 0;
        for (std::size_t i = 1; i < games; ++i)
            if (std::abs(v1[i]) < std::abs(v1[k])) k = i;
        v2.assign(games, 0.0);
        v2[k] = 1.0;
    } else {
        v2 = detail::power_iterate(deflated);
    }
    double proj = detail::dot(v2, v1);
    for (std::size_t i = 0; i < games; ++i) v2[i] -= proj * v1[i];
    double n2 = detail::norm(v2);
    if (n2 > 0)
        for (auto& x : v2) x /= n2;
    double lambda2 = detail::dot(v2, detail::mat_vec(scatter, v2));
    if (lambda2 < 0.0) lambda2 = 0.0;

    detail::fix_sign(v1);
    detail::fix_sign(v2);

    PcaResult result;
    result.components = {v1, v2};
    result.explained_variance = {lambda1 / total, lambda2 / total};
    for (std::size_t m = 0; m < models; ++m)
        result.projections.push_back({detail::dot(centered[m], v1), detail::dot(centered[m], v2)});
    return result;
}

// ---------------------------------------------------------------------------
// Response length vs score fit
// ---------------------------------------------------------------------------

struct LengthFit {
    double a = 0.0;  // score ~ a * ln(length) + b
    double b = 0.0;
    double pearson_r = 0.0;
};

/// Least-squares fit of score on ln(length), with the Pearson correlation of
/// (ln length, score). Constant scores give a = 0 and r = 0 by convention.
inline LengthFit length_score_fit(const std::vector<std::pair<double, double>>& pairs) {
    if (pairs.size() < 3) throw ScoringError("length fit needs at least 3 pairs");
    std::vector<double> xs, ys;
    for (auto [len, score] : pairs) {
        if (len <= 0.0) throw ScoringError("lengths must be positive");
        xs.push_back(std::log(len));
        ys.push_back(score);
    }
    double n = static_cast<double>(xs.size());
    double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) throw ScoringError("constant lengths: fit is undefined");
    LengthFit fit;
    fit.a = sxy / sxx;
    fit.b = my - fit.a * mx;
    fit.pearson_r = (syy == 0.0) ? 0.0 : sxy / std::sqrt(sxx * syy);
    return fit;
}

// ---------------------------------------------------------------------------
// Plot-data JSON (labeled point series consumable by any plotting tool)
// ---------------------------------------------------------------------------

inline json plot_points(const std::string& label,
                        const std::vector<std::pair<double, double>>& points,
                        const std::vector<std::string>& names = {}) {
    json series{{"label", label}, {"points", json::array()}};
    for (std::size_t i = 0; i < points.size(); ++i) {
        json p{{"x", points[i].first}, {"y", points[i].second}};
        if (i < names.size()) p["name"] = names[i];
        series["points"].push_back(p);
    }
    return json{{"series", json::array({series})}};
}

}  // namespace gamegym::analysis

#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gamegym/core.hpp"

namespace gamegym::scoring {

class ScoringError : public std::runtime_error {
public:
    explicit ScoringError(const std::string& what) : std::runtime_error(what) {}
};

/// Raw models x games score matrix plus the game -> dimension map.
struct ScoreMatrix {
    std::vector<std::string> models;
    std::vector<std::string> games;
    std::vector<std::vector<double>> raw;  // raw[model][game]
    std::map<std::string, Dimension> dims;

    std::size_t model_count() const { return models.size(); }
    std::size_t game_count() const { return games.size(); }

    void validate() const {
        if (raw.size() != models.size()) throw ScoringError("row count does not match model count");
        for (const auto& row : raw) {
            if (row.size() != games.size())
                throw ScoringError("column count does not match game count");
            for (double v : row) {
                if (std::isnan(v)) throw ScoringError("NaN score cell");
                if (v < 0.0) throw ScoringError("negative raw score");
            }
        }
        for (const auto& g : games)
            if (!dims.count(g)) throw ScoringError("game '" + g + "' has no dimension mapping");
    }
};

/// Per-model aggregated means, one per dimension, plus the overall average.
struct DimensionReport {
    std::vector<std::string> models;
    std::vector<Dimension> dimensions;                // ordered as reported
    std::vector<std::vector<double>> means;           // means[model][dimension]
    std::vector<double> overall;                      // overall[model]
};

/// Final episode score under the game's rule. Binary episodes must end at 0
/// or 1; proportional stays in [0,1]; cumulative totals are floored at 0
/// (a trust match can end with negative coins, the reported score cannot).
inline double episode_score(ScoreRule rule, ScoreRule game_rule, double final_total) {
    if (rule != game_rule) throw ScoringError("score rule does not match the game's rule");
    switch (rule) {
        case ScoreRule::Binary:
            if (final_total != 0.0 && final_total != 1.0)
                throw ScoringError("binary episode ended with a non-binary total");
            return final_total;
        case ScoreRule::Proportional:
            if (final_total < -1e-9 || final_total > 1.0 + 1e-9)
                throw ScoringError("proportional episode total outside [0,1]");
            return std::clamp(final_total, 0.0, 1.0);
        case ScoreRule::Cumulative:
            return std::max(0.0, final_total);
    }
    return 0.0;
}

/// Per game column: when any model's raw score exceeds 1 (strictly), replace
/// the whole column by ln(1+x); otherwise leave it as is.
inline std::vector<std::vector<double>> adjust_scores(const ScoreMatrix& matrix) {
    matrix.validate();
    auto adjusted = matrix.raw;
    for (std::size_t g = 0; g < matrix.game_count(); ++g) {
        double mx = 0.0;
        for (std::size_t m = 0; m < matrix.model_count(); ++m) mx = std::max(mx, matrix.raw[m][g]);
        if (mx > 1.0)
            for (std::size_t m = 0; m < matrix.model_count(); ++m)
                adjusted[m][g] = std::log1p(matrix.raw[m][g]);
    }
    return adjusted;
}

/// Min-max per game column into [0,1]; a constant column maps every model
/// to 0.5.
inline std::vector<std::vector<double>> minmax_normalize(const std::vector<std::vector<double>>& adjusted) {
    auto normalized = adjusted;
    if (adjusted.empty()) return normalized;
    std::size_t games = adjusted.front().size();
    for (std::size_t g = 0; g < games; ++g) {
        double lo = adjusted[0][g], hi = adjusted[0][g];
        for (const auto& row : adjusted) {
            lo = std::min(lo, row[g]);
            hi = std::max(hi, row[g]);
        }
        for (std::size_t m = 0; m < adjusted.size(); ++m)
            normalized[m][g] = (hi == lo) ? 0.5 : (adjusted[m][g] - lo) / (hi - lo);
    }
    return normalized;
}

inline const std::vector<Dimension>& report_dimension_order() {
    static const std::vector<Dimension> order = {Dimension::MLR, Dimension::CIR, Dimension::PR,
                                                 Dimension::SGR, Dimension::SR};
    return order;
}

/// Mean of normalized scores over each dimension's games, plus the unweighted
/// mean of the dimension means as the overall average.
inline DimensionReport dimension_mean(const ScoreMatrix& matrix,
                                      const std::vector<std::vector<double>>& normalized) {
    DimensionReport report;
    report.models = matrix.models;
    for (Dimension d : report_dimension_order()) {
        bool present = false;
        for (const auto& g : matrix.games)
            if (matrix.dims.at(g) == d) present = true;
        if (present) report.dimensions.push_back(d);
    }
    if (report.dimensions.empty()) throw ScoringError("no dimension has any game");

    for (std::size_t m = 0; m < matrix.model_count(); ++m) {
        std::vector<double> means;
        for (Dimension d : report.dimensions) {
            double sum = 0.0;
            int count = 0;
            for (std::size_t g = 0; g < matrix.game_count(); ++g)
                if (matrix.dims.at(matrix.games[g]) == d) {
                    sum += normalized[m][g];
                    ++count;
                }
            if (count == 0) throw ScoringError("empty dimension");
            means.push_back(sum / count);
        }
        double overall = 0.0;
        for (double v : means) overall += v;
        overall /= static_cast<double>(means.size());
        report.means.push_back(means);
        report.overall.push_back(overall);
    }
    return report;
}

/// Unweighted mean of one model's dimension means.
inline double overall_average(const std::vector<double>& dimension_means) {
    if (dimension_means.empty()) throw ScoringError("no dimension means");
    double sum = 0.0;
    for (double v : dimension_means) sum += v;
    return sum / static_cast<double>(dimension_means.size());
}

// ---------------------------------------------------------------------------
// CSV ingest / emit
// ---------------------------------------------------------------------------

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

/// Shortest round-trip decimal form (what the JSON serializer emits).
inline std::string format_double(double v) { return json(v).dump(); }

/// Reads `model,<game>,<game>,...` rows plus a `game,dimension` sidecar.
inline ScoreMatrix load_score_matrix(const std::string& scores_csv_path,
                                     const std::string& dims_csv_path) {
    std::ifstream scores(scores_csv_path);
    if (!scores) throw ScoringError("cannot open scores csv: " + scores_csv_path);
    ScoreMatrix matrix;
    std::string line;
    if (!std::getline(scores, line)) throw ScoringError("scores csv is empty");
    auto header = split_csv_line(line);
    if (header.size() < 2 || header[0] != "model")
        throw ScoringError("scores csv header must be 'model,<game>,...'");
    matrix.games.assign(header.begin() + 1, header.end());
    while (std::getline(scores, line)) {
        if (trim(line).empty()) continue;
        auto cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw ScoringError("scores csv row has wrong cell count: " + line);
        matrix.models.push_back(cells[0]);
        std::vector<double> row;
        for (std::size_t i = 1; i < cells.size(); ++i) {
            if (cells[i].empty()) throw ScoringError("missing score cell in row: " + line);
            try {
                row.push_back(std::stod(cells[i]));
            } catch (const std::exception&) {
                throw ScoringError("bad score cell '" + cells[i] + "'");
            }
        }
        matrix.raw.push_back(std::move(row));
    }

    std::ifstream dims(dims_csv_path);
    if (!dims) throw ScoringError("cannot open dims csv: " + dims_csv_path);
    bool first = true;
    while (std::getline(dims, line)) {
        if (trim(line).empty()) continue;
        auto cells = split_csv_line(line);
        if (first && cells.size() == 2 && cells[0] == "game") {
            first = false;
            continue;
        }
        first = false;
        if (cells.size() != 2) throw ScoringError("dims csv rows must be 'game,dimension'");
        auto d = parse_dimension(cells[1]);
        if (!d) throw ScoringError("unknown dimension '" + cells[1] + "'");
        matrix.dims[cells[0]] = *d;
    }
    matrix.validate();
    return matrix;
}

inline void write_score_matrix(const ScoreMatrix& matrix, const std::string& scores_csv_path,
                               const std::string& dims_csv_path) {
    std::ofstream scores(scores_csv_path);
    scores << "model";
    for (const auto& g : matrix.games) scores << "," << g;
    scores << "\n";
    for (std::size_t m = 0; m < matrix.model_count(); ++m) {
        scores << matrix.models[m];
        for (std::size_t g = 0; g < matrix.game_count(); ++g)
            scores << "," << format_double(matrix.raw[m][g]);
        scores << "\n";
    }
    std::ofstream dims(dims_csv_path);
    dims << "game,dimension\n";
    for (const auto& g : matrix.games) dims << g << "," << to_string(matrix.dims.at(g)) << "\n";
}

/// Leaderboard rows ordered by overall average, descending (ties keep model
/// order).
inline std::string leaderboard_csv(const DimensionReport& report) {
    std::vector<std::size_t> order(report.models.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return report.overall[a] > report.overall[b];
    });
    std::ostringstream os;
    os << "model";
    for (Dimension d : report.dimensions) os << "," << to_string(d);
    os << ",avg\n";
    for (std::size_t i : order) {
        os << report.models[i];
        for (std::size_t d = 0; d < report.dimensions.size(); ++d)
            os << "," << format_double(report.means[i][d]);
        os << "," << format_double(report.overall[i]) << "\n";
    }
    return os.str();
}

}  // namespace gamegym::scoring

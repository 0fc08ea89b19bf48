#pragma once

#include "gamegym/games/common.hpp"

namespace gamegym::games {

/// Carves a perfect maze with a recursive backtracker on the cell lattice of
/// an odd-sided grid. Returns rows of '#'/'.'; (1,1) and (side-2, side-2) are
/// always open.
inline std::vector<std::string> carve_maze(int side, RngStream& rng) {
    int cells = (side - 1) / 2;
    std::vector<std::string> grid(static_cast<std::size_t>(side),
                                  std::string(static_cast<std::size_t>(side), '#'));
    std::vector<std::vector<bool>> visited(static_cast<std::size_t>(cells),
                                           std::vector<bool>(static_cast<std::size_t>(cells), false));
    std::vector<std::pair<int, int>> stack{{0, 0}};
    visited[0][0] = true;
    grid[1][1] = '.';
    while (!stack.empty()) {
        auto [cr, cc] = stack.back();
        std::vector<int> options;
        for (int d = 0; d < 4; ++d) {
            int nr = cr + kDirs[static_cast<std::size_t>(d)].dr;
            int nc = cc + kDirs[static_cast<std::size_t>(d)].dc;
            if (nr >= 0 && nr < cells && nc >= 0 && nc < cells &&
                !visited[static_cast<std::size_t>(nr)][static_cast<std::size_t>(nc)])
                options.push_back(d);
        }
        if (options.empty()) {
            stack.pop_back();
            continue;
        }
        int d = options[static_cast<std::size_t>(rng.below(options.size()))];
        int nr = cr + kDirs[static_cast<std::size_t>(d)].dr;
        int nc = cc + kDirs[static_cast<std::size_t>(d)].dc;
        visited[static_cast<std::size_t>(nr)][static_cast<std::size_t>(nc)] = true;
        // knock out the wall between the two cells
        grid[static_cast<std::size_t>(2 * cr + 1 + kDirs[static_cast<std::size_t>(d)].dr)]
            [static_cast<std::size_t>(2 * cc + 1 + kDirs[static_cast<std::size_t>(d)].dc)] = '.';
        grid[static_cast<std::size_t>(2 * nr + 1)][static_cast<std::size_t>(2 * nc + 1)] = '.';
        stack.emplace_back(nr, nc);
    }
    return grid;
}

/// Maze escape, graded as a single move plan. Walking into a wall fails the
/// episode; reaching the exit at any point of the plan succeeds.
class MazeGame final : public Game {
public:
    const GameInfo& info() const override {
        static const GameInfo info{
            "maze",
            Dimension::SGR,
            EpochMode::Single,
            ScoreRule::Binary,
            {{"side", 5, 31, 9, "odd grid side length"}},
        };
        return info;
    }

    void generate(GameState& state) const override {
        int side = state.params.at("side");
        if (side % 2 == 0)
            throw invalid_parameter_error("maze side must be odd");
        auto grid = carve_maze(side, state.rng);
        json jg = json::array();
        for (const auto& row : grid) jg.push_back(row);
        state.board = json{{"grid", jg}, {"side", side}};
    }

    std::string render(const GameState& state) const override {
        const json& b = state.board;
        int side = b.at("side").get<int>();
        std::ostringstream os;
        os << "Map ('#' wall, '.' corridor, 'S' start, 'E' exit):\n";
        for (int r = 0; r < side; ++r) {
            std::string row = b.at("grid").at(r).get<std::string>();
            if (r == 1) row[1] = 'S';
            if (r == side - 2) row[static_cast<std::size_t>(side - 2)] = 'E';
            os << row << "\n";
        }
        std::string rules =
            "Find a path from S to E. U moves one cell up, D down, L left, R right. "
            "Stepping into a wall fails the attempt.";
        std::string help = "Give the full move sequence as a string of U/D/L/R (example: RRDD).";
        return compose_prompt("Maze", rules, state, os.str(), help);
    }

    StepResult step(GameState& state, const std::string& payload) const override {
        auto moves = parse_moves(payload);
        if (!moves || moves->empty())
            return invalid_step("Moves must be a nonempty string over U/D/L/R.");
        const json& b = state.board;
        int side = b.at("side").get<int>();
        std::vector<std::string> grid;
        for (const auto& row : b.at("grid")) grid.push_back(row.get<std::string>());

        int r = 1, c = 1;
        int er = side - 2, ec = side - 2;
        StepResult res;
        res.valid = true;
        res.done = true;
        if (r == er && c == ec) {
            res.score_delta = 1.0;
            res.feedback = "Already at the exit.";
            return res;
        }
        for (const auto& d : *moves) {
            int nr = r + d.dr, nc = c + d.dc;
            if (nr < 0 || nr >= side || nc < 0 || nc >= side ||
                grid[static_cast<std::size_t>(nr)][static_cast<std::size_t>(nc)] == '#') {
                res.score_delta = 0.0;
                res.feedback = "Walked into a wall.";
                return res;
            }
            r = nr;
            c = nc;
            if (r == er && c == ec) {
                res.score_delta = 1.0;
                res.feedback = "Reached the exit.";
                return res;
            }
        }
        res.score_delta = 0.0;
        res.feedback = "The plan ends before reaching the exit.";
        return res;
    }
};

}  // namespace gamegym::games

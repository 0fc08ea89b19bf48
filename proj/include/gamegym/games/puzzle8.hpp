#pragma once

#include "gamegym/games/common.hpp"

namespace gamegym::games {

/// 8-puzzle (3x3 sliding tiles), graded as a single plan of blank moves
/// against the canonical goal 1..8 with the blank last. Instances come from
/// a random walk off the goal, so they are always parity-solvable.
class Puzzle8Game final : public Game {
public:
    static constexpr std::array<int, 9> kGoal = {1, 2, 3, 4, 5, 6, 7, 8, 0};

    const GameInfo& info() const override {
        static const GameInfo info{
            "8-puzzle",
            Dimension::SGR,
            EpochMode::Single,
            ScoreRule::Binary,
            {{"shuffle_moves", 1, 100, 30, "random blank moves used to scramble the goal"}},
        };
        return info;
    }

    void generate(GameState& state) const override {
        int shuffles = state.params.at("shuffle_moves");
        std::array<int, 9> tiles = kGoal;
        do {
            int blank = 8;
            int prev = -1;
            for (int s = 0; s < shuffles; ++s) {
                std::vector<int> options;
                for (int d = 0; d < 4; ++d) {
                    if (d == prev) continue;  // do not undo the previous move
                    int nr = blank / 3 + kDirs[static_cast<std::size_t>(d)].dr;
                    int nc = blank % 3 + kDirs[static_cast<std::size_t>(d)].dc;
                    if (nr >= 0 && nr < 3 && nc >= 0 && nc < 3) options.push_back(d);
                }
                int d = options[static_cast<std::size_t>(state.rng.below(options.size()))];
                int nb = (blank / 3 + kDirs[static_cast<std::size_t>(d)].dr) * 3 + blank % 3 +
                         kDirs[static_cast<std::size_t>(d)].dc;
                std::swap(tiles[static_cast<std::size_t>(blank)], tiles[static_cast<std::size_t>(nb)]);
                blank = nb;
                prev = d ^ 1;  // kDirs pairs U/D and L/R
            }
        } while (tiles == kGoal);
        json jt = json::array();
        for (int v : tiles) jt.push_back(v);
        state.board = json{{"tiles", jt}};
    }

    std::string render(const GameState& state) const override {
        std::ostringstream os;
        os << "Board ('_' is the blank):\n";
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                int v = state.board.at("tiles").at(r * 3 + c).get<int>();
                os << (c ? " " : "");
                if (v == 0) os << '_';
                else os << v;
            }
            os << "\n";
        }
        os << "Goal:\n1 2 3\n4 5 6\n7 8 _";
        std::string rules =
            "Reach the goal configuration by sliding tiles. Moves describe where the BLANK "
            "travels: U swaps the blank with the tile above it, D below, L left, R right. "
            "A move that would take the blank off the board does nothing.";
        std::string help = "Give the full move sequence as a string of U/D/L/R.";
        return compose_prompt("8-Puzzle", rules, state, os.str(), help);
    }

    StepResult step(GameState& state, const std::string& payload) const override {
        auto moves = parse_moves(payload);
        if (!moves)
            return invalid_step("Moves must be a string over U/D/L/R (empty means: already "
                                "solved).");
        std::array<int, 9> tiles{};
        int blank = 0;
        for (int i = 0; i < 9; ++i) {
            tiles[static_cast<std::size_t>(i)] = state.board.at("tiles").at(i).get<int>();
            if (tiles[static_cast<std::size_t>(i)] == 0) blank = i;
        }
        for (const auto& d : *moves) {
            int nr = blank / 3 + d.dr, nc = blank % 3 + d.dc;
            if (nr < 0 || nr >= 3 || nc < 0 || nc >= 3) continue;  // off-grid: no-op
            int nb = nr * 3 + nc;
            std::swap(tiles[static_cast<std::size_t>(blank)], tiles[static_cast<std::size_t>(nb)]);
            blank = nb;
        }
        json jt = json::array();
        for (int v : tiles) jt.push_back(v);
        state.board["tiles"] = jt;

        bool solved = tiles == kGoal;
        StepResult r;
        r.valid = true;
        r.done = true;
        r.score_delta = solved ? 1.0 : 0.0;
        r.feedback = solved ? "Goal configuration reached." : "Final grid is not the goal.";
        return r;
    }
};

}  // namespace gamegym::games

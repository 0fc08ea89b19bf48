#pragma once

#include "gamegym/games/common.hpp"

namespace gamegym::games {

namespace g2048_detail {

/// Slides one row toward index 0 with the standard single-merge rule.
/// Returns the merge score contribution and whether anything moved.
inline std::pair<int, bool> slide_row_left(std::array<int, 4>& row) {
    std::array<int, 4> out{};
    int n = 0;
    for (int v : row)
        if (v != 0) out[static_cast<std::size_t>(n++)] = v;
    int score = 0;
    for (int i = 0; i + 1 < n; ++i) {
        if (out[static_cast<std::size_t>(i)] != 0 &&
            out[static_cast<std::size_t>(i)] == out[static_cast<std::size_t>(i + 1)]) {
            out[static_cast<std::size_t>(i)] *= 2;
            score += out[static_cast<std::size_t>(i)];
            out[static_cast<std::size_t>(i + 1)] = 0;
            ++i;  // each tile merges at most once
        }
    }
    std::array<int, 4> packed{};
    int m = 0;
    for (int v : out)
        if (v != 0) packed[static_cast<std::size_t>(m++)] = v;
    bool moved = packed != row;
    row = packed;
    return {score, moved};
}

/// Applies a full-board move. Rows/columns are mapped onto left-slides.
inline std::pair<int, bool> apply_move(std::array<int, 16>& grid, char dir) {
    int score = 0;
    bool moved = false;
    for (int line = 0; line < 4; ++line) {
        std::array<int, 4> row{};
        for (int k = 0; k < 4; ++k) {
            int idx = 0;
            switch (dir) {
                case 'L': idx = line * 4 + k; break;
                case 'R': idx = line * 4 + (3 - k); break;
                case 'U': idx = k * 4 + line; break;
                default: idx = (3 - k) * 4 + line; break;  // 'D'
            }
            row[static_cast<std::size_t>(k)] = grid[static_cast<std::size_t>(idx)];
        }
        auto [s, m] = slide_row_left(row);
        score += s;
        moved = moved || m;
        for (int k = 0; k < 4; ++k) {
            int idx = 0;
            switch (dir) {
                case 'L': idx = line * 4 + k; break;
                case 'R': idx = line * 4 + (3 - k); break;
                case 'U': idx = k * 4 + line; break;
                default: idx = (3 - k) * 4 + line; break;
            }
            grid[static_cast<std::size_t>(idx)] = row[static_cast<std::size_t>(k)];
        }
    }
    return {score, moved};
}

inline bool any_move_possible(const std::array<int, 16>& grid) {
    for (int v : grid)
        if (v == 0) return true;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            int v = grid[static_cast<std::size_t>(r * 4 + c)];
            if (c + 1 < 4 && grid[static_cast<std::size_t>(r * 4 + c + 1)] == v) return true;
            if (r + 1 < 4 && grid[static_cast<std::size_t>((r + 1) * 4 + c)] == v) return true;
        }
    return false;
}

/// Spawns a tile at an RNG-chosen empty cell: 2 with probability 0.9, else 4.
inline void spawn_tile(std::array<int, 16>& grid, RngStream& rng) {
    std::vector<int> empties;
    for (int i = 0; i < 16; ++i)
        if (grid[static_cast<std::size_t>(i)] == 0) empties.push_back(i);
    if (empties.empty()) return;
    int at = empties[static_cast<std::size_t>(rng.below(empties.size()))];
    grid[static_cast<std::size_t>(at)] = rng.chance(9, 10) ? 2 : 4;
}

}  // namespace g2048_detail

/// 2048: one direction per round, cumulative merge scoring, seeded spawns.
/// A parseable move that changes nothing is reported invalid and spawns no
/// tile.
class Game2048 final : public Game {
public:
    const GameInfo& info() const override {
        static const GameInfo info{
            "2048", Dimension::SR, EpochMode::Multi, ScoreRule::Cumulative, {},
        };
        return info;
    }

    void generate(GameState& state) const override {
        std::array<int, 16> grid{};
        g2048_detail::spawn_tile(grid, state.rng);
        g2048_detail::spawn_tile(grid, state.rng);
        json jg = json::array();
        for (int v : grid) jg.push_back(v);
        state.board = json{{"grid", jg}};
    }

    std::string render(const GameState& state) const override {
        std::ostringstream os;
        os << "Score: " << state.cumulative_score << "\n";
        os << "Board ('.' = empty):\n";
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                int v = state.board.at("grid").at(r * 4 + c).get<int>();
                os << (c ? "\t" : "");
                if (v == 0) os << '.';
                else os << v;
            }
            os << "\n";
        }
        std::string rules =
            "Play 2048. All tiles slide in the chosen direction; equal tiles that collide merge "
            "into their sum (each tile merges at most once per move) and the sum is added to "
            "your score. After every effective move a new tile appears. The episode ends when "
            "no move changes the board.";
        std::string help = "Give one direction: U, D, L or R.";
        return compose_prompt("2048", rules, state, os.str(), help);
    }

    StepResult step(GameState& state, const std::string& payload) const override {
        std::string t = to_lower(trim(payload));
        if (t.size() != 1 || !dir_from_letter(t[0]))
            return invalid_step("Give exactly one direction letter: U, D, L or R.");
        char dir = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));

        std::array<int, 16> grid{};
        for (int i = 0; i < 16; ++i) grid[static_cast<std::size_t>(i)] = state.board.at("grid").at(i).get<int>();

        auto [score, moved] = g2048_detail::apply_move(grid, dir);
        if (!moved)
            return invalid_step("That move does not change the board; nothing happened.");

        g2048_detail::spawn_tile(grid, state.rng);
        json jg = json::array();
        for (int v : grid) jg.push_back(v);
        state.board["grid"] = jg;

        StepResult r;
        r.valid = true;
        r.score_delta = score;
        if (!g2048_detail::any_move_possible(grid)) {
            r.done = true;
            r.feedback = "No moves left; game over.";
        } else {
            r.feedback = score > 0 ? "Merged tiles for " + std::to_string(score) + " points."
                                   : "Tiles moved; no merge.";
        }
        return r;
    }
};

}  // namespace gamegym::games

#pragma once

#include <algorithm>
#include <set>
#include <tuple>

#include "gamegym/games/common.hpp"

namespace gamegym::games {

/// Minesweeper on 9x9 with 10 mines. Mines are placed only after the first
/// reveal (never on that cell), zero-count reveals flood-fill, and the final
/// score is the fraction of safe cells revealed.
class MinesweeperGame final : public Game {
public:
    static constexpr int kSide = 9;
    static constexpr int kMines = 10;

    const GameInfo& info() const override {
        static const GameInfo info{
            "minesweeper", Dimension::CIR, EpochMode::Multi, ScoreRule::Proportional, {},
        };
        return info;
    }

    void generate(GameState& state) const override {
        state.board = json{{"flagged", json::array()},
                           {"mines", nullptr},
                           {"revealed", json::array()},
                           {"side", kSide}};
    }

    std::string render(const GameState& state) const override {
        const json& b = state.board;
        auto mines = mine_set(b);
        auto revealed = index_set(b.at("revealed"));
        auto flagged = index_set(b.at("flagged"));
        std::ostringstream os;
        os << "Board (rows 1-" << kSide << " top to bottom, columns 1-" << kSide
           << " left to right; '?' hidden, 'F' flagged, '.' revealed with no adjacent mines, "
              "digits = adjacent mine count):\n";
        for (int r = 0; r < kSide; ++r) {
            for (int c = 0; c < kSide; ++c) {
                int idx = r * kSide + c;
                os << (c ? " " : "");
                if (revealed.count(idx)) {
                    int n = adjacent_mines(mines, r, c);
                    if (n == 0) os << '.';
                    else os << n;
                } else if (flagged.count(idx)) {
                    os << 'F';
                } else {
                    os << '?';
                }
            }
            os << "\n";
        }
        os << "Safe cells revealed: " << revealed.size() << " of " << (kSide * kSide - kMines) << ".";
        std::string rules =
            "Uncover all safe cells of a 9x9 minefield containing 10 mines. 'reveal r,c' "
            "uncovers a cell (revealing a mine ends the game), 'flag r,c' toggles a marker on "
            "a hidden cell. Revealing a cell with no adjacent mines automatically uncovers its "
            "neighbours. The first reveal is always safe.";
        std::string help = "Give one action: reveal <row>,<col> or flag <row>,<col> (1-indexed).";
        return compose_prompt("Minesweeper", rules, state, os.str(), help);
    }

    StepResult step(GameState& state, const std::string& payload) const override {
        auto parsed = parse_action(payload);
        if (!parsed)
            return invalid_step("Give 'reveal r,c' or 'flag r,c' with 1-indexed coordinates "
                                "inside the 9x9 board.");
        auto [is_reveal, r, c] = *parsed;
        json& b = state.board;
        auto revealed = index_set(b.at("revealed"));
        auto flagged = index_set(b.at("flagged"));
        int idx = r * kSide + c;

        if (is_reveal && revealed.count(idx))
            return invalid_step("That cell is already revealed.");
        if (is_reveal && flagged.count(idx))
            return invalid_step("That cell is flagged; unflag it before revealing.");
        if (!is_reveal && revealed.count(idx))
            return invalid_step("Cannot flag a revealed cell.");

        StepResult res;
        res.valid = true;
        if (!is_reveal) {
            if (flagged.count(idx)) flagged.erase(idx);
            else flagged.insert(idx);
            store(b, "flagged", flagged);
            res.feedback = "Flag toggled.";
            return res;
        }

        if (b.at("mines").is_null()) place_mines(state, idx);
        auto mines = mine_set(state.board);

        if (mines.count(idx)) {
            res.done = true;
            res.feedback = "That was a mine. Game over.";
            return res;
        }

        std::size_t before = revealed.size();
        flood_reveal(mines, revealed, r, c);
        store(b, "revealed", revealed);
        int total_safe = kSide * kSide - kMines;
        res.score_delta = static_cast<double>(revealed.size() - before) / total_safe;
        if (static_cast<int>(revealed.size()) == total_safe) {
            res.done = true;
            res.feedback = "All safe cells revealed. Field cleared!";
        } else {
            res.feedback = "Revealed " + std::to_string(revealed.size() - before) + " cell(s).";
        }
        return res;
    }

    // test/oracle surface: the mine layout once placed (indices, sorted)
    static std::set<int> mine_set(const json& board) {
        std::set<int> mines;
        if (!board.at("mines").is_null())
            for (const auto& m : board.at("mines")) mines.insert(m.get<int>());
        return mines;
    }

private:
    static std::optional<std::tuple<bool, int, int>> parse_action(const std::string& payload) {
        auto tokens = split_tokens(payload);
        if (tokens.empty()) return std::nullopt;
        std::string verb = to_lower(tokens[0]);
        if (verb != "reveal" && verb != "flag") return std::nullopt;
        std::vector<int> nums;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            std::string t = tokens[i];
            std::string digits;
            for (char ch : t) {
                if (std::isdigit(static_cast<unsigned char>(ch))) digits.push_back(ch);
                else if (ch != '(' && ch != ')') return std::nullopt;
                if (!digits.empty() && !std::isdigit(static_cast<unsigned char>(ch))) {
                    nums.push_back(*parse_int(digits));
                    digits.clear();
                }
            }
            if (!digits.empty()) nums.push_back(*parse_int(digits));
        }
        if (nums.size() != 2) return std::nullopt;
        int r = nums[0] - 1, c = nums[1] - 1;
        if (r < 0 || r >= kSide || c < 0 || c >= kSide) return std::nullopt;
        return std::make_tuple(verb == "reveal", r, c);
    }

    static std::set<int> index_set(const json& arr) {
        std::set<int> out;
        for (const auto& v : arr) out.insert(v.get<int>());
        return out;
    }

    static void store(json& board, const char* key, const std::set<int>& s) {
        json arr = json::array();
        for (int v : s) arr.push_back(v);
        board[key] = arr;
    }

    /// Deferred placement: 10 mines drawn from all cells except the first
    /// revealed one.
    static void place_mines(GameState& state, int excluded) {
        std::vector<int> cells;
        for (int i = 0; i < kSide * kSide; ++i)
            if (i != excluded) cells.push_back(i);
        state.rng.shuffle(cells);
        std::set<int> mines(cells.begin(), cells.begin() + kMines);
        store(state.board, "mines", mines);
    }

    static int adjacent_mines(const std::set<int>& mines, int r, int c) {
        int n = 0;
        for (int dr = -1; dr <= 1; ++dr)
            for (int dc = -1; dc <= 1; ++dc) {
                if (dr == 0 && dc == 0) continue;
                int nr = r + dr, nc = c + dc;
                if (nr >= 0 && nr < kSide && nc >= 0 && nc < kSide &&
                    mines.count(nr * kSide + nc))
                    ++n;
            }
        return n;
    }

    static void flood_reveal(const std::set<int>& mines, std::set<int>& revealed, int r, int c) {
        std::vector<std::pair<int, int>> stack{{r, c}};
        while (!stack.empty()) {
            auto [cr, cc] = stack.back();
            stack.pop_back();
            int idx = cr * kSide + cc;
            if (revealed.count(idx)) continue;
            revealed.insert(idx);
            if (adjacent_mines(mines, cr, cc) != 0) continue;
            for (int dr = -1; dr <= 1; ++dr)
                for (int dc = -1; dc <= 1; ++dc) {
                    if (dr == 0 && dc == 0) continue;
                    int nr = cr + dr, nc = cc + dc;
                    if (nr >= 0 && nr < kSide && nc >= 0 && nc < kSide &&
                        !mines.count(nr * kSide + nc))
                        stack.emplace_back(nr, nc);
                }
        }
    }
};

}  // namespace gamegym::games

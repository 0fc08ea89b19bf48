#pragma once

#include "gamegym/games/common.hpp"

namespace gamegym::games {

/// Lights Out on a fixed 3x3 grid. A press toggles the cell and its
/// orthogonal neighbours; the whole press list is graded in one shot.
class LightsOutGame final : public Game {
public:
    const GameInfo& info() const override {
        static const GameInfo info{
            "light-out", Dimension::MLR, EpochMode::Single, ScoreRule::Binary, {},
        };
        return info;
    }

    void generate(GameState& state) const override {
        // Any 3x3 pattern is solvable; just avoid the already-solved board.
        std::uint64_t bits = 0;
        while (bits == 0) bits = state.rng.below(512);
        json grid = json::array();
        for (int i = 0; i < 9; ++i) grid.push_back(static_cast<int>((bits >> i) & 1));
        state.board = json{{"grid", grid}};
    }

    std::string render(const GameState& state) const override {
        std::ostringstream os;
        os << "Grid (1 = on, 0 = off), rows top to bottom:\n";
        const json& grid = state.board.at("grid");
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) os << (c ? " " : "") << grid.at(r * 3 + c).get<int>();
            os << "\n";
        }
        std::string rules =
            "Switch off all lights on the 3x3 grid. Pressing a cell toggles that cell and its "
            "orthogonal neighbours (up, down, left, right).";
        std::string help =
            "Give the cells to press as row,col pairs (1-indexed), separated by spaces or "
            "semicolons (example: 1,2 3,3). Reply 'none' to press nothing.";
        return compose_prompt("Lights Out", rules, state, os.str(), help);
    }

    StepResult step(GameState& state, const std::string& payload) const override {
        auto presses = parse_presses(payload);
        if (!presses)
            return invalid_step("Could not parse the press list. Use 1-indexed row,col pairs "
                                "within the 3x3 grid, e.g. 'Answer: 1,2 3,3'.");
        std::array<int, 9> grid{};
        for (int i = 0; i < 9; ++i) grid[static_cast<std::size_t>(i)] = state.board.at("grid").at(i).get<int>();
        for (auto [r, c] : *presses) {
            toggle(grid, r, c);
            toggle(grid, r - 1, c);
            toggle(grid, r + 1, c);
            toggle(grid, r, c - 1);
            toggle(grid, r, c + 1);
        }
        bool all_off = true;
        for (int v : grid) all_off = all_off && v == 0;

        json jg = json::array();
        for (int v : grid) jg.push_back(v);
        state.board["grid"] = jg;

        StepResult r;
        r.valid = true;
        r.done = true;
        r.score_delta = all_off ? 1.0 : 0.0;
        r.feedback = all_off ? "All lights are off." : "Some lights are still on.";
        return r;
    }

    /// Empty payload or 'none' means "press nothing"; otherwise row,col pairs
    /// (1-indexed), parens optional.
    static std::optional<std::vector<std::pair<int, int>>> parse_presses(const std::string& payload) {
        std::vector<std::pair<int, int>> out;
        std::string t = to_lower(trim(payload));
        if (t.empty() || t == "none") return out;
        std::vector<int> numbers;
        std::string cur;
        for (char c : t) {
            if (std::isdigit(static_cast<unsigned char>(c))) {
                cur.push_back(c);
                continue;
            }
            if (!cur.empty()) {
                numbers.push_back(*parse_int(cur));
                cur.clear();
            }
            if (c != ' ' && c != ',' && c != ';' && c != '(' && c != ')' && c != '\n' && c != '\t')
                return std::nullopt;
        }
        if (!cur.empty()) numbers.push_back(*parse_int(cur));
        if (numbers.empty() || numbers.size() % 2 != 0) return std::nullopt;
        for (std::size_t i = 0; i < numbers.size(); i += 2) {
            int r = numbers[i], c = numbers[i + 1];
            if (r < 1 || r > 3 || c < 1 || c > 3) return std::nullopt;
            out.emplace_back(r, c);
        }
        return out;
    }

private:
    static void toggle(std::array<int, 9>& grid, int r, int c) {
        if (r < 1 || r > 3 || c < 1 || c > 3) return;
        int idx = (r - 1) * 3 + (c - 1);
        grid[static_cast<std::size_t>(idx)] ^= 1;
    }
};

}  // namespace gamegym::games

#pragma once

#include "gamegym/games/common.hpp"

namespace gamegym::games {

namespace sudoku_detail {

/// Counts completions of `grid` (0 = empty) by backtracking, stopping at
/// `cap`. Optionally stores the first solution found.
inline int count_solutions(std::vector<int>& grid, int side, int cap,
                           std::vector<int>* first = nullptr) {
    int box = side == 9 ? 3 : 2;
    int cell = -1;
    for (int i = 0; i < side * side; ++i)
        if (grid[static_cast<std::size_t>(i)] == 0) {
            cell = i;
            break;
        }
    if (cell < 0) {
        if (first && first->empty()) *first = grid;
        return 1;
    }
    int r = cell / side, c = cell % side;
    int found = 0;
    for (int d = 1; d <= side; ++d) {
        bool ok = true;
        for (int k = 0; k < side && ok; ++k) {
            if (grid[static_cast<std::size_t>(r * side + k)] == d) ok = false;
            if (grid[static_cast<std::size_t>(k * side + c)] == d) ok = false;
        }
        int br = (r / box) * box, bc = (c / box) * box;
        for (int i = 0; i < box && ok; ++i)
            for (int j = 0; j < box && ok; ++j)
                if (grid[static_cast<std::size_t>((br + i) * side + bc + j)] == d) ok = false;
        if (!ok) continue;
        grid[static_cast<std::size_t>(cell)] = d;
        found += count_solutions(grid, side, cap - found, first);
        grid[static_cast<std::size_t>(cell)] = 0;
        if (found >= cap) break;
    }
    return found;
}

/// Fills an empty grid with a complete valid solution, digit order randomized
/// per cell by `rng`.
inline bool fill_full(std::vector<int>& grid, int side, RngStream& rng) {
    int box = side == 9 ? 3 : 2;
    int cell = -1;
    for (int i = 0; i < side * side; ++i)
        if (grid[static_cast<std::size_t>(i)] == 0) {
            cell = i;
            break;
        }
    if (cell < 0) return true;
    int r = cell / side, c = cell % side;
    std::vector<int> digits(static_cast<std::size_t>(side));
    for (int d = 0; d < side; ++d) digits[static_cast<std::size_t>(d)] = d + 1;
    rng.shuffle(digits);
    for (int d : digits) {
        bool ok = true;
        for (int k = 0; k < side && ok; ++k) {
            if (grid[static_cast<std::size_t>(r * side + k)] == d) ok = false;
            if (grid[static_cast<std::size_t>(k * side + c)] == d) ok = false;
        }
        int br = (r / box) * box, bc = (c / box) * box;
        for (int i = 0; i < box && ok; ++i)
            for (int j = 0; j < box && ok; ++j)
                if (grid[static_cast<std::size_t>((br + i) * side + bc + j)] == d) ok = false;
        if (!ok) continue;
        grid[static_cast<std::size_t>(cell)] = d;
        if (fill_full(grid, side, rng)) return true;
        grid[static_cast<std::size_t>(cell)] = 0;
    }
    return false;
}

inline bool check_complete(const std::vector<int>& grid, int side) {
    int box = side == 9 ? 3 : 2;
    auto is_permutation = [&](auto cell_at) {
        std::vector<bool> seen(static_cast<std::size_t>(side + 1), false);
        for (int k = 0; k < side; ++k) {
            int v = cell_at(k);
            if (v < 1 || v > side || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = true;
        }
        return true;
    };
    for (int r = 0; r < side; ++r)
        if (!is_permutation([&](int k) { return grid[static_cast<std::size_t>(r * side + k)]; })) return false;
    for (int c = 0; c < side; ++c)
        if (!is_permutation([&](int k) { return grid[static_cast<std::size_t>(k * side + c)]; })) return false;
    for (int br = 0; br < side; br += box)
        for (int bc = 0; bc < side; bc += box)
            if (!is_permutation([&](int k) {
                    return grid[static_cast<std::size_t>((br + k / box) * side + bc + k % box)];
                }))
                return false;
    return true;
}

}  // namespace sudoku_detail

/// Sudoku with uniqueness-guaranteed givens. Difficulty 1 plays on a 4x4
/// board; 2 and 3 play on 9x9 with progressively fewer givens.
class SudokuGame final : public Game {
public:
    const GameInfo& info() const override {
        static const GameInfo info{
            "sudoku",
            Dimension::MLR,
            EpochMode::Single,
            ScoreRule::Binary,
            {{"difficulty", 1, 3, 1, "1: 4x4 board; 2: 9x9; 3: 9x9 with fewer givens"}},
        };
        return info;
    }

    void generate(GameState& state) const override {
        int difficulty = state.params.at("difficulty");
        int side = difficulty == 1 ? 4 : 9;
        int floor_givens = difficulty == 1 ? 6 : (difficulty == 2 ? 36 : 28);

        std::vector<int> grid(static_cast<std::size_t>(side * side), 0);
        sudoku_detail::fill_full(grid, side, state.rng);
        std::string solution_text;
        for (int v : grid) solution_text += static_cast<char>('0' + v);

        // Dig cells in random order, keeping the completion unique.
        std::vector<int> order(static_cast<std::size_t>(side * side));
        for (int i = 0; i < side * side; ++i) order[static_cast<std::size_t>(i)] = i;
        state.rng.shuffle(order);
        int givens = side * side;
        for (int cell : order) {
            if (givens <= floor_givens) break;
            int saved = grid[static_cast<std::size_t>(cell)];
            grid[static_cast<std::size_t>(cell)] = 0;
            std::vector<int> probe = grid;
            if (sudoku_detail::count_solutions(probe, side, 2) == 1) {
                --givens;
            } else {
                grid[static_cast<std::size_t>(cell)] = saved;
            }
        }

        json jg = json::array();
        for (int v : grid) jg.push_back(v);
        state.board = json{{"givens", jg},
                           {"side", side},
                           {"solution_digest", to_hex(fnv1a64(solution_text))}};
    }

    std::string render(const GameState& state) const override {
        const json& b = state.board;
        int side = b.at("side").get<int>();
        std::ostringstream os;
        os << "Board (" << side << "x" << side << ", '.' = empty), rows top to bottom:\n";
        for (int r = 0; r < side; ++r) {
            for (int c = 0; c < side; ++c) {
                int v = b.at("givens").at(r * side + c).get<int>();
                os << (c ? " " : "");
                if (v == 0) os << '.';
                else os << v;
            }
            os << "\n";
        }
        int box = side == 9 ? 3 : 2;
        std::ostringstream rules;
        rules << "Complete the grid so every row, every column and every " << box << "x" << box
              << " box contains each digit 1.." << side
              << " exactly once. Given digits must stay as they are.";
        std::string help =
            "Give the full solved grid in row-major order, digits separated by spaces or "
            "newlines (row by row).";
        return compose_prompt("Sudoku", rules.str(), state, os.str(), help);
    }

    StepResult step(GameState& state, const std::string& payload) const override {
        const json& b = state.board;
        int side = b.at("side").get<int>();
        std::vector<int> answer;
        for (char c : payload) {
            if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '/' || c == '|')
                continue;
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return invalid_step("Only digits and separators are allowed in the grid answer.");
            answer.push_back(c - '0');
        }
        if (static_cast<int>(answer.size()) != side * side)
            return invalid_step("Expected " + std::to_string(side * side) + " digits, got " +
                                std::to_string(answer.size()) + ".");

        StepResult r;
        r.valid = true;
        r.done = true;
        for (int i = 0; i < side * side; ++i) {
            int given = b.at("givens").at(i).get<int>();
            if (given != 0 && answer[static_cast<std::size_t>(i)] != given) {
                r.feedback = "A given clue was changed.";
                return r;
            }
        }
        bool ok = sudoku_detail::check_complete(answer, side);
        r.score_delta = ok ? 1.0 : 0.0;
        r.feedback = ok ? "Grid is a valid completion." : "Grid violates a row, column or box constraint.";
        return r;
    }
};

}  // namespace gamegym::games

#pragma once

#include "gamegym/games/common.hpp"

namespace gamegym::games {

/// Black White Copy: starting from an all-white board, reach the target
/// pattern with row operations. toggle(i) flips row i; copy(i) overwrites
/// row i+1 with row i. The target is built by seeded operations from white,
/// so it is always reachable.
class BWCopyGame final : public Game {
public:
    struct Op {
        bool is_toggle;
        int row;  // 1-indexed
    };

    const GameInfo& info() const override {
        static const GameInfo info{
            "black-white-copy",
            Dimension::CIR,
            EpochMode::Single,
            ScoreRule::Binary,
            {{"side", 2, 6, 3, "square board side"},
             {"ops", 1, 12, 4, "number of seeded operations used to build the target"}},
        };
        return info;
    }

    void generate(GameState& state) const override {
        int n = state.params.at("side");
        int k = state.params.at("ops");
        std::vector<std::string> target;
        do {
            target.assign(static_cast<std::size_t>(n), std::string(static_cast<std::size_t>(n), 'W'));
            for (int i = 0; i < k; ++i) {
                bool tog = state.rng.chance(1, 2);
                if (tog) {
                    apply_op(target, {true, 1 + static_cast<int>(state.rng.below(static_cast<std::uint64_t>(n)))});
                } else if (n > 1) {
                    apply_op(target, {false, 1 + static_cast<int>(state.rng.below(static_cast<std::uint64_t>(n - 1)))});
                }
            }
        } while (all_white(target));
        json jt = json::array();
        for (const auto& row : target) jt.push_back(row);
        json jg = json::array();
        for (int i = 0; i < n; ++i) jg.push_back(std::string(static_cast<std::size_t>(n), 'W'));
        state.board = json{{"grid", jg}, {"side", n}, {"target", jt}};
    }

    std::string render(const GameState& state) const override {
        const json& b = state.board;
        std::ostringstream os;
        os << "Current board ('W' white, 'B' black), rows numbered 1-" << b.at("side").get<int>()
           << " top to bottom:\n";
        for (const auto& row : b.at("grid")) os << "  " << row.get<std::string>() << "\n";
        os << "Target pattern:\n";
        for (const auto& row : b.at("target")) os << "  " << row.get<std::string>() << "\n";
        std::string rules =
            "Transform the all-white board into the target pattern. toggle(i) flips every cell "
            "of row i (white <-> black); copy(i) overwrites row i+1 with a copy of row i.";
        std::string help =
            "Give the operation list in order, separated by spaces or commas (example: "
            "toggle(1) copy(1) toggle(3)).";
        return compose_prompt("Black White Copy", rules, state, os.str(), help);
    }

    StepResult step(GameState& state, const std::string& payload) const override {
        const json& b = state.board;
        int n = b.at("side").get<int>();
        auto ops = parse_ops(payload, n);
        if (!ops)
            return invalid_step("Could not parse the operation list. Use toggle(i) with i in 1.." +
                                std::to_string(n) + " and copy(i) with i in 1.." +
                                std::to_string(n - 1) + ".");
        std::vector<std::string> grid;
        for (const auto& row : b.at("grid")) grid.push_back(row.get<std::string>());
        for (const auto& op : *ops) apply_op(grid, op);

        std::vector<std::string> target;
        for (const auto& row : b.at("target")) target.push_back(row.get<std::string>());

        json jg = json::array();
        for (const auto& row : grid) jg.push_back(row);
        state.board["grid"] = jg;

        bool ok = grid == target;
        StepResult r;
        r.valid = true;
        r.done = true;
        r.score_delta = ok ? 1.0 : 0.0;
        r.feedback = ok ? "Board matches the target pattern."
                        : "Board does not match the target pattern.";
        return r;
    }

    static void apply_op(std::vector<std::string>& grid, const Op& op) {
        std::size_t i = static_cast<std::size_t>(op.row - 1);
        if (op.is_toggle) {
            for (char& c : grid[i]) c = (c == 'W') ? 'B' : 'W';
        } else {
            grid[i + 1] = grid[i];
        }
    }

    static std::optional<std::vector<Op>> parse_ops(const std::string& payload, int side) {
        std::vector<Op> out;
        std::string t = to_lower(payload);
        std::size_t pos = 0;
        while (pos < t.size()) {
            if (std::isspace(static_cast<unsigned char>(t[pos])) || t[pos] == ',' || t[pos] == ';') {
                ++pos;
                continue;
            }
            bool tog;
            if (t.compare(pos, 6, "toggle") == 0) {
                tog = true;
                pos += 6;
            } else if (t.compare(pos, 4, "copy") == 0) {
                tog = false;
                pos += 4;
            } else {
                return std::nullopt;
            }
            while (pos < t.size() && (t[pos] == ' ' || t[pos] == '(')) ++pos;
            std::string digits;
            while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
                digits.push_back(t[pos++]);
            if (digits.empty()) return std::nullopt;
            while (pos < t.size() && (t[pos] == ' ' || t[pos] == ')')) ++pos;
            int row = *parse_int(digits);
            int max_row = tog ? side : side - 1;
            if (row < 1 || row > max_row) return std::nullopt;
            out.push_back({tog, row});
        }
        if (out.empty()) return std::nullopt;
        return out;
    }

private:
    static bool all_white(const std::vector<std::string>& grid) {
        for (const auto& row : grid)
            if (row.find('B') != std::string::npos) return false;
        return true;
    }
};

}  // namespace gamegym::games

#pragma once

#include "gamegym/games/common.hpp"

namespace gamegym::games {

/// Tower of Hanoi, graded as a single plan: the whole move list is submitted
/// at once and simulated; any illegal move ends the episode with score 0.
class HanoiGame final : public Game {
public:
    const GameInfo& info() const override {
        static const GameInfo info{
            "tower-of-hanoi",
            Dimension::MLR,
            EpochMode::Single,
            ScoreRule::Binary,
            {{"disks", 1, 12, 3, "number of disks on the start peg"}},
        };
        return info;
    }

    void generate(GameState& state) const override {
        int disks = state.params.at("disks");
        json pegs = json::array();
        json start = json::array();
        for (int d = disks; d >= 1; --d) start.push_back(d);
        pegs.push_back(start);
        pegs.push_back(json::array());
        pegs.push_back(json::array());
        state.board = json{{"disks", disks}, {"moves_used", 0}, {"pegs", pegs}, {"target", "C"}};
    }

    std::string render(const GameState& state) const override {
        const json& b = state.board;
        std::ostringstream os;
        for (int p = 0; p < 3; ++p) {
            os << "Peg " << static_cast<char>('A' + p) << " (bottom to top):";
            const json& stack = b.at("pegs").at(p);
            if (stack.empty()) os << " empty";
            for (const auto& d : stack) os << " " << d.get<int>();
            os << "\n";
        }
        os << "Target peg: " << b.at("target").get<std::string>();
        std::string rules =
            "Move all disks to the target peg. Only one disk moves at a time, only the top "
            "disk of a peg may move, and a larger disk may never rest on a smaller one.";
        std::string help =
            "Give the full move list, one move per token, as <from>-><to> with pegs A, B, C, "
            "separated by commas or spaces (example: A->C, A->B, C->B).";
        return compose_prompt("Tower of Hanoi", rules, state, os.str(), help);
    }

    StepResult step(GameState& state, const std::string& payload) const override {
        auto moves = parse_move_list(payload);
        if (!moves)
            return invalid_step("Could not parse the move list. Use tokens like A->C separated "
                                "by commas or spaces.");
        StepResult r;
        r.valid = true;
        r.done = true;
        std::array<std::vector<int>, 3> pegs;
        for (int p = 0; p < 3; ++p)
            for (const auto& d : state.board.at("pegs").at(p)) pegs[static_cast<std::size_t>(p)].push_back(d.get<int>());

        int applied = 0;
        for (auto [from, to] : *moves) {
            auto& src = pegs[static_cast<std::size_t>(from)];
            auto& dst = pegs[static_cast<std::size_t>(to)];
            if (src.empty()) {
                r.feedback = "Illegal move: peg " + std::string(1, char('A' + from)) + " is empty.";
                return finish(state, r, pegs, applied, 0.0);
            }
            int disk = src.back();
            if (!dst.empty() && dst.back() < disk) {
                r.feedback = "Illegal move: disk " + std::to_string(disk) +
                             " cannot rest on smaller disk " + std::to_string(dst.back()) + ".";
                return finish(state, r, pegs, applied, 0.0);
            }
            src.pop_back();
            dst.push_back(disk);
            ++applied;
        }

        int disks = state.board.at("disks").get<int>();
        bool solved = static_cast<int>(pegs[2].size()) == disks;
        r.feedback = solved ? "All disks are on the target peg." : "Not all disks reached the target peg.";
        return finish(state, r, pegs, applied, solved ? 1.0 : 0.0);
    }

private:
    static StepResult finish(GameState& state, StepResult r,
                             const std::array<std::vector<int>, 3>& pegs, int moves_used,
                             double score) {
        state.board["moves_used"] = moves_used;
        json jp = json::array();
        for (const auto& peg : pegs) {
            json stack = json::array();
            for (int d : peg) stack.push_back(d);
            jp.push_back(stack);
        }
        state.board["pegs"] = jp;
        r.score_delta = score;
        return r;
    }

    static std::optional<std::vector<std::pair<int, int>>> parse_move_list(const std::string& payload) {
        std::vector<std::pair<int, int>> moves;
        if (trim(payload).empty()) return std::nullopt;
        for (const auto& tok : split_tokens(payload)) {
            std::string t = to_lower(tok);
            // accepted shapes: "a->c", "a>c", "a-c"
            std::string letters;
            for (char c : t)
                if (c >= 'a' && c <= 'c') letters.push_back(c);
            std::string rest;
            for (char c : t)
                if (!(c >= 'a' && c <= 'c') && c != '-' && c != '>') rest.push_back(c);
            if (letters.size() != 2 || !rest.empty()) return std::nullopt;
            moves.emplace_back(letters[0] - 'a', letters[1] - 'a');
        }
        return moves;
    }
};

}  // namespace gamegym::games

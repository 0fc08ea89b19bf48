#pragma once

#include <algorithm>
#include <deque>
#include <set>

#include "gamegym/games/common.hpp"

namespace gamegym::games {

/// Snake on a bounded 10x10 grid. Food is worth one point and grows the
/// snake; hitting a wall or the body (including reversing into the neck)
/// ends the episode.
class SnakeGame final : public Game {
public:
    static constexpr int kSide = 10;

    const GameInfo& info() const override {
        static const GameInfo info{
            "snake", Dimension::CIR, EpochMode::Multi, ScoreRule::Cumulative, {},
        };
        return info;
    }

    void generate(GameState& state) const override {
        // Head last; starts moving right from the middle of the grid.
        json body = json::array();
        body.push_back(json::array({4, 3}));
        body.push_back(json::array({4, 4}));
        body.push_back(json::array({4, 5}));
        state.board = json{{"body", body}, {"dir", "R"}, {"food", nullptr}};
        spawn_food(state);
    }

    std::string render(const GameState& state) const override {
        const json& b = state.board;
        std::vector<std::string> grid(kSide, std::string(kSide, '.'));
        const json& body = b.at("body");
        for (std::size_t i = 0; i < body.size(); ++i) {
            int r = body.at(i).at(0).get<int>(), c = body.at(i).at(1).get<int>();
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                (i + 1 == body.size()) ? 'H' : 'o';
        }
        if (!b.at("food").is_null()) {
            int fr = b.at("food").at(0).get<int>(), fc = b.at("food").at(1).get<int>();
            grid[static_cast<std::size_t>(fr)][static_cast<std::size_t>(fc)] = 'F';
        }
        std::ostringstream os;
        os << "Arena (bordered by walls; 'H' head, 'o' body, 'F' food, '.' empty):\n";
        os << std::string(kSide + 2, '#') << "\n";
        for (const auto& row : grid) os << '#' << row << "#\n";
        os << std::string(kSide + 2, '#') << "\n";
        os << "Current direction: " << b.at("dir").get<std::string>() << ".";
        std::string rules =
            "Steer the snake. Each round it advances one cell in the direction you give. "
            "Eating food scores one point and grows the snake by one segment. Running into a "
            "wall or your own body ends the game; reversing straight into your neck counts as "
            "a body collision.";
        std::string help = "Give one direction: U, D, L or R.";
        return compose_prompt("Snake", rules, state, os.str(), help);
    }

    StepResult step(GameState& state, const std::string& payload) const override {
        std::string t = to_lower(trim(payload));
        if (t.size() != 1 || !dir_from_letter(t[0]))
            return invalid_step("Give exactly one direction letter: U, D, L or R.");
        Dir d = *dir_from_letter(t[0]);
        json& b = state.board;

        std::deque<std::pair<int, int>> body;
        for (const auto& seg : b.at("body"))
            body.emplace_back(seg.at(0).get<int>(), seg.at(1).get<int>());
        auto head = body.back();

        StepResult r;
        r.valid = true;
        char prev = b.at("dir").get<std::string>()[0];
        if (body.size() >= 2 && is_opposite(prev, d.letter)) {
            r.done = true;
            r.feedback = "You reversed into your own neck. Game over.";
            return r;
        }

        std::pair<int, int> next{head.first + d.dr, head.second + d.dc};
        if (next.first < 0 || next.first >= kSide || next.second < 0 || next.second >= kSide) {
            r.done = true;
            r.feedback = "You hit the wall. Game over.";
            return r;
        }

        bool ate = !b.at("food").is_null() && next.first == b.at("food").at(0).get<int>() &&
                   next.second == b.at("food").at(1).get<int>();
        if (!ate) body.pop_front();  // tail moves first unless growing
        if (std::find(body.begin(), body.end(), next) != body.end()) {
            r.done = true;
            r.feedback = "You ran into your own body. Game over.";
            return r;
        }
        body.push_back(next);

        json jb = json::array();
        for (auto [sr, sc] : body) jb.push_back(json::array({sr, sc}));
        b["body"] = jb;
        b["dir"] = std::string(1, d.letter);

        if (ate) {
            r.score_delta = 1.0;
            b["food"] = nullptr;
            spawn_food(state);
            if (state.board.at("food").is_null()) {
                r.done = true;
                r.feedback = "You ate the food and filled the whole arena!";
            } else {
                r.feedback = "You ate the food and grew.";
            }
        } else {
            r.feedback = "Moved " + std::string(1, d.letter) + ".";
        }
        return r;
    }

private:
    static bool is_opposite(char a, char b) {
        return (a == 'U' && b == 'D') || (a == 'D' && b == 'U') || (a == 'L' && b == 'R') ||
               (a == 'R' && b == 'L');
    }

    static void spawn_food(GameState& state) {
        json& b = state.board;
        std::set<std::pair<int, int>> occupied;
        for (const auto& seg : b.at("body"))
            occupied.insert({seg.at(0).get<int>(), seg.at(1).get<int>()});
        std::vector<std::pair<int, int>> empties;
        for (int r = 0; r < kSide; ++r)
            for (int c = 0; c < kSide; ++c)
                if (!occupied.count({r, c})) empties.emplace_back(r, c);
        if (empties.empty()) {
            b["food"] = nullptr;
            return;
        }
        auto [fr, fc] = empties[static_cast<std::size_t>(state.rng.below(empties.size()))];
        b["food"] = json::array({fr, fc});
    }
};

}  // namespace gamegym::games

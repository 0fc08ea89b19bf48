#pragma once

#include <algorithm>
#include <set>

#include "gamegym/games/common.hpp"

namespace gamegym::games {

struct SokobanBoard {
    int side = 0;
    std::vector<std::string> walls;  // '#' wall, '.' floor
    std::vector<std::pair<int, int>> boxes;
    std::vector<std::pair<int, int>> goals;
    std::pair<int, int> player{0, 0};

    bool wall_at(int r, int c) const {
        return r < 0 || r >= side || c < 0 || c >= side ||
               walls[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == '#';
    }
    bool box_at(int r, int c) const {
        return std::find(boxes.begin(), boxes.end(), std::make_pair(r, c)) != boxes.end();
    }
    int boxes_on_goals() const {
        int n = 0;
        for (const auto& bx : boxes)
            if (std::find(goals.begin(), goals.end(), bx) != goals.end()) ++n;
        return n;
    }

    json to_json() const {
        json jw = json::array();
        for (const auto& row : walls) jw.push_back(row);
        auto pts = [](const std::vector<std::pair<int, int>>& v) {
            json a = json::array();
            for (auto [r, c] : v) a.push_back(json::array({r, c}));
            return a;
        };
        return json{{"boxes", pts(boxes)},
                    {"goals", pts(goals)},
                    {"player", json::array({player.first, player.second})},
                    {"side", side},
                    {"walls", jw}};
    }

    static SokobanBoard from_json(const json& j) {
        SokobanBoard b;
        b.side = j.at("side").get<int>();
        for (const auto& row : j.at("walls")) b.walls.push_back(row.get<std::string>());
        auto pts = [](const json& a) {
            std::vector<std::pair<int, int>> v;
            for (const auto& p : a) v.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
            return v;
        };
        b.boxes = pts(j.at("boxes"));
        b.goals = pts(j.at("goals"));
        b.player = {j.at("player").at(0).get<int>(), j.at("player").at(1).get<int>()};
        return b;
    }

    /// Applies one forward move. A blocked move is a no-op. Boxes stay
    /// sorted so serialized states are canonical.
    void move(const Dir& d) {
        int nr = player.first + d.dr, nc = player.second + d.dc;
        if (wall_at(nr, nc)) return;
        if (box_at(nr, nc)) {
            int br = nr + d.dr, bc = nc + d.dc;
            if (wall_at(br, bc) || box_at(br, bc)) return;
            auto it = std::find(boxes.begin(), boxes.end(), std::make_pair(nr, nc));
            *it = {br, bc};
            std::sort(boxes.begin(), boxes.end());
        }
        player = {nr, nc};
    }

    std::string render() const {
        std::vector<std::string> out = walls;
        for (auto [r, c] : goals)
            out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 'G';
        for (auto [r, c] : boxes) {
            char& cell = out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            cell = (cell == 'G') ? '*' : 'B';
        }
        char& pc = out[static_cast<std::size_t>(player.first)][static_cast<std::size_t>(player.second)];
        pc = (pc == 'G') ? '+' : 'P';
        std::string s;
        for (const auto& row : out) {
            s += row;
            s += "\n";
        }
        return s;
    }
};

/// Sokoban, graded as a single move plan; score is the fraction of boxes on
/// goals after the plan runs. Instances are built by reverse-pulling from a
/// solved position, so a full-score plan always exists.
class SokobanGame final : public Game {
public:
    const GameInfo& info() const override {
        static const GameInfo info{
            "sokoban",
            Dimension::SGR,
            EpochMode::Single,
            ScoreRule::Proportional,
            {{"side", 5, 9, 7, "square board side"}, {"boxes", 1, 3, 2, "number of boxes"}},
        };
        return info;
    }

    void generate(GameState& state) const override {
        int side = state.params.at("side");
        int nboxes = state.params.at("boxes");
        SokobanBoard board;
        while (true) {
            board = build_candidate(side, nboxes, state.rng);
            if (board.boxes_on_goals() < nboxes) break;
        }
        state.board = board.to_json();
    }

    std::string render(const GameState& state) const override {
        SokobanBoard board = SokobanBoard::from_json(state.board);
        std::string rules =
            "Push every box (B) onto a goal (G). You can push one box at a time; boxes cannot "
            "be pulled. A move into a wall, or a push into a wall or another box, does nothing "
            "and play continues. '*' is a box already on a goal, '+' is you standing on a goal.";
        std::string legend =
            "Map ('#' wall, '.' floor, 'B' box, 'G' goal, 'P' player, '*' box on goal, '+' "
            "player on goal):\n" +
            board.render();
        std::string help = "Give the full move sequence as a string of U/D/L/R.";
        return compose_prompt("Sokoban", rules, state, legend, help);
    }

    StepResult step(GameState& state, const std::string& payload) const override {
        auto moves = parse_moves(payload);
        if (!moves || moves->empty())
            return invalid_step("Moves must be a nonempty string over U/D/L/R.");
        SokobanBoard board = SokobanBoard::from_json(state.board);
        for (const auto& d : *moves) board.move(d);
        state.board = board.to_json();

        int on = board.boxes_on_goals();
        int total = static_cast<int>(board.boxes.size());
        StepResult r;
        r.valid = true;
        r.done = true;
        r.score_delta = static_cast<double>(on) / static_cast<double>(total);
        r.feedback = std::to_string(on) + " of " + std::to_string(total) + " boxes on goals.";
        return r;
    }

private:
    /// Solved layout (boxes on goals) walked backwards with random
    /// reverse-pulls; forward pushes can replay the walk in reverse.
    static SokobanBoard build_candidate(int side, int nboxes, RngStream& rng) {
        SokobanBoard b;
        b.side = side;
        b.walls.assign(static_cast<std::size_t>(side), std::string(static_cast<std::size_t>(side), '.'));
        for (int i = 0; i < side; ++i) {
            b.walls[0][static_cast<std::size_t>(i)] = '#';
            b.walls[static_cast<std::size_t>(side - 1)][static_cast<std::size_t>(i)] = '#';
            b.walls[static_cast<std::size_t>(i)][0] = '#';
            b.walls[static_cast<std::size_t>(i)][static_cast<std::size_t>(side - 1)] = '#';
        }
        std::vector<std::pair<int, int>> floor_cells;
        for (int r = 1; r < side - 1; ++r)
            for (int c = 1; c < side - 1; ++c) floor_cells.emplace_back(r, c);
        rng.shuffle(floor_cells);

        int extra_walls = static_cast<int>(rng.below(3));
        std::size_t take = 0;
        for (int w = 0; w < extra_walls; ++w) {
            auto [r, c] = floor_cells[take++];
            b.walls[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = '#';
        }
        for (int i = 0; i < nboxes; ++i) b.goals.push_back(floor_cells[take++]);
        b.boxes = b.goals;
        std::sort(b.boxes.begin(), b.boxes.end());
        std::sort(b.goals.begin(), b.goals.end());
        b.player = floor_cells[take++];

        int steps = 30 + 12 * nboxes;
        for (int s = 0; s < steps; ++s) {
            const Dir& d = kDirs[static_cast<std::size_t>(rng.below(4))];
            int nr = b.player.first + d.dr, nc = b.player.second + d.dc;
            if (b.wall_at(nr, nc) || b.box_at(nr, nc)) continue;
            int br = b.player.first - d.dr, bc = b.player.second - d.dc;
            bool pull = b.box_at(br, bc) && rng.chance(1, 2);
            if (pull) {
                auto it = std::find(b.boxes.begin(), b.boxes.end(), std::make_pair(br, bc));
                *it = b.player;
                std::sort(b.boxes.begin(), b.boxes.end());
            }
            b.player = {nr, nc};
        }
        return b;
    }
};

}  // namespace gamegym::games

#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gamegym/games/all.hpp"

namespace gamegym::oracles {

using gamegym::json;

/// A solver's answer in the owning game's action grammar, ready to submit
/// through the engine (without the Answer: wrapper).
struct Solution {
    std::string transcript;
    bool optimal = false;
};

struct Unsolvable : std::runtime_error {
    explicit Unsolvable(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Tower of Hanoi
// ---------------------------------------------------------------------------

namespace detail {
inline void hanoi_rec(int n, char from, char to, char via, std::vector<std::string>& out) {
    if (n == 0) return;
    hanoi_rec(n - 1, from, via, to, out);
    out.push_back(std::string(1, from) + "->" + to);
    hanoi_rec(n - 1, via, to, from, out);
}
}  // namespace detail

/// Classical recursive optimum: exactly 2^n - 1 moves from A to C.
inline Solution hanoi_optimal(int disks) {
    if (disks < 1 || disks > 12) throw std::invalid_argument("disk count out of range [1,12]");
    std::vector<std::string> moves;
    detail::hanoi_rec(disks, 'A', 'C', 'B', moves);
    std::string t;
    for (std::size_t i = 0; i < moves.size(); ++i) {
        if (i) t += ", ";
        t += moves[i];
    }
    return {t, true};
}

// ---------------------------------------------------------------------------
// Lights Out (GF(2) Gaussian elimination)
// ---------------------------------------------------------------------------

/// Solves press-pattern * x = lights over GF(2). Rows are 10-bit masks:
/// bits 0..8 the coefficient matrix, bit 9 the RHS. The 3x3 toggle matrix is
/// invertible, so a unique solution always exists.
inline std::vector<int> lights_gf2_solve(const std::array<int, 9>& lights) {
    std::array<std::uint16_t, 9> rows{};
    for (int cell = 0; cell < 9; ++cell) {
        int r = cell / 3, c = cell % 3;
        std::uint16_t mask = 0;
        auto add = [&](int rr, int cc) {
            if (rr >= 0 && rr < 3 && cc >= 0 && cc < 3)
                mask = static_cast<std::uint16_t>(mask | (1u << (rr * 3 + cc)));
        };
        add(r, c);
        add(r - 1, c);
        add(r + 1, c);
        add(r, c - 1);
        add(r, c + 1);
        rows[static_cast<std::size_t>(cell)] = mask;
        if (lights[static_cast<std::size_t>(cell)])
            rows[static_cast<std::size_t>(cell)] =
                static_cast<std::uint16_t>(rows[static_cast<std::size_t>(cell)] | (1u << 9));
    }
    // forward elimination with partial pivoting over GF(2)
    for (int col = 0; col < 9; ++col) {
        int pivot = -1;
        for (int r = col; r < 9; ++r)
            if (rows[static_cast<std::size_t>(r)] & (1u << col)) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Unsolvable("singular lights-out system");
        std::swap(rows[static_cast<std::size_t>(col)], rows[static_cast<std::size_t>(pivot)]);
        for (int r = 0; r < 9; ++r)
            if (r != col && (rows[static_cast<std::size_t>(r)] & (1u << col)))
                rows[static_cast<std::size_t>(r)] =
                    static_cast<std::uint16_t>(rows[static_cast<std::size_t>(r)] ^
                                               rows[static_cast<std::size_t>(col)]);
    }
    std::vector<int> presses;
    for (int cell = 0; cell < 9; ++cell)
        if (rows[static_cast<std::size_t>(cell)] & (1u << 9)) presses.push_back(cell);
    return presses;
}

inline Solution lights_solution(const GameState& state) {
    std::array<int, 9> lights{};
    for (int i = 0; i < 9; ++i) lights[static_cast<std::size_t>(i)] = state.board.at("grid").at(i).get<int>();
    auto presses = lights_gf2_solve(lights);
    if (presses.empty()) return {"none", true};
    std::string t;
    for (std::size_t i = 0; i < presses.size(); ++i) {
        if (i) t += " ";
        t += std::to_string(presses[i] / 3 + 1) + "," + std::to_string(presses[i] % 3 + 1);
    }
    return {t, false};
}

// ---------------------------------------------------------------------------
// Maze (breadth-first search over the rendered grid)
// ---------------------------------------------------------------------------

inline Solution maze_bfs(const GameState& state) {
    int side = state.board.at("side").get<int>();
    std::vector<std::string> grid;
    for (const auto& row : state.board.at("grid")) grid.push_back(row.get<std::string>());
    auto idx = [side](int r, int c) { return r * side + c; };
    std::vector<int> parent(static_cast<std::size_t>(side * side), -1);
    std::vector<char> via(static_cast<std::size_t>(side * side), 0);
    std::queue<std::pair<int, int>> q;
    q.push({1, 1});
    parent[static_cast<std::size_t>(idx(1, 1))] = idx(1, 1);
    while (!q.empty()) {
        auto [r, c] = q.front();
        q.pop();
        if (r == side - 2 && c == side - 2) break;
        for (const auto& d : games::kDirs) {
            int nr = r + d.dr, nc = c + d.dc;
            if (nr < 0 || nr >= side || nc < 0 || nc >= side) continue;
            if (grid[static_cast<std::size_t>(nr)][static_cast<std::size_t>(nc)] == '#') continue;
            if (parent[static_cast<std::size_t>(idx(nr, nc))] >= 0) continue;
            parent[static_cast<std::size_t>(idx(nr, nc))] = idx(r, c);
            via[static_cast<std::size_t>(idx(nr, nc))] = d.letter;
            q.push({nr, nc});
        }
    }
    int goal = idx(side - 2, side - 2);
    if (parent[static_cast<std::size_t>(goal)] < 0) throw Unsolvable("maze has no start->exit path");
    std::string path;
    for (int cur = goal; cur != idx(1, 1); cur = parent[static_cast<std::size_t>(cur)])
        path.push_back(via[static_cast<std::size_t>(cur)]);
    std::reverse(path.begin(), path.end());
    return {path, true};
}

// ---------------------------------------------------------------------------
// Sokoban (breadth-first search over (player, boxes) states)
// ---------------------------------------------------------------------------

inline Solution sokoban_bfs(const GameState& state, std::size_t max_expansions = 2000000) {
    games::SokobanBoard start = games::SokobanBoard::from_json(state.board);
    auto key = [](const games::SokobanBoard& b) {
        std::string k = std::to_string(b.player.first) + "," + std::to_string(b.player.second);
        for (auto [r, c] : b.boxes) k += ";" + std::to_string(r) + "," + std::to_string(c);
        return k;
    };
    auto solved = [](const games::SokobanBoard& b) {
        return b.boxes_on_goals() == static_cast<int>(b.boxes.size());
    };
    if (solved(start)) return {"", true};

    std::unordered_map<std::string, std::pair<std::string, char>> seen;  // key -> (parent key, move)
    std::deque<games::SokobanBoard> frontier{start};
    seen[key(start)] = {"", 0};
    std::size_t expanded = 0;
    while (!frontier.empty()) {
        games::SokobanBoard cur = frontier.front();
        frontier.pop_front();
        if (++expanded > max_expansions) throw Unsolvable("sokoban search budget exceeded");
        for (const auto& d : games::kDirs) {
            games::SokobanBoard next = cur;
            next.move(d);
            std::string k = key(next);
            if (seen.count(k)) continue;
            seen[k] = {key(cur), d.letter};
            if (solved(next)) {
                std::string moves;
                std::string walk = k;
                while (seen.at(walk).second != 0) {
                    moves.push_back(seen.at(walk).second);
                    walk = seen.at(walk).first;
                }
                std::reverse(moves.begin(), moves.end());
                return {moves, true};
            }
            frontier.push_back(next);
        }
    }
    throw Unsolvable("sokoban instance not solvable");
}

// ---------------------------------------------------------------------------
// 8-puzzle (breadth-first search; state space is 9!/2)
// ---------------------------------------------------------------------------

inline Solution puzzle8_bfs(const GameState& state) {
    std::array<int, 9> tiles{};
    for (int i = 0; i < 9; ++i) tiles[static_cast<std::size_t>(i)] = state.board.at("tiles").at(i).get<int>();
    auto encode = [](const std::array<int, 9>& t) {
        int code = 0;
        for (int v : t) code = code * 9 + v;
        return code;
    };
    const std::array<int, 9> goal = games::Puzzle8Game::kGoal;
    if (tiles == goal) return {"", true};
    std::unordered_map<int, std::pair<int, char>> seen;
    std::deque<std::array<int, 9>> frontier{tiles};
    seen[encode(tiles)] = {-1, 0};
    while (!frontier.empty()) {
        auto cur = frontier.front();
        frontier.pop_front();
        int blank = 0;
        for (int i = 0; i < 9; ++i)
            if (cur[static_cast<std::size_t>(i)] == 0) blank = i;
        for (const auto& d : games::kDirs) {
            int nr = blank / 3 + d.dr, nc = blank % 3 + d.dc;
            if (nr < 0 || nr >= 3 || nc < 0 || nc >= 3) continue;
            auto next = cur;
            std::swap(next[static_cast<std::size_t>(blank)], next[static_cast<std::size_t>(nr * 3 + nc)]);
            int code = encode(next);
            if (seen.count(code)) continue;
            seen[code] = {encode(cur), d.letter};
            if (next == goal) {
                std::string moves;
                int walk = code;
                while (seen.at(walk).second != 0) {
                    moves.push_back(seen.at(walk).second);
                    walk = seen.at(walk).first;
                }
                std::reverse(moves.begin(), moves.end());
                return {moves, true};
            }
            frontier.push_back(next);
        }
    }
    throw Unsolvable("8-puzzle instance not solvable (parity)");
}

// ---------------------------------------------------------------------------
// Sudoku
// ---------------------------------------------------------------------------

/// Completion count of the givens, clipped at `cap` (2 suffices to check
/// uniqueness). Contradictory givens give 0.
inline int sudoku_solution_count(const std::vector<int>& givens, int side, int cap = 2) {
    std::vector<int> grid = givens;
    // reject inconsistent givens up front: duplicates in a unit
    int box = side == 9 ? 3 : 2;
    for (int i = 0; i < side * side; ++i) {
        int v = grid[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        int r = i / side, c = i % side;
        for (int k = 0; k < side; ++k) {
            if (k != c && grid[static_cast<std::size_t>(r * side + k)] == v) return 0;
            if (k != r && grid[static_cast<std::size_t>(k * side + c)] == v) return 0;
        }
        int br = (r / box) * box, bc = (c / box) * box;
        for (int a = 0; a < box; ++a)
            for (int bcol = 0; bcol < box; ++bcol) {
                int j = (br + a) * side + bc + bcol;
                if (j != i && grid[static_cast<std::size_t>(j)] == v) return 0;
            }
    }
    return games::sudoku_detail::count_solutions(grid, side, cap);
}

/// The unique completion of a puzzle state (throws if none).
inline Solution sudoku_solution(const GameState& state) {
    int side = state.board.at("side").get<int>();
    std::vector<int> grid;
    for (const auto& v : state.board.at("givens")) grid.push_back(v.get<int>());
    std::vector<int> solution;
    if (games::sudoku_detail::count_solutions(grid, side, 1, &solution) < 1)
        throw Unsolvable("sudoku givens admit no completion");
    std::string t;
    for (int r = 0; r < side; ++r) {
        if (r) t += " ";
        for (int c = 0; c < side; ++c) t += static_cast<char>('0' + solution[static_cast<std::size_t>(r * side + c)]);
    }
    return {t, false};
}

// ---------------------------------------------------------------------------
// Eulerian path (Hierholzer)
// ---------------------------------------------------------------------------

inline Solution eulerian_path(const GameState& state) {
    int n = state.board.at("vertices").get<int>();
    std::vector<std::multiset<int>> adj(static_cast<std::size_t>(n));
    int edges = 0;
    for (const auto& e : state.board.at("edges")) {
        int u = e.at(0).get<std::string>()[0] - 'A';
        int v = e.at(1).get<std::string>()[0] - 'A';
        adj[static_cast<std::size_t>(u)].insert(v);
        adj[static_cast<std::size_t>(v)].insert(u);
        ++edges;
    }
    int start = -1;
    for (int v = 0; v < n; ++v)
        if (adj[static_cast<std::size_t>(v)].size() % 2) {
            start = v;
            break;
        }
    if (start < 0)
        for (int v = 0; v < n; ++v)
            if (!adj[static_cast<std::size_t>(v)].empty()) {
                start = v;
                break;
            }
    if (start < 0) throw Unsolvable("graph has no edges");

    std::vector<int> stack{start}, path;
    while (!stack.empty()) {
        int v = stack.back();
        auto& nbrs = adj[static_cast<std::size_t>(v)];
        if (nbrs.empty()) {
            path.push_back(v);
            stack.pop_back();
        } else {
            int u = *nbrs.begin();
            nbrs.erase(nbrs.begin());
            auto it = adj[static_cast<std::size_t>(u)].find(v);
            adj[static_cast<std::size_t>(u)].erase(it);
            stack.push_back(u);
        }
    }
    if (static_cast<int>(path.size()) != edges + 1)
        throw Unsolvable("graph is disconnected; no eulerian path");
    std::reverse(path.begin(), path.end());
    std::string t;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) t += " ";
        t += games::OneStrokeGame::label(path[i]);
    }
    return {t, false};
}

// ---------------------------------------------------------------------------
// Black White Copy (breadth-first search over op sequences)
// ---------------------------------------------------------------------------

inline Solution bwcopy_bfs(const GameState& state) {
    int n = state.board.at("side").get<int>();
    if (n > 4) throw Unsolvable("bwcopy oracle supports side <= 4");
    std::vector<std::string> target;
    for (const auto& row : state.board.at("target")) target.push_back(row.get<std::string>());

    auto pack = [n](const std::vector<std::string>& g) {
        std::uint32_t bits = 0;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == 'B')
                    bits |= 1u << (r * n + c);
        return bits;
    };
    std::vector<games::BWCopyGame::Op> ops;
    for (int i = 1; i <= n; ++i) ops.push_back({true, i});
    for (int i = 1; i < n; ++i) ops.push_back({false, i});

    std::uint32_t start = 0, goal = pack(target);
    if (start == goal) return {"", true};
    std::unordered_map<std::uint32_t, std::pair<std::uint32_t, int>> seen;
    std::deque<std::uint32_t> frontier{start};
    seen[start] = {0, -1};
    auto unpack = [n](std::uint32_t bits) {
        std::vector<std::string> g(static_cast<std::size_t>(n), std::string(static_cast<std::size_t>(n), 'W'));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (bits & (1u << (r * n + c)))
                    g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 'B';
        return g;
    };
    while (!frontier.empty()) {
        std::uint32_t cur = frontier.front();
        frontier.pop_front();
        for (std::size_t oi = 0; oi < ops.size(); ++oi) {
            auto g = unpack(cur);
            games::BWCopyGame::apply_op(g, ops[oi]);
            std::uint32_t next = pack(g);
            if (seen.count(next)) continue;
            seen[next] = {cur, static_cast<int>(oi)};
            if (next == goal) {
                std::vector<int> rev;
                std::uint32_t walk = next;
                while (seen.at(walk).second >= 0) {
                    rev.push_back(seen.at(walk).second);
                    walk = seen.at(walk).first;
                }
                std::reverse(rev.begin(), rev.end());
                std::string t;
                for (std::size_t i = 0; i < rev.size(); ++i) {
                    const auto& op = ops[static_cast<std::size_t>(rev[i])];
                    if (i) t += " ";
                    t += (op.is_toggle ? "toggle(" : "copy(") + std::to_string(op.row) + ")";
                }
                return {t, true};
            }
            frontier.push_back(next);
        }
    }
    throw Unsolvable("bwcopy target unreachable");
}

// ---------------------------------------------------------------------------
// Wordle candidate filtering
// ---------------------------------------------------------------------------

/// All pinned-list words consistent with the (guess, feedback) history under
/// the two-pass feedback rule. The secret is always a member.
inline std::vector<std::string> wordle_candidate_filter(
    const std::vector<std::pair<std::string, std::string>>& history) {
    std::vector<std::string> out;
    for (const auto& w : words::kFiveLetterWords) {
        std::string word(w);
        bool ok = true;
        for (const auto& [guess, fb] : history)
            if (games::wordle_feedback(word, guess) != fb) {
                ok = false;
                break;
            }
        if (ok) out.push_back(word);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dispatch by game (used by the CLI and the oracle agent)
// ---------------------------------------------------------------------------

inline bool has_full_solver(const std::string& game) {
    static const std::set<std::string> solvable = {
        "tower-of-hanoi", "light-out",       "sudoku",   "one-stroke-drawing",
        "maze",           "sokoban",         "8-puzzle", "black-white-copy"};
    return solvable.count(game) > 0;
}

/// Full-score transcript for a generated instance, where a solver exists.
inline Solution solve(const GameState& state) {
    const std::string& g = state.game;
    if (g == "tower-of-hanoi") return hanoi_optimal(state.board.at("disks").get<int>());
    if (g == "light-out") return lights_solution(state);
    if (g == "sudoku") return sudoku_solution(state);
    if (g == "one-stroke-drawing") return eulerian_path(state);
    if (g == "maze") return maze_bfs(state);
    if (g == "sokoban") return sokoban_bfs(state);
    if (g == "8-puzzle") return puzzle8_bfs(state);
    if (g == "black-white-copy") return bwcopy_bfs(state);
    throw Unsolvable("no oracle solver for game '" + g + "'");
}

}  // namespace gamegym::oracles

#pragma once

#include <algorithm>
#include <set>

#include "gamegym/games/common.hpp"

namespace gamegym::games {

/// One Stroke Drawing: trace a path that uses every edge of a multigraph
/// exactly once. Generation keeps the graph connected with 0 or 2 odd-degree
/// vertices so an Eulerian path always exists.
class OneStrokeGame final : public Game {
public:
    const GameInfo& info() const override {
        static const GameInfo info{
            "one-stroke-drawing",
            Dimension::MLR,
            EpochMode::Single,
            ScoreRule::Binary,
            {{"vertices", 3, 12, 6, "number of vertices"},
             {"extra_edges", 0, 10, 2, "edges added on top of the spanning tree"}},
        };
        return info;
    }

    void generate(GameState& state) const override {
        int n = state.params.at("vertices");
        int extra = state.params.at("extra_edges");
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            edges.emplace_back(static_cast<int>(state.rng.below(static_cast<std::uint64_t>(v))), v);
        for (int e = 0; e < extra; ++e) {
            int u = static_cast<int>(state.rng.below(static_cast<std::uint64_t>(n)));
            int v = static_cast<int>(state.rng.below(static_cast<std::uint64_t>(n)));
            if (u == v) continue;  // self-loops are skipped, not redrawn
            edges.emplace_back(u, v);
        }
        // Pair up odd-degree vertices until at most two remain.
        std::vector<int> degree(static_cast<std::size_t>(n), 0);
        for (auto [u, v] : edges) {
            degree[static_cast<std::size_t>(u)]++;
            degree[static_cast<std::size_t>(v)]++;
        }
        std::vector<int> odd;
        for (int v = 0; v < n; ++v)
            if (degree[static_cast<std::size_t>(v)] % 2) odd.push_back(v);
        while (odd.size() > 2) {
            std::size_t i = static_cast<std::size_t>(state.rng.below(odd.size()));
            int u = odd[i];
            odd.erase(odd.begin() + static_cast<std::ptrdiff_t>(i));
            std::size_t j = static_cast<std::size_t>(state.rng.below(odd.size()));
            int v = odd[j];
            odd.erase(odd.begin() + static_cast<std::ptrdiff_t>(j));
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        for (auto& [u, v] : edges)
            if (u > v) std::swap(u, v);
        std::sort(edges.begin(), edges.end());

        json je = json::array();
        for (auto [u, v] : edges)
            je.push_back(json::array({label(u), label(v)}));
        state.board = json{{"edges", je}, {"vertices", n}};
    }

    std::string render(const GameState& state) const override {
        const json& b = state.board;
        int n = b.at("vertices").get<int>();
        std::ostringstream os;
        os << "Vertices:";
        for (int v = 0; v < n; ++v) os << " " << label(v);
        os << "\nEdges (each listed edge must be traced exactly once; duplicates are distinct "
              "edges):\n";
        for (const auto& e : b.at("edges"))
            os << "  " << e.at(0).get<std::string>() << " - " << e.at(1).get<std::string>() << "\n";
        std::string rules =
            "Draw the figure in one stroke: give a walk that traverses every listed edge "
            "exactly once. Consecutive vertices in your walk must be joined by an unused edge.";
        std::string help = "Give the vertex sequence of your walk, e.g. A -> B -> C or A B C.";
        return compose_prompt("One Stroke Drawing", rules, state, os.str(), help);
    }

    StepResult step(GameState& state, const std::string& payload) const override {
        const json& b = state.board;
        int n = b.at("vertices").get<int>();
        std::vector<int> path;
        for (char raw : payload) {
            char c = static_cast<char>(std::toupper(static_cast<unsigned char>(raw)));
            if (c >= 'A' && c < 'A' + n) {
                path.push_back(c - 'A');
            } else if (c == ' ' || c == ',' || c == '-' || c == '>' || c == ';' || c == '\n' ||
                       c == '\r' || c == '\t') {
                continue;
            } else {
                return invalid_step("Unknown vertex label '" + std::string(1, raw) +
                                    "'. Use the listed vertex letters.");
            }
        }
        if (path.empty()) return invalid_step("Empty walk.");

        std::multiset<std::pair<int, int>> remaining;
        for (const auto& e : b.at("edges")) {
            int u = e.at(0).get<std::string>()[0] - 'A';
            int v = e.at(1).get<std::string>()[0] - 'A';
            remaining.insert({std::min(u, v), std::max(u, v)});
        }
        bool ok = true;
        for (std::size_t i = 0; i + 1 < path.size() && ok; ++i) {
            auto key = std::make_pair(std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1]));
            auto it = remaining.find(key);
            if (it == remaining.end()) ok = false;
            else remaining.erase(it);
        }
        ok = ok && remaining.empty();

        StepResult r;
        r.valid = true;
        r.done = true;
        r.score_delta = ok ? 1.0 : 0.0;
        r.feedback = ok ? "Every edge was traced exactly once."
                        : "The walk reuses an edge, skips an edge, or uses a non-edge.";
        return r;
    }

    static std::string label(int v) { return std::string(1, static_cast<char>('A' + v)); }
};

}  // namespace gamegym::games

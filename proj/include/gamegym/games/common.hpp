#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gamegym/core.hpp"

namespace gamegym::games {

struct Dir {
    int dr, dc;
    char letter;
};

inline constexpr std::array<Dir, 4> kDirs = {{
    {-1, 0, 'U'}, {1, 0, 'D'}, {0, -1, 'L'}, {0, 1, 'R'},
}};

inline std::optional<Dir> dir_from_letter(char c) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (const auto& d : kDirs)
        if (d.letter == c) return d;
    return std::nullopt;
}

/// Parses a move string such as "R R U" / "rruu" / "R,R,U,U" into directions.
/// Any non-separator, non-UDLR character fails the parse.
inline std::optional<std::vector<Dir>> parse_moves(const std::string& payload) {
    std::vector<Dir> out;
    for (char c : payload) {
        if (c == ' ' || c == ',' || c == ';' || c == '\t' || c == '\n' || c == '\r') continue;
        auto d = dir_from_letter(c);
        if (!d) return std::nullopt;
        out.push_back(*d);
    }
    return out;
}

/// Splits on whitespace/commas/semicolons, dropping empties.
inline std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ';') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

inline std::optional<int> parse_int(const std::string& s) {
    if (s.empty()) return std::nullopt;
    int v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        v = v * 10 + (c - '0');
        if (v > 1000000) return std::nullopt;
    }
    return v;
}

/// Assembles the standard prompt: rules, a status line, the rendering, and
/// the answer-format instruction every observation must carry.
inline std::string compose_prompt(const std::string& title, const std::string& rules,
                                  const GameState& state, const std::string& board_text,
                                  const std::string& action_help) {
    std::ostringstream os;
    os << "== " << title << " ==\n";
    os << rules << "\n\n";
    os << "Round " << state.round << ". Total score so far: " << state.cumulative_score << ".\n";
    os << board_text << "\n";
    os << action_help << "\n";
    os << kAnswerInstruction << "\n";
    return os.str();
}

inline StepResult invalid_step(const std::string& why) {
    StepResult r;
    r.valid = false;
    r.score_delta = 0.0;
    r.feedback = why;
    return r;
}

}  // namespace gamegym::games

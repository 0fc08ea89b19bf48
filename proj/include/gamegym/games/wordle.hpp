#pragma once

#include <algorithm>

#include "gamegym/games/common.hpp"
#include "gamegym/games/wordle_words.hpp"

namespace gamegym::games {

/// Standard two-pass Wordle feedback: greens first, then yellows consume the
/// remaining letter counts left to right; everything else is gray.
/// G = right letter right place, Y = right letter wrong place, X = absent.
inline std::string wordle_feedback(std::string_view secret, std::string_view guess) {
    std::string fb(5, 'X');
    std::array<int, 26> remaining{};
    for (int i = 0; i < 5; ++i) {
        if (guess[static_cast<std::size_t>(i)] == secret[static_cast<std::size_t>(i)])
            fb[static_cast<std::size_t>(i)] = 'G';
        else
            remaining[static_cast<std::size_t>(secret[static_cast<std::size_t>(i)] - 'a')]++;
    }
    for (int i = 0; i < 5; ++i) {
        if (fb[static_cast<std::size_t>(i)] == 'G') continue;
        int letter = guess[static_cast<std::size_t>(i)] - 'a';
        if (remaining[static_cast<std::size_t>(letter)] > 0) {
            fb[static_cast<std::size_t>(i)] = 'Y';
            remaining[static_cast<std::size_t>(letter)]--;
        }
    }
    return fb;
}

inline bool in_word_list(std::string_view w) {
    return std::binary_search(words::kFiveLetterWords.begin(), words::kFiveLetterWords.end(), w);
}

/// Wordle against the pinned 2,315-word list: six in-list guesses, exact
/// match scores 1.
class WordleGame final : public Game {
public:
    const GameInfo& info() const override {
        static const GameInfo info{
            "wordle", Dimension::PR, EpochMode::Multi, ScoreRule::Binary, {},
        };
        return info;
    }

    void generate(GameState& state) const override {
        std::string secret(words::kFiveLetterWords[static_cast<std::size_t>(
            state.rng.below(words::kFiveLetterWords.size()))]);
        state.board = json{{"guesses_left", 6}, {"history", json::array()}, {"secret", secret}};
    }

    std::string render(const GameState& state) const override {
        const json& b = state.board;
        std::ostringstream os;
        os << "Guesses left: " << b.at("guesses_left").get<int>() << "\n";
        if (b.at("history").empty()) {
            os << "No guesses yet.\n";
        } else {
            os << "Feedback so far (G = letter in correct position, Y = letter in the word but "
                  "elsewhere, X = letter not in the word; repeated letters are matched at most "
                  "as often as they occur in the secret):\n";
            for (const auto& h : b.at("history"))
                os << "  " << h.at(0).get<std::string>() << " -> " << h.at(1).get<std::string>()
                   << "\n";
        }
        std::string rules =
            "Guess the secret five-letter word within six valid guesses. Each guess must be a "
            "common English five-letter word; unknown words are rejected without using up a "
            "guess.";
        std::string help = "Give one five-letter word.";
        return compose_prompt("Wordle", rules, state, os.str(), help);
    }

    StepResult step(GameState& state, const std::string& payload) const override {
        std::string guess = to_lower(trim(payload));
        if (guess.size() != 5 ||
            guess.find_first_not_of("abcdefghijklmnopqrstuvwxyz") != std::string::npos)
            return invalid_step("Guesses must be exactly five letters.");
        if (!in_word_list(guess))
            return invalid_step("'" + guess + "' is not in the accepted word list; the guess was "
                                "not consumed.");

        std::string secret = state.board.at("secret").get<std::string>();
        std::string fb = wordle_feedback(secret, guess);
        state.board["history"].push_back(json::array({guess, fb}));
        int left = state.board.at("guesses_left").get<int>() - 1;
        state.board["guesses_left"] = left;

        StepResult r;
        r.valid = true;
        if (guess == secret) {
            r.score_delta = 1.0;
            r.done = true;
            r.feedback = "Correct: the word was '" + secret + "'.";
        } else if (left == 0) {
            r.done = true;
            r.feedback = "Out of guesses. Feedback: " + fb;
        } else {
            r.feedback = "Feedback: " + fb;
        }
        return r;
    }
};

}  // namespace gamegym::games

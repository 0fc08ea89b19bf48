#pragma once

#include "gamegym/games/common.hpp"

namespace gamegym::games {

/// N-point: ten hands of a 21-style card game with a seed-drawn threshold
/// N in [15,30]. Cards are uniform 1..10. The dealer plays only after the
/// player stands, hitting while its sum is below N-3. One point per won hand.
class NPointGame final : public Game {
public:
    const GameInfo& info() const override {
        static const GameInfo info{
            "n-point", Dimension::SR, EpochMode::Multi, ScoreRule::Cumulative, {},
        };
        return info;
    }

    void generate(GameState& state) const override {
        int threshold = 15 + static_cast<int>(state.rng.below(16));
        state.board = json{{"dealer_sum", 0},   {"hands_left", 10}, {"last_hand", ""},
                           {"player_sum", 0},   {"threshold", threshold}, {"wins", 0}};
        deal_new_hand(state);
    }

    std::string render(const GameState& state) const override {
        const json& b = state.board;
        std::ostringstream os;
        int n = b.at("threshold").get<int>();
        os << "Threshold N = " << n << " (a sum above N busts).\n";
        os << "Hands remaining: " << b.at("hands_left").get<int>() << " of 10.\n";
        os << "Hands won so far: " << b.at("wins").get<int>() << ".\n";
        std::string last = b.at("last_hand").get<std::string>();
        if (!last.empty()) os << "Previous hand: " << last << "\n";
        os << "Your current sum: " << b.at("player_sum").get<int>() << ".\n";
        os << "The dealer draws only after you stand, and keeps hitting while its sum is below "
           << (n - 3) << ".";
        std::string rules =
            "Each hand you start with one card (cards are worth 1..10). 'hit' draws another "
            "card; if your sum exceeds N you bust and lose the hand. 'stand' lets the dealer "
            "play; you win the hand if the dealer busts or your sum is strictly higher. Ten "
            "hands are played in total; each win is worth one point.";
        std::string help = "Give one action: hit or stand.";
        return compose_prompt("N-Point", rules, state, os.str(), help);
    }

    StepResult step(GameState& state, const std::string& payload) const override {
        std::string t = to_lower(trim(payload));
        if (t != "hit" && t != "stand")
            return invalid_step("Give exactly one action: hit or stand.");
        json& b = state.board;
        int n = b.at("threshold").get<int>();
        int player = b.at("player_sum").get<int>();

        StepResult r;
        r.valid = true;
        if (t == "hit") {
            int card = draw(state);
            player += card;
            b["player_sum"] = player;
            if (player > n) {
                b["last_hand"] = "you drew " + std::to_string(card) + " and busted at " +
                                 std::to_string(player) + " (lost)";
                r.feedback = "You drew " + std::to_string(card) + " and busted at " +
                             std::to_string(player) + ".";
                finish_hand(state, r);
            } else {
                r.feedback = "You drew " + std::to_string(card) + "; your sum is " +
                             std::to_string(player) + ".";
            }
            return r;
        }

        // stand: dealer plays out, then the hand is compared
        int dealer = 0;
        while (dealer < n - 3) dealer += draw(state);
        b["dealer_sum"] = dealer;
        bool win = dealer > n || player > dealer;
        std::string outcome = "you stood at " + std::to_string(player) + ", dealer finished at " +
                              std::to_string(dealer) + (dealer > n ? " (dealer bust)" : "") +
                              (win ? " - you won" : " - you lost");
        b["last_hand"] = outcome;
        if (win) {
            b["wins"] = b.at("wins").get<int>() + 1;
            r.score_delta = 1.0;
        }
        r.feedback = "Hand over: " + outcome + ".";
        finish_hand(state, r);
        return r;
    }

private:
    static int draw(GameState& state) { return 1 + static_cast<int>(state.rng.below(10)); }

    /// Ends the current hand; deals the next one or finishes the episode.
    static void finish_hand(GameState& state, StepResult& r) {
        json& b = state.board;
        int left = b.at("hands_left").get<int>() - 1;
        b["hands_left"] = left;
        if (left == 0) {
            r.done = true;
            r.feedback += " That was the last hand.";
        } else {
            deal_new_hand(state);
        }
    }

    static void deal_new_hand(GameState& state) {
        state.board["player_sum"] = draw(state);
        state.board["dealer_sum"] = 0;
    }
};

}  // namespace gamegym::games

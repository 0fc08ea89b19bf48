#pragma once

#include "gamegym/games/common.hpp"

namespace gamegym::games {

/// Trust Evolution: ten rounds against each of four hidden opponents in a
/// fixed order (always-cooperate, always-cheat, copycat, grudger).
/// Round payoffs for (you, opponent): C/C +2/+2, cheat-vs-C +3/-1,
/// C-vs-cheat -1/+3, cheat/cheat 0/0. Your coin total is the score.
class TrustGame final : public Game {
public:
    static constexpr int kRoundsPerMatch = 10;
    static constexpr int kMatches = 4;

    const GameInfo& info() const override {
        static const GameInfo info{
            "trust-evolution", Dimension::SR, EpochMode::Multi, ScoreRule::Cumulative, {},
        };
        return info;
    }

    void generate(GameState& state) const override {
        state.board = json{{"grudged", false},
                           {"history", json::array()},
                           {"match", 0},
                           {"player_prev", ""},
                           {"round_in_match", 0}};
    }

    std::string render(const GameState& state) const override {
        const json& b = state.board;
        std::ostringstream os;
        int match = b.at("match").get<int>();
        os << "Match " << (match + 1) << " of " << kMatches << ", round "
           << (b.at("round_in_match").get<int>() + 1) << " of " << kRoundsPerMatch << ".\n";
        os << "Your coins so far: " << state.cumulative_score << ".\n";
        const json& hist = b.at("history");
        if (hist.empty()) {
            os << "No rounds played against this opponent yet.";
        } else {
            os << "Rounds against the current opponent:\n";
            for (const auto& h : hist)
                os << "  you " << h.at(0).get<std::string>() << ", opponent "
                   << h.at(1).get<std::string>() << " -> you " << h.at(2).get<int>() << "\n";
        }
        std::string rules =
            "You play repeated trust rounds against a series of opponents with fixed but "
            "hidden strategies; a new opponent arrives every " +
            std::to_string(kRoundsPerMatch) +
            " rounds and remembers nothing from earlier matches. Payoffs per round: both "
            "cooperate +2 each; you cheat a cooperator +3 for you, -1 for them; you cooperate "
            "against a cheat -1 for you, +3 for them; both cheat 0 each. Maximize your coins.";
        std::string help = "Give one action: cooperate or cheat.";
        return compose_prompt("Trust Evolution", rules, state, os.str(), help);
    }

    StepResult step(GameState& state, const std::string& payload) const override {
        std::string t = to_lower(trim(payload));
        if (t != "cooperate" && t != "cheat")
            return invalid_step("Give exactly one action: cooperate or cheat.");
        json& b = state.board;
        int match = b.at("match").get<int>();
        int round = b.at("round_in_match").get<int>();

        bool player_coop = t == "cooperate";
        bool opp_coop = opponent_cooperates(match, round, b);

        int player_pay = 0;
        if (player_coop && opp_coop) player_pay = 2;
        else if (!player_coop && opp_coop) player_pay = 3;
        else if (player_coop && !opp_coop) player_pay = -1;

        b["history"].push_back(json::array(
            {t, opp_coop ? "cooperate" : "cheat", player_pay}));
        b["player_prev"] = t;
        if (!player_coop) b["grudged"] = true;

        StepResult r;
        r.valid = true;
        r.score_delta = player_pay;
        r.feedback = "Opponent chose to " + std::string(opp_coop ? "cooperate" : "cheat") +
                     "; you " + (player_pay >= 0 ? "gained " : "lost ") +
                     std::to_string(player_pay >= 0 ? player_pay : -player_pay) + " coin(s).";

        if (round + 1 == kRoundsPerMatch) {
            if (match + 1 == kMatches) {
                r.done = true;
                r.feedback += " All matches are finished.";
            } else {
                b["match"] = match + 1;
                b["round_in_match"] = 0;
                b["history"] = json::array();
                b["player_prev"] = "";
                b["grudged"] = false;
                r.feedback += " A new opponent sits down.";
            }
        } else {
            b["round_in_match"] = round + 1;
        }
        return r;
    }

private:
    static bool opponent_cooperates(int match, int round, const json& board) {
        switch (match) {
            case 0: return true;   // always-cooperate
            case 1: return false;  // always-cheat
            case 2:                // copycat: mirrors your previous move
                return round == 0 || board.at("player_prev").get<std::string>() == "cooperate";
            default:               // grudger: cooperates until cheated once
                return !board.at("grudged").get<bool>();
        }
    }
};

}  // namespace gamegym::games

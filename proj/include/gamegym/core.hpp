#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gamegym/rng.hpp"
#include "json.hpp"

namespace gamegym {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Error with a stable machine-readable code, mirrored on the wire.
class GymError : public std::runtime_error {
public:
    GymError(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline GymError unknown_game_error(const std::string& name) {
    return GymError("unknown_game", "no game registered under name '" + name + "'");
}
inline GymError invalid_parameter_error(const std::string& detail) {
    return GymError("invalid_parameter", detail);
}
inline GymError session_not_found_error(const std::string& id) {
    return GymError("session_not_found", "no live session '" + id + "'");
}
inline GymError episode_finished_error() {
    return GymError("episode_finished", "episode is finished; no further interaction allowed");
}

// ---------------------------------------------------------------------------
// Game identity
// ---------------------------------------------------------------------------

enum class Dimension { MLR, CIR, PR, SGR, SR };
enum class EpochMode { Single, Multi };
enum class ScoreRule { Binary, Proportional, Cumulative };

inline std::string to_string(Dimension d) {
    switch (d) {
        case Dimension::MLR: return "MLR";
        case Dimension::CIR: return "CIR";
        case Dimension::PR: return "PR";
        case Dimension::SGR: return "SGR";
        case Dimension::SR: return "SR";
    }
    return "?";
}

inline std::optional<Dimension> parse_dimension(std::string_view s) {
    if (s == "MLR") return Dimension::MLR;
    if (s == "CIR") return Dimension::CIR;
    if (s == "PR") return Dimension::PR;
    if (s == "SGR") return Dimension::SGR;
    if (s == "SR") return Dimension::SR;
    return std::nullopt;
}

inline std::string to_string(ScoreRule r) {
    switch (r) {
        case ScoreRule::Binary: return "binary";
        case ScoreRule::Proportional: return "proportional";
        case ScoreRule::Cumulative: return "cumulative";
    }
    return "?";
}

inline std::string to_string(EpochMode m) {
    return m == EpochMode::Single ? "single" : "multi";
}

/// One named integer difficulty knob with its legal range and default.
struct ParamSpec {
    std::string name;
    int min_value;
    int max_value;
    int default_value;
    std::string doc;
};

/// Resolved difficulty parameters (name -> value). std::map keeps keys sorted
/// so serialized states are canonical.
using Params = std::map<std::string, int>;

struct GameInfo {
    std::string name;
    Dimension dimension;
    EpochMode epoch_mode;
    ScoreRule score_rule;
    std::vector<ParamSpec> params;
};

/// Hard ceiling on interaction rounds per episode; a capped episode keeps
/// whatever score it has accumulated.
inline constexpr int kMaxRounds = 100;

// ---------------------------------------------------------------------------
// Session state and step outcome
// ---------------------------------------------------------------------------

struct StepResult {
    double score_delta = 0.0;
    double total_score = 0.0;
    bool done = false;
    std::string feedback;
    bool valid = false;

    json to_json() const {
        return json{{"score_delta", score_delta}, {"total_score", total_score},
                    {"done", done},               {"feedback", feedback},
                    {"valid", valid}};
    }
    static StepResult from_json(const json& j) {
        StepResult r;
        r.score_delta = j.at("score_delta").get<double>();
        r.total_score = j.at("total_score").get<double>();
        r.done = j.at("done").get<bool>();
        r.feedback = j.at("feedback").get<std::string>();
        r.valid = j.at("valid").get<bool>();
        return r;
    }
};

struct Observation {
    std::string prompt_text;
    int round = 0;
};

/// Full serialized state of one game session. `board` holds the
/// game-specific payload; everything round-trips through canonical JSON
/// (sorted keys) so byte-identity checks are meaningful.
struct GameState {
    std::string game;
    std::uint64_t seed = 0;
    int round = 0;
    json board;
    Params params;
    double cumulative_score = 0.0;
    bool done = false;
    RngStream rng;

    json to_json() const {
        json p = json::object();
        for (const auto& [k, v] : params) p[k] = v;
        return json{{"board", board},
                    {"cumulative_score", cumulative_score},
                    {"done", done},
                    {"game", game},
                    {"params", p},
                    {"rng", to_hex(rng.state)},
                    {"round", round},
                    {"seed", seed}};
    }

    static GameState from_json(const json& j) {
        GameState s;
        s.game = j.at("game").get<std::string>();
        s.seed = j.at("seed").get<std::uint64_t>();
        s.round = j.at("round").get<int>();
        s.board = j.at("board");
        for (const auto& [k, v] : j.at("params").items())
            s.params[k] = v.get<int>();
        s.cumulative_score = j.at("cumulative_score").get<double>();
        s.done = j.at("done").get<bool>();
        s.rng.state = from_hex(j.at("rng").get<std::string>());
        return s;
    }

    std::string serialize() const { return to_json().dump(); }
};

// ---------------------------------------------------------------------------
// Answer extraction
// ---------------------------------------------------------------------------

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

/// Extracts the action payload after the LAST case-insensitive `Answer:`
/// marker. The payload runs to the first blank line (or end of text) and is
/// whitespace-trimmed. Returns nullopt when no marker is present.
inline std::optional<std::string> extract_answer(std::string_view text) {
    static constexpr std::string_view marker = "answer:";
    std::string lowered = to_lower(text);
    std::size_t pos = lowered.rfind(marker);
    if (pos == std::string::npos) return std::nullopt;
    std::size_t start = pos + marker.size();
    std::string_view rest = text.substr(start);
    // Cut at the first blank line so trailing prose does not leak in.
    std::size_t cut = rest.size();
    for (std::size_t i = 0; i + 1 < rest.size(); ++i) {
        if (rest[i] != '\n') continue;
        std::size_t j = i + 1;
        while (j < rest.size() && (rest[j] == ' ' || rest[j] == '\t' || rest[j] == '\r')) ++j;
        if (j < rest.size() && rest[j] == '\n') {
            cut = i;
            break;
        }
    }
    return trim(rest.substr(0, cut));
}

/// The format line every prompt must carry (checked by an invariant test).
inline constexpr std::string_view kAnswerInstruction =
    "End your reply with exactly one line of the form:\nAnswer: <your action>";

// ---------------------------------------------------------------------------
// Game interface and registry
// ---------------------------------------------------------------------------

/// The contract every game implements: deterministic instance generation,
/// pure board rendering, and one state-transition step.
///
/// `step` receives the extracted answer payload (never the raw reply), must
/// leave the board untouched when it reports valid=false, and sets `done`
/// only for game-semantic termination. Round bookkeeping, score accumulation
/// and the round cap live in the session layer.
class Game {
public:
    virtual ~Game() = default;
    virtual const GameInfo& info() const = 0;
    virtual void generate(GameState& state) const = 0;
    virtual std::string render(const GameState& state) const = 0;
    virtual StepResult step(GameState& state, const std::string& payload) const = 0;
};

class GameRegistry {
public:
    void add(std::unique_ptr<Game> game) {
        const std::string& name = game->info().name;
        games_[name] = std::move(game);
        order_.push_back(name);
    }

    const Game* find(const std::string& name) const {
        auto it = games_.find(name);
        return it == games_.end() ? nullptr : it->second.get();
    }

    const Game& require(const std::string& name) const {
        const Game* g = find(name);
        if (!g) throw unknown_game_error(name);
        return *g;
    }

    std::vector<const Game*> all() const {
        std::vector<const Game*> out;
        out.reserve(order_.size());
        for (const auto& n : order_) out.push_back(games_.at(n).get());
        return out;
    }

private:
    std::map<std::string, std::unique_ptr<Game>> games_;
    std::vector<std::string> order_;
};

/// Validates caller-supplied difficulty against the game's declared specs and
/// fills in defaults. Unknown names and out-of-range values are rejected.
inline Params resolve_params(const GameInfo& info, const Params& requested) {
    Params out;
    for (const auto& spec : info.params) out[spec.name] = spec.default_value;
    for (const auto& [k, v] : requested) {
        auto it = out.find(k);
        if (it == out.end())
            throw invalid_parameter_error("game '" + info.name + "' has no parameter '" + k + "'");
        const ParamSpec* spec = nullptr;
        for (const auto& s : info.params)
            if (s.name == k) spec = &s;
        if (v < spec->min_value || v > spec->max_value)
            throw invalid_parameter_error("parameter '" + k + "'=" + std::to_string(v) +
                                          " outside [" + std::to_string(spec->min_value) + "," +
                                          std::to_string(spec->max_value) + "]");
        it->second = v;
    }
    return out;
}

/// Builds the initial state for (game, seed, difficulty). Pure: equal inputs
/// give byte-identical states.
inline GameState make_initial_state(const Game& game, std::uint64_t seed, const Params& requested) {
    if (seed < 1) throw invalid_parameter_error("seed must be >= 1");
    GameState s;
    s.game = game.info().name;
    s.seed = seed;
    s.params = resolve_params(game.info(), requested);
    s.rng = RngStream::derive(seed, s.game, 0);
    game.generate(s);
    return s;
}

/// Applies one action to a state: extracts the answer payload, delegates to
/// the game, and maintains round/score/done bookkeeping. This is the single
/// write path used by both the in-process API and the HTTP service.
inline StepResult apply_step(const Game& game, GameState& state, const std::string& action_text) {
    if (state.done) throw episode_finished_error();
    StepResult result;
    std::optional<std::string> payload = extract_answer(action_text);
    if (!payload) {
        result.valid = false;
        result.feedback =
            "Could not find an 'Answer:' marker. End your reply with a line of the "
            "form 'Answer: <your action>'.";
    } else {
        result = game.step(state, *payload);
    }
    state.round += 1;
    if (result.valid && game.info().epoch_mode == EpochMode::Single) result.done = true;
    state.cumulative_score += result.score_delta;
    if (state.round >= kMaxRounds) result.done = true;
    result.total_score = state.cumulative_score;
    state.done = result.done;
    return result;
}

}  // namespace gamegym

#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <thread>

#include "gamegym/oracles.hpp"
#include "gamegym/scoring.hpp"
#include "gamegym/session.hpp"
#include "httplib.h"

namespace gamegym::harness {

struct TransportError : std::runtime_error {
    explicit TransportError(const std::string& what) : std::runtime_error(what) {}
};

/// Whitespace-token count: the model-agnostic length proxy recorded per
/// response.
inline int token_count(const std::string& text) {
    int n = 0;
    bool in_token = false;
    for (char c : text) {
        bool ws = std::isspace(static_cast<unsigned char>(c));
        if (!ws && !in_token) ++n;
        in_token = !ws;
    }
    return n;
}

/// Extracts the payload after the last `Answer:` marker (shared rule with
/// the environment, so both sides agree on validity).
inline std::optional<std::string> parse_action(const std::string& response_text) {
    return extract_answer(response_text);
}

// ---------------------------------------------------------------------------
// Environment clients (in-process and HTTP) with one interface
// ---------------------------------------------------------------------------

struct GenerateResult {
    std::string session_id;
    std::string state_json;
};

class EnvClient {
public:
    virtual ~EnvClient() = default;
    virtual GenerateResult generate(const std::string& game, std::uint64_t seed,
                                    const Params& difficulty, const json& model_info) = 0;
    virtual Observation print_board(const std::string& session_id) = 0;
    virtual StepResult verify(const std::string& session_id, const std::string& action) = 0;
    /// Live state snapshot where the transport allows it (in-process only).
    virtual std::optional<GameState> fetch_state(const std::string& session_id) {
        (void)session_id;
        return std::nullopt;
    }
};

class InProcessEnv final : public EnvClient {
public:
    explicit InProcessEnv(SessionManager& sessions) : sessions_(sessions) {}

    GenerateResult generate(const std::string& game, std::uint64_t seed, const Params& difficulty,
                            const json& model_info) override {
        auto [id, state] = sessions_.create_session(game, seed, difficulty, model_info);
        return {id, state.serialize()};
    }
    Observation print_board(const std::string& session_id) override {
        return sessions_.render_observation(session_id);
    }
    StepResult verify(const std::string& session_id, const std::string& action) override {
        return sessions_.step(session_id, action);
    }
    std::optional<GameState> fetch_state(const std::string& session_id) override {
        return sessions_.state(session_id);
    }

private:
    SessionManager& sessions_;
};

class HttpEnv final : public EnvClient {
public:
    explicit HttpEnv(const std::string& base_url) : client_(base_url.c_str()) {
        client_.set_connection_timeout(10, 0);
        client_.set_read_timeout(120, 0);
    }

    GenerateResult generate(const std::string& game, std::uint64_t seed, const Params& difficulty,
                            const json& model_info) override {
        json diff = json::object();
        for (const auto& [k, v] : difficulty) diff[k] = v;
        json body{{"game", game}, {"seed", seed}, {"difficulty", diff}, {"model_info", model_info}};
        json out = post("/generate", body);
        return {out.at("session_id").get<std::string>(), out.at("state").get<std::string>()};
    }
    Observation print_board(const std::string& session_id) override {
        json out = post("/print_board", json{{"session_id", session_id}});
        return Observation{out.at("prompt").get<std::string>(), out.at("round").get<int>()};
    }
    StepResult verify(const std::string& session_id, const std::string& action) override {
        json out = post("/verify", json{{"session_id", session_id}, {"action", action}});
        return StepResult::from_json(out);
    }

private:
    json post(const std::string& path, const json& body) {
        auto res = client_.Post(path.c_str(), body.dump(), "application/json");
        if (!res) throw TransportError("no response from environment service at " + path);
        json out = json::parse(res->body, nullptr, false);
        if (out.is_discarded())
            throw TransportError("malformed response body from " + path);
        if (res->status != 200) {
            std::string code = out.contains("error") ? out.at("error").get<std::string>()
                                                     : "http_" + std::to_string(res->status);
            std::string detail = out.contains("detail") ? out.at("detail").get<std::string>() : "";
            throw GymError(code, detail.empty() ? code : detail);
        }
        return out;
    }

    httplib::Client client_;
};

// ---------------------------------------------------------------------------
// Model endpoint client (OpenAI-style chat completions)
// ---------------------------------------------------------------------------

struct ModelEndpoint {
    std::string base_url;
    std::string api_key_env;  // env var holding the bearer token; may be empty
    std::string model;
    std::string path = "/v1/chat/completions";
    int timeout_sec = 120;
    int max_retries = 3;
    int backoff_ms = 500;
};

struct ChatResponse {
    std::string text;
    int completion_tokens = -1;  // from usage when the endpoint reports it
};

/// One chat-completion round trip: system + user message, default sampling
/// parameters left untouched. Retries transient failures with exponential
/// backoff, then throws TransportError.
inline ChatResponse chat_complete(const ModelEndpoint& endpoint, const std::string& system_text,
                                  const std::string& user_text) {
    httplib::Client client(endpoint.base_url.c_str());
    client.set_connection_timeout(endpoint.timeout_sec, 0);
    client.set_read_timeout(endpoint.timeout_sec, 0);
    client.set_write_timeout(endpoint.timeout_sec, 0);

    httplib::Headers headers;
    if (!endpoint.api_key_env.empty()) {
        if (const char* key = std::getenv(endpoint.api_key_env.c_str()))
            headers.emplace("Authorization", std::string("Bearer ") + key);
    }
    json body{{"model", endpoint.model},
              {"messages", json::array({json{{"role", "system"}, {"content", system_text}},
                                        json{{"role", "user"}, {"content", user_text}}})}};
    std::string payload = body.dump();

    std::string last_error;
    for (int attempt = 0; attempt <= endpoint.max_retries; ++attempt) {
        if (attempt > 0)
            std::this_thread::sleep_for(
                std::chrono::milliseconds(endpoint.backoff_ms * (1 << (attempt - 1))));
        auto res = client.Post(endpoint.path.c_str(), headers, payload, "application/json");
        if (!res) {
            last_error = "connection failure";
            continue;
        }
        if (res->status < 200 || res->status >= 300) {
            last_error = "http status " + std::to_string(res->status);
            continue;
        }
        json out = json::parse(res->body, nullptr, false);
        if (out.is_discarded() || !out.contains("choices") || out.at("choices").empty()) {
            last_error = "malformed completion body";
            continue;
        }
        ChatResponse reply;
        reply.text = out.at("choices").at(0).at("message").at("content").get<std::string>();
        if (out.contains("usage") && out.at("usage").contains("completion_tokens"))
            reply.completion_tokens = out.at("usage").at("completion_tokens").get<int>();
        return reply;
    }
    throw TransportError("model endpoint failed after " + std::to_string(endpoint.max_retries + 1) +
                         " attempts: " + last_error);
}

// ---------------------------------------------------------------------------
// Prompt assembly (zero-shot; optional paradigm bans)
// ---------------------------------------------------------------------------

inline const std::map<std::string, std::string>& paradigm_ban_clauses() {
    static const std::map<std::string, std::string> clauses = {
        {"code", "Do not write or simulate code."},
        {"math", "Do not use algebraic equations or formal mathematical derivations."},
        {"algorithm", "Do not invoke named textbook algorithms or describe your approach as one."},
        {"natural-language",
         "Do not reason in free-form natural-language prose; keep any working steps symbolic and "
         "minimal."},
    };
    return clauses;
}

inline std::string system_prompt(const std::set<std::string>& paradigm_ban) {
    std::string text =
        "You are playing a text game. Read the rules carefully, reason about the current board, "
        "and reply with a single action in the requested format.";
    for (const auto& ban : paradigm_ban) {
        auto it = paradigm_ban_clauses().find(ban);
        if (it == paradigm_ban_clauses().end())
            throw invalid_parameter_error("unknown paradigm ban '" + ban + "'");
        text += " " + it->second;
    }
    return text;
}

// ---------------------------------------------------------------------------
// Agents
// ---------------------------------------------------------------------------

class Agent {
public:
    virtual ~Agent() = default;
    /// Called once before the episode loop; `state_fetch` may return nullopt
    /// on transports that cannot expose live state.
    virtual void begin_episode(const std::string& game, std::uint64_t seed,
                               std::function<std::optional<GameState>()> state_fetch) {
        (void)game;
        (void)seed;
        (void)state_fetch;
    }
    virtual std::string respond(const std::string& prompt) = 0;
};

/// Perfect player for games with a full solver: submits the oracle
/// transcript as its single answer.
class OracleAgent final : public Agent {
public:
    void begin_episode(const std::string& game, std::uint64_t seed,
                       std::function<std::optional<GameState>()> state_fetch) override {
        (void)seed;
        game_ = game;
        state_fetch_ = std::move(state_fetch);
    }
    std::string respond(const std::string&) override {
        auto state = state_fetch_();
        if (!state) throw TransportError("oracle agent needs live state access");
        oracles::Solution s = oracles::solve(*state);
        return "Answer: " + s.transcript;
    }

private:
    std::string game_;
    std::function<std::optional<GameState>()> state_fetch_;
};

/// Seeded random baseline: grammatically plausible but unguided actions.
class RandomAgent final : public Agent {
public:
    void begin_episode(const std::string& game, std::uint64_t seed,
                       std::function<std::optional<GameState>()>) override {
        game_ = game;
        rng_ = RngStream::derive(seed, game + "/random-agent", 7);
    }

    std::string respond(const std::string&) override {
        return "Answer: " + random_action();
    }

private:
    std::string random_action() {
        static const char* dirs = "UDLR";
        if (game_ == "maze" || game_ == "sokoban" || game_ == "8-puzzle") {
            std::string s;
            int len = 8 + static_cast<int>(rng_.below(25));
            for (int i = 0; i < len; ++i) s.push_back(dirs[rng_.below(4)]);
            return s;
        }
        if (game_ == "2048" || game_ == "snake") return std::string(1, dirs[rng_.below(4)]);
        if (game_ == "tower-of-hanoi") {
            std::string s;
            int len = 4 + static_cast<int>(rng_.below(8));
            for (int i = 0; i < len; ++i) {
                if (i) s += ", ";
                char a = static_cast<char>('A' + rng_.below(3));
                char b = static_cast<char>('A' + rng_.below(3));
                s += std::string(1, a) + "->" + std::string(1, b);
            }
            return s;
        }
        if (game_ == "light-out") {
            std::string s;
            int len = 1 + static_cast<int>(rng_.below(5));
            for (int i = 0; i < len; ++i) {
                if (i) s += " ";
                s += std::to_string(1 + rng_.below(3)) + "," + std::to_string(1 + rng_.below(3));
            }
            return s;
        }
        if (game_ == "sudoku") {
            // a 4x4 guess: random digits (board size unknown to the baseline)
            std::string s;
            for (int i = 0; i < 16; ++i) {
                if (i) s += " ";
                s += std::to_string(1 + rng_.below(4));
            }
            return s;
        }
        if (game_ == "one-stroke-drawing") {
            std::string s;
            int len = 3 + static_cast<int>(rng_.below(8));
            for (int i = 0; i < len; ++i) {
                if (i) s += " ";
                s += std::string(1, static_cast<char>('A' + rng_.below(6)));
            }
            return s;
        }
        if (game_ == "wordle")
            return std::string(
                words::kFiveLetterWords[static_cast<std::size_t>(rng_.below(words::kFiveLetterWords.size()))]);
        if (game_ == "n-point") return rng_.chance(1, 2) ? "hit" : "stand";
        if (game_ == "trust-evolution") return rng_.chance(1, 2) ? "cooperate" : "cheat";
        if (game_ == "minesweeper")
            return "reveal " + std::to_string(1 + rng_.below(9)) + "," +
                   std::to_string(1 + rng_.below(9));
        if (game_ == "black-white-copy") {
            std::string s;
            int len = 1 + static_cast<int>(rng_.below(6));
            for (int i = 0; i < len; ++i) {
                if (i) s += " ";
                bool tog = rng_.chance(1, 2);
                s += (tog ? "toggle(" : "copy(") + std::to_string(1 + rng_.below(tog ? 3 : 2)) + ")";
            }
            return s;
        }
        return std::string(1, dirs[rng_.below(4)]);
    }

    std::string game_;
    RngStream rng_;
};

/// Replays a fixed reply sequence, cycling when exhausted.
class ScriptAgent final : public Agent {
public:
    explicit ScriptAgent(std::vector<std::string> replies) : replies_(std::move(replies)) {}
    void begin_episode(const std::string&, std::uint64_t,
                       std::function<std::optional<GameState>()>) override {
        next_ = 0;
    }
    std::string respond(const std::string&) override {
        const std::string& r = replies_[next_ % replies_.size()];
        ++next_;
        return "Answer: " + r;
    }

private:
    std::vector<std::string> replies_;
    std::size_t next_ = 0;
};

/// N-point policy "hit below N-2, then stand", reading N and the current sum
/// from the prompt.
class NPointStandAgent final : public Agent {
public:
    std::string respond(const std::string& prompt) override {
        int n = find_int_after(prompt, "Threshold N = ");
        int sum = find_int_after(prompt, "Your current sum: ");
        return (sum >= n - 2) ? "Answer: stand" : "Answer: hit";
    }

    static int find_int_after(const std::string& text, const std::string& marker) {
        std::size_t pos = text.find(marker);
        if (pos == std::string::npos) return 0;
        pos += marker.size();
        int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        return v;
    }
};

/// Remote model driven through chat completions.
class ChatAgent final : public Agent {
public:
    ChatAgent(ModelEndpoint endpoint, std::set<std::string> paradigm_ban)
        : endpoint_(std::move(endpoint)), system_(system_prompt(paradigm_ban)) {}
    std::string respond(const std::string& prompt) override {
        return chat_complete(endpoint_, system_, prompt).text;
    }

private:
    ModelEndpoint endpoint_;
    std::string system_;
};

using AgentFactory = std::function<std::unique_ptr<Agent>()>;

/// Factory for the built-in scripted agents (the CLI's --agent choices).
inline AgentFactory scripted_agent_factory(const std::string& name) {
    if (name == "oracle") return [] { return std::make_unique<OracleAgent>(); };
    if (name == "random") return [] { return std::make_unique<RandomAgent>(); };
    if (name == "npoint-stand") return [] { return std::make_unique<NPointStandAgent>(); };
    throw invalid_parameter_error("unknown scripted agent '" + name + "'");
}

// ---------------------------------------------------------------------------
// Episodes
// ---------------------------------------------------------------------------

struct TranscriptEntry {
    std::string prompt;
    std::string response;
    std::string action;  // parsed payload; empty when no marker was found
    StepResult result;
};

struct EpisodeRecord {
    std::string model;
    std::string game;
    std::uint64_t seed = 0;
    std::vector<TranscriptEntry> transcript;
    double raw_score = 0.0;
    std::vector<int> response_lengths;
    long wall_time_ms = 0;
    bool errored = false;
    std::string error;

    std::string key() const { return model + "|" + game + "|" + std::to_string(seed); }

    json to_json() const {
        json t = json::array();
        for (const auto& e : transcript)
            t.push_back(json{{"action", e.action},
                             {"prompt", e.prompt},
                             {"response", e.response},
                             {"result", e.result.to_json()}});
        return json{{"error", error},
                    {"errored", errored},
                    {"game", game},
                    {"model", model},
                    {"raw_score", raw_score},
                    {"response_lengths", response_lengths},
                    {"seed", seed},
                    {"transcript", t},
                    {"wall_time_ms", wall_time_ms}};
    }

    static EpisodeRecord from_json(const json& j) {
        EpisodeRecord r;
        r.model = j.at("model").get<std::string>();
        r.game = j.at("game").get<std::string>();
        r.seed = j.at("seed").get<std::uint64_t>();
        for (const auto& e : j.at("transcript")) {
            TranscriptEntry entry;
            entry.prompt = e.at("prompt").get<std::string>();
            entry.response = e.at("response").get<std::string>();
            entry.action = e.at("action").get<std::string>();
            entry.result = StepResult::from_json(e.at("result"));
            r.transcript.push_back(std::move(entry));
        }
        r.raw_score = j.at("raw_score").get<double>();
        for (const auto& v : j.at("response_lengths")) r.response_lengths.push_back(v.get<int>());
        r.wall_time_ms = j.at("wall_time_ms").get<long>();
        r.errored = j.at("errored").get<bool>();
        r.error = j.at("error").get<std::string>();
        return r;
    }
};

inline constexpr int kConsecutiveInvalidLimit = 3;

/// One full episode: print_board -> model -> parse -> verify, until done,
/// the round cap, or three consecutive invalid actions. Transport failures
/// mark the episode errored (excluded from scores, kept in the failures
/// report).
inline EpisodeRecord run_episode(EnvClient& env, Agent& agent, const std::string& model_name,
                                 const std::string& game, std::uint64_t seed,
                                 const Params& difficulty = {}, int max_rounds = kMaxRounds) {
    EpisodeRecord record;
    record.model = model_name;
    record.game = game;
    record.seed = seed;
    auto started = std::chrono::steady_clock::now();

    try {
        GenerateResult gen = env.generate(game, seed, difficulty, json{{"model", model_name}});
        std::string session_id = gen.session_id;
        GameState initial = GameState::from_json(json::parse(gen.state_json));
        agent.begin_episode(game, seed, [&env, session_id, initial]() -> std::optional<GameState> {
            if (auto live = env.fetch_state(session_id)) return live;
            return initial;
        });

        int consecutive_invalid = 0;
        for (int round = 0; round < max_rounds; ++round) {
            Observation obs = env.print_board(session_id);
            std::string response = agent.respond(obs.prompt_text);
            std::string action = parse_action(response).value_or("");
            StepResult result = env.verify(session_id, response);

            record.transcript.push_back({obs.prompt_text, response, action, result});
            record.response_lengths.push_back(token_count(response));
            record.raw_score = result.total_score;

            if (!result.valid) {
                if (++consecutive_invalid >= kConsecutiveInvalidLimit) break;
            } else {
                consecutive_invalid = 0;
            }
            if (result.done) break;
        }
    } catch (const TransportError& e) {
        record.errored = true;
        record.error = e.what();
    }

    record.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - started)
                              .count();
    return record;
}

// ---------------------------------------------------------------------------
// Campaigns
// ---------------------------------------------------------------------------

struct CampaignConfig {
    std::vector<std::string> games;
    std::string model_name = "agent";
    std::optional<ModelEndpoint> endpoint;  // when absent, scripted_agent drives
    std::string scripted_agent = "random";
    std::uint64_t seed_lo = 1;
    std::uint64_t seed_hi = 50;
    int episodes_multi = 20;  // multi-epoch games use the first N seeds
    int max_rounds = kMaxRounds;
    int concurrency = 1;
    std::string output_dir;
    bool resume = false;
    std::set<std::string> paradigm_ban;
    Params difficulty;  // applied to every game (defaults when empty)
};

struct CampaignResult {
    scoring::ScoreMatrix matrix;
    std::vector<EpisodeRecord> records;
    std::size_t episodes_run = 0;
    std::size_t episodes_skipped = 0;
    std::size_t failures = 0;
};

namespace detail {

inline std::vector<std::pair<std::string, std::uint64_t>> episode_plan(
    const CampaignConfig& config, const GameRegistry& registry) {
    if (config.seed_lo < 1 || config.seed_hi < config.seed_lo)
        throw invalid_parameter_error("seed range is empty");
    if (config.max_rounds < 1) throw invalid_parameter_error("max rounds must be >= 1");
    if (config.games.empty()) throw invalid_parameter_error("no games selected");
    std::vector<std::pair<std::string, std::uint64_t>> plan;
    for (const auto& game_name : config.games) {
        const Game& game = registry.require(game_name);
        std::uint64_t hi = config.seed_hi;
        if (game.info().epoch_mode == EpochMode::Multi)
            hi = std::min(hi, config.seed_lo + static_cast<std::uint64_t>(config.episodes_multi) - 1);
        for (std::uint64_t seed = config.seed_lo; seed <= hi; ++seed)
            plan.emplace_back(game_name, seed);
    }
    return plan;
}

inline std::map<std::string, EpisodeRecord> load_checkpoint(const std::string& path) {
    std::map<std::string, EpisodeRecord> records;
    std::ifstream in(path);
    if (!in) return records;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) continue;  // partially written line: dropped
        try {
            EpisodeRecord r = EpisodeRecord::from_json(j);
            records[r.key()] = std::move(r);
        } catch (const std::exception&) {
            continue;
        }
    }
    return records;
}

}  // namespace detail

/// Runs (or resumes) a campaign: per game, single-epoch games play every
/// seed in range, multi-epoch games the first `episodes_multi` seeds. Scores
/// land in a models x games matrix cell as the mean episode score.
inline CampaignResult run_campaign(const CampaignConfig& config, EnvClient& env,
                                   const GameRegistry& registry, const AgentFactory& make_agent) {
    namespace fs = std::filesystem;
    auto plan = detail::episode_plan(config, registry);
    fs::create_directories(config.output_dir);
    fs::path checkpoint = fs::path(config.output_dir) / "episodes.jsonl";

    std::map<std::string, EpisodeRecord> existing;
    if (config.resume) existing = detail::load_checkpoint(checkpoint.string());
    else if (fs::exists(checkpoint)) fs::remove(checkpoint);

    std::ofstream out(checkpoint, std::ios::app);
    std::mutex write_lock;
    CampaignResult result;
    std::vector<EpisodeRecord> records;
    records.reserve(plan.size());
    for (const auto& [key, record] : existing) {
        (void)key;
        records.push_back(record);
    }

    std::vector<std::pair<std::string, std::uint64_t>> pending;
    for (const auto& [game, seed] : plan) {
        std::string key = config.model_name + "|" + game + "|" + std::to_string(seed);
        if (existing.count(key)) ++result.episodes_skipped;
        else pending.emplace_back(game, seed);
    }

    std::atomic<std::size_t> cursor{0};
    int workers = std::max(1, std::min(config.concurrency, static_cast<int>(pending.size())));
    auto work = [&] {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= pending.size()) break;
            const auto& [game, seed] = pending[i];
            auto agent = make_agent();
            EpisodeRecord record = run_episode(env, *agent, config.model_name, game, seed,
                                               config.difficulty, config.max_rounds);
            std::lock_guard<std::mutex> guard(write_lock);
            out << record.to_json().dump() << "\n";
            out.flush();
            records.push_back(std::move(record));
            ++result.episodes_run;
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    // Deterministic aggregation independent of completion order.
    std::sort(records.begin(), records.end(), [](const EpisodeRecord& a, const EpisodeRecord& b) {
        if (a.game != b.game) return a.game < b.game;
        return a.seed < b.seed;
    });

    scoring::ScoreMatrix matrix;
    matrix.models = {config.model_name};
    matrix.games = config.games;
    matrix.raw.emplace_back();
    for (const auto& game_name : config.games) {
        const GameInfo& info = registry.require(game_name).info();
        matrix.dims[game_name] = info.dimension;
        double sum = 0.0;
        int counted = 0;
        for (const auto& r : records) {
            if (r.game != game_name) continue;
            if (r.errored) {
                ++result.failures;
                continue;
            }
            sum += scoring::episode_score(info.score_rule, info.score_rule, r.raw_score);
            ++counted;
        }
        matrix.raw[0].push_back(counted ? sum / counted : 0.0);
    }

    scoring::write_score_matrix(matrix, (fs::path(config.output_dir) / "scores.csv").string(),
                                (fs::path(config.output_dir) / "dims.csv").string());

    // Failures report and the response-length/score pairs for the length fit.
    json failures = json::array();
    for (const auto& r : records)
        if (r.errored)
            failures.push_back(json{{"error", r.error}, {"game", r.game}, {"model", r.model},
                                    {"seed", r.seed}});
    std::ofstream fail_out(fs::path(config.output_dir) / "failures.json");
    fail_out << json{{"failures", failures}}.dump(2) << "\n";

    std::ofstream pairs_out(fs::path(config.output_dir) / "length_score.csv");
    pairs_out << "# length = mean whitespace-token count per response (tokenizer-free proxy)\n";
    pairs_out << "length,score\n";
    for (const auto& r : records) {
        if (r.errored || r.response_lengths.empty()) continue;
        double mean_len = 0.0;
        for (int v : r.response_lengths) mean_len += v;
        mean_len /= static_cast<double>(r.response_lengths.size());
        pairs_out << scoring::format_double(mean_len) << "," << scoring::format_double(r.raw_score)
                  << "\n";
    }

    result.matrix = std::move(matrix);
    result.records = std::move(records);
    return result;
}

}  // namespace gamegym::harness

#pragma once

#include <chrono>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gamegym/core.hpp"

namespace gamegym {

using SessionId = std::string;

/// One live episode. Steps on a session serialize through `write_lock`;
/// distinct sessions never contend.
struct Session {
    SessionId id;
    GameState state;
    json model_info = json::object();
    std::chrono::steady_clock::time_point created_at;
    std::chrono::steady_clock::time_point last_touch;
    std::mutex write_lock;
};

/// In-memory session registry implementing the generate/print-board/verify
/// lifecycle on top of a GameRegistry. Thread safe: the map is guarded by
/// `registry_lock_`, per-session writes by the session's own mutex.
class SessionManager {
public:
    explicit SessionManager(const GameRegistry& games, std::size_t max_sessions = 100000,
                            std::chrono::seconds idle_timeout = std::chrono::hours(1))
        : games_(games), max_sessions_(max_sessions), idle_timeout_(idle_timeout) {
        std::random_device rd;
        token_state_ = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }

    const GameRegistry& games() const { return games_; }

    std::pair<SessionId, GameState> create_session(const std::string& game_name,
                                                   std::uint64_t seed, const Params& difficulty,
                                                   json model_info = json::object()) {
        const Game& game = games_.require(game_name);
        GameState state = make_initial_state(game, seed, difficulty);

        auto session = std::make_shared<Session>();
        session->state = std::move(state);
        session->model_info = std::move(model_info);
        session->created_at = session->last_touch = std::chrono::steady_clock::now();

        std::lock_guard<std::mutex> guard(registry_lock_);
        evict_idle_locked();
        if (sessions_.size() >= max_sessions_)
            throw GymError("too_many_sessions", "session capacity reached");
        session->id = new_token_locked();
        sessions_[session->id] = session;
        return {session->id, session->state};
    }

    Observation render_observation(const SessionId& id) {
        auto session = require(id);
        std::lock_guard<std::mutex> guard(session->write_lock);
        if (session->state.done) throw episode_finished_error();
        const Game& game = games_.require(session->state.game);
        return Observation{game.render(session->state), session->state.round};
    }

    StepResult step(const SessionId& id, const std::string& action_text) {
        auto session = require(id);
        std::lock_guard<std::mutex> guard(session->write_lock);
        const Game& game = games_.require(session->state.game);
        return apply_step(game, session->state, action_text);
    }

    /// Snapshot of the canonical serialized state (test and tooling surface).
    GameState state(const SessionId& id) {
        auto session = require(id);
        std::lock_guard<std::mutex> guard(session->write_lock);
        return session->state;
    }

    bool erase(const SessionId& id) {
        std::lock_guard<std::mutex> guard(registry_lock_);
        return sessions_.erase(id) > 0;
    }

    std::size_t size() const {
        std::lock_guard<std::mutex> guard(registry_lock_);
        return sessions_.size();
    }

    /// Drops sessions idle longer than the configured timeout; returns the
    /// number evicted. Called on every create; callable explicitly.
    std::size_t evict_idle() {
        std::lock_guard<std::mutex> guard(registry_lock_);
        return evict_idle_locked();
    }

private:
    std::shared_ptr<Session> require(const SessionId& id) {
        std::lock_guard<std::mutex> guard(registry_lock_);
        auto it = sessions_.find(id);
        if (it == sessions_.end()) throw session_not_found_error(id);
        it->second->last_touch = std::chrono::steady_clock::now();
        return it->second;
    }

    std::size_t evict_idle_locked() {
        auto now = std::chrono::steady_clock::now();
        std::size_t evicted = 0;
        for (auto it = sessions_.begin(); it != sessions_.end();) {
            if (now - it->second->last_touch > idle_timeout_) {
                it = sessions_.erase(it);
                ++evicted;
            } else {
                ++it;
            }
        }
        return evicted;
    }

    // 128-bit random token as lowercase hex. Not part of the deterministic
    // surface; only states and prompts are reproducible.
    std::string new_token_locked() {
        RngStream mix{token_state_};
        std::string token = to_hex(mix.next()) + to_hex(mix.next());
        token_state_ = mix.state;
        return token;
    }

    const GameRegistry& games_;
    std::size_t max_sessions_;
    std::chrono::seconds idle_timeout_;
    mutable std::mutex registry_lock_;
    std::unordered_map<SessionId, std::shared_ptr<Session>> sessions_;
    std::uint64_t token_state_;
};

}  // namespace gamegym

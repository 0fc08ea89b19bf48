#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "gamegym/session.hpp"
#include "httplib.h"

namespace gamegym::service {

struct ServiceConfig {
    std::string host = "127.0.0.1";
    int port = 0;  // 0 picks a free port
    std::size_t max_sessions = 4096;
    std::chrono::seconds idle_timeout = std::chrono::hours(1);
    std::string output_dir = ".";
    std::size_t max_action_bytes = 1 << 20;
};

/// JSON-over-HTTP face of the environment: POST /generate, /print_board,
/// /verify. Responses mirror the in-process API exactly; `state` in the
/// generate response is the canonical serialized GameState.
class GymService {
public:
    GymService(const GameRegistry& registry, ServiceConfig config)
        : config_(std::move(config)),
          sessions_(registry, config_.max_sessions, config_.idle_timeout) {
        std::filesystem::create_directories(config_.output_dir);
        log_.open(std::filesystem::path(config_.output_dir) / "requests.jsonl", std::ios::app);
        install_routes();
    }

    ~GymService() { stop(); }

    /// Binds and serves on a background thread; returns the bound port.
    int start() {
        if (config_.port == 0) {
            bound_port_ = server_.bind_to_any_port(config_.host);
        } else {
            if (!server_.bind_to_port(config_.host, config_.port))
                throw GymError("bind_failed", "cannot bind to port " + std::to_string(config_.port));
            bound_port_ = config_.port;
        }
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
        return bound_port_;
    }

    /// Serves on the calling thread (CLI mode).
    void run() {
        if (config_.port == 0)
            bound_port_ = server_.bind_to_any_port(config_.host);
        else if (server_.bind_to_port(config_.host, config_.port))
            bound_port_ = config_.port;
        else
            throw GymError("bind_failed", "cannot bind to port " + std::to_string(config_.port));
        server_.listen_after_bind();
    }

    void stop() {
        server_.stop();
        if (thread_.joinable()) thread_.join();
    }

    int port() const { return bound_port_; }
    SessionManager& sessions() { return sessions_; }

private:
    static int status_for(const std::string& code) {
        if (code == "unknown_game" || code == "session_not_found") return 404;
        if (code == "episode_finished") return 409;
        if (code == "action_too_large") return 413;
        if (code == "too_many_sessions") return 429;
        return 400;
    }

    void reply_error(httplib::Response& res, const std::string& code, const std::string& detail) {
        res.status = status_for(code);
        json body{{"error", code}};
        if (!detail.empty()) body["detail"] = detail;
        res.set_content(body.dump(), "application/json");
    }

    void log_request(const std::string& endpoint, const std::string& session_id, int status) {
        std::lock_guard<std::mutex> guard(log_lock_);
        if (!log_) return;
        json line{{"endpoint", endpoint},
                  {"session_id", session_id},
                  {"status", status},
                  {"ts_ms", std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::system_clock::now().time_since_epoch())
                                .count()}};
        log_ << line.dump() << "\n";
        log_.flush();
    }

    template <typename Fn>
    void handle(const char* endpoint, const httplib::Request& req, httplib::Response& res, Fn fn) {
        std::string session_id;
        try {
            json body = req.body.empty() ? json::object() : json::parse(req.body);
            if (body.contains("session_id") && body.at("session_id").is_string())
                session_id = body.at("session_id").get<std::string>();
            json out = fn(body, session_id);
            res.status = 200;
            res.set_content(out.dump(), "application/json");
        } catch (const json::exception& e) {
            reply_error(res, "bad_request", e.what());
        } catch (const GymError& e) {
            reply_error(res, e.code(), e.what());
        } catch (const std::exception& e) {
            reply_error(res, "internal_error", e.what());
        }
        log_request(endpoint, session_id, res.status);
    }

    void install_routes() {
        server_.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
            res.set_content(json{{"ok", true}}.dump(), "application/json");
        });

        server_.Post("/generate", [this](const httplib::Request& req, httplib::Response& res) {
            handle("/generate", req, res, [this](const json& body, std::string& session_id) {
                if (!body.contains("game") || !body.at("game").is_string())
                    throw invalid_parameter_error("'game' is required");
                if (!body.contains("seed") || !body.at("seed").is_number())
                    throw invalid_parameter_error("'seed' is required");
                std::string game = body.at("game").get<std::string>();
                auto seed_signed = body.at("seed").get<std::int64_t>();
                if (seed_signed < 1) throw invalid_parameter_error("seed must be >= 1");
                Params difficulty;
                if (body.contains("difficulty")) {
                    if (!body.at("difficulty").is_object())
                        throw invalid_parameter_error("'difficulty' must be an object of integers");
                    for (const auto& [k, v] : body.at("difficulty").items()) {
                        if (!v.is_number_integer())
                            throw invalid_parameter_error("difficulty '" + k + "' must be an integer");
                        difficulty[k] = v.get<int>();
                    }
                }
                json model_info =
                    body.contains("model_info") ? body.at("model_info") : json::object();
                auto [id, state] = sessions_.create_session(
                    game, static_cast<std::uint64_t>(seed_signed), difficulty, model_info);
                session_id = id;
                return json{{"game", game},
                            {"round", state.round},
                            {"seed", seed_signed},
                            {"session_id", id},
                            {"state", state.serialize()}};
            });
        });

        server_.Post("/print_board", [this](const httplib::Request& req, httplib::Response& res) {
            handle("/print_board", req, res, [this](const json& body, std::string& session_id) {
                if (session_id.empty()) throw invalid_parameter_error("'session_id' is required");
                Observation obs = sessions_.render_observation(session_id);
                return json{{"prompt", obs.prompt_text}, {"round", obs.round}};
            });
        });

        server_.Post("/verify", [this](const httplib::Request& req, httplib::Response& res) {
            handle("/verify", req, res, [this](const json& body, std::string& session_id) {
                if (session_id.empty()) throw invalid_parameter_error("'session_id' is required");
                if (!body.contains("action") || !body.at("action").is_string())
                    throw invalid_parameter_error("'action' is required");
                std::string action = body.at("action").get<std::string>();
                if (action.size() > config_.max_action_bytes)
                    throw GymError("action_too_large",
                                   "action exceeds " + std::to_string(config_.max_action_bytes) +
                                       " bytes");
                StepResult r = sessions_.step(session_id, action);
                return r.to_json();
            });
        });
    }

    ServiceConfig config_;
    SessionManager sessions_;
    httplib::Server server_;
    std::thread thread_;
    int bound_port_ = 0;
    std::ofstream log_;
    std::mutex log_lock_;
};

}  // namespace gamegym::service

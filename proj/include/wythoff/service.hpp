#pragma once

// HTTP-facing game service. Handlers are plain member functions returning a
// status code and a JSON body so they can be exercised without a socket;
// service_http.hpp wires them to cpp-httplib routes.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "wythoff/engine.hpp"

namespace wythoff::service {

using Clock = std::chrono::steady_clock;
using Query = std::map<std::string, std::string>;

struct ApiResponse {
  int status = 200;
  nlohmann::ordered_json body;
};

enum class EnginePlays { First, Second };

struct Session {
  std::string id;
  PassState initial;
  PassState state;
  std::vector<Move> history;
  EnginePlays engine_plays = EnginePlays::Second;
  std::optional<std::string> winner;  // "human" or "engine"
  Clock::time_point last_access;
  std::mutex mutex;

  bool engine_to_move() const {
    return (history.size() % 2 == 0) == (engine_plays == EnginePlays::First);
  }
};

struct ServiceOptions {
  std::chrono::seconds ttl{1800};
  std::string cors_origin = "*";
  std::function<Clock::time_point()> now = [] { return Clock::now(); };
};

class GameService {
 public:
  explicit GameService(GrundyTable table, ServiceOptions options = {});

  /// GET /api/eval?x&y&pass
  ApiResponse eval(const Query& query) const;
  /// GET /api/ppositions?n&layer=classic|pass
  ApiResponse p_positions(const Query& query) const;
  /// POST /api/session {x, y, engine_plays, pass?}
  ApiResponse create_session(std::string_view body);
  /// POST /api/session/{id}/move {kind, to_x?, to_y?}
  ApiResponse apply_move(const std::string& id, std::string_view body);
  /// GET /api/session/{id}
  ApiResponse get_session(const std::string& id);

  /// Drops sessions idle for longer than the TTL; returns how many.
  std::size_t evict_expired();
  std::size_t session_count() const;

  const GrundyTable& table() const noexcept { return table_; }
  const ServiceOptions& options() const noexcept { return options_; }

 private:
  std::shared_ptr<Session> find(const std::string& id);
  std::string new_session_id();

  GrundyTable table_;
  ServiceOptions options_;
  mutable std::mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::mt19937_64 id_rng_;
};

nlohmann::ordered_json state_to_json(const PassState& state);
nlohmann::ordered_json move_to_json(const Move& move);

}  // namespace wythoff::service

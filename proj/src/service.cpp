#include "wythoff/service.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <sstream>

#include "wythoff/characterization.hpp"
#include "wythoff/strategy.hpp"

namespace wythoff::service {

namespace {

ApiResponse error(int status, std::string reason) {
  return {status, {{"error", std::move(reason)}}};
}

// Thrown from request parsing and turned into an ApiResponse at the boundary.
struct RequestError {
  int status;
  std::string reason;
};

std::uint64_t parse_coord(const Query& query, const std::string& key) {
  auto it = query.find(key);
  if (it == query.end()) throw RequestError{400, "missing parameter '" + key + "'"};
  const std::string& text = it->second;
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw RequestError{400, "parameter '" + key + "' must be a non-negative integer"};
  }
  return v;
}

bool parse_flag(const Query& query, const std::string& key, bool fallback) {
  auto it = query.find(key);
  if (it == query.end()) return fallback;
  if (it->second == "true" || it->second == "1") return true;
  if (it->second == "false" || it->second == "0") return false;
  throw RequestError{400, "parameter '" + key + "' must be true or false"};
}

std::uint64_t json_coord(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw RequestError{400, std::string("missing field '") + key + "'"};
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    throw RequestError{400, std::string("field '") + key + "' must be a non-negative integer"};
  }
  return v.get<std::uint64_t>();
}

nlohmann::json parse_body(std::string_view body) {
  auto doc = nlohmann::json::parse(body, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) throw RequestError{400, "request body must be a JSON object"};
  return doc;
}

void require_window(Position pos, const GrundyTable& table) {
  if (!table.contains(pos)) {
    throw RequestError{422, "position outside window " + std::to_string(table.window_size())};
  }
}

void apply(Session& s, const Move& m) {
  s.history.push_back(m);
  s.state = m.to;
}

bool terminal(const PassState& s) { return s.pos.x == 0 && s.pos.y == 0; }

nlohmann::ordered_json winner_json(const Session& s) {
  return s.winner ? nlohmann::ordered_json(*s.winner) : nlohmann::ordered_json(nullptr);
}

// Plays the engine's move when it is the engine's turn; returns it.
std::optional<Move> engine_reply(Session& s, const GrundyTable& table) {
  if (s.winner || !s.engine_to_move()) return std::nullopt;
  auto m = engine_move(s.state, table);
  if (!m) return std::nullopt;
  apply(s, *m);
  if (terminal(s.state)) s.winner = "engine";
  return m;
}

}  // namespace

nlohmann::ordered_json state_to_json(const PassState& state) {
  return {{"x", state.pos.x}, {"y", state.pos.y}, {"pass", state.pass_available}};
}

nlohmann::ordered_json move_to_json(const Move& move) {
  return {{"kind", to_string(move.kind)}, {"from", state_to_json(move.from)}, {"to", state_to_json(move.to)}};
}

GameService::GameService(GrundyTable table, ServiceOptions options)
    : table_(std::move(table)), options_(std::move(options)), id_rng_(std::random_device{}()) {}

ApiResponse GameService::eval(const Query& query) const {
  try {
    const Position pos{parse_coord(query, "x"), parse_coord(query, "y")};
    const bool pass = parse_flag(query, "pass", true);
    require_window(pos, table_);
    const PassState state{pos, pass};
    const auto choice = best_move(state, table_);
    nlohmann::ordered_json body{{"x", pos.x},
                                {"y", pos.y},
                                {"pass", pass},
                                {"grundy_classical", grundy(pos, table_)},
                                {"grundy_pass", grundy_pass(state, table_)},
                                {"is_p", choice.position_class == PositionClass::P}};
    body["best_move"] = choice.best ? move_to_json(*choice.best) : nlohmann::ordered_json(nullptr);
    return {200, std::move(body)};
  } catch (const RequestError& e) {
    return error(e.status, e.reason);
  }
}

ApiResponse GameService::p_positions(const Query& query) const {
  try {
    std::uint64_t n = table_.window_size();
    if (query.contains("n")) n = parse_coord(query, "n");
    if (n > table_.window_size()) {
      throw RequestError{422, "n exceeds window " + std::to_string(table_.window_size())};
    }
    const std::string layer_name = query.contains("layer") ? query.at("layer") : "classic";
    Layer layer;
    if (layer_name == "classic") {
      layer = Layer::Classic;
    } else if (layer_name == "pass") {
      layer = Layer::Pass;
    } else {
      throw RequestError{400, "layer must be 'classic' or 'pass'"};
    }
    auto points = nlohmann::ordered_json::array();
    for (const auto& s : wythoff::p_positions(layer, n, table_)) points.push_back({{"x", s.pos.x}, {"y", s.pos.y}});
    return {200, std::move(points)};
  } catch (const RequestError& e) {
    return error(e.status, e.reason);
  }
}

ApiResponse GameService::create_session(std::string_view body) {
  evict_expired();
  try {
    const auto doc = parse_body(body);
    const Position pos{json_coord(doc, "x"), json_coord(doc, "y")};
    const std::string plays = doc.value("engine_plays", "second");
    EnginePlays engine_plays;
    if (plays == "first") {
      engine_plays = EnginePlays::First;
    } else if (plays == "second") {
      engine_plays = EnginePlays::Second;
    } else {
      throw RequestError{400, "engine_plays must be 'first' or 'second'"};
    }
    bool pass = true;
    if (doc.contains("pass")) {
      if (!doc.at("pass").is_boolean()) throw RequestError{400, "field 'pass' must be a boolean"};
      pass = doc.at("pass").get<bool>();
    }
    require_window(pos, table_);

    auto session = std::make_shared<Session>();
    session->id = new_session_id();
    session->initial = session->state = PassState{pos, pass};
    session->engine_plays = engine_plays;
    session->last_access = options_.now();
    std::lock_guard session_lock(session->mutex);
    if (terminal(session->state)) {
      // Nobody can move; the player who would move first has lost.
      session->winner = engine_plays == EnginePlays::First ? "human" : "engine";
    }
    const auto reply = engine_reply(*session, table_);
    {
      std::lock_guard lock(sessions_mutex_);
      sessions_[session->id] = session;
    }
    nlohmann::ordered_json out{{"session_id", session->id}, {"state", state_to_json(session->state)}};
    out["engine_move"] = reply ? move_to_json(*reply) : nlohmann::ordered_json(nullptr);
    out["winner"] = winner_json(*session);
    return {201, std::move(out)};
  } catch (const RequestError& e) {
    return error(e.status, e.reason);
  }
}

ApiResponse GameService::apply_move(const std::string& id, std::string_view body) {
  evict_expired();
  auto session = find(id);
  if (!session) return error(404, "unknown session");
  std::lock_guard lock(session->mutex);
  session->last_access = options_.now();
  try {
    const auto doc = parse_body(body);
    if (!doc.contains("kind") || !doc.at("kind").is_string()) throw RequestError{400, "missing field 'kind'"};
    MoveKind kind;
    try {
      kind = move_kind_from_string(doc.at("kind").get<std::string>());
    } catch (const std::invalid_argument&) {
      throw RequestError{400, "unknown move kind"};
    }
    const PassState& from = session->state;
    if (kind == MoveKind::Pass && terminal(from)) throw RequestError{400, "pass from terminal"};
    if (session->winner) throw RequestError{400, "game over"};
    PassState to{from.pos, from.pass_available};
    if (kind == MoveKind::Pass) {
      if (!from.pass_available) throw RequestError{400, "pass unavailable"};
      to.pass_available = false;
    } else {
      to.pos = {json_coord(doc, "to_x"), json_coord(doc, "to_y")};
      require_window(to.pos, table_);
    }
    const auto legal = moves_pass(from);
    const Move wanted{kind, from, to};
    if (std::find(legal.begin(), legal.end(), wanted) == legal.end()) {
      throw RequestError{400, kind == MoveKind::Pass ? "pass not allowed" : "wrong direction"};
    }
    apply(*session, wanted);
    if (terminal(session->state)) session->winner = "human";
    const auto reply = engine_reply(*session, table_);
    nlohmann::ordered_json out{{"state", state_to_json(session->state)}};
    out["engine_move"] = reply ? move_to_json(*reply) : nlohmann::ordered_json(nullptr);
    out["winner"] = winner_json(*session);
    return {200, std::move(out)};
  } catch (const RequestError& e) {
    return error(e.status, e.reason);
  }
}

ApiResponse GameService::get_session(const std::string& id) {
  auto session = find(id);
  if (!session) return error(404, "unknown session");
  std::lock_guard lock(session->mutex);
  session->last_access = options_.now();
  auto history = nlohmann::ordered_json::array();
  for (const auto& m : session->history) history.push_back(move_to_json(m));
  nlohmann::ordered_json out{{"session_id", session->id},
                             {"initial", state_to_json(session->initial)},
                             {"state", state_to_json(session->state)},
                             {"engine_plays", session->engine_plays == EnginePlays::First ? "first" : "second"},
                             {"history", std::move(history)}};
  out["winner"] = winner_json(*session);
  return {200, std::move(out)};
}

std::size_t GameService::evict_expired() {
  const auto now = options_.now();
  std::lock_guard lock(sessions_mutex_);
  return std::erase_if(sessions_, [&](const auto& entry) {
    std::unique_lock session_lock(entry.second->mutex, std::try_to_lock);
    // A session in use is not idle.
    return session_lock.owns_lock() && now - entry.second->last_access > options_.ttl;
  });
}

std::size_t GameService::session_count() const {
  std::lock_guard lock(sessions_mutex_);
  return sessions_.size();
}

std::shared_ptr<Session> GameService::find(const std::string& id) {
  std::lock_guard lock(sessions_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::string GameService::new_session_id() {
  std::lock_guard lock(sessions_mutex_);
  std::ostringstream out;
  out << std::hex << std::setfill('0') << std::setw(16) << id_rng_() << std::setw(16) << id_rng_();
  return out.str();
}

}  // namespace wythoff::service

#include "wythoff/service_http.hpp"

namespace wythoff::service {

namespace {

Query to_query(const httplib::Request& req) {
  Query q;
  for (const auto& [key, value] : req.params) q.emplace(key, value);
  return q;
}

void reply(httplib::Response& res, const ApiResponse& api) {
  res.status = api.status;
  res.set_content(api.body.dump(), "application/json");
}

}  // namespace

void mount(httplib::Server& server, GameService& service) {
  const std::string origin = service.options().cors_origin;
  server.set_post_routing_handler([origin](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", origin);
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
  });
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Get("/api/eval", [&service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.eval(to_query(req)));
  });
  server.Get("/api/ppositions", [&service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.p_positions(to_query(req)));
  });
  server.Post("/api/session", [&service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.create_session(req.body));
  });
  server.Post(R"(/api/session/([^/]+)/move)", [&service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.apply_move(req.matches[1], req.body));
  });
  server.Get(R"(/api/session/([^/]+))", [&service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.get_session(req.matches[1]));
  });
}

bool serve(GameService& service, const std::string& host, int port) {
  httplib::Server server;
  mount(server, service);
  return server.listen(host, port);
}

}  // namespace wythoff::service

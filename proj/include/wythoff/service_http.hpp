#pragma once

#include <string>

#include "httplib.h"
#include "wythoff/service.hpp"

namespace wythoff::service {

/// Registers the /api routes and CORS handling on `server`. The service must
/// outlive the server.
void mount(httplib::Server& server, GameService& service);

/// Binds and serves until the process stops; false if the bind fails.
bool serve(GameService& service, const std::string& host, int port);

}  // namespace wythoff::service

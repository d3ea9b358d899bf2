#pragma once

// JSON/HTTP API for the browser editor. The Api class is transport-free so it can be
// exercised directly; mount() wires it into a cpp-httplib server.
//
//   POST /api/compile        CompileRequest JSON -> audio/midi bytes
//   POST /api/validate       {tune, tempo} -> {ok, tune_count, tempo_count, errors[]}
//   GET  /api/library        [{id, title, canonical}]
//   GET  /api/library/{id}   {id, title, tune, tempo, params, canonical}
//   GET  /api/meta           {instruments[128], scales[12], rhythms[5], defaults}

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nmnc/library.hpp"

namespace httplib {
class Server;
}

namespace nmnc::service {

inline constexpr int kDefaultPort = 8473;
inline constexpr const char* kPortEnv = "NMNC_PORT";

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
  std::vector<std::pair<std::string, std::string>> headers;
};

class Api {
 public:
  explicit Api(const SongLibrary& library = SongLibrary::builtin()) : library_(&library) {}

  Response compile(std::string_view json_body) const;
  Response validate(std::string_view json_body) const;
  Response library_list() const;
  Response library_get(std::string_view id) const;
  Response meta() const;

 private:
  const SongLibrary* library_;
};

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = kDefaultPort;
  /// Extra origin allowed by CORS besides loopback origins.
  std::string cors_origin;
};

/// Port from `NMNC_PORT` when set and valid, otherwise the default.
int port_from_env();

/// True for http(s)://localhost, 127.0.0.1 or [::1] origins, any port.
bool is_loopback_origin(std::string_view origin);

void mount(httplib::Server& server, const Api& api, const ServerOptions& options);

/// Blocks serving requests until the process is stopped. Returns false when the
/// socket cannot be bound.
bool run_server(const Api& api, const ServerOptions& options);

}  // namespace nmnc::service

#include "nmnc/service.hpp"

#include <httplib.h>

#include <algorithm>
#include <cstdlib>
#include <json.hpp>

#include "nmnc/compiler.hpp"
#include "nmnc/error.hpp"

namespace nmnc::service {
namespace {

using nlohmann::json;

Response json_response(int status, const json& body) {
  return Response{status, "application/json", body.dump(), {}};
}

Response error_response(int status, int code, const std::string& message, json detail = nullptr) {
  return json_response(status, {{"error_code", code}, {"message", message}, {"detail", detail}});
}

class BadRequest : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json parse_object(std::string_view body) {
  json j = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw BadRequest("malformed JSON");
  if (!j.is_object()) throw BadRequest("request body must be a JSON object");
  return j;
}

std::string get_text(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return {};
  if (!j[key].is_string()) throw RangeError(std::string(key) + " must be a string");
  return j[key].get<std::string>();
}

int get_int(const json& j, const char* key, int fallback) {
  if (!j.contains(key) || j[key].is_null()) return fallback;
  const auto& v = j[key];
  if (!v.is_number_integer()) throw RangeError(std::string(key) + " must be an integer");
  auto n = v.get<long long>();
  if (n < -1000000 || n > 1000000) throw RangeError(std::string(key) + " is out of range");
  return static_cast<int>(n);
}

struct CompileRequest {
  std::string tune;
  std::string tempo;
  ParamSet params;
};

CompileRequest parse_compile_request(const json& j) {
  static const std::vector<std::string> known = {"tune",   "tempo",         "speed",
                                                 "tune_volume", "rhythm_volume", "instrument",
                                                 "scale",  "rhythm",        "repeat",
                                                 "note_off"};
  for (const auto& [key, _] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw RangeError("unknown field '" + key + "'");
    }
  }
  CompileRequest r;
  r.tune = get_text(j, "tune");
  r.tempo = get_text(j, "tempo");
  ParamSet& p = r.params;
  p.speed = get_int(j, "speed", p.speed);
  p.tune_volume = get_int(j, "tune_volume", p.tune_volume);
  p.rhythm_volume = get_int(j, "rhythm_volume", p.rhythm_volume);
  p.repeat = get_int(j, "repeat", p.repeat);
  if (j.contains("instrument") && !j["instrument"].is_null()) {
    const auto& v = j["instrument"];
    if (v.is_string()) {
      auto program = instrument_from_string(v.get<std::string>());
      if (!program) throw RangeError("unknown instrument '" + v.get<std::string>() + "'");
      p.instrument = *program;
    } else {
      p.instrument = get_int(j, "instrument", p.instrument);
    }
  }
  if (auto s = get_text(j, "scale"); !s.empty()) {
    auto scale = scale_from_name(s);
    if (!scale) throw RangeError("unknown major scale '" + s + "'");
    p.scale = *scale;
  }
  if (auto s = get_text(j, "rhythm"); !s.empty()) {
    auto rhythm = rhythm_from_name(s);
    if (!rhythm) throw RangeError("unknown rhythm '" + s + "'");
    p.rhythm = *rhythm;
  }
  if (j.contains("note_off") && !j["note_off"].is_null()) {
    if (!j["note_off"].is_boolean()) throw RangeError("note_off must be a boolean");
    p.note_off = j["note_off"].get<bool>();
  }
  validate(p);
  return r;
}

json params_json(const ParamSet& p) {
  return {{"speed", p.speed},
          {"tune_volume", p.tune_volume},
          {"rhythm_volume", p.rhythm_volume},
          {"instrument", p.instrument},
          {"scale", scale_name(p.scale)},
          {"rhythm", rhythm_name(p.rhythm)},
          {"repeat", p.repeat}};
}

Response error_from(const Error& e) {
  json detail = nullptr;
  if (auto* m = dynamic_cast<const CountMismatchError*>(&e)) {
    detail = {{"tune_count", m->tune_count()}, {"tempo_count", m->tempo_count()}};
  } else if (auto* s = dynamic_cast<const SyntaxError*>(&e)) {
    detail = {{"box", s->box()}, {"position", s->position()}, {"token", s->token()}};
  }
  int status = e.code() == ErrorCode::NotFound ? 404 : 422;
  return error_response(status, static_cast<int>(e.code()), e.what(), detail);
}

}  // namespace

Response Api::compile(std::string_view body) const {
  try {
    auto req = parse_compile_request(parse_object(body));
    auto result = nmnc::compile(req.tune, req.tempo, req.params);
    Response r;
    r.content_type = "audio/midi";
    r.body.assign(result.bytes.begin(), result.bytes.end());
    r.headers = {{"X-Total-Ticks", std::to_string(result.total_ticks)},
                 {"X-Byte-Count", std::to_string(result.bytes.size())},
                 {"X-Quantization-Warnings", std::to_string(result.warnings.size())},
                 {"Content-Disposition", "attachment; filename=\"0001.mid\""}};
    return r;
  } catch (const BadRequest& e) {
    return error_response(400, 0, e.what());
  } catch (const Error& e) {
    return error_from(e);
  }
}

Response Api::validate(std::string_view body) const {
  try {
    auto j = parse_object(body);
    auto tune = get_text(j, "tune");
    auto tempo = get_text(j, "tempo");
    auto report = validate_texts(tune, tempo);
    json errors = json::array();
    for (const auto& issue : report.errors) {
      errors.push_back({{"code", static_cast<int>(issue.code)}, {"message", issue.message}});
    }
    return json_response(200, {{"ok", report.ok},
                               {"tune_count", report.tune_count},
                               {"tempo_count", report.tempo_count},
                               {"errors", errors}});
  } catch (const BadRequest& e) {
    return error_response(400, 0, e.what());
  } catch (const Error& e) {
    return error_response(400, static_cast<int>(e.code()), e.what());
  }
}

Response Api::library_list() const {
  json out = json::array();
  for (const auto& s : library_->songs()) {
    out.push_back({{"id", s.id}, {"title", s.title}, {"canonical", s.canonical}});
  }
  return json_response(200, out);
}

Response Api::library_get(std::string_view id) const {
  try {
    const Song& s = library_->get(id);
    return json_response(200, {{"id", s.id},
                               {"title", s.title},
                               {"tune", s.tune_text},
                               {"tempo", s.tempo_text},
                               {"params", params_json(s.default_params)},
                               {"canonical", s.canonical}});
  } catch (const Error& e) {
    return error_from(e);
  }
}

Response Api::meta() const {
  json instruments = json::array();
  for (auto name : gm_instrument_names()) instruments.push_back(name);
  json scales = json::array();
  for (auto s : kAllScales) scales.push_back(scale_name(s));
  json rhythms = json::array();
  for (auto r : kAllRhythms) rhythms.push_back(rhythm_name(r));
  return json_response(200, {{"instruments", instruments},
                             {"scales", scales},
                             {"rhythms", rhythms},
                             {"defaults", params_json(ParamSet{})}});
}

int port_from_env() {
  const char* v = std::getenv(kPortEnv);
  if (!v || !*v) return kDefaultPort;
  char* end = nullptr;
  long p = std::strtol(v, &end, 10);
  if (*end != '\0' || p < 1 || p > 65535) return kDefaultPort;
  return static_cast<int>(p);
}

bool is_loopback_origin(std::string_view origin) {
  for (std::string_view scheme : {"http://", "https://"}) {
    if (origin.substr(0, scheme.size()) != scheme) continue;
    auto rest = origin.substr(scheme.size());
    for (std::string_view host : {"localhost", "127.0.0.1", "[::1]"}) {
      if (rest.substr(0, host.size()) != host) continue;
      auto tail = rest.substr(host.size());
      if (tail.empty()) return true;
      if (tail.front() != ':' || tail.size() == 1) return false;
      return std::all_of(tail.begin() + 1, tail.end(), [](char c) { return c >= '0' && c <= '9'; });
    }
  }
  return false;
}

void mount(httplib::Server& server, const Api& api, const ServerOptions& options) {
  auto send = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    for (const auto& [k, v] : r.headers) res.set_header(k, v);
    res.set_content(r.body, r.content_type);
  };

  std::string extra_origin = options.cors_origin;
  server.set_post_routing_handler([extra_origin](const httplib::Request& req, httplib::Response& res) {
    auto origin = req.get_header_value("Origin");
    if (!origin.empty() && (is_loopback_origin(origin) || origin == extra_origin)) {
      res.set_header("Access-Control-Allow-Origin", origin);
      res.set_header("Vary", "Origin");
      res.set_header("Access-Control-Expose-Headers",
                     "X-Total-Ticks, X-Byte-Count, X-Quantization-Warnings, Content-Disposition");
    }
  });
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });

  server.Post("/api/compile", [&api, send](const httplib::Request& req, httplib::Response& res) {
    send(res, api.compile(req.body));
  });
  server.Post("/api/validate", [&api, send](const httplib::Request& req, httplib::Response& res) {
    send(res, api.validate(req.body));
  });
  server.Get("/api/library", [&api, send](const httplib::Request&, httplib::Response& res) {
    send(res, api.library_list());
  });
  server.Get(R"(/api/library/([^/]+))", [&api, send](const httplib::Request& req, httplib::Response& res) {
    send(res, api.library_get(req.matches[1].str()));
  });
  server.Get("/api/meta", [&api, send](const httplib::Request&, httplib::Response& res) {
    send(res, api.meta());
  });
}

bool run_server(const Api& api, const ServerOptions& options) {
  httplib::Server server;
  mount(server, api, options);
  return server.listen(options.host, options.port);
}

}  // namespace nmnc::service

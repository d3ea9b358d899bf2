#include "nmnc/document.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace nmnc {
namespace {

std::string_view trim(std::string_view s) {
  auto issp = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && issp(s.front())) s.remove_prefix(1);
  while (!s.empty() && issp(s.back())) s.remove_suffix(1);
  return s;
}

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

int parse_int(std::size_t line, std::string_view key, std::string_view v) {
  int n = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
    throw DocumentError(line, std::string(key) + " expects an integer, got '" + std::string(v) + "'");
  }
  return n;
}

template <typename T>
void set_once(std::optional<T>& slot, T value, std::size_t line, std::string_view key) {
  if (slot) throw DocumentError(line, "duplicate key " + std::string(key));
  slot = std::move(value);
}

void append_box(std::string& box, std::string_view value) {
  if (!box.empty()) box += '\n';
  box += value;
}

}  // namespace

ParamSet NmnDocument::params(const ParamSet& base) const {
  ParamSet p = base;
  if (speed) p.speed = *speed;
  if (tune_volume) p.tune_volume = *tune_volume;
  if (rhythm_volume) p.rhythm_volume = *rhythm_volume;
  if (instrument) p.instrument = *instrument;
  if (scale) p.scale = *scale;
  if (rhythm) p.rhythm = *rhythm;
  if (repeat) p.repeat = *repeat;
  return p;
}

NmnDocument parse_nmn(std::string_view text) {
  NmnDocument doc;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;

    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw DocumentError(line_no, "expected KEY: value");
    std::string key = upper(trim(line.substr(0, colon)));
    std::string_view value = trim(line.substr(colon + 1));

    if (key == "TUNE") {
      append_box(doc.tune_text, value);
    } else if (key == "TEMPO") {
      append_box(doc.tempo_text, value);
    } else if (key == "TITLE") {
      set_once(doc.title, std::string(value), line_no, key);
    } else if (key == "SPEED") {
      set_once(doc.speed, parse_int(line_no, key, value), line_no, key);
    } else if (key == "VOLUME") {
      set_once(doc.tune_volume, parse_int(line_no, key, value), line_no, key);
    } else if (key == "RHYTHM-VOLUME") {
      set_once(doc.rhythm_volume, parse_int(line_no, key, value), line_no, key);
    } else if (key == "REPEAT") {
      set_once(doc.repeat, parse_int(line_no, key, value), line_no, key);
    } else if (key == "INSTRUMENT") {
      auto program = instrument_from_string(value);
      if (!program) throw DocumentError(line_no, "unknown instrument '" + std::string(value) + "'");
      set_once(doc.instrument, *program, line_no, key);
    } else if (key == "SCALE") {
      auto s = scale_from_name(value);
      if (!s) throw DocumentError(line_no, "unknown major scale '" + std::string(value) + "'");
      set_once(doc.scale, *s, line_no, key);
    } else if (key == "RHYTHM") {
      auto r = rhythm_from_name(value);
      if (!r) throw DocumentError(line_no, "unknown rhythm '" + std::string(value) + "'");
      set_once(doc.rhythm, *r, line_no, key);
    } else {
      throw DocumentError(line_no, "unknown key '" + key + "'");
    }
  }
  return doc;
}

std::string render_nmn(const NmnDocument& doc) {
  std::string out;
  auto line = [&](std::string_view key, std::string_view value) {
    out += key;
    out += ": ";
    out += value;
    out += '\n';
  };
  auto box = [&](std::string_view key, std::string_view value) {
    std::size_t start = 0;
    while (start <= value.size()) {
      auto nl = value.find('\n', start);
      auto piece = trim(value.substr(start, nl == std::string_view::npos ? nl : nl - start));
      if (!piece.empty() || value.empty()) line(key, piece);
      if (nl == std::string_view::npos) break;
      start = nl + 1;
    }
  };
  if (doc.title) line("TITLE", *doc.title);
  box("TUNE", doc.tune_text);
  box("TEMPO", doc.tempo_text);
  if (doc.speed) line("SPEED", std::to_string(*doc.speed));
  if (doc.tune_volume) line("VOLUME", std::to_string(*doc.tune_volume));
  if (doc.rhythm_volume) line("RHYTHM-VOLUME", std::to_string(*doc.rhythm_volume));
  if (doc.instrument) line("INSTRUMENT", std::to_string(*doc.instrument));
  if (doc.scale) line("SCALE", scale_name(*doc.scale));
  if (doc.rhythm) line("RHYTHM", rhythm_name(*doc.rhythm));
  if (doc.repeat) line("REPEAT", std::to_string(*doc.repeat));
  return out;
}

}  // namespace nmnc

#include "nmnc/library.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <span>
#include <sstream>

#include "nmnc/compiler.hpp"
#include "nmnc/document.hpp"
#include "nmnc/error.hpp"

namespace nmnc {

namespace detail {
struct EmbeddedFile {
  std::string_view name;
  std::string_view contents;
};
std::span<const EmbeddedFile> embedded_library();  // generated at build time
}  // namespace detail

namespace {

std::string id_from_file_name(std::string_view name) {
  if (auto dot = name.rfind('.'); dot != std::string_view::npos) name = name.substr(0, dot);
  std::size_t digits = 0;
  while (digits < name.size() && std::isdigit(static_cast<unsigned char>(name[digits]))) ++digits;
  if (digits > 0 && digits < name.size() && name[digits] == '-') name.remove_prefix(digits + 1);
  return std::string(name);
}

}  // namespace

Song SongLibrary::parse_song(std::string_view file_name, std::string_view text) {
  NmnDocument doc = parse_nmn(text);
  Song song;
  song.id = id_from_file_name(file_name);
  song.title = doc.title.value_or(song.id);
  song.tune_text = doc.tune_text;
  song.tempo_text = doc.tempo_text;
  song.default_params = doc.params();
  song.canonical = song.id == "happy-birthday";
  try {
    compile(song.tune_text, song.tempo_text, song.default_params);
  } catch (const Error& e) {
    throw Error(e.code(), "library song '" + song.id + "': " + e.what());
  }
  return song;
}

const SongLibrary& SongLibrary::builtin() {
  static const SongLibrary lib = [] {
    SongLibrary l;
    for (const auto& f : detail::embedded_library()) l.songs_.push_back(parse_song(f.name, f.contents));
    return l;
  }();
  return lib;
}

SongLibrary SongLibrary::from_directory(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".nmn") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  SongLibrary l;
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw NotFoundError("cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    Song song = parse_song(path.filename().string(), ss.str());
    auto dup = std::find_if(l.songs_.begin(), l.songs_.end(),
                            [&](const Song& s) { return s.id == song.id; });
    if (dup != l.songs_.end()) throw Error(ErrorCode::Invalid, "duplicate song id '" + song.id + "'");
    l.songs_.push_back(std::move(song));
  }
  return l;
}

std::vector<std::pair<std::string, std::string>> SongLibrary::list() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(songs_.size());
  for (const auto& s : songs_) out.emplace_back(s.id, s.title);
  return out;
}

const Song& SongLibrary::get(std::string_view id) const {
  for (const auto& s : songs_) {
    if (s.id == id) return s;
  }
  throw NotFoundError("no song with id '" + std::string(id) + "'");
}

std::string SongLibrary::to_nmn(const Song& song) {
  NmnDocument doc;
  doc.title = song.title;
  doc.tune_text = song.tune_text;
  doc.tempo_text = song.tempo_text;
  const auto& p = song.default_params;
  doc.speed = p.speed;
  doc.tune_volume = p.tune_volume;
  doc.rhythm_volume = p.rhythm_volume;
  doc.instrument = p.instrument;
  doc.scale = p.scale;
  doc.rhythm = p.rhythm;
  doc.repeat = p.repeat;
  return render_nmn(doc);
}

}  // namespace nmnc

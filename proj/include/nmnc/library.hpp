#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nmnc/params.hpp"

namespace nmnc {

struct Song {
  std::string id;     // stable slug, e.g. "happy-birthday"
  std::string title;
  std::string tune_text;
  std::string tempo_text;
  ParamSet default_params;
  bool canonical = false;  // transcription pinned by the reference file
};

/// Named songs in display order. Immutable once built.
class SongLibrary {
 public:
  /// The four bundled songs, compiled into the binary from data/library/*.nmn.
  static const SongLibrary& builtin();

  /// Loads every `*.nmn` in `dir`, ordered by file name. A leading "NN-" in the file
  /// name orders entries and is dropped from the id. Throws DocumentError / Error on
  /// unreadable or invalid songs.
  static SongLibrary from_directory(const std::filesystem::path& dir);

  /// Parses one document and checks that its melody validates and compiles.
  static Song parse_song(std::string_view file_name, std::string_view text);

  std::vector<std::pair<std::string, std::string>> list() const;  // (id, title)
  const std::vector<Song>& songs() const { return songs_; }
  /// Throws NotFoundError.
  const Song& get(std::string_view id) const;

  /// The song as `.nmn` text.
  static std::string to_nmn(const Song& song);

 private:
  std::vector<Song> songs_;
};

}  // namespace nmnc

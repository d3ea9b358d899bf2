#pragma once

// `.nmn` song documents: UTF-8 text of `KEY: value` lines.
//
//   # comment
//   TITLE: Happy Birthday          (optional, used by the song library)
//   TUNE: 5, 5, 6, 5, 10, 7
//   TEMPO: 0.5, 0.5, 1, 1, 1, 2
//   SPEED: 3          VOLUME: 10     RHYTHM-VOLUME: 10
//   INSTRUMENT: 0 | Acoustic Grand Piano
//   SCALE: C          RHYTHM: NONE   REPEAT: 1
//
// Keys are case-insensitive. TUNE and TEMPO may repeat; their values are concatenated.
// Other keys may appear once. Unknown keys are rejected.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "nmnc/error.hpp"
#include "nmnc/params.hpp"

namespace nmnc {

class DocumentError : public Error {
 public:
  DocumentError(std::size_t line, const std::string& what)
      : Error(ErrorCode::Invalid, "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct NmnDocument {
  std::optional<std::string> title;
  std::string tune_text;
  std::string tempo_text;
  std::optional<int> speed;
  std::optional<int> tune_volume;
  std::optional<int> rhythm_volume;
  std::optional<int> instrument;
  std::optional<MajorScale> scale;
  std::optional<RhythmStyle> rhythm;
  std::optional<int> repeat;

  /// `base` with every present override applied.
  ParamSet params(const ParamSet& base = {}) const;
  bool operator==(const NmnDocument&) const = default;
};

/// Throws DocumentError for unknown/duplicate keys and malformed values.
/// The tune and tempo texts are not tokenized here.
NmnDocument parse_nmn(std::string_view text);

/// Canonical text; every parameter that is set is written.
std::string render_nmn(const NmnDocument& doc);

}  // namespace nmnc

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "nmnc/notation.hpp"

namespace nmnc {

/// Major-scale roots in dropdown order; the enumerator value is the semitone offset from C.
enum class MajorScale : std::uint8_t { C, Db, D, Eb, E, F, Fs, G, Ab, A, Bb, B };

inline constexpr std::array<MajorScale, 12> kAllScales = {
    MajorScale::C, MajorScale::Db, MajorScale::D,  MajorScale::Eb, MajorScale::E,  MajorScale::F,
    MajorScale::Fs, MajorScale::G, MajorScale::Ab, MajorScale::A,  MajorScale::Bb, MajorScale::B};

constexpr int root_offset(MajorScale s) { return static_cast<int>(s); }
std::string_view scale_name(MajorScale s);
/// Case-insensitive; accepts the canonical names plus '#' spellings (F#, C#, D#, G#, A#).
std::optional<MajorScale> scale_from_name(std::string_view name);

struct NoteNumber {
  std::uint8_t value = 0;
  bool operator==(const NoteNumber&) const = default;
};

/// Octave row that degree 1 with no shift lands in (middle C = 60).
inline constexpr int kBaseOctave = 5;

/// Semitone above the scale root for a degree 1..7, raised by one when sharp.
constexpr int degree_semitone(int degree, bool sharp) {
  constexpr std::array<int, 7> major = {0, 2, 4, 5, 7, 9, 11};
  return major[static_cast<std::size_t>(degree - 1)] + (sharp ? 1 : 0);
}

/// Throws RangeError when the result leaves 0..127, std::invalid_argument for a rest.
NoteNumber map_note(const TuneToken& token, MajorScale scale);

/// Note-number grid, one row per octave 0..10 and one column per chromatic step
/// (1, 1#, 2, 2#, 3, 4, 4#, 5, 5#, 6, 6#, 7). Cells above 127 are empty.
using Table2Grid = std::array<std::array<std::optional<int>, 12>, 11>;
Table2Grid table2_oracle();

/// Column index of the chromatic grid above for a degree/sharp pair.
constexpr int table2_column(int degree, bool sharp) { return degree_semitone(degree, sharp); }

}  // namespace nmnc

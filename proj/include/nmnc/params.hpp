#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "nmnc/pitch.hpp"

namespace nmnc {

enum class RhythmStyle : std::uint8_t { None, Waltz, Rock, Disco, Rumba };

inline constexpr std::array<RhythmStyle, 5> kAllRhythms = {
    RhythmStyle::None, RhythmStyle::Waltz, RhythmStyle::Rock, RhythmStyle::Disco,
    RhythmStyle::Rumba};

std::string_view rhythm_name(RhythmStyle r);  // "NONE", "Waltz", ...
std::optional<RhythmStyle> rhythm_from_name(std::string_view name);

/// The performance parameters next to the two text boxes.
/// Defaults reproduce the reference Happy Birthday file.
struct ParamSet {
  int speed = 3;           // 0..10, written as the header division (min 1)
  int tune_volume = 10;    // 0..10, velocity = volume * 10
  int rhythm_volume = 10;  // 0..10
  int instrument = 0;      // General MIDI program 0..127
  MajorScale scale = MajorScale::C;
  RhythmStyle rhythm = RhythmStyle::None;
  int repeat = 1;          // play count, >= 1
  bool note_off = false;   // emit NoteOff at note boundaries (not paper-compatible bytes)

  bool operator==(const ParamSet&) const = default;
};

inline constexpr int kMaxRepeat = 1000;

/// Throws RangeError naming the first out-of-range field.
void validate(const ParamSet& params);

/// Division written to the file header for a speed setting.
constexpr int division_for_speed(int speed) { return speed < 1 ? 1 : speed; }

/// General MIDI level-1 program names, index = program number.
const std::array<std::string_view, 128>& gm_instrument_names();

/// Accepts a program number "0".."127" or a GM name (case-insensitive exact match).
std::optional<int> instrument_from_string(std::string_view text);

}  // namespace nmnc

#pragma once

#include <cstdint>
#include <vector>

#include "nmnc/events.hpp"
#include "nmnc/params.hpp"

namespace nmnc {

// General MIDI percussion keys used by the built-in patterns.
inline constexpr std::uint8_t kKick = 35;
inline constexpr std::uint8_t kSnare = 38;
inline constexpr std::uint8_t kClosedHiHat = 42;
inline constexpr std::uint8_t kWoodblock = 76;

struct DrumHit {
  std::uint32_t tick_offset = 0;
  std::uint8_t note = 0;
  bool accent = false;
  bool operator==(const DrumHit&) const = default;
};

/// One bar of accompaniment, hits sorted by offset.
struct RhythmPattern {
  RhythmStyle style = RhythmStyle::None;
  std::uint32_t bar_ticks = 16;
  std::vector<DrumHit> hits;
};

/// Throws std::invalid_argument for RhythmStyle::None.
const RhythmPattern& pattern_for(RhythmStyle style);

/// Repeats the style's bar from tick 0 and drops hits at or past `melody_ticks`, then
/// closes with All Notes Off exactly at `melody_ticks` and End of Track. All hits go to
/// the percussion channel.
Track compile_rhythm_track(RhythmStyle style, std::uint64_t melody_ticks, int rhythm_volume);

}  // namespace nmnc

#include "nmnc/rhythm.hpp"

#include <algorithm>
#include <stdexcept>

#include "nmnc/error.hpp"

namespace nmnc {
namespace {

// Conventional drum-machine figures. Waltz is a 3/4 bar; the rest are 4/4.
// One beat = 4 ticks.
const std::vector<RhythmPattern>& patterns() {
  static const std::vector<RhythmPattern> table = {
      {RhythmStyle::Waltz, 12, {{0, kKick, true}, {4, kSnare, false}, {8, kSnare, false}}},
      {RhythmStyle::Rock,
       16,
       {{0, kKick, true},
        {2, kClosedHiHat, false},
        {4, kSnare, false},
        {6, kClosedHiHat, false},
        {8, kKick, false},
        {10, kClosedHiHat, false},
        {12, kSnare, false},
        {14, kClosedHiHat, false}}},
      {RhythmStyle::Disco,
       16,
       {{0, kKick, true},
        {2, kClosedHiHat, false},
        {4, kKick, true},
        {6, kClosedHiHat, false},
        {8, kKick, true},
        {10, kClosedHiHat, false},
        {12, kKick, true},
        {14, kClosedHiHat, false}}},
      {RhythmStyle::Rumba,
       16,
       {{0, kKick, true},
        {3, kWoodblock, false},
        {6, kWoodblock, false},
        {8, kSnare, false},
        {12, kWoodblock, false}}},
  };
  return table;
}

}  // namespace

const RhythmPattern& pattern_for(RhythmStyle style) {
  for (const auto& p : patterns()) {
    if (p.style == style) return p;
  }
  throw std::invalid_argument("no drum pattern for rhythm style " +
                              std::string(rhythm_name(style)));
}

Track compile_rhythm_track(RhythmStyle style, std::uint64_t melody_ticks, int rhythm_volume) {
  if (rhythm_volume < 0 || rhythm_volume > 10) {
    throw RangeError("rhythm volume must be in 0..10, got " + std::to_string(rhythm_volume));
  }
  const auto& pattern = pattern_for(style);
  const int base = rhythm_volume * 10;
  // A muted accompaniment stays muted; accents only lift an audible base.
  const int accented = base == 0 ? 0 : std::min(base + 20, 127);

  Track track;
  std::uint64_t now = 0;
  for (std::uint64_t bar = 0; bar < melody_ticks; bar += pattern.bar_ticks) {
    for (const auto& hit : pattern.hits) {
      std::uint64_t at = bar + hit.tick_offset;
      if (at >= melody_ticks) break;
      auto vel = static_cast<std::uint8_t>(hit.accent ? accented : base);
      track.push_back({static_cast<std::uint32_t>(at - now), NoteOn{kPercussionChannel, hit.note, vel}});
      now = at;
    }
  }
  track.push_back(
      {static_cast<std::uint32_t>(melody_ticks - now), ControlChange{kPercussionChannel, kAllNotesOff, 0}});
  track.push_back({0, EndOfTrack{}});
  return track;
}

}  // namespace nmnc

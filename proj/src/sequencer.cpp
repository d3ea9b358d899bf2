#include "nmnc/sequencer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nmnc/error.hpp"
#include "nmnc/pitch.hpp"

namespace nmnc {
namespace {

// 1000 millibeats = 4 ticks.
constexpr std::uint64_t kMillibeatsPerTick = 1000 / kTicksPerBeat;

std::uint32_t to_delta(std::uint64_t ticks) {
  if (ticks > std::numeric_limits<std::uint32_t>::max()) {
    throw RangeError("delta time of " + std::to_string(ticks) + " ticks is too large");
  }
  return static_cast<std::uint32_t>(ticks);
}

}  // namespace

TickCount beats_to_ticks(const TempoToken& tempo) {
  auto m = tempo.millibeats;
  return {(m + kMillibeatsPerTick / 2) / kMillibeatsPerTick, m % kMillibeatsPerTick == 0};
}

TickCount beats_to_ticks(double beats) {
  if (!(beats >= 0.0)) throw RangeError("duration must be a non-negative number of beats");
  double scaled = beats * kTicksPerBeat;
  double rounded = std::round(scaled);
  return {static_cast<std::uint64_t>(rounded), std::fabs(scaled - rounded) <= 1e-9};
}

std::vector<QuantizationWarning> quantization_warnings(const Melody& melody) {
  std::vector<QuantizationWarning> out;
  for (std::size_t i = 0; i < melody.tempos.size(); ++i) {
    auto t = beats_to_ticks(melody.tempos[i]);
    if (!t.exact) out.push_back({i + 1, melody.tempos[i], t.ticks});
  }
  return out;
}

Track compile_melody_track(const Melody& melody, const ParamSet& params) {
  validate(params);
  const auto velocity = static_cast<std::uint8_t>(params.tune_volume * 10);
  const auto channel = kMelodyChannel;

  // Pitches are resolved once so range errors surface before any output.
  std::vector<int> pitches(melody.tunes.size(), -1);
  for (std::size_t i = 0; i < melody.tunes.size(); ++i) {
    if (!melody.tunes[i].is_rest()) pitches[i] = map_note(melody.tunes[i], params.scale).value;
  }

  Track track;
  track.push_back({0, ProgramChange{channel, static_cast<std::uint8_t>(params.instrument)}});

  std::uint64_t pending = 0;
  std::vector<std::uint8_t> sounding;  // note_off mode only

  auto release_sounding = [&] {
    for (auto note : sounding) {
      track.push_back({to_delta(pending), NoteOff{channel, note, 0}});
      pending = 0;
    }
    sounding.clear();
  };

  for (int pass = 0; pass < params.repeat; ++pass) {
    for (std::size_t i = 0; i < melody.tunes.size(); ++i) {
      if (params.note_off && pending > 0) release_sounding();
      if (pitches[i] >= 0) {
        auto note = static_cast<std::uint8_t>(pitches[i]);
        track.push_back({to_delta(pending), NoteOn{channel, note, velocity}});
        pending = 0;
        if (params.note_off && std::find(sounding.begin(), sounding.end(), note) == sounding.end()) {
          sounding.push_back(note);
        }
      }
      pending += beats_to_ticks(melody.tempos[i]).ticks;
    }
  }
  if (params.note_off) release_sounding();

  track.push_back({to_delta(pending), ControlChange{channel, kAllNotesOff, 0}});
  track.push_back({0, EndOfTrack{}});
  return track;
}

}  // namespace nmnc

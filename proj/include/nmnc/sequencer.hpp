#pragma once

#include <cstdint>
#include <vector>

#include "nmnc/events.hpp"
#include "nmnc/notation.hpp"
#include "nmnc/params.hpp"

namespace nmnc {

inline constexpr int kTicksPerBeat = 4;

struct TickCount {
  std::uint64_t ticks = 0;
  bool exact = true;  // false when the duration was rounded to the 1/4-beat grid
};

/// round(beats * 4), halves rounded up.
TickCount beats_to_ticks(const TempoToken& tempo);
/// Floating-point form; `exact` is false when |beats*4 - round(beats*4)| > 1e-9.
TickCount beats_to_ticks(double beats);

struct QuantizationWarning {
  std::size_t position = 0;  // 1-based index into the tempo list
  TempoToken tempo;
  std::uint64_t ticks = 0;
};

std::vector<QuantizationWarning> quantization_warnings(const Melody& melody);

/// Melody track: program change, one NoteOn per non-rest tune (repeated `params.repeat`
/// times), All Notes Off at the final time, End of Track. Rests and tempo-0 chord
/// members only affect the pending delta. Propagates RangeError from pitch mapping.
Track compile_melody_track(const Melody& melody, const ParamSet& params);

}  // namespace nmnc

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nmnc/error.hpp"
#include "nmnc/notation.hpp"
#include "nmnc/params.hpp"
#include "nmnc/sequencer.hpp"
#include "nmnc/smf.hpp"

namespace nmnc {

struct CompileResult {
  SmfFile file;
  Bytes bytes;
  std::uint64_t total_ticks = 0;
  std::vector<QuantizationWarning> warnings;
};

/// Tune/tempo text + parameters -> Standard MIDI File. A melody-only file is format 0
/// with one track; any rhythm style adds a percussion track (format 1, two tracks).
/// Throws SyntaxError, EmptyInputError, CountMismatchError or RangeError.
CompileResult compile(std::string_view tune_text, std::string_view tempo_text,
                      const ParamSet& params);
CompileResult compile(const Melody& melody, const ParamSet& params);

struct ValidationIssue {
  ErrorCode code = ErrorCode::Invalid;
  std::string message;
};

/// What the editor shows next to the boxes: live counts plus every problem found.
struct ValidationReport {
  bool ok = false;
  std::size_t tune_count = 0;
  std::size_t tempo_count = 0;
  std::vector<ValidationIssue> errors;
};

ValidationReport validate_texts(std::string_view tune_text, std::string_view tempo_text);

}  // namespace nmnc

#include "nmnc/compiler.hpp"

#include <optional>

#include "nmnc/error.hpp"
#include "nmnc/rhythm.hpp"

namespace nmnc {

CompileResult compile(const Melody& melody, const ParamSet& params) {
  validate(params);
  std::vector<Track> tracks;
  tracks.push_back(compile_melody_track(melody, params));
  auto ticks = total_ticks(tracks.front());
  if (params.rhythm != RhythmStyle::None) {
    tracks.push_back(compile_rhythm_track(params.rhythm, ticks, params.rhythm_volume));
  }
  CompileResult result;
  result.file = make_smf(std::move(tracks), static_cast<std::uint16_t>(division_for_speed(params.speed)));
  result.bytes = write_smf(result.file);
  result.total_ticks = ticks;
  result.warnings = quantization_warnings(melody);
  return result;
}

CompileResult compile(std::string_view tune_text, std::string_view tempo_text,
                      const ParamSet& params) {
  return compile(parse_melody(tune_text, tempo_text), params);
}

ValidationReport validate_texts(std::string_view tune_text, std::string_view tempo_text) {
  ValidationReport report;
  report.tune_count = count_tokens(tune_text);
  report.tempo_count = count_tokens(tempo_text);

  std::optional<std::vector<TuneToken>> tunes;
  std::optional<std::vector<TempoToken>> tempos;
  try {
    tunes = parse_tune_list(tune_text);
  } catch (const SyntaxError& e) {
    report.errors.push_back({e.code(), e.in_box("tune").what()});
  }
  try {
    tempos = parse_tempo_list(tempo_text);
  } catch (const SyntaxError& e) {
    report.errors.push_back({e.code(), e.in_box("tempo").what()});
  }
  if (report.tune_count == 0 || report.tempo_count == 0) {
    report.errors.push_back({ErrorCode::EmptyInput, EmptyInputError().what()});
  } else if (report.tune_count != report.tempo_count) {
    CountMismatchError e(report.tune_count, report.tempo_count);
    report.errors.push_back({e.code(), e.what()});
  }
  report.ok = report.errors.empty() && tunes && tempos;
  return report;
}

}  // namespace nmnc

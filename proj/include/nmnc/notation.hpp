#pragma once

// Tokenizer and validator for numbered-notation tune and tempo lists.
//
// Tune tokens:   ["-"] D Z* [".5"]   D in 1..7, Z = '0'; or the lone rest "0".
//   "5" = G, "50" = one octave up, "500" = two up, "-5" = one down,
//   "-50" = two down, "5.5" = G sharp.
// Tempo tokens:  decimal beat counts with at most three fractional digits;
//   "0" strikes a note without advancing time (chords).
// Tokens are separated by commas and/or whitespace.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nmnc {

inline constexpr int kMaxOctaveShift = 5;

struct TuneToken {
  int degree = 0;  // 0 = rest, otherwise 1..7
  int octave_shift = 0;
  bool sharp = false;

  static constexpr TuneToken rest() { return {}; }
  static constexpr TuneToken note(int degree, int octave_shift = 0, bool sharp = false) {
    return {degree, octave_shift, sharp};
  }
  constexpr bool is_rest() const { return degree == 0; }
  bool operator==(const TuneToken&) const = default;
};

/// Duration in beats, held exactly as thousandths of a beat.
struct TempoToken {
  std::uint64_t millibeats = 0;

  static constexpr TempoToken from_millibeats(std::uint64_t m) { return {m}; }
  double beats() const { return static_cast<double>(millibeats) / 1000.0; }
  bool operator==(const TempoToken&) const = default;
};

struct Melody {
  std::vector<TuneToken> tunes;
  std::vector<TempoToken> tempos;
  bool operator==(const Melody&) const = default;
};

/// Throws SyntaxError naming the first malformed token (1-based).
std::vector<TuneToken> parse_tune_list(std::string_view text);
std::vector<TempoToken> parse_tempo_list(std::string_view text);

/// Error 2 when either list is empty, Error 1 when counts differ.
Melody validate_melody(std::vector<TuneToken> tunes, std::vector<TempoToken> tempos);

/// Number of entries in a box, skipping empty slots and never throwing. Drives the
/// live counters shown next to each box.
std::size_t count_tokens(std::string_view text);

/// Convenience: parse both boxes, then validate.
Melody parse_melody(std::string_view tune_text, std::string_view tempo_text);

std::string render_tune(const TuneToken& token);
std::string render_tempo(const TempoToken& token);
std::string render_tune_list(const std::vector<TuneToken>& tokens);
std::string render_tempo_list(const std::vector<TempoToken>& tokens);

/// True when the token satisfies the grammar invariants (rest shape, sharpable degree,
/// octave bound).
bool is_valid(const TuneToken& token);

}  // namespace nmnc

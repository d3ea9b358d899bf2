#include "nmnc/pitch.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "nmnc/error.hpp"

namespace nmnc {
namespace {

constexpr std::array<std::string_view, 12> kScaleNames = {"C",  "Db", "D",  "Eb", "E",  "F",
                                                          "Fs", "G",  "Ab", "A",  "Bb", "B"};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace

std::string_view scale_name(MajorScale s) { return kScaleNames[static_cast<std::size_t>(s)]; }

std::optional<MajorScale> scale_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kScaleNames.size(); ++i) {
    if (iequals(name, kScaleNames[i])) return static_cast<MajorScale>(i);
  }
  static constexpr std::array<std::pair<std::string_view, MajorScale>, 5> sharps = {{
      {"C#", MajorScale::Db},
      {"D#", MajorScale::Eb},
      {"F#", MajorScale::Fs},
      {"G#", MajorScale::Ab},
      {"A#", MajorScale::Bb},
  }};
  for (const auto& [alias, scale] : sharps) {
    if (iequals(name, alias)) return scale;
  }
  return std::nullopt;
}

NoteNumber map_note(const TuneToken& token, MajorScale scale) {
  if (token.is_rest()) throw std::invalid_argument("map_note: a rest has no pitch");
  int value = 12 * (kBaseOctave + token.octave_shift) + degree_semitone(token.degree, token.sharp) +
              root_offset(scale);
  if (value < 0 || value > 127) {
    throw RangeError("note '" + render_tune(token) + "' in " + std::string(scale_name(scale)) +
                     " major maps to " + std::to_string(value) + ", outside 0..127");
  }
  return NoteNumber{static_cast<std::uint8_t>(value)};
}

Table2Grid table2_oracle() {
  Table2Grid grid{};
  for (int octave = 0; octave < 11; ++octave) {
    for (int col = 0; col < 12; ++col) {
      int n = 12 * octave + col;
      if (n <= 127) grid[static_cast<std::size_t>(octave)][static_cast<std::size_t>(col)] = n;
    }
  }
  return grid;
}

}  // namespace nmnc

#include "nmnc/params.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "nmnc/error.hpp"

namespace nmnc {
namespace {

constexpr std::array<std::string_view, 5> kRhythmNames = {"NONE", "Waltz", "Rock", "Disco",
                                                          "Rumba"};

constexpr std::array<std::string_view, 128> kGmNames = {
    "Acoustic Grand Piano", "Bright Acoustic Piano", "Electric Grand Piano", "Honky-tonk Piano",
    "Electric Piano 1", "Electric Piano 2", "Harpsichord", "Clavinet",
    "Celesta", "Glockenspiel", "Music Box", "Vibraphone",
    "Marimba", "Xylophone", "Tubular Bells", "Dulcimer",
    "Drawbar Organ", "Percussive Organ", "Rock Organ", "Church Organ",
    "Reed Organ", "Accordion", "Harmonica", "Tango Accordion",
    "Acoustic Guitar (nylon)", "Acoustic Guitar (steel)", "Electric Guitar (jazz)",
    "Electric Guitar (clean)", "Electric Guitar (muted)", "Overdriven Guitar",
    "Distortion Guitar", "Guitar Harmonics",
    "Acoustic Bass", "Electric Bass (finger)", "Electric Bass (pick)", "Fretless Bass",
    "Slap Bass 1", "Slap Bass 2", "Synth Bass 1", "Synth Bass 2",
    "Violin", "Viola", "Cello", "Contrabass",
    "Tremolo Strings", "Pizzicato Strings", "Orchestral Harp", "Timpani",
    "String Ensemble 1", "String Ensemble 2", "Synth Strings 1", "Synth Strings 2",
    "Choir Aahs", "Voice Oohs", "Synth Choir", "Orchestra Hit",
    "Trumpet", "Trombone", "Tuba", "Muted Trumpet",
    "French Horn", "Brass Section", "Synth Brass 1", "Synth Brass 2",
    "Soprano Sax", "Alto Sax", "Tenor Sax", "Baritone Sax",
    "Oboe", "English Horn", "Bassoon", "Clarinet",
    "Piccolo", "Flute", "Recorder", "Pan Flute",
    "Blown Bottle", "Shakuhachi", "Whistle", "Ocarina",
    "Lead 1 (square)", "Lead 2 (sawtooth)", "Lead 3 (calliope)", "Lead 4 (chiff)",
    "Lead 5 (charang)", "Lead 6 (voice)", "Lead 7 (fifths)", "Lead 8 (bass + lead)",
    "Pad 1 (new age)", "Pad 2 (warm)", "Pad 3 (polysynth)", "Pad 4 (choir)",
    "Pad 5 (bowed)", "Pad 6 (metallic)", "Pad 7 (halo)", "Pad 8 (sweep)",
    "FX 1 (rain)", "FX 2 (soundtrack)", "FX 3 (crystal)", "FX 4 (atmosphere)",
    "FX 5 (brightness)", "FX 6 (goblins)", "FX 7 (echoes)", "FX 8 (sci-fi)",
    "Sitar", "Banjo", "Shamisen", "Koto",
    "Kalimba", "Bagpipe", "Fiddle", "Shanai",
    "Tinkle Bell", "Agogo", "Steel Drums", "Woodblock",
    "Taiko Drum", "Melodic Tom", "Synth Drum", "Reverse Cymbal",
    "Guitar Fret Noise", "Breath Noise", "Seashore", "Bird Tweet",
    "Telephone Ring", "Helicopter", "Applause", "Gunshot",
};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

void check_range(const char* field, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    throw RangeError(std::string(field) + " must be in " + std::to_string(lo) + ".." +
                     std::to_string(hi) + ", got " + std::to_string(value));
  }
}

}  // namespace

std::string_view rhythm_name(RhythmStyle r) { return kRhythmNames[static_cast<std::size_t>(r)]; }

std::optional<RhythmStyle> rhythm_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kRhythmNames.size(); ++i) {
    if (iequals(name, kRhythmNames[i])) return static_cast<RhythmStyle>(i);
  }
  return std::nullopt;
}

void validate(const ParamSet& p) {
  check_range("speed", p.speed, 0, 10);
  check_range("tune volume", p.tune_volume, 0, 10);
  check_range("rhythm volume", p.rhythm_volume, 0, 10);
  check_range("instrument", p.instrument, 0, 127);
  check_range("repeat", p.repeat, 1, kMaxRepeat);
  if (static_cast<int>(p.scale) > 11) throw RangeError("invalid major scale");
  if (static_cast<int>(p.rhythm) > 4) throw RangeError("invalid rhythm style");
}

const std::array<std::string_view, 128>& gm_instrument_names() { return kGmNames; }

std::optional<int> instrument_from_string(std::string_view text) {
  int program = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), program);
  if (ec == std::errc() && ptr == text.data() + text.size() && !text.empty()) {
    if (program >= 0 && program <= 127) return program;
    return std::nullopt;
  }
  for (std::size_t i = 0; i < kGmNames.size(); ++i) {
    if (iequals(text, kGmNames[i])) return static_cast<int>(i);
  }
  return std::nullopt;
}

}  // namespace nmnc

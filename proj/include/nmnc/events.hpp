#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace nmnc {

struct NoteOn {
  std::uint8_t channel = 0;
  std::uint8_t note = 0;
  std::uint8_t velocity = 0;
  bool operator==(const NoteOn&) const = default;
};

struct NoteOff {
  std::uint8_t channel = 0;
  std::uint8_t note = 0;
  std::uint8_t velocity = 0;
  bool operator==(const NoteOff&) const = default;
};

struct ProgramChange {
  std::uint8_t channel = 0;
  std::uint8_t program = 0;
  bool operator==(const ProgramChange&) const = default;
};

struct ControlChange {
  std::uint8_t channel = 0;
  std::uint8_t controller = 0;
  std::uint8_t value = 0;
  bool operator==(const ControlChange&) const = default;
};

struct EndOfTrack {
  bool operator==(const EndOfTrack&) const = default;
};

inline constexpr std::uint8_t kAllNotesOff = 123;
inline constexpr std::uint8_t kMelodyChannel = 0;
inline constexpr std::uint8_t kPercussionChannel = 9;

struct MidiEvent {
  std::uint32_t delta_ticks = 0;
  std::variant<NoteOn, NoteOff, ProgramChange, ControlChange, EndOfTrack> kind;
  bool operator==(const MidiEvent&) const = default;
};

using Track = std::vector<MidiEvent>;

std::uint64_t total_ticks(std::span<const MidiEvent> events);

/// One-line description: "<delta>\t<kind>\t<channel|->\t<data>".
std::string describe(const MidiEvent& e);

}  // namespace nmnc

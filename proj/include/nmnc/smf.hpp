#pragma once

// Standard MIDI File encoding and decoding for the event subset the compiler emits.
// Every channel event carries its own status byte (no running status).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nmnc/events.hpp"

namespace nmnc {

using Bytes = std::vector<std::uint8_t>;

inline constexpr std::uint32_t kMaxVlq = 0x0FFFFFFF;

/// Big-endian 7-bit groups, continuation bit on all but the last byte. Minimal length.
/// Throws RangeError above kMaxVlq.
Bytes encode_vlq(std::uint32_t value);
void append_vlq(Bytes& out, std::uint32_t value);

struct VlqResult {
  std::uint32_t value = 0;
  std::size_t consumed = 0;
};

/// Throws DecodeError: TruncatedInput for a dangling continuation, Overlong for a
/// non-minimal or >4-byte encoding. `base_offset` is added to reported offsets.
VlqResult decode_vlq(std::span<const std::uint8_t> bytes, std::size_t base_offset = 0);

struct SmfHeader {
  std::uint16_t format = 0;   // 0 or 1
  std::uint16_t ntracks = 1;
  std::uint16_t division = 3;  // ticks per quarter note
  bool operator==(const SmfHeader&) const = default;
};

struct SmfFile {
  SmfHeader header;
  std::vector<Track> tracks;
  bool operator==(const SmfFile&) const = default;
};

/// Wraps tracks in a header: one track => format 0, more => format 1.
SmfFile make_smf(std::vector<Track> tracks, std::uint16_t division);

Bytes encode_event(const MidiEvent& event);

/// Delta-time + event stream of one track (without the MTrk chunk header).
Bytes encode_track(const Track& track);

/// Throws RangeError when the header disagrees with the tracks (format 0 with several
/// tracks, ntracks != tracks.size(), division 0 or >= 0x8000).
Bytes write_smf(const SmfFile& file);

/// Throws DecodeError (BadMagic, LengthMismatch, UnknownEvent, TruncatedInput, Overlong).
/// Meta events other than End of Track are skipped; their delta carries into the next event.
SmfFile read_smf(std::span<const std::uint8_t> bytes);

/// 16 space-separated uppercase hex bytes per line, each line ending in '\n'.
std::string hex_dump(std::span<const std::uint8_t> bytes);

}  // namespace nmnc

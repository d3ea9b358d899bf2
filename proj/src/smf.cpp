#include "nmnc/smf.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "nmnc/error.hpp"

namespace nmnc {
namespace {

constexpr std::array<std::uint8_t, 4> kHeaderMagic = {'M', 'T', 'h', 'd'};
constexpr std::array<std::uint8_t, 4> kTrackMagic = {'M', 'T', 'r', 'k'};

void put16(Bytes& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void put32(Bytes& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

std::uint8_t check7(std::uint8_t v, const char* what) {
  if (v > 0x7F) throw RangeError(std::string(what) + " must be 0..127");
  return v;
}

std::uint8_t status(std::uint8_t kind, std::uint8_t channel) {
  if (channel > 15) throw RangeError("channel must be 0..15");
  return static_cast<std::uint8_t>(kind | channel);
}

struct EventEncoder {
  Bytes& out;
  void operator()(const NoteOn& e) {
    out.insert(out.end(), {status(0x90, e.channel), check7(e.note, "note"),
                           check7(e.velocity, "velocity")});
  }
  void operator()(const NoteOff& e) {
    out.insert(out.end(), {status(0x80, e.channel), check7(e.note, "note"),
                           check7(e.velocity, "velocity")});
  }
  void operator()(const ProgramChange& e) {
    out.insert(out.end(), {status(0xC0, e.channel), check7(e.program, "program")});
  }
  void operator()(const ControlChange& e) {
    out.insert(out.end(), {status(0xB0, e.channel), check7(e.controller, "controller"),
                           check7(e.value, "value")});
  }
  void operator()(const EndOfTrack&) { out.insert(out.end(), {0xFF, 0x2F, 0x00}); }
};

// Bounds-checked cursor over the input; offsets are absolute.
class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> data) : data_(data) {}

  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return data_.size() - pos_; }

  void need(std::size_t n, std::size_t limit) const {
    if (pos_ + n > limit) {
      throw DecodeError(limit == data_.size() ? DecodeFailure::TruncatedInput
                                              : DecodeFailure::LengthMismatch,
                        pos_, "needed " + std::to_string(n) + " more byte(s)");
    }
  }
  std::uint8_t u8(std::size_t limit) {
    need(1, limit);
    return data_[pos_++];
  }
  std::uint16_t u16() {
    need(2, data_.size());
    auto v = static_cast<std::uint16_t>((data_[pos_] << 8) | data_[pos_ + 1]);
    pos_ += 2;
    return v;
  }
  std::uint32_t u32() {
    need(4, data_.size());
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | data_[pos_ + static_cast<std::size_t>(i)];
    pos_ += 4;
    return v;
  }
  bool magic(const std::array<std::uint8_t, 4>& m) {
    need(4, data_.size());
    bool ok = std::equal(m.begin(), m.end(), data_.begin() + static_cast<std::ptrdiff_t>(pos_));
    pos_ += 4;
    return ok;
  }
  std::uint32_t vlq(std::size_t limit) {
    try {
      auto r = decode_vlq(data_.subspan(pos_, limit - pos_), pos_);
      pos_ += r.consumed;
      return r.value;
    } catch (const DecodeError& e) {
      if (e.failure() != DecodeFailure::TruncatedInput || limit == data_.size()) throw;
      throw DecodeError(DecodeFailure::LengthMismatch, e.offset(), "quantity runs past the chunk end");
    }
  }
  void skip(std::size_t n, std::size_t limit) {
    need(n, limit);
    pos_ += n;
  }

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

std::uint8_t data_byte(Reader& r, std::size_t end) {
  auto at = r.pos();
  auto b = r.u8(end);
  if (b & 0x80) throw DecodeError(DecodeFailure::UnknownEvent, at, "expected a data byte");
  return b;
}

Track read_track(Reader& r, std::size_t end) {
  Track track;
  std::uint64_t carried = 0;
  while (r.pos() < end) {
    std::uint64_t delta = carried + r.vlq(end);
    auto at = r.pos();
    auto st = r.u8(end);
    auto ch = static_cast<std::uint8_t>(st & 0x0F);
    MidiEvent ev;
    switch (st & 0xF0) {
      case 0x80: {
        auto note = data_byte(r, end);
        ev.kind = NoteOff{ch, note, data_byte(r, end)};
        break;
      }
      case 0x90: {
        auto note = data_byte(r, end);
        ev.kind = NoteOn{ch, note, data_byte(r, end)};
        break;
      }
      case 0xB0: {
        auto ctl = data_byte(r, end);
        ev.kind = ControlChange{ch, ctl, data_byte(r, end)};
        break;
      }
      case 0xC0:
        ev.kind = ProgramChange{ch, data_byte(r, end)};
        break;
      default:
        if (st == 0xFF) {
          auto type = r.u8(end);
          auto len = r.vlq(end);
          if (type == 0x2F) {
            if (len != 0) throw DecodeError(DecodeFailure::LengthMismatch, at, "End of Track with payload");
            ev.kind = EndOfTrack{};
            break;
          }
          r.skip(len, end);
          carried = delta;
          continue;
        }
        char buf[8];
        std::snprintf(buf, sizeof buf, "0x%02X", st);
        throw DecodeError(DecodeFailure::UnknownEvent, at, std::string("status ") + buf);
    }
    if (delta > kMaxVlq) throw DecodeError(DecodeFailure::Overlong, at, "accumulated delta too large");
    ev.delta_ticks = static_cast<std::uint32_t>(delta);
    carried = 0;
    track.push_back(ev);
    if (std::holds_alternative<EndOfTrack>(ev.kind)) {
      if (r.pos() != end) {
        throw DecodeError(DecodeFailure::LengthMismatch, r.pos(),
                          "End of Track before the end of the chunk");
      }
      return track;
    }
  }
  throw DecodeError(DecodeFailure::TruncatedInput, r.pos(), "track ended without End of Track");
}

}  // namespace

void append_vlq(Bytes& out, std::uint32_t value) {
  if (value > kMaxVlq) {
    throw RangeError("variable-length quantity " + std::to_string(value) + " exceeds 0x0FFFFFFF");
  }
  int groups = 1;
  while (groups < 4 && (value >> (7 * groups)) != 0) ++groups;
  for (int g = groups - 1; g >= 0; --g) {
    auto b = static_cast<std::uint8_t>((value >> (7 * g)) & 0x7F);
    out.push_back(g ? static_cast<std::uint8_t>(b | 0x80) : b);
  }
}

Bytes encode_vlq(std::uint32_t value) {
  Bytes out;
  append_vlq(out, value);
  return out;
}

VlqResult decode_vlq(std::span<const std::uint8_t> bytes, std::size_t base_offset) {
  std::uint32_t value = 0;
  const std::size_t limit = std::min<std::size_t>(bytes.size(), 4);
  for (std::size_t i = 0; i < limit; ++i) {
    auto b = bytes[i];
    if (i == 0 && b == 0x80) {
      throw DecodeError(DecodeFailure::Overlong, base_offset, "leading zero group");
    }
    value = (value << 7) | (b & 0x7F);
    if (!(b & 0x80)) return {value, i + 1};
  }
  if (limit == 4) throw DecodeError(DecodeFailure::Overlong, base_offset, "more than four bytes");
  throw DecodeError(DecodeFailure::TruncatedInput, base_offset + bytes.size(),
                    "dangling continuation byte");
}

SmfFile make_smf(std::vector<Track> tracks, std::uint16_t division) {
  SmfFile f;
  f.header.format = tracks.size() > 1 ? 1 : 0;
  f.header.ntracks = static_cast<std::uint16_t>(tracks.size());
  f.header.division = division;
  f.tracks = std::move(tracks);
  return f;
}

Bytes encode_event(const MidiEvent& event) {
  Bytes out;
  std::visit(EventEncoder{out}, event.kind);
  return out;
}

Bytes encode_track(const Track& track) {
  Bytes out;
  for (const auto& e : track) {
    append_vlq(out, e.delta_ticks);
    std::visit(EventEncoder{out}, e.kind);
  }
  return out;
}

Bytes write_smf(const SmfFile& file) {
  const auto& h = file.header;
  if (h.format > 1) throw RangeError("only SMF formats 0 and 1 are supported");
  if (h.ntracks != file.tracks.size()) throw RangeError("header track count disagrees with tracks");
  if (h.ntracks == 0) throw RangeError("a MIDI file needs at least one track");
  if (h.format == 0 && h.ntracks != 1) throw RangeError("format 0 holds exactly one track");
  if (h.division == 0 || h.division >= 0x8000) throw RangeError("division must be 1..32767");

  Bytes out(kHeaderMagic.begin(), kHeaderMagic.end());
  put32(out, 6);
  put16(out, h.format);
  put16(out, h.ntracks);
  put16(out, h.division);
  for (const auto& track : file.tracks) {
    Bytes body = encode_track(track);
    out.insert(out.end(), kTrackMagic.begin(), kTrackMagic.end());
    put32(out, static_cast<std::uint32_t>(body.size()));
    out.insert(out.end(), body.begin(), body.end());
  }
  return out;
}

SmfFile read_smf(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  if (!r.magic(kHeaderMagic)) throw DecodeError(DecodeFailure::BadMagic, 0, "expected MThd");
  auto header_len = r.u32();
  if (header_len != 6) {
    throw DecodeError(DecodeFailure::LengthMismatch, 4, "header length must be 6");
  }
  SmfFile f;
  f.header.format = r.u16();
  f.header.ntracks = r.u16();
  f.header.division = r.u16();
  if (f.header.format > 1) throw DecodeError(DecodeFailure::BadMagic, 8, "unsupported SMF format");
  if (f.header.division == 0 || (f.header.division & 0x8000)) {
    throw DecodeError(DecodeFailure::BadMagic, 12, "unsupported division");
  }
  for (std::uint16_t t = 0; t < f.header.ntracks; ++t) {
    auto at = r.pos();
    if (!r.magic(kTrackMagic)) throw DecodeError(DecodeFailure::BadMagic, at, "expected MTrk");
    auto len = r.u32();
    if (len > r.remaining()) {
      throw DecodeError(DecodeFailure::TruncatedInput, r.pos(),
                        "track length " + std::to_string(len) + " exceeds the remaining " +
                            std::to_string(r.remaining()) + " byte(s)");
    }
    f.tracks.push_back(read_track(r, r.pos() + len));
  }
  if (r.remaining() != 0) {
    throw DecodeError(DecodeFailure::LengthMismatch, r.pos(), "trailing bytes after the last track");
  }
  return f;
}

std::string hex_dump(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(bytes.size() * 3);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    out += kDigits[bytes[i] >> 4];
    out += kDigits[bytes[i] & 0x0F];
    out += (i % 16 == 15 || i + 1 == bytes.size()) ? '\n' : ' ';
  }
  return out;
}

}  // namespace nmnc

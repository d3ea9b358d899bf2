#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "golden.hpp"
#include "nmnc/compiler.hpp"
#include "nmnc/error.hpp"
#include "nmnc/smf.hpp"

using namespace nmnc;

namespace {

// Reference VLQ: collect 7-bit groups least-significant first, then reverse.
Bytes vlq_oracle(std::uint32_t n) {
  Bytes groups;
  do {
    groups.push_back(static_cast<std::uint8_t>(n % 128));
    n /= 128;
  } while (n > 0);
  Bytes out(groups.rbegin(), groups.rend());
  for (std::size_t i = 0; i + 1 < out.size(); ++i) out[i] |= 0x80;
  return out;
}

DecodeFailure failure_of(const Bytes& b) {
  try {
    read_smf(b);
  } catch (const DecodeError& e) {
    return e.failure();
  }
  FAIL("expected DecodeError");
  return DecodeFailure::BadMagic;
}

Bytes golden_bytes() { return Bytes(golden::kHappyBirthday.begin(), golden::kHappyBirthday.end()); }

}  // namespace

TEST_CASE("VLQ examples") {
  CHECK(encode_vlq(0) == Bytes{0x00});
  CHECK(encode_vlq(8) == Bytes{0x08});
  CHECK(encode_vlq(128) == Bytes{0x81, 0x00});
  CHECK(encode_vlq(0x0FFFFFFF) == Bytes{0xFF, 0xFF, 0xFF, 0x7F});
  CHECK_THROWS_AS(encode_vlq(0x10000000), RangeError);
  CHECK(decode_vlq(Bytes{0x00}).value == 0);
  auto r = decode_vlq(Bytes{0x81, 0x00, 0x55});
  CHECK(r.value == 128);
  CHECK(r.consumed == 2);
  CHECK_THROWS_AS(decode_vlq(Bytes{0x80}), DecodeError);
  try {
    decode_vlq(Bytes{0x81});
  } catch (const DecodeError& e) {
    CHECK(e.failure() == DecodeFailure::TruncatedInput);
  }
  try {
    decode_vlq(Bytes{0x80, 0x01});
  } catch (const DecodeError& e) {
    CHECK(e.failure() == DecodeFailure::Overlong);
  }
  try {
    decode_vlq(Bytes{0x81, 0x80, 0x80, 0x80, 0x00});
  } catch (const DecodeError& e) {
    CHECK(e.failure() == DecodeFailure::Overlong);
  }
}

TEST_CASE("VLQ agrees with the reference encoder and round-trips") {
  std::vector<std::uint32_t> values;
  for (std::uint32_t n = 0; n <= 100000; ++n) values.push_back(n);
  for (std::uint32_t n : {0x7Fu, 0x80u, 0x3FFFu, 0x4000u, 0x1FFFFFu, 0x200000u, 0x0FFFFFFFu}) {
    values.push_back(n);
  }
  for (auto n : values) {
    auto enc = encode_vlq(n);
    REQUIRE(enc == vlq_oracle(n));
    auto dec = decode_vlq(enc);
    REQUIRE(dec.value == n);
    REQUIRE(dec.consumed == enc.size());
  }
}

TEST_CASE("event encoding") {
  CHECK(encode_event({0, NoteOn{0, 0x43, 0x64}}) == Bytes{0x90, 0x43, 0x64});
  CHECK(encode_event({0, ProgramChange{0, 0}}) == Bytes{0xC0, 0x00});
  CHECK(encode_event({0, ControlChange{0, 123, 0}}) == Bytes{0xB0, 0x7B, 0x00});
  CHECK(encode_event({0, EndOfTrack{}}) == Bytes{0xFF, 0x2F, 0x00});
  CHECK(encode_event({0, NoteOn{9, 35, 120}}) == Bytes{0x99, 35, 120});
  CHECK(encode_event({0, NoteOff{3, 60, 0}}) == Bytes{0x83, 60, 0});
  CHECK_THROWS_AS(encode_event({0, NoteOn{16, 1, 1}}), RangeError);
  CHECK_THROWS_AS(encode_event({0, NoteOn{0, 128, 1}}), RangeError);
}

TEST_CASE("golden file decodes to 28 events and re-encodes identically") {
  auto bytes = golden_bytes();
  SmfFile f = read_smf(bytes);
  CHECK(f.header == SmfHeader{0, 1, 3});
  REQUIRE(f.tracks.size() == 1);
  CHECK(f.tracks[0].size() == 28);
  CHECK(total_ticks(f.tracks[0]) == 96);
  CHECK(write_smf(f) == bytes);
}

TEST_CASE("write_smf layout") {
  SmfFile empty = make_smf({Track{{0, ControlChange{0, 123, 0}}, {0, EndOfTrack{}}}}, 3);
  auto b = write_smf(empty);
  CHECK(b.size() == 14 + 8 + 8);
  CHECK(Bytes(b.begin() + 18, b.begin() + 22) == Bytes{0, 0, 0, 8});
  CHECK(read_smf(b) == empty);

  Track t{{0, EndOfTrack{}}};
  SmfFile two = make_smf({t, t}, 5);
  auto b2 = write_smf(two);
  CHECK(Bytes(b2.begin() + 8, b2.begin() + 14) == Bytes{0, 1, 0, 2, 0, 5});

  SmfFile bad = two;
  bad.header.format = 0;
  CHECK_THROWS_AS(write_smf(bad), RangeError);
  bad = two;
  bad.header.ntracks = 3;
  CHECK_THROWS_AS(write_smf(bad), RangeError);
  bad = two;
  bad.header.division = 0;
  CHECK_THROWS_AS(write_smf(bad), RangeError);
}

TEST_CASE("read_smf error kinds") {
  auto good = golden_bytes();
  CHECK(failure_of(Bytes(good.begin(), good.begin() + 10)) == DecodeFailure::TruncatedInput);
  auto bad = good;
  bad[0] = 'X';
  CHECK(failure_of(bad) == DecodeFailure::BadMagic);
  bad = good;
  bad[14] = 'X';
  CHECK(failure_of(bad) == DecodeFailure::BadMagic);
  bad = good;
  bad[7] = 7;
  CHECK(failure_of(bad) == DecodeFailure::LengthMismatch);
  bad = good;
  bad[21] = 0x70;  // track length larger than the file
  CHECK(failure_of(bad) == DecodeFailure::TruncatedInput);
  bad = good;
  bad[21] = 0x6E;  // one byte short: End of Track straddles the chunk end
  CHECK(failure_of(bad) == DecodeFailure::LengthMismatch);
  bad = good;
  bad.push_back(0);
  CHECK(failure_of(bad) == DecodeFailure::LengthMismatch);
  bad = good;
  bad[26] = 0x43;  // running status
  CHECK(failure_of(bad) == DecodeFailure::UnknownEvent);
  bad = good;
  bad[26] = 0xE0;  // pitch bend is outside the supported subset
  try {
    read_smf(bad);
  } catch (const DecodeError& e) {
    CHECK(e.failure() == DecodeFailure::UnknownEvent);
    CHECK(e.offset() == 26);
  }
  // Track without End of Track.
  Bytes noeot = {'M', 'T', 'h', 'd', 0, 0, 0, 6, 0, 0, 0, 1, 0, 3, 'M', 'T', 'r', 'k', 0, 0, 0, 3,
                 0, 0xC0, 0};
  CHECK(failure_of(noeot) == DecodeFailure::TruncatedInput);
}

TEST_CASE("other meta events are skipped and their delta carried") {
  Bytes b = {'M', 'T', 'h', 'd', 0, 0, 0, 6, 0, 0, 0, 1, 0, 3, 'M', 'T', 'r', 'k', 0, 0, 0, 14,
             0x05, 0xFF, 0x03, 0x02, 'h', 'i',   // track name at delta 5
             0x02, 0x90, 60, 100,                // note at delta 2
             0x00, 0xFF, 0x2F, 0x00};
  SmfFile f = read_smf(b);
  REQUIRE(f.tracks[0].size() == 2);
  CHECK(f.tracks[0][0] == MidiEvent{7, NoteOn{0, 60, 100}});
}

TEST_CASE("hex dump") {
  auto bytes = golden_bytes();
  auto dump = hex_dump(bytes);
  CHECK(std::count(dump.begin(), dump.end(), '\n') == 9);
  CHECK(dump.substr(0, 48) == "4D 54 68 64 00 00 00 06 00 00 00 01 00 03 4D 54\n");
  CHECK(dump.ends_with("00 00 FF 2F 00\n"));
  CHECK(hex_dump({}).empty());
  Bytes sixteen(16, 0xAB);
  auto one_row = hex_dump(sixteen);
  CHECK(std::count(one_row.begin(), one_row.end(), '\n') == 1);
  CHECK(one_row.size() == 48);
}

TEST_CASE("property: read(write(f)) == f for generated files") {
  std::mt19937 rng(424242);
  for (int i = 0; i < 1000; ++i) {
    Melody m = testgen::melody(rng);
    ParamSet p = testgen::params(rng);
    CompileResult r = compile(m, p);
    SmfFile back = read_smf(r.bytes);
    REQUIRE(back == r.file);
    // Every length field equals the bytes that follow it.
    std::size_t pos = 14;
    for (std::size_t t = 0; t < r.file.tracks.size(); ++t) {
      std::uint32_t len = (r.bytes[pos + 4] << 24) | (r.bytes[pos + 5] << 16) |
                          (r.bytes[pos + 6] << 8) | r.bytes[pos + 7];
      CHECK(len == encode_track(r.file.tracks[t]).size());
      pos += 8 + len;
    }
    CHECK(pos == r.bytes.size());
  }
}

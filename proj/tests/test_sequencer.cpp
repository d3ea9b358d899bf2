#include <doctest.h>

#include <map>
#include <random>

#include "generators.hpp"
#include "nmnc/error.hpp"
#include "nmnc/sequencer.hpp"

using namespace nmnc;

namespace {

Melody melody(const char* tunes, const char* tempos) { return parse_melody(tunes, tempos); }

std::vector<const NoteOn*> note_ons(const Track& t) {
  std::vector<const NoteOn*> out;
  for (const auto& e : t) {
    if (auto* n = std::get_if<NoteOn>(&e.kind)) out.push_back(n);
  }
  return out;
}

// Absolute start tick of every NoteOn, computed by walking deltas.
std::vector<std::pair<std::uint64_t, int>> onsets(const Track& t) {
  std::vector<std::pair<std::uint64_t, int>> out;
  std::uint64_t now = 0;
  for (const auto& e : t) {
    now += e.delta_ticks;
    if (auto* n = std::get_if<NoteOn>(&e.kind)) out.emplace_back(now, n->note);
  }
  return out;
}

}  // namespace

TEST_CASE("beats_to_ticks: four ticks per beat") {
  CHECK(beats_to_ticks(TempoToken::from_millibeats(500)).ticks == 2);
  CHECK(beats_to_ticks(TempoToken::from_millibeats(2000)).ticks == 8);
  CHECK(beats_to_ticks(TempoToken::from_millibeats(0)).ticks == 0);
  CHECK(beats_to_ticks(TempoToken::from_millibeats(250)).exact);
  auto q = beats_to_ticks(TempoToken::from_millibeats(300));
  CHECK(q.ticks == 1);
  CHECK_FALSE(q.exact);
  CHECK(beats_to_ticks(TempoToken::from_millibeats(125)).ticks == 1);  // half rounds up
  CHECK(beats_to_ticks(0.5).ticks == 2);
  CHECK(beats_to_ticks(0.5).exact);
  CHECK_FALSE(beats_to_ticks(0.1).exact);
  CHECK_THROWS_AS(beats_to_ticks(-1.0), RangeError);
}

TEST_CASE("quantization warnings name the tempo entry") {
  auto w = quantization_warnings(melody("1,2,3", "1, 0.3, 0.5"));
  REQUIRE(w.size() == 1);
  CHECK(w[0].position == 2);
  CHECK(w[0].ticks == 1);
}

TEST_CASE("chord: tempo-0 notes strike together") {
  auto track = compile_melody_track(melody("1, 3, 5, 0", "0, 0, 0, 2"), ParamSet{});
  REQUIRE(track.size() == 6);
  CHECK(track[0] == MidiEvent{0, ProgramChange{0, 0}});
  CHECK(track[1] == MidiEvent{0, NoteOn{0, 60, 100}});
  CHECK(track[2] == MidiEvent{0, NoteOn{0, 64, 100}});
  CHECK(track[3] == MidiEvent{0, NoteOn{0, 67, 100}});
  CHECK(track[4] == MidiEvent{8, ControlChange{0, 123, 0}});
  CHECK(track[5] == MidiEvent{0, EndOfTrack{}});
  CHECK(total_ticks(track) == 8);
  // All three sound from tick 0 until All Notes Off at tick 8.
  for (auto [at, note] : onsets(track)) CHECK(at == 0);
}

TEST_CASE("single rest is silence") {
  auto track = compile_melody_track(melody("0", "1"), ParamSet{});
  REQUIRE(track.size() == 3);
  CHECK(track[1] == MidiEvent{4, ControlChange{0, 123, 0}});
  CHECK(note_ons(track).empty());
}

TEST_CASE("repeat=2 on one note") {
  ParamSet p;
  p.repeat = 2;
  auto track = compile_melody_track(melody("5", "1"), p);
  REQUIRE(track.size() == 5);
  CHECK(track[1] == MidiEvent{0, NoteOn{0, 67, 100}});
  CHECK(track[2] == MidiEvent{4, NoteOn{0, 67, 100}});
  CHECK(track[3] == MidiEvent{4, ControlChange{0, 123, 0}});
}

TEST_CASE("trailing chord member rings until All Notes Off") {
  auto track = compile_melody_track(melody("1, 5", "1, 0"), ParamSet{});
  REQUIRE(track.size() == 5);
  CHECK(track[2] == MidiEvent{4, NoteOn{0, 67, 100}});
  CHECK(track[3] == MidiEvent{0, ControlChange{0, 123, 0}});
}

TEST_CASE("volume 0 gives velocity 0, instrument sets the program") {
  ParamSet p;
  p.tune_volume = 0;
  p.instrument = 33;
  auto track = compile_melody_track(melody("1", "1"), p);
  CHECK(track[0] == MidiEvent{0, ProgramChange{0, 33}});
  CHECK(track[1] == MidiEvent{0, NoteOn{0, 60, 0}});
}

TEST_CASE("range errors propagate and invalid params are rejected") {
  ParamSet p;
  p.scale = MajorScale::B;
  CHECK_THROWS_AS(compile_melody_track(melody("100000", "1"), p), RangeError);
  ParamSet bad;
  bad.speed = 11;
  CHECK_THROWS_AS(compile_melody_track(melody("1", "1"), bad), RangeError);
  bad = {};
  bad.repeat = 0;
  CHECK_THROWS_AS(compile_melody_track(melody("1", "1"), bad), RangeError);
}

TEST_CASE("note_off mode releases notes at each boundary") {
  ParamSet p;
  p.note_off = true;
  auto track = compile_melody_track(melody("1, 3, 0, 5", "0, 1, 1, 1"), p);
  // PC, on60@0, on64@0, off60@4, off64@0, on67@4, off67@4, CC@0, EOT
  std::vector<MidiEvent> expected = {
      {0, ProgramChange{0, 0}},  {0, NoteOn{0, 60, 100}},   {0, NoteOn{0, 64, 100}},
      {4, NoteOff{0, 60, 0}},    {0, NoteOff{0, 64, 0}},    {4, NoteOn{0, 67, 100}},
      {4, NoteOff{0, 67, 0}},    {0, ControlChange{0, 123, 0}}, {0, EndOfTrack{}}};
  CHECK(track == expected);
  CHECK(total_ticks(track) == 12);
}

TEST_CASE("property: structure, velocity, time conservation, scale shift") {
  std::mt19937 rng(99);
  for (int i = 0; i < 500; ++i) {
    Melody m = testgen::melody(rng);
    ParamSet p = testgen::params(rng);
    p.note_off = false;
    auto track = compile_melody_track(m, p);

    REQUIRE(std::holds_alternative<ProgramChange>(track.front().kind));
    REQUIRE(std::holds_alternative<EndOfTrack>(track.back().kind));
    REQUIRE(std::holds_alternative<ControlChange>(track[track.size() - 2].kind));
    std::size_t notes = 0;
    for (auto& t : m.tunes) notes += t.is_rest() ? 0 : 1;
    auto ons = note_ons(track);
    CHECK(ons.size() == notes * static_cast<std::size_t>(p.repeat));
    CHECK(track.size() == ons.size() + 3);
    for (auto* n : ons) CHECK(n->velocity == p.tune_volume * 10);

    std::uint64_t body = 0;
    for (auto& t : m.tempos) body += beats_to_ticks(t).ticks;
    CHECK(total_ticks(track) == body * static_cast<std::uint64_t>(p.repeat));

    ParamSet c = p;
    c.scale = MajorScale::C;
    auto base = compile_melody_track(m, c);
    REQUIRE(base.size() == track.size());
    for (std::size_t k = 0; k < track.size(); ++k) {
      CHECK(base[k].delta_ticks == track[k].delta_ticks);
      if (auto* n = std::get_if<NoteOn>(&track[k].kind)) {
        CHECK(n->note - std::get<NoteOn>(base[k].kind).note == root_offset(p.scale));
      } else {
        CHECK(base[k] == track[k]);
      }
    }
  }
}

TEST_CASE("property: repeat N equals the melody text written out N times") {
  std::mt19937 rng(1234);
  for (int i = 0; i < 200; ++i) {
    Melody m = testgen::melody(rng, 15);
    ParamSet p = testgen::params(rng);
    int n = p.repeat;
    Melody unrolled;
    for (int k = 0; k < n; ++k) {
      unrolled.tunes.insert(unrolled.tunes.end(), m.tunes.begin(), m.tunes.end());
      unrolled.tempos.insert(unrolled.tempos.end(), m.tempos.begin(), m.tempos.end());
    }
    ParamSet once = p;
    once.repeat = 1;
    CHECK(compile_melody_track(m, p) == compile_melody_track(unrolled, once));
  }
}

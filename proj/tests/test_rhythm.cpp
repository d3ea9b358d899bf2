#include <doctest.h>

#include <random>

#include "nmnc/error.hpp"
#include "nmnc/rhythm.hpp"

using namespace nmnc;

namespace {

struct Hit {
  std::uint64_t at;
  std::uint8_t note;
  std::uint8_t velocity;
  bool operator==(const Hit&) const = default;
};

// Tick-by-tick enumeration: a hit sounds at tick t when the bar has one at t % bar.
std::vector<Hit> enumerate_hits(const RhythmPattern& p, std::uint64_t ticks, int volume) {
  std::vector<Hit> out;
  for (std::uint64_t t = 0; t < ticks; ++t) {
    for (const auto& h : p.hits) {
      if (h.tick_offset != t % p.bar_ticks) continue;
      int v = volume * 10;
      if (h.accent && v > 0) v = std::min(v + 20, 127);
      out.push_back({t, h.note, static_cast<std::uint8_t>(v)});
    }
  }
  return out;
}

std::vector<Hit> hits_of(const Track& t) {
  std::vector<Hit> out;
  std::uint64_t now = 0;
  for (const auto& e : t) {
    now += e.delta_ticks;
    if (auto* n = std::get_if<NoteOn>(&e.kind)) out.push_back({now, n->note, n->velocity});
  }
  return out;
}

}  // namespace

TEST_CASE("pattern shapes") {
  CHECK(pattern_for(RhythmStyle::Waltz).bar_ticks == 12);
  CHECK(pattern_for(RhythmStyle::Waltz).hits.size() == 3);
  CHECK(pattern_for(RhythmStyle::Rock).hits.size() == 8);
  CHECK(pattern_for(RhythmStyle::Disco).hits.size() == 8);
  CHECK(pattern_for(RhythmStyle::Rumba).hits.size() == 5);
  CHECK_THROWS_AS(pattern_for(RhythmStyle::None), std::invalid_argument);
  for (auto style : {RhythmStyle::Waltz, RhythmStyle::Rock, RhythmStyle::Disco, RhythmStyle::Rumba}) {
    const auto& p = pattern_for(style);
    for (std::size_t i = 0; i < p.hits.size(); ++i) {
      CHECK(p.hits[i].tick_offset < p.bar_ticks);
      CHECK(p.hits[i].note >= 35);
      CHECK(p.hits[i].note <= 81);
      if (i) CHECK(p.hits[i - 1].tick_offset < p.hits[i].tick_offset);
    }
  }
  CHECK(pattern_for(RhythmStyle::Rock).hits[0] == DrumHit{0, kKick, true});
  CHECK(pattern_for(RhythmStyle::Rumba).hits[1] == DrumHit{3, kWoodblock, false});
}

TEST_CASE("Rock over 96 ticks: six bars of eight hits") {
  auto track = compile_rhythm_track(RhythmStyle::Rock, 96, 10);
  CHECK(hits_of(track).size() == 48);
  CHECK(total_ticks(track) == 96);
  auto& cc = track[track.size() - 2];
  CHECK(std::get<ControlChange>(cc.kind) == ControlChange{9, 123, 0});
  CHECK(std::holds_alternative<EndOfTrack>(track.back().kind));
}

TEST_CASE("Waltz over an empty melody") {
  auto track = compile_rhythm_track(RhythmStyle::Waltz, 0, 10);
  REQUIRE(track.size() == 2);
  CHECK(track[0] == MidiEvent{0, ControlChange{9, 123, 0}});
}

TEST_CASE("Rumba truncates the second bar") {
  auto hits = hits_of(compile_rhythm_track(RhythmStyle::Rumba, 20, 10));
  REQUIRE(hits.size() == 7);
  CHECK(hits[5].at == 16);
  CHECK(hits[6].at == 19);
}

TEST_CASE("velocities: accents lift by 20, clamp at 127, muted stays muted") {
  auto h = hits_of(compile_rhythm_track(RhythmStyle::Rock, 16, 10));
  CHECK(h[0].velocity == 120);
  CHECK(h[1].velocity == 100);
  h = hits_of(compile_rhythm_track(RhythmStyle::Rock, 16, 5));
  CHECK(h[0].velocity == 70);
  h = hits_of(compile_rhythm_track(RhythmStyle::Rock, 16, 0));
  for (auto& x : h) CHECK(x.velocity == 0);
  CHECK_THROWS_AS(compile_rhythm_track(RhythmStyle::Rock, 16, 11), RangeError);
}

TEST_CASE("property: track matches tick enumeration and spans the melody exactly") {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto style = static_cast<RhythmStyle>(std::uniform_int_distribution<int>(1, 4)(rng));
    std::uint64_t ticks = std::uniform_int_distribution<std::uint64_t>(0, 200)(rng);
    int vol = std::uniform_int_distribution<int>(0, 10)(rng);
    auto track = compile_rhythm_track(style, ticks, vol);
    CHECK(hits_of(track) == enumerate_hits(pattern_for(style), ticks, vol));
    CHECK(total_ticks(track) == ticks);
    for (const auto& e : track) {
      if (auto* n = std::get_if<NoteOn>(&e.kind)) CHECK(n->channel == 9);
    }
    CHECK(track == compile_rhythm_track(style, ticks, vol));
  }
}

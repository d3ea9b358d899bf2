#include "nmnc/events.hpp"

#include <sstream>

namespace nmnc {

std::uint64_t total_ticks(std::span<const MidiEvent> events) {
  std::uint64_t sum = 0;
  for (const auto& e : events) sum += e.delta_ticks;
  return sum;
}

namespace {
struct Describer {
  std::ostringstream& os;
  void operator()(const NoteOn& e) {
    os << "NoteOn\t" << +e.channel << "\tnote=" << +e.note << " velocity=" << +e.velocity;
  }
  void operator()(const NoteOff& e) {
    os << "NoteOff\t" << +e.channel << "\tnote=" << +e.note << " velocity=" << +e.velocity;
  }
  void operator()(const ProgramChange& e) {
    os << "ProgramChange\t" << +e.channel << "\tprogram=" << +e.program;
  }
  void operator()(const ControlChange& e) {
    os << "ControlChange\t" << +e.channel << "\tcontroller=" << +e.controller
       << " value=" << +e.value;
  }
  void operator()(const EndOfTrack&) { os << "EndOfTrack\t-\t"; }
};
}  // namespace

std::string describe(const MidiEvent& e) {
  std::ostringstream os;
  os << e.delta_ticks << '\t';
  std::visit(Describer{os}, e.kind);
  return os.str();
}

}  // namespace nmnc

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <variant>

#include "nmnc/compiler.hpp"
#include "nmnc/error.hpp"
#include "nmnc/library.hpp"
#include "nmnc/pitch.hpp"
#include "nmnc/smf.hpp"

namespace py = pybind11;
using namespace nmnc;

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace {

std::span<const std::uint8_t> view(const std::string& s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

py::bytes to_py(const Bytes& b) {
  return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
}

MajorScale scale_arg(const std::string& name) {
  auto s = scale_from_name(name);
  if (!s) throw RangeError("unknown major scale '" + name + "'");
  return *s;
}

py::dict event_dict(const MidiEvent& e) {
  py::dict d;
  d["delta"] = e.delta_ticks;
  std::visit(
      [&](const auto& ev) {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, NoteOn> || std::is_same_v<T, NoteOff>) {
          d["kind"] = std::is_same_v<T, NoteOn> ? "NoteOn" : "NoteOff";
          d["channel"] = ev.channel;
          d["note"] = ev.note;
          d["velocity"] = ev.velocity;
        } else if constexpr (std::is_same_v<T, ProgramChange>) {
          d["kind"] = "ProgramChange";
          d["channel"] = ev.channel;
          d["program"] = ev.program;
        } else if constexpr (std::is_same_v<T, ControlChange>) {
          d["kind"] = "ControlChange";
          d["channel"] = ev.channel;
          d["controller"] = ev.controller;
          d["value"] = ev.value;
        } else {
          d["kind"] = "EndOfTrack";
        }
      },
      e.kind);
  return d;
}

py::dict params_dict(const ParamSet& p) {
  py::dict d;
  d["speed"] = p.speed;
  d["volume"] = p.tune_volume;
  d["rhythm_volume"] = p.rhythm_volume;
  d["instrument"] = p.instrument;
  d["scale"] = std::string(scale_name(p.scale));
  d["rhythm"] = std::string(rhythm_name(p.rhythm));
  d["repeat"] = p.repeat;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Numbered musical notation to Standard MIDI File compiler";

  static py::exception<Error> error(m, "NmnError");
  static py::exception<CountMismatchError> count_error(m, "CountMismatchError", error.ptr());
  static py::exception<EmptyInputError> empty_error(m, "EmptyInputError", error.ptr());
  static py::exception<SyntaxError> syntax_error(m, "NmnSyntaxError", error.ptr());
  static py::exception<RangeError> range_error(m, "NmnRangeError", error.ptr());
  static py::exception<NotFoundError> not_found(m, "NotFoundError", error.ptr());
  static py::exception<DecodeError> decode_error(m, "DecodeError", error.ptr());

  // Most-derived first; each raised exception carries the numeric `code`.
  py::register_exception_translator([](std::exception_ptr p) {
    auto make = [](const py::object& type, const Error& e) {
      py::object exc = type(e.what());
      exc.attr("code") = static_cast<int>(e.code());
      return exc;
    };
    auto raise = [&](const py::object& type, const Error& e) {
      PyErr_SetObject(type.ptr(), make(type, e).ptr());
    };
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CountMismatchError& e) {
      py::object exc = make(count_error, e);
      exc.attr("tune_count") = e.tune_count();
      exc.attr("tempo_count") = e.tempo_count();
      PyErr_SetObject(count_error.ptr(), exc.ptr());
    } catch (const EmptyInputError& e) {
      raise(empty_error, e);
    } catch (const SyntaxError& e) {
      py::object exc = make(syntax_error, e);
      exc.attr("position") = e.position();
      exc.attr("token") = e.token();
      exc.attr("box") = e.box();
      PyErr_SetObject(syntax_error.ptr(), exc.ptr());
    } catch (const RangeError& e) {
      raise(range_error, e);
    } catch (const NotFoundError& e) {
      raise(not_found, e);
    } catch (const DecodeError& e) {
      raise(decode_error, e);
    } catch (const Error& e) {
      raise(error, e);
    }
  });

  py::class_<TuneToken>(m, "TuneToken")
      .def(py::init([](int degree, int octave_shift, bool sharp) {
             return TuneToken::note(degree, octave_shift, sharp);
           }),
           py::arg("degree"), py::arg("octave_shift") = 0, py::arg("sharp") = false)
      .def_readonly("degree", &TuneToken::degree)
      .def_readonly("octave_shift", &TuneToken::octave_shift)
      .def_readonly("sharp", &TuneToken::sharp)
      .def_property_readonly("is_rest", &TuneToken::is_rest)
      .def(py::self == py::self)
      .def("__repr__", [](const TuneToken& t) { return "TuneToken('" + render_tune(t) + "')"; });

  m.def("parse_tune_list", &parse_tune_list, py::arg("text"));
  m.def(
      "parse_tempo_list",
      [](std::string_view text) {
        std::vector<double> beats;
        for (auto t : parse_tempo_list(text)) beats.push_back(t.beats());
        return beats;
      },
      py::arg("text"), "Beats per entry, as floats.");
  m.def("render_tune_list", &render_tune_list, py::arg("tokens"));

  m.def(
      "validate",
      [](std::string_view tune, std::string_view tempo) {
        auto report = validate_texts(tune, tempo);
        py::list errors;
        for (const auto& issue : report.errors) {
          py::dict d;
          d["code"] = static_cast<int>(issue.code);
          d["message"] = issue.message;
          errors.append(d);
        }
        py::dict d;
        d["ok"] = report.ok;
        d["tune_count"] = report.tune_count;
        d["tempo_count"] = report.tempo_count;
        d["errors"] = errors;
        return d;
      },
      py::arg("tune"), py::arg("tempo"));

  m.def(
      "map_note",
      [](int degree, int octave_shift, bool sharp, const std::string& scale) {
        return map_note(TuneToken::note(degree, octave_shift, sharp), scale_arg(scale)).value;
      },
      py::arg("degree"), py::arg("octave_shift") = 0, py::arg("sharp") = false,
      py::arg("scale") = "C");

  m.def(
      "compile",
      [](std::string_view tune, std::string_view tempo, int speed, int volume, int rhythm_volume,
         py::object instrument, const std::string& scale, const std::string& rhythm, int repeat,
         bool note_off) {
        ParamSet p;
        p.speed = speed;
        p.tune_volume = volume;
        p.rhythm_volume = rhythm_volume;
        if (py::isinstance<py::str>(instrument)) {
          auto name = instrument.cast<std::string>();
          auto program = instrument_from_string(name);
          if (!program) throw RangeError("unknown instrument '" + name + "'");
          p.instrument = *program;
        } else {
          p.instrument = instrument.cast<int>();
        }
        p.scale = scale_arg(scale);
        auto r = rhythm_from_name(rhythm);
        if (!r) throw RangeError("unknown rhythm '" + rhythm + "'");
        p.rhythm = *r;
        p.repeat = repeat;
        p.note_off = note_off;
        return to_py(compile(tune, tempo, p).bytes);
      },
      py::arg("tune"), py::arg("tempo"), py::kw_only(), py::arg("speed") = 3,
      py::arg("volume") = 10, py::arg("rhythm_volume") = 10, py::arg("instrument") = 0,
      py::arg("scale") = "C", py::arg("rhythm") = "NONE", py::arg("repeat") = 1,
      py::arg("note_off") = false, "Compile tune/tempo text to Standard MIDI File bytes.");

  m.def(
      "read_smf",
      [](const py::bytes& data) {
        std::string raw = data;
        SmfFile f = read_smf(view(raw));
        py::list tracks;
        for (const auto& t : f.tracks) {
          py::list events;
          for (const auto& e : t) events.append(event_dict(e));
          tracks.append(events);
        }
        py::dict d;
        d["format"] = f.header.format;
        d["ntracks"] = f.header.ntracks;
        d["division"] = f.header.division;
        d["tracks"] = tracks;
        return d;
      },
      py::arg("data"));

  m.def(
      "hex_dump", [](const py::bytes& data) { return hex_dump(view(std::string(data))); },
      py::arg("data"));
  m.def(
      "encode_vlq", [](std::uint32_t n) { return to_py(encode_vlq(n)); }, py::arg("value"));
  m.def(
      "decode_vlq",
      [](const py::bytes& data) {
        auto r = decode_vlq(view(std::string(data)));
        return py::make_tuple(r.value, r.consumed);
      },
      py::arg("data"));

  m.def("list_songs", [] { return SongLibrary::builtin().list(); });
  m.def(
      "get_song",
      [](const std::string& id) {
        const Song& s = SongLibrary::builtin().get(id);
        py::dict d;
        d["id"] = s.id;
        d["title"] = s.title;
        d["tune"] = s.tune_text;
        d["tempo"] = s.tempo_text;
        d["params"] = params_dict(s.default_params);
        d["canonical"] = s.canonical;
        return d;
      },
      py::arg("id"));

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}

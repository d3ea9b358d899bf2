#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "nmnc/compiler.hpp"
#include "nmnc/document.hpp"
#include "nmnc/error.hpp"
#include "nmnc/library.hpp"
#include "nmnc/service.hpp"
#include "nmnc/smf.hpp"

namespace nmnc::cli {
namespace {

class ExitCode : public std::exception {
 public:
  ExitCode(int code, std::string message) : code_(code), message_(std::move(message)) {}
  int code() const { return code_; }
  const char* what() const noexcept override { return message_.c_str(); }

 private:
  int code_;
  std::string message_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExitCode(kNoInput, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct CompileOptions {
  std::optional<std::string> input;
  std::optional<std::string> library;
  std::optional<std::string> tune;
  std::optional<std::string> tempo;
  std::optional<int> speed;
  std::optional<int> volume;
  std::optional<int> rhythm_volume;
  std::optional<std::string> instrument;
  std::optional<std::string> scale;
  std::optional<std::string> rhythm;
  std::optional<int> repeat;
  bool note_off = false;
  std::string output = "0001.mid";
};

const SongLibrary& pick_library(const std::string& dir, std::optional<SongLibrary>& storage) {
  if (dir.empty()) return SongLibrary::builtin();
  storage = SongLibrary::from_directory(dir);
  return *storage;
}

int cmd_compile(const CompileOptions& o, const std::string& library_dir, std::ostream& out,
                std::ostream& err) {
  int sources = (o.input ? 1 : 0) + (o.library ? 1 : 0) + ((o.tune || o.tempo) ? 1 : 0);
  if (sources > 1) throw ExitCode(kUsage, "use only one of --input, --library or --tune/--tempo");

  std::string tune_text;
  std::string tempo_text;
  ParamSet params;
  if (o.input) {
    NmnDocument doc = parse_nmn(read_file(*o.input));
    tune_text = doc.tune_text;
    tempo_text = doc.tempo_text;
    params = doc.params();
  } else if (o.library) {
    std::optional<SongLibrary> storage;
    const Song& song = pick_library(library_dir, storage).get(*o.library);
    tune_text = song.tune_text;
    tempo_text = song.tempo_text;
    params = song.default_params;
  } else {
    tune_text = o.tune.value_or("");
    tempo_text = o.tempo.value_or("");
  }

  if (o.speed) params.speed = *o.speed;
  if (o.volume) params.tune_volume = *o.volume;
  if (o.rhythm_volume) params.rhythm_volume = *o.rhythm_volume;
  if (o.repeat) params.repeat = *o.repeat;
  if (o.note_off) params.note_off = true;
  if (o.instrument) {
    auto program = instrument_from_string(*o.instrument);
    if (!program) throw RangeError("unknown instrument '" + *o.instrument + "'");
    params.instrument = *program;
  }
  if (o.scale) {
    auto scale = scale_from_name(*o.scale);
    if (!scale) throw RangeError("unknown major scale '" + *o.scale + "'");
    params.scale = *scale;
  }
  if (o.rhythm) {
    auto rhythm = rhythm_from_name(*o.rhythm);
    if (!rhythm) throw RangeError("unknown rhythm '" + *o.rhythm + "'");
    params.rhythm = *rhythm;
  }

  CompileResult result = compile(tune_text, tempo_text, params);
  for (const auto& w : result.warnings) {
    err << "warning: tempo entry " << w.position << " (" << render_tempo(w.tempo)
        << " beats) rounded to " << w.ticks << " ticks\n";
  }

  std::ostream& summary = o.output == "-" ? err : out;
  if (o.output == "-") {
    out.write(reinterpret_cast<const char*>(result.bytes.data()),
              static_cast<std::streamsize>(result.bytes.size()));
  } else {
    std::ofstream file(o.output, std::ios::binary);
    file.write(reinterpret_cast<const char*>(result.bytes.data()),
               static_cast<std::streamsize>(result.bytes.size()));
    if (!file) throw ExitCode(kCantCreate, "cannot write " + o.output);
  }
  summary << "wrote " << o.output << ": " << result.bytes.size() << " bytes, " << result.total_ticks
          << " ticks\n";
  return kOk;
}

int cmd_inspect(const std::string& path, bool hex, bool events, std::ostream& out) {
  std::string raw = read_file(path);
  std::span<const std::uint8_t> bytes(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size());
  SmfFile file = read_smf(bytes);
  if (hex) out << hex_dump(bytes);
  if (events) {
    for (std::size_t t = 0; t < file.tracks.size(); ++t) {
      for (const auto& e : file.tracks[t]) out << t << '\t' << describe(e) << '\n';
    }
  }
  if (!hex && !events) {
    out << "format " << file.header.format << ", " << file.header.ntracks << " track(s), division "
        << file.header.division << ", " << bytes.size() << " bytes\n";
    for (std::size_t t = 0; t < file.tracks.size(); ++t) {
      out << "track " << t << ": " << file.tracks[t].size() << " events, "
          << total_ticks(file.tracks[t]) << " ticks\n";
    }
  }
  return kOk;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::CountMismatch: return kCountMismatch;
    case ErrorCode::EmptyInput: return kEmptyInput;
    case ErrorCode::Invalid: return kInvalid;
    case ErrorCode::NotFound: return kNotFound;
  }
  return kInvalid;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numbered musical notation to Standard MIDI File compiler", "nmnc"};
  app.require_subcommand(1);

  std::string library_dir;
  app.add_option("--library-dir", library_dir, "Load songs from this directory of .nmn files")
      ->check(CLI::ExistingDirectory);

  CompileOptions co;
  auto* compile_cmd = app.add_subcommand("compile", "Compile tune/tempo input to a .mid file");
  compile_cmd->add_option("--input", co.input, ".nmn document to compile");
  compile_cmd->add_option("--library", co.library, "Library song id to compile");
  compile_cmd->add_option("--tune", co.tune, "Tune box contents, e.g. \"1, 3, 5, 0\"");
  compile_cmd->add_option("--tempo", co.tempo, "Tempo box contents, e.g. \"0, 0, 0, 2\"");
  compile_cmd->add_option("--speed", co.speed, "Speed 0..10 (header division)");
  compile_cmd->add_option("--volume", co.volume, "Tune volume 0..10");
  compile_cmd->add_option("--rhythm-volume", co.rhythm_volume, "Rhythm volume 0..10");
  compile_cmd->add_option("--instrument", co.instrument, "GM program 0..127 or instrument name");
  compile_cmd->add_option("--scale", co.scale, "Major scale: C Db D Eb E F Fs G Ab A Bb B");
  compile_cmd->add_option("--rhythm", co.rhythm, "NONE, Waltz, Rock, Disco or Rumba");
  compile_cmd->add_option("--repeat", co.repeat, "Play the melody this many times");
  compile_cmd->add_flag("--note-off", co.note_off, "Emit NoteOff events at note boundaries");
  compile_cmd->add_option("-o,--output", co.output, "Output path, '-' for stdout")
      ->capture_default_str();

  std::string inspect_path;
  bool inspect_hex = false;
  bool inspect_events = false;
  auto* inspect_cmd = app.add_subcommand("inspect", "Decode a MIDI file");
  inspect_cmd->add_option("file", inspect_path, "MIDI file")->required();
  inspect_cmd->add_flag("--hex", inspect_hex, "Hex dump, 16 bytes per row");
  inspect_cmd->add_flag("--events", inspect_events, "One decoded event per line");

  std::string show_id;
  auto* library_cmd = app.add_subcommand("library", "Built-in song library");
  library_cmd->require_subcommand(1);
  auto* list_cmd = library_cmd->add_subcommand("list", "List song ids and titles");
  auto* show_cmd = library_cmd->add_subcommand("show", "Print a song as .nmn text");
  show_cmd->add_option("id", show_id, "Song id")->required();

  service::ServerOptions so;
  so.port = service::port_from_env();
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP compile service");
  serve_cmd->add_option("--port", so.port, "Port (default $NMNC_PORT or 8473)")
      ->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", so.host, "Bind address")->capture_default_str();
  serve_cmd->add_option("--cors-origin", so.cors_origin, "Additional allowed CORS origin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "nmnc: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (compile_cmd->parsed()) return cmd_compile(co, library_dir, out, err);
    if (inspect_cmd->parsed()) return cmd_inspect(inspect_path, inspect_hex, inspect_events, out);
    if (library_cmd->parsed()) {
      std::optional<SongLibrary> storage;
      const SongLibrary& lib = pick_library(library_dir, storage);
      if (list_cmd->parsed()) {
        for (const auto& [id, title] : lib.list()) out << id << '\t' << title << '\n';
      } else if (show_cmd->parsed()) {
        out << SongLibrary::to_nmn(lib.get(show_id));
      }
      return kOk;
    }
    if (serve_cmd->parsed()) {
      std::optional<SongLibrary> storage;
      service::Api api(pick_library(library_dir, storage));
      err << "serving on http://" << so.host << ':' << so.port << '\n';
      if (!service::run_server(api, so)) {
        err << "nmnc: cannot listen on " << so.host << ':' << so.port << '\n';
        return kCantCreate;
      }
      return kOk;
    }
  } catch (const ExitCode& e) {
    err << "nmnc: " << e.what() << '\n';
    return e.code();
  } catch (const Error& e) {
    err << "nmnc: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::filesystem::filesystem_error& e) {
    err << "nmnc: " << e.what() << '\n';
    return kNoInput;
  }
  return kUsage;
}

}  // namespace nmnc::cli

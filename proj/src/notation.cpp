#include "nmnc/notation.hpp"

#include <cctype>

#include "nmnc/error.hpp"

namespace nmnc {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Splits on commas and whitespace. An empty slot between commas (or a leading or
// trailing comma) is reported as a SyntaxError at the index it would occupy.
std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> out;
  bool saw_comma = false;
  std::size_t seg_begin = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] != ',') continue;
    if (i < text.size()) saw_comma = true;
    std::string_view seg = text.substr(seg_begin, i - seg_begin);
    std::size_t before = out.size();
    std::size_t j = 0;
    while (j < seg.size()) {
      while (j < seg.size() && is_space(seg[j])) ++j;
      std::size_t start = j;
      while (j < seg.size() && !is_space(seg[j])) ++j;
      if (j > start) out.push_back(seg.substr(start, j - start));
    }
    if (out.size() == before && saw_comma) {
      throw SyntaxError(out.size() + 1, "", "empty entry between separators");
    }
    seg_begin = i + 1;
  }
  return out;
}

TuneToken parse_tune_token(std::string_view tok, std::size_t position) {
  auto fail = [&](const char* why) -> TuneToken { throw SyntaxError(position, std::string(tok), why); };
  if (tok == "0") return TuneToken::rest();

  std::size_t i = 0;
  bool lower = false;
  if (i < tok.size() && tok[i] == '-') {
    lower = true;
    ++i;
  }
  if (i >= tok.size() || !is_digit(tok[i])) return fail("expected a scale degree 1..7");
  int degree = tok[i] - '0';
  if (degree < 1 || degree > 7) {
    return fail(degree == 0 ? "a rest is written as a lone 0" : "scale degree must be 1..7");
  }
  ++i;
  int zeros = 0;
  while (i < tok.size() && tok[i] == '0') {
    ++zeros;
    ++i;
  }
  bool sharp = false;
  if (i < tok.size()) {
    if (tok.substr(i) != ".5") return fail("only '.5' (sharp) may follow the octave marks");
    sharp = true;
  }
  if (sharp && (degree == 3 || degree == 7)) return fail("degrees 3 and 7 have no sharp");

  int shift = lower ? -(zeros + 1) : zeros;
  if (shift > kMaxOctaveShift || shift < -kMaxOctaveShift) return fail("octave shift beyond +/-5");
  return TuneToken::note(degree, shift, sharp);
}

TempoToken parse_tempo_token(std::string_view tok, std::size_t position) {
  auto fail = [&](const char* why) -> TempoToken {
    throw SyntaxError(position, std::string(tok), why);
  };
  if (!tok.empty() && tok[0] == '-') return fail("duration must not be negative");
  std::size_t i = 0;
  std::uint64_t whole = 0;
  std::size_t int_digits = 0;
  while (i < tok.size() && is_digit(tok[i])) {
    if (++int_digits > 9) return fail("duration too large");
    whole = whole * 10 + static_cast<std::uint64_t>(tok[i] - '0');
    ++i;
  }
  if (int_digits == 0) return fail("expected a decimal number of beats");
  std::uint64_t frac = 0;
  if (i < tok.size()) {
    if (tok[i] != '.') return fail("expected a decimal number of beats");
    ++i;
    std::size_t frac_digits = 0;
    while (i < tok.size() && is_digit(tok[i])) {
      if (++frac_digits > 3) return fail("at most three fractional digits");
      frac = frac * 10 + static_cast<std::uint64_t>(tok[i] - '0');
      ++i;
    }
    if (frac_digits == 0) return fail("missing digits after '.'");
    if (i != tok.size()) return fail("expected a decimal number of beats");
    for (; frac_digits < 3; ++frac_digits) frac *= 10;
  }
  return TempoToken::from_millibeats(whole * 1000 + frac);
}

}  // namespace

std::vector<TuneToken> parse_tune_list(std::string_view text) {
  std::vector<TuneToken> out;
  auto toks = split_tokens(text);
  out.reserve(toks.size());
  for (std::size_t i = 0; i < toks.size(); ++i) out.push_back(parse_tune_token(toks[i], i + 1));
  return out;
}

std::vector<TempoToken> parse_tempo_list(std::string_view text) {
  std::vector<TempoToken> out;
  auto toks = split_tokens(text);
  out.reserve(toks.size());
  for (std::size_t i = 0; i < toks.size(); ++i) out.push_back(parse_tempo_token(toks[i], i + 1));
  return out;
}

std::size_t count_tokens(std::string_view text) {
  std::size_t n = 0;
  bool in_token = false;
  for (char c : text) {
    bool sep = c == ',' || is_space(c);
    if (!sep && !in_token) ++n;
    in_token = !sep;
  }
  return n;
}

Melody validate_melody(std::vector<TuneToken> tunes, std::vector<TempoToken> tempos) {
  if (tunes.empty() || tempos.empty()) throw EmptyInputError();
  if (tunes.size() != tempos.size()) throw CountMismatchError(tunes.size(), tempos.size());
  return Melody{std::move(tunes), std::move(tempos)};
}

Melody parse_melody(std::string_view tune_text, std::string_view tempo_text) {
  std::vector<TuneToken> tunes;
  std::vector<TempoToken> tempos;
  try {
    tunes = parse_tune_list(tune_text);
  } catch (const SyntaxError& e) {
    throw e.in_box("tune");
  }
  try {
    tempos = parse_tempo_list(tempo_text);
  } catch (const SyntaxError& e) {
    throw e.in_box("tempo");
  }
  return validate_melody(std::move(tunes), std::move(tempos));
}

bool is_valid(const TuneToken& t) {
  if (t.degree == 0) return t.octave_shift == 0 && !t.sharp;
  if (t.degree < 1 || t.degree > 7) return false;
  if (t.sharp && (t.degree == 3 || t.degree == 7)) return false;
  return t.octave_shift >= -kMaxOctaveShift && t.octave_shift <= kMaxOctaveShift;
}

std::string render_tune(const TuneToken& t) {
  if (t.is_rest()) return "0";
  std::string s;
  int zeros = t.octave_shift;
  if (t.octave_shift < 0) {
    s += '-';
    zeros = -t.octave_shift - 1;
  }
  s += static_cast<char>('0' + t.degree);
  s.append(static_cast<std::size_t>(zeros), '0');
  if (t.sharp) s += ".5";
  return s;
}

std::string render_tempo(const TempoToken& t) {
  std::string s = std::to_string(t.millibeats / 1000);
  auto frac = t.millibeats % 1000;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, 3 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    s += '.';
    s += digits;
  }
  return s;
}

namespace {
template <typename T, typename F>
std::string join(const std::vector<T>& items, F render) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += render(items[i]);
  }
  return out;
}
}  // namespace

std::string render_tune_list(const std::vector<TuneToken>& tokens) {
  return join(tokens, render_tune);
}

std::string render_tempo_list(const std::vector<TempoToken>& tokens) {
  return join(tokens, render_tempo);
}

}  // namespace nmnc

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nmnc {

/// Stable error codes. The numeric values are part of the public contract:
/// they are the CLI exit codes and the `error_code` field of HTTP error bodies.
enum class ErrorCode : int {
  CountMismatch = 1,  // "Error 1"
  EmptyInput = 2,     // "Error 2"
  Invalid = 3,        // syntax, range, decode
  NotFound = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A malformed token in a tune or tempo list. `position` is the 1-based token index.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string token, std::string reason, std::string box = "");
  std::size_t position() const noexcept { return position_; }
  const std::string& token() const noexcept { return token_; }
  const std::string& reason() const noexcept { return reason_; }
  /// "tune" or "tempo" when known.
  const std::string& box() const noexcept { return box_; }

  SyntaxError in_box(std::string box) const { return {position_, token_, reason_, std::move(box)}; }

 private:
  std::size_t position_;
  std::string token_;
  std::string reason_;
  std::string box_;
};

/// Error 1: the tune and tempo boxes hold different numbers of entries.
class CountMismatchError : public Error {
 public:
  CountMismatchError(std::size_t tune_count, std::size_t tempo_count);
  std::size_t tune_count() const noexcept { return tune_count_; }
  std::size_t tempo_count() const noexcept { return tempo_count_; }

 private:
  std::size_t tune_count_;
  std::size_t tempo_count_;
};

/// Error 2: a box is blank.
class EmptyInputError : public Error {
 public:
  EmptyInputError();
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error(ErrorCode::Invalid, what) {}
};

class NotFoundError : public Error {
 public:
  explicit NotFoundError(const std::string& what) : Error(ErrorCode::NotFound, what) {}
};

enum class DecodeFailure { BadMagic, LengthMismatch, UnknownEvent, TruncatedInput, Overlong };

const char* to_string(DecodeFailure f) noexcept;

/// Failure while reading MIDI bytes; `offset` is the byte position where it was detected.
class DecodeError : public Error {
 public:
  DecodeError(DecodeFailure failure, std::size_t offset, const std::string& detail);
  DecodeFailure failure() const noexcept { return failure_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  DecodeFailure failure_;
  std::size_t offset_;
};

}  // namespace nmnc

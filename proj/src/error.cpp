#include "nmnc/error.hpp"

namespace nmnc {

SyntaxError::SyntaxError(std::size_t position, std::string token, std::string reason,
                         std::string box)
    : Error(ErrorCode::Invalid, (box.empty() ? "" : box + " ") + "syntax error at entry " +
                                    std::to_string(position) + " '" + token + "': " + reason),
      position_(position),
      token_(std::move(token)),
      reason_(std::move(reason)),
      box_(std::move(box)) {}

CountMismatchError::CountMismatchError(std::size_t tune_count, std::size_t tempo_count)
    : Error(ErrorCode::CountMismatch,
            "Error 1: The quantities of numbers in the Tune box (" + std::to_string(tune_count) +
                ") and the Tempo box (" + std::to_string(tempo_count) + ") are different."),
      tune_count_(tune_count),
      tempo_count_(tempo_count) {}

EmptyInputError::EmptyInputError()
    : Error(ErrorCode::EmptyInput, "Error 2: The Tune box and the Tempo box must not be blank.") {}

const char* to_string(DecodeFailure f) noexcept {
  switch (f) {
    case DecodeFailure::BadMagic: return "BadMagic";
    case DecodeFailure::LengthMismatch: return "LengthMismatch";
    case DecodeFailure::UnknownEvent: return "UnknownEvent";
    case DecodeFailure::TruncatedInput: return "TruncatedInput";
    case DecodeFailure::Overlong: return "Overlong";
  }
  return "?";
}

DecodeError::DecodeError(DecodeFailure failure, std::size_t offset, const std::string& detail)
    : Error(ErrorCode::Invalid, std::string(to_string(failure)) + " at offset " +
                                    std::to_string(offset) + (detail.empty() ? "" : ": " + detail)),
      failure_(failure),
      offset_(offset) {}

}  // namespace nmnc

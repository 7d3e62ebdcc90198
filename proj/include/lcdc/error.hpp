#pragma once

#include <stdexcept>
#include <string>

namespace lcdc {

/// Stable error identifiers. The enumerator order is frozen: identifiers and
/// CLI exit codes are derived from it and must not change between releases.
enum class errc {
  not_prime,
  not_monic,
  odd_degree,
  reducible,
  even_characteristic,
  no_square_root_of_minus_one,
  singular,
  non_square,
  length_mismatch,
  missing_alpha,
  too_large,
  trivial_code,
  not_lcd,
  wrong_characteristic,
  b_block_singular,
  omega_trace_zero,
  parse_error,
  category_mismatch,
};

inline const char* error_identifier(errc c) {
  switch (c) {
    case errc::not_prime: return "NotPrime";
    case errc::not_monic: return "NotMonic";
    case errc::odd_degree: return "OddDegree";
    case errc::reducible: return "Reducible";
    case errc::even_characteristic: return "EvenCharacteristic";
    case errc::no_square_root_of_minus_one: return "NoSquareRootOfMinusOne";
    case errc::singular: return "Singular";
    case errc::non_square: return "NonSquare";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::missing_alpha: return "MissingAlpha";
    case errc::too_large: return "TooLarge";
    case errc::trivial_code: return "TrivialCode";
    case errc::not_lcd: return "NotLCD";
    case errc::wrong_characteristic: return "WrongCharacteristic";
    case errc::b_block_singular: return "BBlockSingular";
    case errc::omega_trace_zero: return "OmegaTraceZero";
    case errc::parse_error: return "ParseError";
    case errc::category_mismatch: return "CategoryMismatch";
  }
  return "Unknown";
}

/// Exit codes group related failures; 0 is success (a "not LCD" verdict is a
/// successful run). Code 64 is reserved for command-line usage errors.
inline int error_exit_code(errc c) {
  switch (c) {
    case errc::parse_error: return 2;
    case errc::category_mismatch: return 3;
    case errc::not_prime:
    case errc::not_monic:
    case errc::odd_degree:
    case errc::reducible: return 4;
    case errc::even_characteristic:
    case errc::no_square_root_of_minus_one:
    case errc::missing_alpha: return 5;
    case errc::singular:
    case errc::non_square:
    case errc::length_mismatch: return 6;
    case errc::too_large: return 7;
    case errc::trivial_code: return 8;
    case errc::not_lcd: return 9;
    case errc::wrong_characteristic:
    case errc::b_block_singular:
    case errc::omega_trace_zero: return 10;
  }
  return 1;
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(error_identifier(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }
  const char* identifier() const noexcept { return error_identifier(code_); }
  int exit_code() const noexcept { return error_exit_code(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace lcdc

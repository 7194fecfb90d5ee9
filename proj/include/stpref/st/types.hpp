#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace stpref::st {

enum class Elementary {
  BOOL,
  SINT,
  INT,
  DINT,
  LINT,
  USINT,
  UINT,
  UDINT,
  ULINT,
  REAL,
  LREAL,
  TIME,
  STRING,
  BYTE,
  WORD,
  DWORD,
  LWORD,
};

std::optional<Elementary> elementary_from_name(std::string_view upper_name);
const char* name_of(Elementary e);

bool is_signed_int(Elementary e);
bool is_unsigned_int(Elementary e);
inline bool is_integer(Elementary e) { return is_signed_int(e) || is_unsigned_int(e); }
inline bool is_real(Elementary e) { return e == Elementary::REAL || e == Elementary::LREAL; }
inline bool is_numeric(Elementary e) { return is_integer(e) || is_real(e); }
bool is_bit(Elementary e);  // BYTE, WORD, DWORD, LWORD

// Bit width for integers and bit strings; 0 for everything else.
int bit_width(Elementary e);

// Inclusive value range of an integer or bit-string type, as 128-bit values so
// both LINT and ULINT fit.
struct IntRange {
  __int128 lo;
  __int128 hi;
};
std::optional<IntRange> int_range(Elementary e);

// Implicit widening permitted by the type checker: identity, widening within
// signed integers, within unsigned integers, within bit strings, any integer to
// REAL/LREAL, and REAL to LREAL.
bool widens_to(Elementary from, Elementary to);

}  // namespace stpref::st

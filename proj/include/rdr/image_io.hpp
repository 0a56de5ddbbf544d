#pragma once

#include "rdr/field.hpp"

#include <string>

namespace rdr {

enum class PgmFormat { Binary, Ascii };  // P5 / P2

// Reads a P2 or P5 PGM with maxval 255 into real intensities 0..255.
// Throws IoError with distinct messages for: unreadable file, malformed
// header, unsupported maxval, truncated or out-of-range payload.
Image load_image(const std::string& path);

// Writes a PGM, clamping to [0, 255] and rounding half to even. Byte-exact
// for a given field and format.
void save_image(const Image& field, const std::string& path,
                PgmFormat format = PgmFormat::Binary);

}  // namespace rdr

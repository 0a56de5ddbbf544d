#include "rdr/image_io.hpp"

#include "rdr/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace rdr {

namespace {

// Next header token, skipping whitespace and '#' comment lines.
bool next_token(std::istream& in, std::string& tok) {
  tok.clear();
  int ch = in.get();
  while (ch != EOF) {
    if (ch == '#') {
      while (ch != EOF && ch != '\n') ch = in.get();
    } else if (std::isspace(ch)) {
      ch = in.get();
    } else {
      break;
    }
  }
  if (ch == EOF) return false;
  while (ch != EOF && !std::isspace(ch) && ch != '#') {
    tok.push_back(static_cast<char>(ch));
    ch = in.get();
  }
  if (ch == '#') in.unget();
  return true;
}

long parse_header_int(std::istream& in, const std::string& path, const char* what) {
  std::string tok;
  if (!next_token(in, tok)) {
    throw IoError("malformed PGM header in " + path + ": missing " + what);
  }
  try {
    size_t used = 0;
    const long value = std::stol(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw IoError("malformed PGM header in " + path + ": bad " + what + " '" + tok + "'");
  }
}

}  // namespace

Image load_image(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open image file: " + path);

  std::string magic;
  if (!next_token(in, magic) || (magic != "P2" && magic != "P5")) {
    throw IoError("malformed PGM header in " + path + ": expected magic P2 or P5");
  }
  const long width = parse_header_int(in, path, "width");
  const long height = parse_header_int(in, path, "height");
  const long maxval = parse_header_int(in, path, "maxval");
  if (width <= 0 || height <= 0) {
    throw IoError("malformed PGM header in " + path + ": non-positive dimensions");
  }
  if (maxval != 255) {
    throw IoError("unsupported PGM maxval in " + path + ": expected 255, got " +
                  std::to_string(maxval));
  }

  Image img(height, width);
  if (magic == "P5") {
    // single whitespace byte separates the header from the raster
    const long total = width * height;
    std::string buf(static_cast<size_t>(total), '\0');
    in.read(buf.data(), total);
    if (in.gcount() != total) {
      throw IoError("truncated PGM payload in " + path);
    }
    for (long k = 0; k < total; ++k) {
      img(k / width, k % width) = static_cast<double>(static_cast<std::uint8_t>(buf[static_cast<size_t>(k)]));
    }
  } else {
    for (long k = 0; k < width * height; ++k) {
      std::string tok;
      if (!next_token(in, tok)) {
        throw IoError("truncated PGM payload in " + path);
      }
      long value = 0;
      try {
        size_t used = 0;
        value = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw IoError("malformed PGM payload in " + path + ": bad sample '" + tok + "'");
      }
      if (value < 0 || value > 255) {
        throw IoError("malformed PGM payload in " + path + ": sample out of range");
      }
      img(k / width, k % width) = static_cast<double>(value);
    }
  }
  return img;
}

void save_image(const Image& field, const std::string& path, PgmFormat format) {
  require_nonempty(field, "save_image");
  require_finite(field, "save_image");
  const Eigen::Index H = field.rows(), W = field.cols();

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file for writing: " + path);

  out << (format == PgmFormat::Binary ? "P5" : "P2") << "\n" << W << " " << H << "\n255\n";
  const auto quantize = [](double x) {
    const double clamped = std::min(255.0, std::max(0.0, x));
    return static_cast<int>(std::nearbyint(clamped));  // half to even
  };
  if (format == PgmFormat::Binary) {
    std::string buf;
    buf.reserve(static_cast<size_t>(W * H));
    for (Eigen::Index y = 0; y < H; ++y) {
      for (Eigen::Index x = 0; x < W; ++x) {
        buf.push_back(static_cast<char>(static_cast<std::uint8_t>(quantize(field(y, x)))));
      }
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  } else {
    for (Eigen::Index y = 0; y < H; ++y) {
      for (Eigen::Index x = 0; x < W; ++x) {
        out << quantize(field(y, x)) << (x + 1 < W ? ' ' : '\n');
      }
    }
  }
  if (!out) throw IoError("write failure on " + path);
}

}  // namespace rdr

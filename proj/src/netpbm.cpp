#include "cobs/netpbm.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace cobs {

namespace {

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CodecError("cannot open for writing: " + path.string());
  out.write(bytes.data(), std::streamsize(bytes.size()));
  if (!out) throw CodecError("short write: " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingInput("cannot open: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

// Skips whitespace and '#' comments, then parses one decimal token.
int parse_header_int(const std::string& bytes, size_t& pos, const std::filesystem::path& path) {
  while (pos < bytes.size()) {
    const char c = bytes[pos];
    if (c == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++pos;
    } else {
      break;
    }
  }
  if (pos >= bytes.size() || bytes[pos] < '0' || bytes[pos] > '9')
    throw CodecError("malformed netpbm header: " + path.string());
  long v = 0;
  while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
    v = v * 10 + (bytes[pos] - '0');
    if (v > std::numeric_limits<int>::max()) throw CodecError("netpbm value overflow: " + path.string());
    ++pos;
  }
  return int(v);
}

struct PnmHeader {
  int width, height, maxval;
  size_t data_offset;
};

PnmHeader parse_header(const std::string& bytes, const char* magic,
                       const std::filesystem::path& path) {
  if (bytes.size() < 2 || bytes[0] != magic[0] || bytes[1] != magic[1])
    throw CodecError(std::string("expected ") + magic + " file: " + path.string());
  size_t pos = 2;
  PnmHeader h{};
  h.width = parse_header_int(bytes, pos, path);
  h.height = parse_header_int(bytes, pos, path);
  h.maxval = parse_header_int(bytes, pos, path);
  if (pos >= bytes.size()) throw CodecError("truncated netpbm header: " + path.string());
  ++pos;  // single whitespace byte before raster data
  h.data_offset = pos;
  if (h.width < 1 || h.height < 1) throw CodecError("bad raster dimensions: " + path.string());
  return h;
}

std::string header_string(const char* magic, int w, int h, int maxval) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s\n%d %d\n%d\n", magic, w, h, maxval);
  return buf;
}

}  // namespace

void write_ppm(const std::filesystem::path& path, const Image& image) {
  std::string bytes = header_string("P6", image.width, image.height, 255);
  bytes.append(reinterpret_cast<const char*>(image.data.data()), image.data.size());
  write_file(path, bytes);
}

Image read_ppm(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  const PnmHeader h = parse_header(bytes, "P6", path);
  if (h.maxval != 255) throw CodecError("unsupported P6 maxval: " + path.string());
  const size_t need = size_t(h.width) * h.height * 3;
  if (bytes.size() - h.data_offset < need) throw CodecError("truncated P6 raster: " + path.string());
  Image img(h.width, h.height);
  std::copy_n(bytes.data() + h.data_offset, need, reinterpret_cast<char*>(img.data.data()));
  return img;
}

void write_mask_pgm(const std::filesystem::path& path, const Mask& mask) {
  std::string bytes = header_string("P5", mask.width, mask.height, 255);
  for (auto b : mask.bits) bytes.push_back(b ? char(255) : char(0));
  write_file(path, bytes);
}

Mask read_mask_pgm(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  const PnmHeader h = parse_header(bytes, "P5", path);
  if (h.maxval != 255) throw CodecError("unsupported mask maxval: " + path.string());
  const size_t need = size_t(h.width) * h.height;
  if (bytes.size() - h.data_offset < need) throw CodecError("truncated P5 raster: " + path.string());
  Mask mask(h.width, h.height);
  for (size_t p = 0; p < need; ++p)
    mask.bits[p] = (static_cast<unsigned char>(bytes[h.data_offset + p]) >= 128) ? 1 : 0;
  return mask;
}

static std::filesystem::path sidecar_path(const std::filesystem::path& path) {
  auto p = path;
  p += ".range";
  return p;
}

void write_depth_pgm16(const std::filesystem::path& path, const DepthMap& depth) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : depth.values) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0)
      throw CodecError("depth values must be finite and in [0,1]: " + path.string());
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (depth.values.empty()) lo = hi = 0.0;

  std::string bytes = header_string("P5", depth.width, depth.height, 65535);
  for (double v : depth.values) {
    const auto q = static_cast<std::uint16_t>(std::lround(v * 65535.0));
    bytes.push_back(char(q >> 8));
    bytes.push_back(char(q & 0xff));
  }
  write_file(path, bytes);

  char side[128];
  std::snprintf(side, sizeof side, "min %.17g\nmax %.17g\n", lo, hi);
  write_file(sidecar_path(path), side);
}

DepthMap read_depth_pgm16(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  const PnmHeader h = parse_header(bytes, "P5", path);
  if (h.maxval != 65535) throw CodecError("unsupported depth maxval: " + path.string());
  const size_t need = size_t(h.width) * h.height * 2;
  if (bytes.size() - h.data_offset < need) throw CodecError("truncated depth raster: " + path.string());
  DepthMap depth(h.width, h.height);
  for (size_t p = 0; p < depth.values.size(); ++p) {
    const auto hi = static_cast<unsigned char>(bytes[h.data_offset + 2 * p]);
    const auto lo = static_cast<unsigned char>(bytes[h.data_offset + 2 * p + 1]);
    depth.values[p] = double((unsigned(hi) << 8) | lo) / 65535.0;
  }
  return depth;
}

std::pair<double, double> read_depth_range(const std::filesystem::path& path) {
  const std::string bytes = read_file(sidecar_path(path));
  double lo = 0.0, hi = 0.0;
  if (std::sscanf(bytes.c_str(), "min %lg max %lg", &lo, &hi) != 2)
    throw CodecError("malformed depth sidecar: " + sidecar_path(path).string());
  return {lo, hi};
}

}  // namespace cobs

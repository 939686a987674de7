#include "frameforge/matrix_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace frameforge {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr std::array<char, 4> kMagic = {'F', 'F', 'M', 'X'};

std::string format_double(double x) {
  std::array<char, 32> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

double parse_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double x = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw IoError("malformed number '" + std::string(s) + "'");
  return x;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

template <class T>
T to_little(T v) {
  if constexpr (std::endian::native == std::endian::big) {
    auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(v);
    std::reverse(bytes.begin(), bytes.end());
    return std::bit_cast<T>(bytes);
  }
  return v;
}

template <class T>
void put(std::ostream& out, T v) {
  v = to_little(v);
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw IoError("truncated binary matrix");
  return to_little(v);
}

ordered_json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

ordered_json sidecar_json(const TruncatedMatrix& a) {
  ordered_json j;
  j["n"] = a.size();
  j["margin"] = a.margin();
  j["dtype"] = a.is_real() ? "f64" : "c128";
  return j;
}

TruncatedMatrix read_binary(std::istream& in) {
  const auto n = get<std::uint32_t>(in);
  const auto flags = get<std::uint32_t>(in);
  const auto margin = get<std::uint32_t>(in);
  if (n == 0) throw IoError("binary matrix has N = 0");
  const bool complex = (flags & 1u) != 0;
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const double re = get<double>(in);
      const double im = complex ? get<double>(in) : 0.0;
      m(i, j) = Complex(re, im);
    }
  try {
    return TruncatedMatrix(std::move(m), margin);
  } catch (const InvalidArgument& e) {
    throw IoError(std::string("invalid matrix: ") + e.what());
  }
}

TruncatedMatrix read_csv(std::istream& in, const fs::path& path) {
  std::vector<std::vector<Complex>> rows;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view view = trim(line);
    if (view.empty()) continue;
    std::vector<Complex> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = view.find(',', start);
      const auto cell = trim(view.substr(start, comma == std::string_view::npos ? view.npos : comma - start));
      try {
        row.push_back(parse_complex(cell));
      } catch (const InvalidArgument& e) {
        throw IoError(e.what());
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  const auto n = static_cast<Index>(rows.size());
  if (n == 0) throw IoError("empty matrix file " + path.string());
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    if (static_cast<Index>(rows[i].size()) != n)
      throw IoError("matrix file " + path.string() + " is not square");
    for (Index j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }

  Index margin = default_margin(n);
  const fs::path side = sidecar_path(path);
  if (fs::exists(side)) {
    const ordered_json j = read_json_file(side);
    try {
      if (j.contains("n") && j["n"].get<Index>() != n)
        throw IoError("sidecar size does not match " + path.string());
      if (j.contains("margin")) margin = j["margin"].get<Index>();
    } catch (const nlohmann::json::exception& e) {
      throw IoError("malformed sidecar " + side.string() + ": " + e.what());
    }
  }
  try {
    return TruncatedMatrix(std::move(m), margin);
  } catch (const InvalidArgument& e) {
    throw IoError(std::string("invalid matrix: ") + e.what());
  }
}

}  // namespace

fs::path sidecar_path(const fs::path& matrix_path) {
  fs::path p = matrix_path;
  return p.replace_extension(".json");
}

Complex parse_complex(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw InvalidArgument("empty matrix entry");
  try {
    if (s.back() != 'j') return {parse_double(s), 0.0};
    s.remove_suffix(1);
    // Split at the last sign that is not an exponent sign or the leading sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
      if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
        split = i;
        break;
      }
    }
    if (split == std::string_view::npos) return {0.0, parse_double(s)};
    return {parse_double(s.substr(0, split)), parse_double(s.substr(split))};
  } catch (const IoError& e) {
    throw InvalidArgument(e.what());
  }
}

std::string format_complex(Complex z, bool as_complex) {
  if (!as_complex) return format_double(z.real());
  std::string im = format_double(z.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return format_double(z.real()) + im + "j";
}

void write_matrix_csv(const fs::path& path, const TruncatedMatrix& a) {
  const bool complex = !a.is_real();
  std::ostringstream out;
  for (Index i = 1; i <= a.size(); ++i) {
    for (Index j = 1; j <= a.size(); ++j) {
      if (j > 1) out << ',';
      out << format_complex(a(i, j), complex);
    }
    out << '\n';
  }
  write_text(path, out.str());
  write_text(sidecar_path(path), sidecar_json(a).dump(2) + "\n");
}

void write_matrix_binary(const fs::path& path, const TruncatedMatrix& a) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  const bool complex = !a.is_real();
  out.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(out, static_cast<std::uint32_t>(a.size()));
  put<std::uint32_t>(out, complex ? 1u : 0u);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(a.margin()));
  for (Index i = 1; i <= a.size(); ++i)
    for (Index j = 1; j <= a.size(); ++j) {
      put<double>(out, a(i, j).real());
      if (complex) put<double>(out, a(i, j).imag());
    }
  if (!out) throw IoError("write failed for " + path.string());
}

TruncatedMatrix read_matrix(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::array<char, 4> head{};
  in.read(head.data(), head.size());
  if (in.gcount() == 4 && head == kMagic) return read_binary(in);
  in.clear();
  in.seekg(0);
  return read_csv(in, path);
}

void write_frame_system(const fs::path& path, const FrameSystem& e, MatrixFormat format) {
  if (format == MatrixFormat::csv)
    write_matrix_csv(path, e.coeffs());
  else
    write_matrix_binary(path, e.coeffs());
  ordered_json j;
  j["label"] = e.label();
  j["n"] = e.size();
  j["reference"] = "hermite";
  j["margin"] = e.coeffs().margin();
  j["dtype"] = e.coeffs().is_real() ? "f64" : "c128";
  write_text(sidecar_path(path), j.dump(2) + "\n");
}

FrameSystem read_frame_system(const fs::path& path) {
  TruncatedMatrix a = read_matrix(path);
  std::string label = path.stem().string();
  const fs::path side = sidecar_path(path);
  if (fs::exists(side)) {
    const ordered_json j = read_json_file(side);
    if (j.contains("reference") && j["reference"] != "hermite")
      throw IoError("unsupported reference basis in " + side.string());
    if (j.contains("label") && j["label"].is_string()) label = j["label"].get<std::string>();
  }
  return FrameSystem(std::move(a), std::move(label));
}

}  // namespace frameforge

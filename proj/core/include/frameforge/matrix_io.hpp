#pragma once

#include <filesystem>
#include <string>

#include "frameforge/frames.hpp"
#include "frameforge/types.hpp"

namespace frameforge {

/// Sidecar path for a matrix file: same stem, ".json" extension.
std::filesystem::path sidecar_path(const std::filesystem::path& matrix_path);

/// CSV of N rows x N columns; complex entries as "re+imj", real matrices as
/// plain numbers. Values use shortest round-trip formatting. Also writes the
/// sidecar {"n", "margin", "dtype"}.
void write_matrix_csv(const std::filesystem::path& path, const TruncatedMatrix& a);

/// "FFMX", u32 N, u32 flags (bit 0: complex), u32 margin, then little-endian
/// f64 values row-major (re, im interleaved when complex).
void write_matrix_binary(const std::filesystem::path& path, const TruncatedMatrix& a);

/// Reads either format (binary detected by its magic). The margin comes from
/// the binary header or the CSV sidecar, else defaults to N/8. Throws IoError.
TruncatedMatrix read_matrix(const std::filesystem::path& path);

enum class MatrixFormat { csv, binary };

/// Matrix file plus metadata {"label", "n", "reference": "hermite", "margin",
/// "dtype"} in the sidecar.
void write_frame_system(const std::filesystem::path& path, const FrameSystem& e,
                        MatrixFormat format = MatrixFormat::csv);
FrameSystem read_frame_system(const std::filesystem::path& path);

/// Parses "1.5", "-2e-3+4j", "0.25-1j", "3j".
Complex parse_complex(std::string_view text);
std::string format_complex(Complex z, bool as_complex);

}  // namespace frameforge

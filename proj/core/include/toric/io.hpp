#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "toric/projection.hpp"

namespace toric {

/// Parsed system file. Header overrides are kept separately so that command
/// line flags can take precedence over them.
struct SystemFile {
  std::size_t n = 0;
  std::size_t r = 0;
  /// 0 when the file has no `ell` line.
  std::size_t ell = 0;
  std::optional<std::uint64_t> seed;
  std::optional<Integer> bound;
  std::optional<unsigned> retries;
  std::optional<std::size_t> precision;
  std::vector<SparsePoly> system;

  /// Header values applied on top of default options.
  ProjectionProblem problem() const;
};

/// Grammar (one item per line, `#` starts a comment):
///
///   n <int>            number of variables
///   r <int>            number of equations
///   ell <int>          optional, width of the projection
///   seed|bound|retries|precision <int>   optional overrides
///   poly               one block per equation
///     e1 ... en : c    exponent vector and rational coefficient
///   end
///
/// Throws InputError("line L, column C: ...") on malformed input.
SystemFile parse_system(std::string_view text);

/// Line-oriented key/value rendering of a result, also used as the
/// resolution file format. Coefficients of the Y-polynomials are listed one
/// per line as `<key> <Y-degree> <fraction>`, zero coefficients omitted.
std::string emit_resolution(const ProjectionResult& r);

/// Inverse of emit_resolution; emit(parse(text)) == text for emitted text.
ProjectionResult parse_resolution(std::string_view text);

/// Same format for a zero-dimensional resolution (kind zero-dim).
std::string emit_zero_dim(const GeometricResolution& res, std::uint64_t seed);

/// Human-readable rendering.
std::string render_text(const ProjectionResult& r);
std::string render_text(const GeometricResolution& res);

/// Parses "1,2,-3" (commas or blanks).
std::vector<Integer> parse_int_list(std::string_view text);
std::vector<Rat> parse_rat_list(std::string_view text);

}  // namespace toric

#pragma once

#include <string>
#include <string_view>

namespace rext {

/// Coordinate range of one axis.
///
/// `half` is the truncated oscillator on x > 0 with an infinite wall at the
/// origin. `radial` is the same half line carrying the centrifugal term
/// (alpha^2 - 1/4)/r^2 of a cylindrical reduction with alpha = |gamma|.
enum class Domain { full, half, radial };

inline std::string to_string(Domain d) {
  switch (d) {
    case Domain::full: return "full";
    case Domain::half: return "half";
    case Domain::radial: return "radial";
  }
  return "?";
}

Domain parse_domain(std::string_view text);

inline bool is_half_line(Domain d) { return d != Domain::full; }

}  // namespace rext

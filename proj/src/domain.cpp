#include "rext/domain.hpp"

#include "rext/errors.hpp"

namespace rext {

Domain parse_domain(std::string_view text) {
  if (text == "full") return Domain::full;
  if (text == "half") return Domain::half;
  if (text == "radial") return Domain::radial;
  throw InvalidSpec("unknown domain '" + std::string(text) + "'");
}

}  // namespace rext

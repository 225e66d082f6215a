#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "expmap/exp_map.hpp"

namespace expmap {

// Problem instance read from the line-oriented key/value format:
//
//   field = "Q"                  # or "Fp:<prime>"
//   vars = [ "u", "v" ]
//   sigma.u = "u"
//   sigma.v = "v + u*x"
//   slice = "v"                  # optional
//   factors = [ "u" ]            # optional
//   window = 4                   # optional, default 3
//   domain_assert = [ true ]     # optional, parallel to factors
//
// `#` starts a comment outside quotes. Malformed input raises
// Error(InstanceFormat) naming the line; bad expressions raise SyntaxError.
struct Instance {
  static constexpr std::uint32_t kDefaultWindow = 3;

  RingPtr ring;
  ExpMap map;
  std::optional<MPoly> slice;
  std::vector<MPoly> factors;
  std::uint32_t window = kDefaultWindow;
  std::vector<bool> domain_assertions;
};

Instance parse_instance(std::string_view text);
Instance load_instance(const std::filesystem::path& path);

}  // namespace expmap

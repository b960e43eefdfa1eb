#pragma once

#include <string>
#include <utility>
#include <vector>

#include "signedspec/spectrum.hpp"

namespace testing {

// (form, multiplicity) pairs in spectrum order.
inline std::vector<std::pair<std::string, int>> forms(const signedspec::Spectrum& s) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& e : s.entries()) out.emplace_back(e.value.form(), e.multiplicity);
  return out;
}

using Forms = std::vector<std::pair<std::string, int>>;

}  // namespace testing

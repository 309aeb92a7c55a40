#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fairchain {

enum class FixMethod {
  none,
  marginal_match,
  conditional_match,
  delta_match,
  normalize,
  constant_p,
};

// Canonical CLI/report spelling, e.g. "marginal-match".
std::string fix_method_name(FixMethod m);
// Inverse of fix_method_name; unknown name -> InputError.
FixMethod parse_fix_method(const std::string& name);

// Which transform each component gets plus the shared fix parameters.
struct FixConfig {
  std::vector<FixMethod> methods;  // one entry per component
  double p = 0.9;                  // constant-p value, in (0, 1)
  // Group whose distribution is kept fixed by the matching transforms.
  // Unset means the lexicographically first tag.
  std::optional<std::string> reference_group;
  // Shift every component column to strictly positive values (by
  // 1 + |column min|) before composing. Guards product composition against
  // sign flips from negative scores, e.g. after normalization.
  bool positivity_shift = false;

  static FixConfig none(int num_components) {
    FixConfig c;
    c.methods.assign(static_cast<std::size_t>(num_components),
                     FixMethod::none);
    return c;
  }
};

}  // namespace fairchain

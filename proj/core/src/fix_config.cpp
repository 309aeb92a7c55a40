#include "fairchain/fix_config.hpp"

#include "fairchain/error.hpp"

namespace fairchain {

std::string fix_method_name(FixMethod m) {
  switch (m) {
    case FixMethod::none: return "none";
    case FixMethod::marginal_match: return "marginal-match";
    case FixMethod::conditional_match: return "conditional-match";
    case FixMethod::delta_match: return "delta-match";
    case FixMethod::normalize: return "normalize";
    case FixMethod::constant_p: return "constant-p";
  }
  throw std::logic_error("unreachable fix method");
}

FixMethod parse_fix_method(const std::string& name) {
  for (FixMethod m :
       {FixMethod::none, FixMethod::marginal_match, FixMethod::conditional_match,
        FixMethod::delta_match, FixMethod::normalize, FixMethod::constant_p}) {
    if (fix_method_name(m) == name) return m;
  }
  throw InputError("unknown fix method: " + name);
}

}  // namespace fairchain

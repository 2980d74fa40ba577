#include "sympbranch/labels.hpp"

namespace sympbranch {

OmegaMultiset to_omega(const PiMultiset& ms) {
  OmegaMultiset out;
  for (const auto& [label, mult] : ms) out.add(pi_to_omega(label), mult);
  return out;
}

PiMultiset to_pi(const OmegaMultiset& ms) {
  PiMultiset out;
  for (const auto& [label, mult] : ms) out.add(omega_to_pi(label), mult);
  return out;
}

}  // namespace sympbranch

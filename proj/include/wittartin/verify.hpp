#pragma once

#include <cstdint>

#include "wittartin/checks.hpp"
#include "wittartin/splitting.hpp"

namespace wittartin {

struct VerifyOptions {
  int samples = 10;        // random vectors per sampled exact identity
  int tube_samples = 20;   // random group elements per floating-point check
  bool include_tube = true;
  std::uint64_t seed = 1;
};

/// Every named check for one instance: validation, the chain, the point
/// model, both decompositions, the slice form and momentum, the coadjoint
/// slice, and (optionally) the tube. Stops after validation or a failed
/// construction step, reporting that step as failed.
CheckReport verify_instance(const ProblemInstance& inst, const VerifyOptions& options = {});

}  // namespace wittartin

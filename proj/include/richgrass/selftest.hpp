#pragma once

// Exhaustive desk-scale verification: every invariant of the poset,
// evaluation, straightening, counting, tangent, and multiplicity modules,
// run over one Grassmannian context. The report is deterministic for a fixed
// context and seed.

#include <cstdint>
#include <string>
#include <vector>

#include "richgrass/poset.hpp"

namespace richgrass {

struct SelftestCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;

  int failed() const;
  std::string to_text() const;
};

/// Runs the full invariant suite. With sample_oracle set, the tangent-cone
/// multiplicity oracle runs on a deterministic subsample of the triples
/// (the other three multiplicity methods stay exhaustive).
SelftestReport run_selftest(const GrassContext& ctx, std::uint64_t seed,
                            bool sample_oracle);

}  // namespace richgrass

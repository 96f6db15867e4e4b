#pragma once

// Seeded randomized property suites over every module.

#include "logmono/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace logmono {

struct PropertyResult {
  std::string name;
  bool passed = true;
  Integer checked = 0;
  std::string failure;
};

struct SelftestReport {
  std::uint64_t seed = 0;
  Integer count = 0;
  std::vector<PropertyResult> properties;

  bool all_passed() const;
};

/// Runs each property on `count` seeded instances. Throws
/// std::invalid_argument when count < 1.
SelftestReport run_selftest(std::uint64_t seed, Integer count);

io::Json to_json(const SelftestReport& report);

/// True iff the row lattices of a and b coincide (both assumed saturated).
bool same_saturated_row_lattice(const IntMatrix& a, const IntMatrix& b);

}  // namespace logmono

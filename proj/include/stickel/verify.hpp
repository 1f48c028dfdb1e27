#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "stickel/characters.hpp"
#include "stickel/galois.hpp"

namespace stickel {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  std::size_t samples = 200;
  int coeff_bound = 3;
};

struct VerifyReport {
  std::string group;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

nlohmann::json to_json(const VerifyReport& r);

/// Seeded virtual characters with coefficients uniform in [-bound, bound].
std::vector<VirtualCharacter> random_virtual_characters(std::size_t rank, std::size_t count,
                                                        std::uint64_t seed, int bound = 3);

/// H = full, trivial, and every cyclic subgroup of (Z/eZ)^x, deduplicated.
std::vector<OmegaAction> standard_actions(std::int64_t e);

/// Runs the invariant suite on one group; checks run concurrently and are
/// reported in a fixed order.
VerifyReport verify_group(std::shared_ptr<const GroupTable> g, const VerifyOptions& opt = {});

}  // namespace stickel

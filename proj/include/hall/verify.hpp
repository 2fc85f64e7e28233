#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "json.hpp"

#include "hall/classical_hall.hpp"
#include "hall/derived_hall.hpp"

namespace hall {

/// Check names: unit, assoc, riedtmann, span, stalk, orbit (classical);
/// unit, assoc, stalk, orbit, finitary, homotopy (derived).
struct VerifyConfig {
  /// Empty selects every check of the mode.
  std::set<std::string> checks;
  unsigned workers = 1;
  std::uint64_t seed = 1;
  std::size_t homotopy_trials = 50;
};

std::set<std::string> classical_checks();
std::set<std::string> derived_checks();

/// Products of every in-bound basis pair, computed by up to `workers` threads.
StructureTable<IsoClassId> classical_table(const ClassicalHall& hall, unsigned workers);
StructureTable<DerivedClass> derived_table(const DerivedHall& hall, unsigned workers);

/// Runs the selected checks and returns the report:
///   {schema, mode, p, bound, [window], checks: {name: {status, cases, failures, ...}},
///    failures, status}
/// A supplied table replaces the computed one in the unit and associativity
/// checks. Throws InvalidInput for a check name the mode does not know.
nlohmann::json verify_classical(const ClassicalHall& hall, const VerifyConfig& config,
                                const StructureTable<IsoClassId>* table = nullptr);
nlohmann::json verify_derived(const DerivedHall& hall, const VerifyConfig& config,
                              const StructureTable<DerivedClass>* table = nullptr);

}  // namespace hall

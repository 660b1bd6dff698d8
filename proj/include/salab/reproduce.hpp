#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "salab/report.hpp"

namespace salab {

struct AcceptanceItem {
  int id = 0;
  std::string name;
  bool pass = false;
  Json detail;
};

inline constexpr std::uint64_t kDefaultReproduceSeed = 20240601;

/// Criteria 1..11; `on_item` sees each result as it completes.
std::vector<AcceptanceItem> run_acceptance_items(std::uint64_t seed,
                                                 const std::function<void(const AcceptanceItem&)>& on_item = {});

/// Criterion 12: the items above, run a second time, serialize identically.
AcceptanceItem determinism_item(std::uint64_t seed, const std::vector<AcceptanceItem>& first);

/// Full suite (1..12) as a report; results.all_pass summarizes.
Json reproduce_paper(std::uint64_t seed, const std::function<void(const AcceptanceItem&)>& on_item = {});

Json to_json(const AcceptanceItem& item);

}  // namespace salab

#pragma once

// Offline baselines: the static optimum (one up-front frequency sort) and an
// exact dynamic optimum for small lists by dynamic programming over all
// arrangements.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "listupdate/core.hpp"

namespace listupdate {

struct StatSchedule {
  ListState arranged;
  std::uint64_t setup_paid = 0;
  std::uint64_t access_total = 0;
};

// Non-increasing request frequency; equal frequencies keep the initial order.
StatSchedule stat_schedule(const ListState& initial, const RequestSequence& seq);

// The setup cost, when included, is charged as the first step's paid cost.
CostLedger run_stat(const ListState& initial, const RequestSequence& seq,
                    bool include_setup = false);

struct OptLimits {
  std::size_t max_list_size = 6;
  std::size_t max_requests = 20;
};

struct OptStep {
  Item item;
  // Arrangement the request is served from, after any paid exchanges.
  ListState served_from;
  Position position = 0;
  std::uint64_t paid_cost = 0;
  // Arrangement after the optional free forward move of the accessed item.
  ListState after;
};

struct OptResult {
  std::uint64_t total_cost = 0;
  std::uint64_t access_total = 0;
  std::uint64_t paid_total = 0;
  std::vector<OptStep> steps;
};

// Minimum total cost (access + paid exchanges) over every offline strategy
// that may pay for adjacent swaps before each access and move the accessed
// item forward for free after it. Throws CapacityError beyond `limits`.
OptResult brute_force_opt(const ListState& initial, const RequestSequence& seq,
                          OptLimits limits = {});

// Closed-form cost charged to the dynamic optimum on the opt-variant cruel
// sequence for MFLP: p(p-1) + l(l-p+1) + (k-1)(l-p+1)^2, p = log_position(l).
std::uint64_t cycle_opt_cost(std::uint64_t l, std::uint64_t k);

} // namespace listupdate

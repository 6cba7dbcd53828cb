#pragma once

// Deterministic online list-update rules. Every rule charges the found
// position and then moves only the accessed item forward (free exchanges).

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <unordered_map>

#include "listupdate/core.hpp"

namespace listupdate {

enum class PolicyKind { mtf, trans, fc, mfm, mflp };

inline constexpr std::array<PolicyKind, 5> all_policies{
    PolicyKind::mtf, PolicyKind::trans, PolicyKind::fc, PolicyKind::mfm, PolicyKind::mflp};

std::string_view to_string(PolicyKind kind) noexcept;
// Case-sensitive lower-case names: mtf, trans, fc, mfm, mflp.
PolicyKind parse_policy(std::string_view name);

// max(1, ceil(log2 l)); the target slot of MFLP.
std::size_t log_position(std::size_t l);
// l/2 for even l, ceil(l/2) for odd l; the target slot of MFM.
std::size_t middle_position(std::size_t l);

class PolicyState {
public:
  PolicyState(PolicyKind kind, ListState list);

  PolicyKind kind() const noexcept { return kind_; }
  const ListState& list() const noexcept { return list_; }
  // FC access count; 0 for items never accessed or when kind != fc.
  std::uint64_t count(Item item) const;

  // Only the step functions below mutate the state.
  ListState& mutable_list() noexcept { return list_; }
  std::uint64_t& mutable_count(Item item) { return counts_[item]; }

private:
  PolicyKind kind_;
  ListState list_;
  std::unordered_map<Item, std::uint64_t> counts_;
};

struct StepOutcome {
  Position position = 0;
  std::uint64_t access_cost = 0;
};

StepOutcome mtf_step(PolicyState& state, Item item);
StepOutcome trans_step(PolicyState& state, Item item);
StepOutcome fc_step(PolicyState& state, Item item);
StepOutcome mfm_step(PolicyState& state, Item item);
StepOutcome mflp_step(PolicyState& state, Item item);

// Dispatches on state.kind().
StepOutcome serve(PolicyState& state, Item item);

// Folds serve() over seq. A request outside the universe raises
// NotInListError carrying the 1-based request index.
CostLedger run_policy(PolicyKind kind, const ListState& initial, const RequestSequence& seq,
                      LedgerMode mode = LedgerMode::full);

// Same as run_policy, also returning the final arrangement.
struct PolicyRun {
  CostLedger ledger;
  ListState final_list;
};
PolicyRun run_policy_with_state(PolicyKind kind, const ListState& initial,
                                const RequestSequence& seq, LedgerMode mode = LedgerMode::full);

} // namespace listupdate

#include "listupdate/policies.hpp"

#include <bit>
#include <fmt/format.h>
#include <stdexcept>

namespace listupdate {

std::string_view to_string(PolicyKind kind) noexcept {
  switch (kind) {
  case PolicyKind::mtf: return "mtf";
  case PolicyKind::trans: return "trans";
  case PolicyKind::fc: return "fc";
  case PolicyKind::mfm: return "mfm";
  case PolicyKind::mflp: return "mflp";
  }
  return "?";
}

PolicyKind parse_policy(std::string_view name) {
  for (PolicyKind kind : all_policies)
    if (to_string(kind) == name) return kind;
  throw std::invalid_argument(fmt::format("unknown policy '{}'", name));
}

std::size_t log_position(std::size_t l) {
  if (l == 0) throw std::invalid_argument("list size must be at least 1");
  // ceil(log2 l) == bit width of (l - 1)
  const auto p = static_cast<std::size_t>(std::bit_width(l - 1));
  return p < 1 ? 1 : p;
}

std::size_t middle_position(std::size_t l) {
  if (l == 0) throw std::invalid_argument("list size must be at least 1");
  return (l + 1) / 2;
}

PolicyState::PolicyState(PolicyKind kind, ListState list)
    : kind_(kind), list_(std::move(list)) {
  if (kind_ == PolicyKind::fc)
    for (Item item : list_.items()) counts_.emplace(item, 0);
}

std::uint64_t PolicyState::count(Item item) const {
  auto it = counts_.find(item);
  return it == counts_.end() ? 0 : it->second;
}

namespace {

// Accessed item goes to `target` if found behind it, otherwise to the front.
StepOutcome front_or_target(PolicyState& state, Item item, Position target) {
  auto& list = state.mutable_list();
  const Position pos = list.position_of(item);
  list.move_forward(pos, pos > target ? target : 1);
  return {pos, pos};
}

} // namespace

StepOutcome mtf_step(PolicyState& state, Item item) {
  auto& list = state.mutable_list();
  const Position pos = list.position_of(item);
  list.move_forward(pos, 1);
  return {pos, pos};
}

StepOutcome trans_step(PolicyState& state, Item item) {
  auto& list = state.mutable_list();
  const Position pos = list.position_of(item);
  if (pos > 1) list.move_forward(pos, pos - 1);
  return {pos, pos};
}

StepOutcome fc_step(PolicyState& state, Item item) {
  auto& list = state.mutable_list();
  const Position pos = list.position_of(item);
  const std::uint64_t count = ++state.mutable_count(item);
  // Pass only strictly smaller counts; equal counts keep their place ahead.
  Position target = pos;
  while (target > 1 && state.count(list.at(target - 1)) < count) --target;
  list.move_forward(pos, target);
  return {pos, pos};
}

StepOutcome mfm_step(PolicyState& state, Item item) {
  return front_or_target(state, item, middle_position(state.list().size()));
}

StepOutcome mflp_step(PolicyState& state, Item item) {
  return front_or_target(state, item, log_position(state.list().size()));
}

StepOutcome serve(PolicyState& state, Item item) {
  switch (state.kind()) {
  case PolicyKind::mtf: return mtf_step(state, item);
  case PolicyKind::trans: return trans_step(state, item);
  case PolicyKind::fc: return fc_step(state, item);
  case PolicyKind::mfm: return mfm_step(state, item);
  case PolicyKind::mflp: return mflp_step(state, item);
  }
  throw std::logic_error("unhandled policy kind");
}

PolicyRun run_policy_with_state(PolicyKind kind, const ListState& initial,
                                const RequestSequence& seq, LedgerMode mode) {
  PolicyState state(kind, initial);
  CostLedger ledger(mode);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    StepOutcome outcome;
    try {
      outcome = serve(state, seq[i]);
    } catch (const NotInListError& e) {
      throw NotInListError(e.item(), i + 1);
    }
    ledger.record({seq[i], outcome.position, outcome.access_cost, 0});
  }
  return {std::move(ledger), state.list()};
}

CostLedger run_policy(PolicyKind kind, const ListState& initial, const RequestSequence& seq,
                      LedgerMode mode) {
  return run_policy_with_state(kind, initial, seq, mode).ledger;
}

} // namespace listupdate

#include "listupdate/core.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace listupdate {

NotInListError::NotInListError(std::uint32_t item, std::optional<std::size_t> step)
    : std::invalid_argument(
          step ? fmt::format("item {} is not in the list (request {})", item, *step)
               : fmt::format("item {} is not in the list", item)),
      item_(item), step_(step) {}

RequestSequence make_sequence(std::initializer_list<std::uint32_t> ids) {
  RequestSequence seq;
  seq.reserve(ids.size());
  for (auto id : ids) seq.push_back(Item{id});
  return seq;
}

ListState::ListState(std::vector<Item> order) : order_(std::move(order)) {
  if (order_.empty()) throw std::invalid_argument("list must hold at least one item");
  std::vector<Item> sorted = order_;
  std::ranges::sort(sorted);
  if (std::ranges::adjacent_find(sorted) != sorted.end())
    throw std::invalid_argument("list items must be distinct");
}

ListState::ListState(std::initializer_list<std::uint32_t> ids)
    : ListState(make_sequence(ids)) {}

ListState ListState::identity(std::size_t l) {
  if (l == 0) throw std::invalid_argument("list size must be at least 1");
  std::vector<Item> order(l);
  for (std::size_t i = 0; i < l; ++i) order[i] = Item{static_cast<std::uint32_t>(i + 1)};
  return ListState(std::move(order));
}

ListState ListState::byte_universe() {
  std::vector<Item> order(256);
  for (std::uint32_t v = 0; v < 256; ++v) order[v] = Item{v};
  return ListState(std::move(order));
}

Item ListState::at(Position pos) const {
  if (pos < 1 || pos > order_.size())
    throw std::out_of_range(fmt::format("position {} outside 1..{}", pos, order_.size()));
  return order_[pos - 1];
}

bool ListState::contains(Item item) const noexcept {
  return std::ranges::find(order_, item) != order_.end();
}

Position ListState::position_of(Item item) const {
  auto it = std::ranges::find(order_, item);
  if (it == order_.end()) throw NotInListError(item.id);
  return static_cast<Position>(it - order_.begin()) + 1;
}

void ListState::move_forward(Position from_pos, Position to_pos) {
  if (from_pos < 1 || from_pos > order_.size() || to_pos < 1)
    throw std::out_of_range(
        fmt::format("move {} -> {} outside 1..{}", from_pos, to_pos, order_.size()));
  if (to_pos > from_pos)
    throw std::invalid_argument(
        fmt::format("free exchange must move forward ({} -> {})", from_pos, to_pos));
  auto first = order_.begin() + static_cast<std::ptrdiff_t>(to_pos - 1);
  auto item = order_.begin() + static_cast<std::ptrdiff_t>(from_pos - 1);
  std::rotate(first, item, item + 1);
}

void ListState::swap_adjacent(Position pos) {
  if (pos < 1 || pos >= order_.size())
    throw std::out_of_range(fmt::format("no adjacent pair at position {}", pos));
  std::swap(order_[pos - 1], order_[pos]);
}

bool ListState::same_universe(const ListState& other) const {
  if (size() != other.size()) return false;
  std::vector<Item> a = order_;
  std::vector<Item> b = other.order_;
  std::ranges::sort(a);
  std::ranges::sort(b);
  return a == b;
}

Position position_of(const ListState& state, Item item) { return state.position_of(item); }

ListState move_forward(ListState state, Position from_pos, Position to_pos) {
  state.move_forward(from_pos, to_pos);
  return state;
}

std::uint64_t paid_exchange_distance(const ListState& a, const ListState& b) {
  if (!a.same_universe(b))
    throw std::invalid_argument("paid exchange distance needs lists over the same items");
  std::unordered_map<Item, std::size_t> rank_in_b;
  rank_in_b.reserve(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) rank_in_b[b.items()[i]] = i;

  std::vector<std::size_t> ranks;
  ranks.reserve(a.size());
  for (Item item : a.items()) ranks.push_back(rank_in_b.at(item));

  std::uint64_t discordant = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i)
    for (std::size_t j = i + 1; j < ranks.size(); ++j)
      if (ranks[i] > ranks[j]) ++discordant;
  return discordant;
}

void CostLedger::record(const StepRecord& step) {
  access_total_ += step.access_cost;
  paid_total_ += step.paid_cost;
  ++request_count_;
  if (mode_ == LedgerMode::full) steps_.push_back(step);
}

} // namespace listupdate

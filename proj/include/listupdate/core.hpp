#pragma once

// Standard list-update cost model: an ordered list of distinct items, where
// accessing the item at 1-based position i costs i, moving the accessed item
// forward is free, and swapping two adjacent items costs 1.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "listupdate/errors.hpp"

namespace listupdate {

struct Item {
  std::uint32_t id = 0;

  constexpr auto operator<=>(const Item&) const = default;
};

// 1-based; the front of the list is position 1.
using Position = std::size_t;

using RequestSequence = std::vector<Item>;

RequestSequence make_sequence(std::initializer_list<std::uint32_t> ids);

class ListState {
public:
  // Throws std::invalid_argument on an empty order or duplicate ids.
  explicit ListState(std::vector<Item> order);
  ListState(std::initializer_list<std::uint32_t> ids);

  // <1, 2, ..., l>
  static ListState identity(std::size_t l);
  // <0, 1, ..., 255>, the byte universe used for corpus replay.
  static ListState byte_universe();

  std::size_t size() const noexcept { return order_.size(); }
  std::span<const Item> items() const noexcept { return order_; }
  Item at(Position pos) const;

  bool contains(Item item) const noexcept;
  Position position_of(Item item) const;

  // Free exchange: remove the item at from_pos and reinsert it at to_pos.
  void move_forward(Position from_pos, Position to_pos);
  // Unit-cost transposition of the items at pos and pos + 1.
  void swap_adjacent(Position pos);

  bool same_universe(const ListState& other) const;

  bool operator==(const ListState&) const = default;

private:
  std::vector<Item> order_;
};

Position position_of(const ListState& state, Item item);
ListState move_forward(ListState state, Position from_pos, Position to_pos);

// Number of discordant pairs (Kendall tau distance), which is the minimum
// number of paid exchanges turning a into b.
std::uint64_t paid_exchange_distance(const ListState& a, const ListState& b);

struct StepRecord {
  Item item;
  Position position = 0;
  std::uint64_t access_cost = 0;
  std::uint64_t paid_cost = 0;
};

enum class LedgerMode { full, totals_only };

class CostLedger {
public:
  explicit CostLedger(LedgerMode mode = LedgerMode::full) : mode_(mode) {}

  void record(const StepRecord& step);

  std::uint64_t access_total() const noexcept { return access_total_; }
  std::uint64_t paid_total() const noexcept { return paid_total_; }
  std::uint64_t total() const noexcept { return access_total_ + paid_total_; }
  std::size_t request_count() const noexcept { return request_count_; }
  // Empty in totals_only mode.
  std::span<const StepRecord> steps() const noexcept { return steps_; }
  LedgerMode mode() const noexcept { return mode_; }

private:
  LedgerMode mode_;
  std::uint64_t access_total_ = 0;
  std::uint64_t paid_total_ = 0;
  std::size_t request_count_ = 0;
  std::vector<StepRecord> steps_;
};

} // namespace listupdate

template <>
struct std::hash<listupdate::Item> {
  std::size_t operator()(const listupdate::Item& item) const noexcept {
    return std::hash<std::uint32_t>{}(item.id);
  }
};

#include "listupdate/offline.hpp"

#include <algorithm>
#include <array>
#include <fmt/format.h>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "listupdate/policies.hpp"

namespace listupdate {

StatSchedule stat_schedule(const ListState& initial, const RequestSequence& seq) {
  std::unordered_map<Item, std::uint64_t> frequency;
  for (Item item : initial.items()) frequency.emplace(item, 0);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    auto it = frequency.find(seq[i]);
    if (it == frequency.end()) throw NotInListError(seq[i].id, i + 1);
    ++it->second;
  }

  std::vector<Item> order(initial.items().begin(), initial.items().end());
  std::ranges::stable_sort(order, [&](Item a, Item b) { return frequency[a] > frequency[b]; });
  ListState arranged(std::move(order));

  std::uint64_t access_total = 0;
  for (std::size_t pos = 1; pos <= arranged.size(); ++pos)
    access_total += pos * frequency[arranged.at(pos)];

  const auto setup = paid_exchange_distance(initial, arranged);
  return {std::move(arranged), setup, access_total};
}

CostLedger run_stat(const ListState& initial, const RequestSequence& seq, bool include_setup) {
  const StatSchedule schedule = stat_schedule(initial, seq);
  CostLedger ledger;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Position pos = schedule.arranged.position_of(seq[i]);
    const std::uint64_t paid = (i == 0 && include_setup) ? schedule.setup_paid : 0;
    ledger.record({seq[i], pos, pos, paid});
  }
  return ledger;
}

namespace {

constexpr std::size_t kMaxSupportedListSize = 7;

// An arrangement, stored as indices into the initial list.
using Arrangement = std::array<std::uint8_t, kMaxSupportedListSize>;

class ArrangementSpace {
public:
  explicit ArrangementSpace(std::size_t l) : l_(l) {
    Arrangement perm{};
    std::iota(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(l), std::uint8_t{0});
    do {
      arrangements_.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(l)));

    factorials_.assign(l + 1, 1);
    for (std::size_t i = 1; i <= l; ++i) factorials_[i] = factorials_[i - 1] * i;

    const std::size_t n = arrangements_.size();
    distance_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) distance_[a * n + b] = kendall(a, b);
  }

  std::size_t size() const noexcept { return arrangements_.size(); }
  const Arrangement& operator[](std::size_t rank) const { return arrangements_[rank]; }
  std::uint8_t distance(std::size_t a, std::size_t b) const {
    return distance_[a * arrangements_.size() + b];
  }

  // Lexicographic rank, matching the enumeration order of next_permutation.
  std::size_t rank(const Arrangement& perm) const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < l_; ++i) {
      std::size_t smaller = 0;
      for (std::size_t j = i + 1; j < l_; ++j)
        if (perm[j] < perm[i]) ++smaller;
      r += smaller * factorials_[l_ - 1 - i];
    }
    return r;
  }

  Position position_of(std::size_t rank, std::uint8_t index) const {
    const auto& perm = arrangements_[rank];
    for (std::size_t i = 0; i < l_; ++i)
      if (perm[i] == index) return i + 1;
    throw std::logic_error("index missing from arrangement");
  }

  std::size_t moved_forward(std::size_t rank, Position from, Position to) const {
    Arrangement perm = arrangements_[rank];
    std::rotate(perm.begin() + static_cast<std::ptrdiff_t>(to - 1),
                perm.begin() + static_cast<std::ptrdiff_t>(from - 1),
                perm.begin() + static_cast<std::ptrdiff_t>(from));
    return this->rank(perm);
  }

  ListState to_list(std::size_t rank, const ListState& initial) const {
    std::vector<Item> order(l_);
    for (std::size_t i = 0; i < l_; ++i) order[i] = initial.items()[arrangements_[rank][i]];
    return ListState(std::move(order));
  }

private:
  std::uint8_t kendall(std::size_t a, std::size_t b) const {
    std::array<std::uint8_t, kMaxSupportedListSize> where_in_b{};
    for (std::size_t i = 0; i < l_; ++i) where_in_b[arrangements_[b][i]] = static_cast<std::uint8_t>(i);
    std::uint8_t discordant = 0;
    for (std::size_t i = 0; i < l_; ++i)
      for (std::size_t j = i + 1; j < l_; ++j)
        if (where_in_b[arrangements_[a][i]] > where_in_b[arrangements_[a][j]]) ++discordant;
    return discordant;
  }

  std::size_t l_;
  std::vector<Arrangement> arrangements_;
  std::vector<std::size_t> factorials_;
  std::vector<std::uint8_t> distance_;
};

constexpr std::uint64_t kUnreachable = std::numeric_limits<std::uint64_t>::max();

} // namespace

OptResult brute_force_opt(const ListState& initial, const RequestSequence& seq,
                          OptLimits limits) {
  const std::size_t l = initial.size();
  const std::size_t cap = std::min(limits.max_list_size, kMaxSupportedListSize);
  if (l > cap)
    throw CapacityError(fmt::format("exact optimum supports lists of at most {} items, got {}",
                                    cap, l));
  if (seq.size() > limits.max_requests)
    throw CapacityError(fmt::format("exact optimum supports at most {} requests, got {}",
                                    limits.max_requests, seq.size()));

  std::vector<std::uint8_t> request_index(seq.size());
  for (std::size_t t = 0; t < seq.size(); ++t) {
    auto items = initial.items();
    auto it = std::ranges::find(items, seq[t]);
    if (it == items.end()) throw NotInListError(seq[t].id, t + 1);
    request_index[t] = static_cast<std::uint8_t>(it - items.begin());
  }

  const ArrangementSpace space(l);
  const std::size_t n_states = space.size();

  // cost[s]: cheapest way to end the previous step in arrangement s.
  std::vector<std::uint64_t> cost(n_states, kUnreachable);
  cost[0] = 0; // rank 0 is the initial arrangement itself

  // Per step: which arrangement the paid reorganisation started from, and
  // which served arrangement the free move started from.
  std::vector<std::vector<std::uint32_t>> reorganised_from(seq.size());
  std::vector<std::vector<std::uint32_t>> served_from(seq.size());

  std::vector<std::uint64_t> before_access(n_states);
  std::vector<std::size_t> reachable;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    reachable.clear();
    for (std::size_t s = 0; s < n_states; ++s)
      if (cost[s] != kUnreachable) reachable.push_back(s);

    auto& reorg = reorganised_from[t];
    reorg.assign(n_states, 0);
    for (std::size_t target = 0; target < n_states; ++target) {
      std::uint64_t best = kUnreachable;
      for (std::size_t source : reachable) {
        const std::uint64_t c = cost[source] + space.distance(source, target);
        if (c < best) {
          best = c;
          reorg[target] = static_cast<std::uint32_t>(source);
        }
      }
      before_access[target] = best;
    }

    std::vector<std::uint64_t> next(n_states, kUnreachable);
    auto& served = served_from[t];
    served.assign(n_states, 0);
    for (std::size_t s = 0; s < n_states; ++s) {
      const Position pos = space.position_of(s, request_index[t]);
      const std::uint64_t c = before_access[s] + pos;
      for (Position to = 1; to <= pos; ++to) {
        const std::size_t after = to == pos ? s : space.moved_forward(s, pos, to);
        if (c < next[after]) {
          next[after] = c;
          served[after] = static_cast<std::uint32_t>(s);
        }
      }
    }
    cost = std::move(next);
  }

  OptResult result;
  std::size_t end = static_cast<std::size_t>(std::ranges::min_element(cost) - cost.begin());
  result.total_cost = cost[end];
  result.steps.reserve(seq.size());
  for (std::size_t t = seq.size(); t-- > 0;) {
    const std::size_t serve = served_from[t][end];
    const std::size_t prior = reorganised_from[t][serve];
    OptStep step{seq[t], space.to_list(serve, initial), space.position_of(serve, request_index[t]),
                 space.distance(prior, serve), space.to_list(end, initial)};
    result.access_total += step.position;
    result.paid_total += step.paid_cost;
    result.steps.push_back(std::move(step));
    end = prior;
  }
  std::ranges::reverse(result.steps);
  return result;
}

std::uint64_t cycle_opt_cost(std::uint64_t l, std::uint64_t k) {
  if (l < 4) throw std::invalid_argument("cycle optimum cost needs a list of at least 4 items");
  if (k < 1) throw std::invalid_argument("repetition count must be at least 1");
  const std::uint64_t p = log_position(l);
  const std::uint64_t block = l - p + 1;
  return p * (p - 1) + l * block + (k - 1) * block * block;
}

} // namespace listupdate

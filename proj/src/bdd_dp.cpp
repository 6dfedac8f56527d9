#include "copath/bdd_dp.hpp"

#include <algorithm>
#include <limits>

namespace copath {

namespace {

int digit(std::uint64_t code, const std::vector<std::uint64_t>& pow, std::uint64_t base, std::size_t pos) {
  return static_cast<int>((code / pow[pos]) % base);
}

// Removes the digit at `pos`, shifting higher digits down.
std::uint64_t drop_digit(std::uint64_t code, const std::vector<std::uint64_t>& pow, std::size_t pos) {
  return code % pow[pos] + (code / pow[pos + 1]) * pow[pos];
}

}  // namespace

BoundedDegreeDp::BoundedDegreeDp(const Graph& g, const NiceEventSequence& events, int d)
    : graph_(g), events_(events), d_(d), base_(static_cast<std::uint64_t>(d) + 2) {
  if (d < 0) throw DpError("degree bound must be non-negative");
  try {
    check_events(events);
  } catch (const DecompositionError& e) {
    throw DpError(std::string("inconsistent events: ") + e.what());
  }
  if (auto bad = validate(g, replay(events))) throw DpError("events do not decompose the graph: " + bad->message);

  // Powers up to base^(width + 2); the extra one serves drop_digit.
  pow_.push_back(1);
  for (int i = 0; i < events.width + 2; ++i) {
    if (pow_.back() > std::numeric_limits<std::uint64_t>::max() / base_) {
      throw DpError("decomposition too wide for packed state codes");
    }
    pow_.push_back(pow_.back() * base_);
  }
}

void BoundedDegreeDp::run() {
  tables_.clear();
  tables_.reserve(events_.events.size() + 1);
  tables_.push_back(Table{{0, Cell{0, 0}}});
  peak_states_ = 1;
  std::vector<Vertex> bag;

  for (const NiceEvent& ev : events_.events) {
    const Table& prev = tables_.back();
    Table next;
    if (ev.kind == NiceEvent::Kind::kIntroduce) {
      std::vector<std::size_t> nbr_pos;
      for (std::size_t p = 0; p < bag.size(); ++p) {
        if (graph_.adjacent(ev.v, bag[p])) nbr_pos.push_back(p);
      }
      const std::uint64_t slot = pow_[bag.size()];
      auto offer = [&](std::uint64_t code, int size, std::uint64_t pred) {
        auto [it, inserted] = next.try_emplace(code, Cell{size, pred});
        if (!inserted && size < it->second.size) it->second = Cell{size, pred};
      };
      for (const auto& [code, cell] : prev) {
        offer(code, cell.size + 1, code);  // v in D

        // v kept: every kept neighbour moves from R_l to R_{l+1}.
        std::uint64_t shifted = code;
        int kept = 0;
        bool feasible = true;
        for (std::size_t p : nbr_pos) {
          const int lab = digit(code, pow_, base_, p);
          if (lab == 0) continue;
          if (lab - 1 == d_) {
            feasible = false;
            break;
          }
          shifted += pow_[p];
          ++kept;
        }
        if (feasible && kept <= d_) offer(shifted + static_cast<std::uint64_t>(kept + 1) * slot, cell.size, code);
      }
      bag.push_back(ev.v);
    } else {
      const auto it = std::find(bag.begin(), bag.end(), ev.v);
      const auto p = static_cast<std::size_t>(it - bag.begin());
      for (const auto& [code, cell] : prev) {
        const std::uint64_t reduced = drop_digit(code, pow_, p);
        auto [slot, inserted] = next.try_emplace(reduced, Cell{cell.size, code});
        if (!inserted && cell.size < slot->second.size) slot->second = Cell{cell.size, code};
      }
      bag.erase(it);
    }
    if (next.size() > pow_[bag.size()]) throw DpError("state table exceeds (d+2)^|bag|");
    peak_states_ = std::max(peak_states_, next.size());
    tables_.push_back(std::move(next));
  }
  finished_ = true;
}

int BoundedDegreeDp::min_size() const {
  if (!finished_) throw DpError("dynamic program has not been run");
  const Table& last = tables_.back();
  auto it = last.find(0);
  if (it == last.end()) throw DpError("final table holds no empty-bag state");
  return it->second.size;
}

VertexSet BoundedDegreeDp::recover_solution() const {
  if (!finished_) throw DpError("dynamic program has not been run");
  // Position of each event's vertex in the bag, replayed forwards.
  std::vector<std::size_t> pos(events_.events.size());
  std::vector<Vertex> bag;
  for (std::size_t i = 0; i < events_.events.size(); ++i) {
    const NiceEvent& ev = events_.events[i];
    if (ev.kind == NiceEvent::Kind::kIntroduce) {
      pos[i] = bag.size();
      bag.push_back(ev.v);
    } else {
      auto it = std::find(bag.begin(), bag.end(), ev.v);
      pos[i] = static_cast<std::size_t>(it - bag.begin());
      bag.erase(it);
    }
  }

  VertexSet witness;
  std::uint64_t code = 0;
  for (std::size_t i = events_.events.size(); i-- > 0;) {
    const Cell& cell = tables_[i + 1].at(code);
    const NiceEvent& ev = events_.events[i];
    if (ev.kind == NiceEvent::Kind::kIntroduce && digit(code, pow_, base_, pos[i]) == 0) witness.push_back(ev.v);
    code = cell.pred;
  }
  std::sort(witness.begin(), witness.end());
  return witness;
}

BddResult bdd_dp_solve(const Graph& g, const NiceEventSequence& events, int d) {
  BoundedDegreeDp dp(g, events, d);
  dp.run();
  return {dp.min_size(), dp.recover_solution(), dp.peak_states()};
}

}  // namespace copath

#include "copath/cut_count.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "copath/bdd_dp.hpp"

namespace copath {

namespace {

constexpr std::uint64_t kBase = 5;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

void toggle(ParityTable& table, const CutCountKey& key) {
  auto [it, inserted] = table.insert(key);
  if (!inserted) table.erase(it);
}

}  // namespace

std::size_t CutCountKeyHash::operator()(const CutCountKey& k) const noexcept {
  std::uint64_t h = splitmix64(k.labels);
  h = splitmix64(h ^ static_cast<std::uint64_t>(k.stats.w));
  const std::uint64_t small = static_cast<std::uint64_t>(k.stats.a) | (static_cast<std::uint64_t>(k.stats.n) << 16) |
                              (static_cast<std::uint64_t>(k.stats.e) << 32) |
                              (static_cast<std::uint64_t>(k.stats.m) << 48);
  return static_cast<std::size_t>(splitmix64(h ^ small));
}

WeightAssignment sample_weights(const Graph& g, std::uint64_t seed) {
  WeightAssignment wa;
  wa.range = 3 * static_cast<Weight>(g.alive_count() + g.edge_count());
  wa.vertex_weights.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  if (wa.range == 0) return wa;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> pick(1, wa.range);
  for (Vertex v : g.vertices()) wa.vertex_weights[static_cast<std::size_t>(v)] = pick(rng);
  for (const Edge& e : g.edges()) wa.edge_weights[e] = pick(rng);
  return wa;
}

ParityTable parity_dp(const Graph& g, const NiceEventSequence& events, const WeightAssignment& weights,
                      ParityDpOptions options) {
  try {
    check_events(events);
  } catch (const DecompositionError& e) {
    throw DpError(std::string("inconsistent events: ") + e.what());
  }
  if (auto bad = validate(g, replay(events))) throw DpError("events do not decompose the graph: " + bad->message);

  std::vector<std::uint64_t> pow{1};
  for (int i = 0; i < events.width + 2; ++i) {
    if (pow.back() > std::numeric_limits<std::uint64_t>::max() / kBase) {
      throw DpError("decomposition too wide for packed state codes");
    }
    pow.push_back(pow.back() * kBase);
  }
  auto label_at = [&](std::uint64_t code, std::size_t p) { return static_cast<CcLabel>((code / pow[p]) % kBase); };
  auto relabel = [&](std::uint64_t code, std::size_t p, CcLabel from, CcLabel to) {
    return code - static_cast<std::uint64_t>(from) * pow[p] + static_cast<std::uint64_t>(to) * pow[p];
  };

  ParityTable table{CutCountKey{}};
  std::vector<Vertex> bag;
  int introduced = 0;

  for (const NiceEvent& ev : events.events) {
    ParityTable next;
    if (ev.kind == NiceEvent::Kind::kIntroduce) {
      ++introduced;
      const Vertex v = ev.v;
      const Weight wv = weights.vertex(v);
      std::vector<std::size_t> nbr_pos;
      for (std::size_t p = 0; p < bag.size(); ++p) {
        if (g.adjacent(v, bag[p])) nbr_pos.push_back(p);
      }
      const std::uint64_t slot = pow[bag.size()];

      for (const CutCountKey& key : table) {
        const CandidateStats& s = key.stats;

        if (!options.deletion_budget || introduced - s.n <= *options.deletion_budget) toggle(next, key);

        std::vector<std::size_t> kept;
        for (std::size_t p : nbr_pos) {
          if (label_at(key.labels, p) != CcLabel::kDeleted) kept.push_back(p);
        }
        if (kept.empty()) {
          CutCountKey k{key.labels + static_cast<std::uint64_t>(CcLabel::kIsolated) * slot, s};
          k.stats.a += 1;
          k.stats.n += 1;
          k.stats.w += wv;
          toggle(next, k);
          continue;
        }
        if (kept.size() > 2) continue;

        // v joins side V1 or V2 together with its kept neighbours: an isolated
        // neighbour becomes a leaf of that side, a leaf of that side becomes
        // inner, anything else makes the cut inconsistent.
        for (int side = 1; side <= 2; ++side) {
          const CcLabel leaf = side == 1 ? CcLabel::kLeafV1 : CcLabel::kLeafV2;
          std::uint64_t code = key.labels;
          CandidateStats t = s;
          bool feasible = true;
          for (std::size_t p : kept) {
            const CcLabel lab = label_at(code, p);
            if (lab == CcLabel::kIsolated) {
              code = relabel(code, p, lab, leaf);
              t.a -= 1;
            } else if (lab == leaf) {
              code = relabel(code, p, lab, CcLabel::kInner);
            } else {
              feasible = false;
              break;
            }
          }
          if (!feasible) continue;
          const CcLabel vlab = kept.size() == 1 ? leaf : CcLabel::kInner;
          code += static_cast<std::uint64_t>(vlab) * slot;
          t.n += 1;
          t.e += static_cast<int>(kept.size());
          t.w += wv;

          // Edges inside V1 may carry a marker; V2 edges never do.
          const std::size_t marker_choices = side == 1 ? (std::size_t{1} << kept.size()) : 1;
          for (std::size_t mask = 0; mask < marker_choices; ++mask) {
            CutCountKey k{code, t};
            for (std::size_t i = 0; i < kept.size(); ++i) {
              if ((mask >> i) & 1u) {
                k.stats.m += 1;
                k.stats.w += weights.edge(v, bag[kept[i]]);
              }
            }
            toggle(next, k);
          }
        }
      }
      bag.push_back(v);
    } else {
      const auto it = std::find(bag.begin(), bag.end(), ev.v);
      const auto p = static_cast<std::size_t>(it - bag.begin());
      for (const CutCountKey& key : table) {
        CutCountKey k = key;
        k.labels = key.labels % pow[p] + (key.labels / pow[p + 1]) * pow[p];
        toggle(next, k);
      }
      bag.erase(it);
    }
    table = std::move(next);
  }
  return table;
}

Decision decide_cpp_once(const Graph& g, int k, const NiceEventSequence& events, std::uint64_t seed) {
  const WeightAssignment weights = sample_weights(g, seed);
  const ParityTable table = parity_dp(g, events, weights, ParityDpOptions{k});
  const int need = g.alive_count() - k;
  for (const CutCountKey& key : table) {
    const CandidateStats& s = key.stats;
    if (s.n >= need && s.m == s.n - s.e - s.a) return Decision::kYes;
  }
  return Decision::kUnknown;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master + index * 0xD1B54A32D192ED03ULL);
}

CppDecision decide_cpp(const Graph& g, int k, const NiceEventSequence& events, int repeats, std::uint64_t seed) {
  if (repeats < 1) throw std::invalid_argument("repeats must be at least 1");
  for (int i = 0; i < repeats; ++i) {
    if (decide_cpp_once(g, k, events, derive_seed(seed, static_cast<std::uint64_t>(i))) == Decision::kYes) {
      return {Decision::kYes, i + 1};
    }
  }
  return {Decision::kNo, repeats};
}

}  // namespace copath

#include "support.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

namespace skein::testing {

Diagram corpus_diagram(std::string_view name) {
  const CorpusEntry* e = find_corpus_entry(name);
  if (e == nullptr) throw std::invalid_argument("no corpus entry " + std::string(name));
  return parse_pd(e->pd_text);
}

std::vector<std::pair<std::string, Diagram>> corpus_diagrams() {
  std::vector<std::pair<std::string, Diagram>> out;
  for (const auto& e : corpus()) out.emplace_back(std::string(e.name), parse_pd(e.pd_text));
  return out;
}

std::vector<std::pair<BraidWord, Diagram>> random_closures(std::uint64_t seed, int count, int max_crossings) {
  std::mt19937_64 rng(seed);
  RandomBraidOptions options;
  options.max_crossings = max_crossings;
  std::vector<std::pair<BraidWord, Diagram>> out;
  for (int i = 0; i < count; ++i) {
    BraidWord b = random_braid(rng, options);
    Diagram d = braid_closure(b);
    out.emplace_back(std::move(b), std::move(d));
  }
  return out;
}

std::size_t oracle_component_count(const std::vector<Crossing>& crossings, int free_loops) {
  std::map<int, int> parent;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (const auto& c : crossings) {
    for (int e : c.edges) parent.try_emplace(e, e);
  }
  for (const auto& c : crossings) {
    parent[find(c.edges[0])] = find(c.edges[2]);
    parent[find(c.edges[1])] = find(c.edges[3]);
  }
  std::size_t roots = 0;
  for (const auto& [e, p] : parent) roots += find(e) == e ? 1 : 0;
  return roots + static_cast<std::size_t>(free_loops);
}

int oracle_writhe(const Diagram& d, const OrientationMask& o) {
  // Component of an edge: walk the raw records until the smallest edge of the
  // cycle is found, then rank cycles by that smallest edge.
  std::map<int, int> partner;  // edge -> edge on the other side of its strand at its head
  for (const auto& c : d.crossings()) {
    partner[c.edges[0]] = c.edges[2];
    if (c.over_enters_at_4) {
      partner[c.edges[3]] = c.edges[1];
    } else {
      partner[c.edges[1]] = c.edges[3];
    }
  }
  std::map<int, int> smallest;
  for (const auto& [e, next] : partner) {
    int m = e;
    for (int f = partner[e]; f != e; f = partner[f]) m = std::min(m, f);
    smallest[e] = m;
  }
  std::map<int, std::size_t> rank;
  for (const auto& [e, m] : smallest) rank.try_emplace(m, 0);
  std::size_t next_rank = 0;
  for (auto& [m, r] : rank) r = next_rank++;

  int total = 0;
  for (const auto& c : d.crossings()) {
    const std::size_t under = rank[smallest[c.edges[0]]];
    const std::size_t over = rank[smallest[c.edges[c.over_enters_at_4 ? 3 : 1]]];
    const int sign = c.over_enters_at_4 ? 1 : -1;
    total += o.test(under) == o.test(over) ? sign : -sign;
  }
  return total;
}

namespace {

std::optional<std::size_t> first_ascending_defect(const Diagram& d) {
  std::vector<bool> met(d.crossing_count(), false);
  for (std::size_t s = 0; s < d.strand_count(); ++s) {
    const auto& edges = d.strand(s);
    for (int e : edges) {
      const Slot h = d.head(e);
      if (met[h.crossing]) continue;
      met[h.crossing] = true;
      if (h.position != 0) return h.crossing;
    }
  }
  return std::nullopt;
}

LaurentAZ ascending(const Diagram& d, std::map<std::string, LaurentAZ>& memo) {
  const std::string key = format_pd(d);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  LaurentAZ value;
  if (auto x = first_ascending_defect(d)) {
    value = (ascending(smooth(d, *x, Smoothing::A), memo) + ascending(smooth(d, *x, Smoothing::B), memo)).shifted({0, 1}) -
            ascending(switch_crossing(d, *x), memo);
  } else {
    value = loop_value().pow(static_cast<unsigned>(d.component_count() - 1)).shifted({writhe(d), 0});
  }
  memo.emplace(key, value);
  return value;
}

}  // namespace

LaurentAZ ascending_lambda(const Diagram& d) {
  std::map<std::string, LaurentAZ> memo;
  return ascending(d, memo);
}

Diagram add_kink(const Diagram& d, int edge, bool positive) {
  auto crossings = d.crossings();
  const int fresh = d.edge_count() + 1;
  const int loop = d.edge_count() + 2;
  const Slot h = d.head(edge);
  crossings[h.crossing].edges[static_cast<std::size_t>(h.position)] = fresh;
  if (positive) {
    crossings.push_back(Crossing{{edge, fresh, loop, loop}, true});
  } else {
    crossings.push_back(Crossing{{edge, loop, loop, fresh}, false});
  }
  return Diagram(std::move(crossings), d.free_loops());
}

BraidWord insert_cancelling_pair(BraidWord w, std::size_t at, int g) {
  w.letters.insert(w.letters.begin() + static_cast<std::ptrdiff_t>(at), {g, -g});
  return w;
}

std::optional<BraidWord> apply_braid_relation(const BraidWord& w, std::size_t at) {
  if (at + 3 > w.letters.size()) return std::nullopt;
  const int x = w.letters[at];
  const int y = w.letters[at + 1];
  const int z = w.letters[at + 2];
  BraidWord out = w;
  // s_i s_j s_i = s_j s_i s_j with |i - j| = 1, all exponents equal.
  if (x == z && std::abs(std::abs(x) - std::abs(y)) == 1 && (x > 0) == (y > 0)) {
    out.letters[at] = y;
    out.letters[at + 1] = x;
    out.letters[at + 2] = y;
    return out;
  }
  // s_i^e s_j^d s_i^-e = s_j^-e s_i^d s_j^e with |i - j| = 1.
  if (x == -z && std::abs(std::abs(x) - std::abs(y)) == 1) {
    const int e = x > 0 ? 1 : -1;
    const int d = y > 0 ? 1 : -1;
    out.letters[at] = -e * std::abs(y);
    out.letters[at + 1] = d * std::abs(x);
    out.letters[at + 2] = e * std::abs(y);
    return out;
  }
  return std::nullopt;
}

BraidWord stabilize(BraidWord w, bool positive) {
  w.letters.push_back(positive ? w.strands : -w.strands);
  ++w.strands;
  return w;
}

LaurentAZ swap_a_inverse(const LaurentAZ& p) {
  LaurentAZ r;
  for (const auto& [e, c] : p.terms()) r.add_term({-e[0], e[1]}, c);
  return r;
}

LaurentA swap_a_inverse(const LaurentA& p) {
  LaurentA r;
  for (const auto& [e, c] : p.terms()) r.add_term({-e[0]}, c);
  return r;
}

}  // namespace skein::testing

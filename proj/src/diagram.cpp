#include "skein/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace skein {

namespace {

bool is_entry(const Crossing& x, int position) { return position == 0 || position == x.over_in(); }

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  void unite(std::size_t i, std::size_t j) {
    i = find(i);
    j = find(j);
    if (i != j) parent_[std::max(i, j)] = std::min(i, j);
  }

 private:
  std::vector<std::size_t> parent_;
};

void check_mask(const Diagram& d, std::size_t size) {
  if (size != d.component_count()) {
    throw DiagramError("mask length " + std::to_string(size) + " does not match component count " +
                       std::to_string(d.component_count()));
  }
}

/// Crossing with undirected strands: positions 0,2 carry the under-strand and
/// 1,3 the over-strand. `entry` holds the previous roles and serves only as a
/// hint for choosing directions.
struct LooseCrossing {
  std::array<int, 4> edges{};
  std::array<bool, 4> entry{};
};

LooseCrossing loosen(const Crossing& x) {
  LooseCrossing u;
  u.edges = x.edges;
  for (int p = 0; p < 4; ++p) u.entry[static_cast<std::size_t>(p)] = is_entry(x, p);
  return u;
}

/// Chooses a direction for every closed strand and rebuilds crossing records.
/// Each strand is walked starting from its smallest edge, toward that edge's
/// previous entry slot when the hint is unambiguous.
Diagram orient(const std::vector<LooseCrossing>& loose, int free_loops) {
  std::map<int, std::vector<Slot>> ends;
  for (std::size_t c = 0; c < loose.size(); ++c) {
    for (int p = 0; p < 4; ++p) ends[loose[c].edges[static_cast<std::size_t>(p)]].push_back({c, p});
  }
  for (const auto& [e, slots] : ends) {
    if (slots.size() != 2) throw InvariantError("edge " + std::to_string(e) + " does not have two ends");
  }

  std::vector<std::array<bool, 4>> entry(loose.size());
  std::map<int, bool> visited;
  for (const auto& [start, slots] : ends) {
    if (visited[start]) continue;
    const auto& hint = loose;
    auto is_hint_entry = [&](const Slot& s) { return hint[s.crossing].entry[static_cast<std::size_t>(s.position)]; };
    Slot into = slots[0];
    if (!is_hint_entry(slots[0]) && is_hint_entry(slots[1])) into = slots[1];

    int edge = start;
    while (true) {
      visited[edge] = true;
      entry[into.crossing][static_cast<std::size_t>(into.position)] = true;
      const Slot out{into.crossing, (into.position + 2) % 4};
      entry[out.crossing][static_cast<std::size_t>(out.position)] = false;
      edge = loose[out.crossing].edges[static_cast<std::size_t>(out.position)];
      const auto& next_ends = ends[edge];
      into = next_ends[0] == out ? next_ends[1] : next_ends[0];
      if (edge == start) break;
    }
  }

  std::vector<Crossing> crossings;
  crossings.reserve(loose.size());
  for (std::size_t c = 0; c < loose.size(); ++c) {
    const int under_in = entry[c][0] ? 0 : 2;
    const int over_in = entry[c][1] ? 1 : 3;
    Crossing x;
    for (int k = 0; k < 4; ++k) x.edges[static_cast<std::size_t>(k)] = loose[c].edges[static_cast<std::size_t>((under_in + k) % 4)];
    x.over_enters_at_4 = (over_in - under_in + 4) % 4 == 3;
    crossings.push_back(x);
  }
  return Diagram(std::move(crossings), free_loops);
}

Crossing switched(const Crossing& x) {
  const auto& e = x.edges;
  if (x.over_enters_at_4) return Crossing{{e[3], e[0], e[1], e[2]}, false};
  return Crossing{{e[1], e[2], e[3], e[0]}, true};
}

void check_crossing_index(const Diagram& d, std::size_t c) {
  if (c >= d.crossing_count()) throw DiagramError("crossing " + std::to_string(c) + " not found");
}

}  // namespace

OrientationMask reverse_sublink(const OrientationMask& o, const SublinkMask& s) {
  if (o.size() != s.size()) throw DiagramError("orientation and sublink masks differ in length");
  return OrientationMask(o.size(), o.bits() ^ s.bits());
}

Diagram::Diagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  if (free_loops_ < 0) throw DiagramError("negative free loop count");

  // Relabel to 1..k preserving order, counting uses and roles.
  std::map<int, int> uses;
  std::map<int, int> entries;
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    for (int p = 0; p < 4; ++p) {
      const int e = crossings_[c].edges[static_cast<std::size_t>(p)];
      if (e <= 0) throw DiagramError("edge identifiers must be positive", c);
      if (++uses[e] > 2) throw DiagramError("edge " + std::to_string(e) + " used more than 2 times", c);
      if (is_entry(crossings_[c], p) && ++entries[e] > 1) {
        throw DiagramError("inconsistent strand roles: edge " + std::to_string(e) + " enters two crossings", c);
      }
    }
  }
  for (const auto& [e, n] : uses) {
    if (n != 2) {
      std::size_t where = 0;
      for (std::size_t c = 0; c < crossings_.size(); ++c) {
        const auto& es = crossings_[c].edges;
        if (std::find(es.begin(), es.end(), e) != es.end()) {
          where = c;
          break;
        }
      }
      throw DiagramError("edge " + std::to_string(e) + " used " + std::to_string(n) + " time(s), expected 2", where);
    }
    if (entries[e] != 1) throw DiagramError("inconsistent strand roles: edge " + std::to_string(e) + " never enters a crossing");
  }

  std::map<int, int> relabel;
  int next = 1;
  for (const auto& [e, n] : uses) relabel[e] = next++;
  for (auto& x : crossings_) {
    for (auto& e : x.edges) e = relabel[e];
  }

  const auto n_edges = static_cast<std::size_t>(edge_count());
  heads_.assign(n_edges + 1, Slot{});
  tails_.assign(n_edges + 1, Slot{});
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    for (int p = 0; p < 4; ++p) {
      const auto e = static_cast<std::size_t>(crossings_[c].edges[static_cast<std::size_t>(p)]);
      (is_entry(crossings_[c], p) ? heads_ : tails_)[e] = Slot{c, p};
    }
  }

  edge_component_.assign(n_edges + 1, 0);
  std::vector<bool> seen(n_edges + 1, false);
  for (int start = 1; start <= edge_count(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> path;
    int e = start;
    do {
      seen[static_cast<std::size_t>(e)] = true;
      edge_component_[static_cast<std::size_t>(e)] = strands_.size();
      path.push_back(e);
      e = next_edge(e);
    } while (e != start);
    strands_.push_back(std::move(path));
  }
}

int Diagram::next_edge(int edge) const {
  const Slot h = head(edge);
  const Crossing& x = crossings_[h.crossing];
  const int out = h.position == 0 ? 2 : x.over_out();
  return x.edges[static_cast<std::size_t>(out)];
}

std::pair<std::size_t, std::size_t> Diagram::strand_components(std::size_t c) const {
  const Crossing& x = crossings_.at(c);
  return {component_of_edge(x.edges[0]), component_of_edge(x.edges[static_cast<std::size_t>(x.over_in())])};
}

bool Diagram::is_self_crossing(std::size_t c) const {
  const auto [u, v] = strand_components(c);
  return u == v;
}

Diagram parse_pd(std::string_view text) {
  std::vector<Crossing> crossings;
  std::vector<std::size_t> crossing_lines;
  int loops = 0;
  bool saw_loops = false;

  std::size_t line_no = 0;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    const std::size_t line_end = std::min(text.find('\n', line_start), text.size());
    std::string_view line = text.substr(line_start, line_end - line_start);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    struct Token {
      std::string_view text;
      std::size_t column;
    };
    std::vector<Token> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      tokens.push_back({line.substr(i, j - i), i + 1});
      i = j;
    }

    auto integer = [&](const Token& t, int min_value) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
      if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
        throw ParseError("expected an integer, got '" + std::string(t.text) + "'", line_no, t.column);
      }
      if (value < min_value) throw ParseError("value out of range: " + std::string(t.text), line_no, t.column);
      return value;
    };

    if (!tokens.empty()) {
      const auto& head = tokens.front();
      if (head.text == "loops") {
        if (saw_loops) throw ParseError("duplicate 'loops' line", line_no, head.column);
        if (tokens.size() != 2) throw ParseError("'loops' takes exactly one count", line_no, head.column);
        loops = integer(tokens[1], 0);
        saw_loops = true;
      } else if (head.text == "Xr" || head.text == "Xl") {
        if (tokens.size() != 5) throw ParseError("a crossing needs exactly four edge identifiers", line_no, head.column);
        Crossing x;
        x.over_enters_at_4 = head.text == "Xr";
        for (std::size_t k = 0; k < 4; ++k) x.edges[k] = integer(tokens[k + 1], 1);
        crossings.push_back(x);
        crossing_lines.push_back(line_no);
      } else {
        throw ParseError("unknown record '" + std::string(head.text) + "'", line_no, head.column);
      }
    }
    line_start = line_end + 1;
  }

  try {
    return Diagram(std::move(crossings), loops);
  } catch (const DiagramError& err) {
    const std::size_t line = err.crossing() == DiagramError::npos ? 0 : crossing_lines.at(err.crossing());
    throw ParseError(err.what(), line, 1);
  }
}

std::string format_pd(const Diagram& d) {
  std::ostringstream out;
  if (d.free_loops() > 0) out << "loops " << d.free_loops() << '\n';
  for (const auto& x : d.crossings()) {
    out << (x.over_enters_at_4 ? "Xr" : "Xl");
    for (int e : x.edges) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

OrientationMask reference_orientation(const Diagram& d) { return OrientationMask::none(d.component_count()); }

int crossing_sign(const Diagram& d, std::size_t c, const OrientationMask& o) {
  check_mask(d, o.size());
  check_crossing_index(d, c);
  const auto [u, v] = d.strand_components(c);
  const int sign = d.crossings()[c].reference_sign();
  return o.test(u) != o.test(v) ? -sign : sign;
}

int writhe(const Diagram& d, const OrientationMask& o) {
  int total = 0;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) total += crossing_sign(d, c, o);
  return total;
}

int writhe(const Diagram& d) { return writhe(d, reference_orientation(d)); }

int self_writhe(const Diagram& d) {
  int total = 0;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    if (d.is_self_crossing(c)) total += d.crossings()[c].reference_sign();
  }
  return total;
}

int linking_number(const Diagram& d, const OrientationMask& o, const SublinkMask& s) {
  check_mask(d, s.size());
  int total = 0;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    const auto [u, v] = d.strand_components(c);
    if (s.test(u) != s.test(v)) total += crossing_sign(d, c, o);
  }
  if (total % 2 != 0) throw InvariantError("odd mixed-sign sum between a sublink and its complement");
#ifdef SKEIN_FLIP_LINKING_SIGN
  total = -total;
#endif
  return total / 2;
}

Diagram smooth(const Diagram& d, std::size_t c, Smoothing which) {
  check_crossing_index(d, c);
  const auto n_edges = static_cast<std::size_t>(d.edge_count());
  UnionFind classes(n_edges + 1);
  const auto& e = d.crossings()[c].edges;
  if (which == Smoothing::A) {
    classes.unite(static_cast<std::size_t>(e[0]), static_cast<std::size_t>(e[1]));
    classes.unite(static_cast<std::size_t>(e[2]), static_cast<std::size_t>(e[3]));
  } else {
    classes.unite(static_cast<std::size_t>(e[0]), static_cast<std::size_t>(e[3]));
    classes.unite(static_cast<std::size_t>(e[1]), static_cast<std::size_t>(e[2]));
  }

  std::vector<LooseCrossing> loose;
  std::vector<bool> survives(n_edges + 1, false);
  for (std::size_t k = 0; k < d.crossing_count(); ++k) {
    if (k == c) continue;
    LooseCrossing u = loosen(d.crossings()[k]);
    for (auto& edge : u.edges) {
      edge = static_cast<int>(classes.find(static_cast<std::size_t>(edge)));
      survives[static_cast<std::size_t>(edge)] = true;
    }
    loose.push_back(u);
  }

  // Classes touching the removed crossing that reach no other crossing close up.
  int new_loops = 0;
  std::vector<bool> counted(n_edges + 1, false);
  for (int edge : e) {
    const auto root = classes.find(static_cast<std::size_t>(edge));
    if (!survives[root] && !counted[root]) {
      counted[root] = true;
      ++new_loops;
    }
  }
  return orient(loose, d.free_loops() + new_loops);
}

Diagram switch_crossing(const Diagram& d, std::size_t c) {
  check_crossing_index(d, c);
  auto crossings = d.crossings();
  crossings[c] = switched(crossings[c]);
  return Diagram(std::move(crossings), d.free_loops());
}

Diagram mirror(const Diagram& d) {
  auto crossings = d.crossings();
  for (auto& x : crossings) x = switched(x);
  return Diagram(std::move(crossings), d.free_loops());
}

Diagram distant_union(const Diagram& d1, const Diagram& d2) {
  auto crossings = d1.crossings();
  for (auto x : d2.crossings()) {
    for (auto& e : x.edges) e += d1.edge_count();
    crossings.push_back(x);
  }
  return Diagram(std::move(crossings), d1.free_loops() + d2.free_loops());
}

Diagram reverse_components(const Diagram& d, const SublinkMask& s) {
  check_mask(d, s.size());
  auto crossings = d.crossings();
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    const auto [u, v] = d.strand_components(c);
    auto& x = crossings[c];
    if (s.test(u)) {
      const auto e = x.edges;
      x.edges = {e[2], e[3], e[0], e[1]};
    }
    if (s.test(u) != s.test(v)) x.over_enters_at_4 = !x.over_enters_at_4;
  }
  return Diagram(std::move(crossings), d.free_loops());
}

std::string canonical_code(const Diagram& d) {
  const auto n_edges = static_cast<std::size_t>(d.edge_count());

  // Connected pieces: strands sharing a crossing.
  UnionFind pieces(d.strand_count());
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    const auto [u, v] = d.strand_components(c);
    pieces.unite(u, v);
  }
  std::map<std::size_t, std::vector<int>> piece_edges;
  std::map<std::size_t, std::vector<std::size_t>> piece_crossings;
  for (int e = 1; e <= d.edge_count(); ++e) piece_edges[pieces.find(d.component_of_edge(e))].push_back(e);
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    piece_crossings[pieces.find(d.strand_components(c).first)].push_back(c);
  }

  std::vector<std::vector<int>> codes;
  std::vector<int> label(n_edges + 1, 0);
  for (const auto& [root, edges] : piece_edges) {
    std::vector<int> best;
    for (int start : edges) {
      for (int e : edges) label[static_cast<std::size_t>(e)] = 0;
      std::vector<int> order;
      auto label_strand = [&](int from) {
        int e = from;
        do {
          order.push_back(e);
          label[static_cast<std::size_t>(e)] = static_cast<int>(order.size());
          e = d.next_edge(e);
        } while (e != from);
      };
      label_strand(start);
      for (std::size_t i = 0; i < order.size(); ++i) {
        const Slot h = d.head(order[i]);
        const auto& x = d.crossings()[h.crossing];
        for (int k = 0; k < 4; ++k) {
          const int f = x.edges[static_cast<std::size_t>((h.position + k) % 4)];
          if (label[static_cast<std::size_t>(f)] == 0) label_strand(f);
        }
      }

      std::vector<std::array<int, 5>> rows;
      for (std::size_t c : piece_crossings[root]) {
        const auto& x = d.crossings()[c];
        std::array<int, 5> row{x.over_enters_at_4 ? 0 : 1};
        for (std::size_t k = 0; k < 4; ++k) row[k + 1] = label[static_cast<std::size_t>(x.edges[k])];
        rows.push_back(row);
      }
      std::sort(rows.begin(), rows.end());
      std::vector<int> code;
      for (const auto& row : rows) code.insert(code.end(), row.begin(), row.end());
      if (best.empty() || code < best) best = std::move(code);
    }
    codes.push_back(std::move(best));
  }
  std::sort(codes.begin(), codes.end());

  std::string out = "L" + std::to_string(d.free_loops());
  for (const auto& code : codes) {
    out += '|';
    for (std::size_t i = 0; i < code.size(); ++i) {
      if (i % 5 == 0) {
        out += code[i] == 0 ? 'r' : 'l';
      } else {
        out += std::to_string(code[i]);
        out += i % 5 == 4 ? ';' : ',';
      }
    }
  }
  return out;
}

}  // namespace skein

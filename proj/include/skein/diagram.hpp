#pragma once

// Unoriented framed link diagrams in planar-diagram (PD) form.
//
// A crossing lists its four incident edges counterclockwise, starting at the
// edge on which the under-strand enters. The under-strand runs position 1 -> 3.
// The over-strand enters at position 4 (tag `Xr`) or at position 2 (tag `Xl`).
// Those roles fix a reference direction on every closed strand; the diagram
// itself is treated as unoriented, and orientations are overlaid with masks.
//
// Sign convention: with both strands oriented, a crossing is +1 when the
// over-strand turns clockwise onto the under-strand (the right-handed
// crossing). Under the reference orientation `Xr` is +1 and `Xl` is -1.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skein/errors.hpp"

namespace skein {

struct Crossing {
  std::array<int, 4> edges{};  // counterclockwise, from the incoming under-strand edge
  bool over_enters_at_4 = true;  // `Xr` when true, `Xl` otherwise

  /// 0-based positions of the over-strand's entry and exit.
  int over_in() const noexcept { return over_enters_at_4 ? 3 : 1; }
  int over_out() const noexcept { return over_enters_at_4 ? 1 : 3; }
  int reference_sign() const noexcept { return over_enters_at_4 ? 1 : -1; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// A fixed-length bitset over component indices. Distinct tag types keep
/// orientation choices and sublink selections from being mixed up.
template <class Tag>
class ComponentBits {
 public:
  static constexpr std::size_t kMaxComponents = 63;

  ComponentBits() = default;
  explicit ComponentBits(std::size_t size, std::uint64_t bits = 0) : size_(size), bits_(bits) {
    if (size > kMaxComponents) throw DiagramError("too many components for a mask");
    if (size < 64 && (bits >> size) != 0) throw DiagramError("mask has bits beyond its length");
  }

  static ComponentBits none(std::size_t size) { return ComponentBits(size, 0); }
  static ComponentBits all(std::size_t size) { return ComponentBits(size, low_bits(size)); }

  /// Character i of `text` is component i: '1' set, '0' clear.
  static ComponentBits parse(std::string_view text) {
    if (text.size() > kMaxComponents) throw ParseError("mask too long", 0, kMaxComponents + 1);
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1') {
        bits |= std::uint64_t{1} << i;
      } else if (text[i] != '0') {
        throw ParseError("mask characters must be '0' or '1'", 0, i + 1);
      }
    }
    return ComponentBits(text.size(), bits);
  }

  std::size_t size() const noexcept { return size_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool test(std::size_t i) const noexcept { return ((bits_ >> i) & 1U) != 0; }
  std::size_t count() const noexcept { return static_cast<std::size_t>(__builtin_popcountll(bits_)); }

  ComponentBits complement() const { return ComponentBits(size_, ~bits_ & low_bits(size_)); }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
      if (test(i)) s[i] = '1';
    }
    return s;
  }

  friend bool operator==(const ComponentBits&, const ComponentBits&) = default;

 private:
  static std::uint64_t low_bits(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

  std::size_t size_ = 0;
  std::uint64_t bits_ = 0;
};

struct OrientationTag {};
struct SublinkTag {};

/// Bit i set: component i runs against its reference direction.
using OrientationMask = ComponentBits<OrientationTag>;
/// Bit i set: component i belongs to the sublink.
using SublinkMask = ComponentBits<SublinkTag>;

/// o with the components of s additionally reversed.
OrientationMask reverse_sublink(const OrientationMask& o, const SublinkMask& s);

/// A crossing position: crossing index and 0-based slot 0..3.
struct Slot {
  std::size_t crossing = 0;
  int position = 0;
  friend bool operator==(const Slot&, const Slot&) = default;
};

enum class Smoothing { A, B };

class Diagram {
 public:
  /// The empty diagram (no components).
  Diagram() = default;

  /// Validates the records and relabels edges to 1..2n preserving their
  /// relative order. Throws DiagramError naming the first bad crossing.
  Diagram(std::vector<Crossing> crossings, int free_loops);

  static Diagram unlink(int loops) { return Diagram({}, loops); }

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  int free_loops() const noexcept { return free_loops_; }
  int edge_count() const noexcept { return static_cast<int>(2 * crossings_.size()); }

  /// Closed strands that pass through crossings, then the free loops.
  std::size_t component_count() const noexcept { return strands_.size() + static_cast<std::size_t>(free_loops_); }
  std::size_t strand_count() const noexcept { return strands_.size(); }
  bool empty() const noexcept { return component_count() == 0; }

  /// Edges of strand component i in traversal order, starting at its smallest edge.
  const std::vector<int>& strand(std::size_t i) const { return strands_.at(i); }
  std::size_t component_of_edge(int edge) const { return edge_component_.at(static_cast<std::size_t>(edge)); }

  /// The slot an edge runs into, and the slot it leaves from.
  Slot head(int edge) const { return heads_.at(static_cast<std::size_t>(edge)); }
  Slot tail(int edge) const { return tails_.at(static_cast<std::size_t>(edge)); }
  /// The edge that continues the strand after `edge` passes its head crossing.
  int next_edge(int edge) const;

  /// Components of the under- and over-strand at crossing c.
  std::pair<std::size_t, std::size_t> strand_components(std::size_t c) const;
  bool is_self_crossing(std::size_t c) const;

  friend bool operator==(const Diagram& x, const Diagram& y) {
    return x.crossings_ == y.crossings_ && x.free_loops_ == y.free_loops_;
  }

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::vector<std::vector<int>> strands_;
  std::vector<std::size_t> edge_component_;  // indexed by edge id, slot 0 unused
  std::vector<Slot> heads_;
  std::vector<Slot> tails_;
};

/// PD text: optional `loops <k>` line, then one `Xr a b c d` / `Xl a b c d`
/// per line; `#` starts a comment. Throws ParseError with the line number.
Diagram parse_pd(std::string_view text);
std::string format_pd(const Diagram& d);

/// Sign of crossing c with strands oriented by o.
int crossing_sign(const Diagram& d, std::size_t c, const OrientationMask& o);
int writhe(const Diagram& d, const OrientationMask& o);
int writhe(const Diagram& d);  // reference orientation
/// Sum of signs over self-crossings; independent of orientation.
int self_writhe(const Diagram& d);
/// lk(S, L - S): half the signed count of crossings between s and its complement.
int linking_number(const Diagram& d, const OrientationMask& o, const SublinkMask& s);

OrientationMask reference_orientation(const Diagram& d);

/// Removes crossing c. A joins positions (1,2),(3,4); B joins (1,4),(2,3).
/// Strands whose roles no longer agree are re-oriented.
Diagram smooth(const Diagram& d, std::size_t c, Smoothing which);
/// Exchanges over and under at crossing c.
Diagram switch_crossing(const Diagram& d, std::size_t c);
Diagram mirror(const Diagram& d);
Diagram distant_union(const Diagram& d1, const Diagram& d2);
/// Reverses the reference direction of the components in s.
Diagram reverse_components(const Diagram& d, const SublinkMask& s);

/// Encoding that depends only on the diagram up to renaming of edges: each
/// connected piece is relabeled by a deterministic traversal from every
/// possible starting edge and the smallest relabeling is kept.
std::string canonical_code(const Diagram& d);

}  // namespace skein

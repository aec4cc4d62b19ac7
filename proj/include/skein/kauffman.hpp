#pragma once

// Kauffman polynomial of framed links. The regular-isotopy invariant
// Lambda(D)(a, z) is evaluated by skein recursion towards descending diagrams:
//
//   Lambda(D) = -Lambda(D with x switched) + z (Lambda(A-smoothing) + Lambda(B-smoothing))
//
// applied at the first defect x. Descending diagrams are split unlinks, so
//
//   Lambda(descending D) = a^{self writhe} * delta^{com - 1},
//   delta = (a + a^-1) z^-1 - 1.

#include <cstddef>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"

namespace skein {

/// A diagram together with the traversal that defines its defects: strand
/// components are walked in `component_order`, each from its `basepoints` edge.
struct SkeinTask {
  Diagram diagram;
  std::vector<std::size_t> component_order;  // a permutation of strand indices
  std::vector<int> basepoints;               // indexed by strand, an edge on that strand

  /// Strands in index order, each from its smallest edge.
  static SkeinTask standard(Diagram d);

  /// Throws DiagramError if the order is not a permutation or a basepoint
  /// lies on the wrong strand.
  void validate() const;
};

/// Crossings whose first encounter along the traversal is an under-pass,
/// in traversal order.
std::vector<std::size_t> defects(const SkeinTask& task);

struct SkeinOptions {
  bool memoize = true;
};

/// Reads LMT_NO_MEMO: "1" disables memoization.
SkeinOptions options_from_environment();

class KauffmanEngine {
 public:
  explicit KauffmanEngine(SkeinOptions options = {}) : options_(options) {}

  LaurentAZ lambda(const Diagram& d);
  /// Uses the task's traversal for the top-level diagram and the diagrams
  /// reached from it by switches. Smoothings restart from the standard order.
  LaurentAZ lambda(const SkeinTask& task);

  /// Called with every descending diagram the recursion bottoms out on.
  void set_descending_observer(std::function<void(const Diagram&)> observer) { observer_ = std::move(observer); }

  const SkeinOptions& options() const noexcept { return options_; }
  std::size_t memo_size() const;
  void clear_memo();

 private:
  LaurentAZ evaluate(const SkeinTask& task);
  LaurentAZ descending_value(const Diagram& d);

  SkeinOptions options_;
  std::function<void(const Diagram&)> observer_;
  mutable std::mutex memo_mutex_;
  std::unordered_map<std::string, LaurentAZ> memo_;
  std::vector<LaurentAZ> loop_powers_;
};

/// Process-wide engine configured from the environment on first use.
KauffmanEngine& default_engine();

LaurentAZ lambda_poly(const Diagram& d, KauffmanEngine& engine = default_engine());
/// The vertically framed link's invariant; same value as lambda_poly.
LaurentAZ f_framed(const Diagram& d, KauffmanEngine& engine = default_engine());
/// Ambient-isotopy invariant of the oriented link: a^{-writhe(d, o)} Lambda(d).
LaurentAZ f_oriented(const Diagram& d, const OrientationMask& o, KauffmanEngine& engine = default_engine());
/// f_oriented evaluated at z = -a - a^-1.
LaurentA specialized_f(const Diagram& d, const OrientationMask& o, KauffmanEngine& engine = default_engine());

}  // namespace skein

#include "skein/kauffman.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace skein {

SkeinTask SkeinTask::standard(Diagram d) {
  SkeinTask task{std::move(d), {}, {}};
  const std::size_t n = task.diagram.strand_count();
  task.component_order.resize(n);
  std::iota(task.component_order.begin(), task.component_order.end(), 0);
  for (std::size_t i = 0; i < n; ++i) task.basepoints.push_back(task.diagram.strand(i).front());
  return task;
}

void SkeinTask::validate() const {
  const std::size_t n = diagram.strand_count();
  if (component_order.size() != n || basepoints.size() != n) {
    throw DiagramError("skein task needs one order entry and one basepoint per strand");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t i : component_order) {
    if (i >= n || seen[i]) throw DiagramError("component order is not a permutation");
    seen[i] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const int e = basepoints[i];
    if (e < 1 || e > diagram.edge_count() || diagram.component_of_edge(e) != i) {
      throw DiagramError("basepoint " + std::to_string(e) + " is not on strand " + std::to_string(i));
    }
  }
}

std::vector<std::size_t> defects(const SkeinTask& task) {
  const Diagram& d = task.diagram;
  std::vector<bool> met(d.crossing_count(), false);
  std::vector<std::size_t> found;
  for (std::size_t comp : task.component_order) {
    const int start = task.basepoints[comp];
    int e = start;
    do {
      const Slot h = d.head(e);
      if (!met[h.crossing]) {
        met[h.crossing] = true;
        if (h.position == 0) found.push_back(h.crossing);
      }
      e = d.next_edge(e);
    } while (e != start);
  }
  return found;
}

SkeinOptions options_from_environment() {
  SkeinOptions options;
  if (const char* v = std::getenv("LMT_NO_MEMO"); v != nullptr && std::string(v) == "1") options.memoize = false;
  return options;
}

LaurentAZ KauffmanEngine::lambda(const Diagram& d) { return lambda(SkeinTask::standard(d)); }

LaurentAZ KauffmanEngine::lambda(const SkeinTask& task) {
  if (task.diagram.empty()) throw DiagramError("empty diagram");
  task.validate();
  return evaluate(task);
}

std::size_t KauffmanEngine::memo_size() const {
  std::lock_guard lock(memo_mutex_);
  return memo_.size();
}

void KauffmanEngine::clear_memo() {
  std::lock_guard lock(memo_mutex_);
  memo_.clear();
}

LaurentAZ KauffmanEngine::descending_value(const Diagram& d) {
  if (observer_) observer_(d);
  const std::size_t k = d.component_count() - 1;
  {
    std::lock_guard lock(memo_mutex_);
    if (loop_powers_.empty()) loop_powers_.emplace_back(1);
    while (loop_powers_.size() <= k) loop_powers_.push_back(loop_powers_.back() * loop_value());
    return loop_powers_[k].shifted({self_writhe(d), 0});
  }
}

LaurentAZ KauffmanEngine::evaluate(const SkeinTask& task) {
  std::string key;
  if (options_.memoize) {
    key = canonical_code(task.diagram);
    std::lock_guard lock(memo_mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  const auto found = defects(task);
  LaurentAZ value;
  if (found.empty()) {
    value = descending_value(task.diagram);
  } else {
    const std::size_t x = found.front();
    SkeinTask flipped{switch_crossing(task.diagram, x), task.component_order, task.basepoints};
    const LaurentAZ smoothings = evaluate(SkeinTask::standard(smooth(task.diagram, x, Smoothing::A))) +
                                 evaluate(SkeinTask::standard(smooth(task.diagram, x, Smoothing::B)));
    value = smoothings.shifted({0, 1}) - evaluate(flipped);
  }

  if (options_.memoize) {
    std::lock_guard lock(memo_mutex_);
    memo_.insert_or_assign(std::move(key), value);
  }
  return value;
}

KauffmanEngine& default_engine() {
  static KauffmanEngine engine(options_from_environment());
  return engine;
}

LaurentAZ lambda_poly(const Diagram& d, KauffmanEngine& engine) { return engine.lambda(d); }

LaurentAZ f_framed(const Diagram& d, KauffmanEngine& engine) { return engine.lambda(d); }

LaurentAZ f_oriented(const Diagram& d, const OrientationMask& o, KauffmanEngine& engine) {
  return engine.lambda(d).shifted({-writhe(d, o), 0});
}

LaurentA specialized_f(const Diagram& d, const OrientationMask& o, KauffmanEngine& engine) {
  return substitute_z(f_oriented(d, o, engine));
}

}  // namespace skein

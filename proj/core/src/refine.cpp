#include "sgcanon/refine.hpp"

#include <algorithm>
#include <list>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>

#include "sgcanon/error.hpp"

namespace sgcanon {

DfaView::DfaView(const ColouredGraph& g)
    : n_(g.vertex_count()), k_(static_cast<int>(g.colours().size())) {
  if (!is_rigid(g)) {
    throw Error("automaton view requires a rigid graph: " +
                check_rigidity(g).front().message);
  }
  colours_ = g.colours();
  const int states = 2 * n_;
  const int symbols = 2 * k_;
  delta_.assign(static_cast<std::size_t>(states) *
                    static_cast<std::size_t>(symbols),
                0);
  // Default: every real state falls to its own sink, sinks absorb.
  for (int s = 1; s <= n_; ++s) {
    for (int x = 0; x < symbols; ++x) {
      delta_[static_cast<std::size_t>(s - 1) * symbols + x] = sink_of(s);
      delta_[static_cast<std::size_t>(sink_of(s) - 1) * symbols + x] =
          sink_of(s);
    }
  }
  const std::vector<int>& ids = g.edge_colour_ids();
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const ColouredEdge& e = g.edges()[i];
    const int c = ids[i];
    delta_[static_cast<std::size_t>(e.from - 1) * symbols + c] = e.to;
    delta_[static_cast<std::size_t>(e.to - 1) * symbols + (k_ + c)] = e.from;
  }
  const std::size_t cells =
      static_cast<std::size_t>(states) * static_cast<std::size_t>(symbols);
  pred_.assign(2 * cells, 0);
  pred_len_.assign(cells, 0);
  for (int s = 1; s <= states; ++s) {
    for (int x = 0; x < symbols; ++x) {
      const std::size_t cell =
          static_cast<std::size_t>(delta(s, x) - 1) * symbols +
          static_cast<std::size_t>(x);
      pred_[2 * cell + static_cast<std::size_t>(pred_len_[cell]++)] = s;
    }
  }
}

int DfaView::delta(int state, int symbol) const {
  return delta_[static_cast<std::size_t>(state - 1) * symbol_count() + symbol];
}

DfaView::Predecessors DfaView::predecessors(int state, int symbol) const {
  const std::size_t cell =
      static_cast<std::size_t>(state - 1) * symbol_count() +
      static_cast<std::size_t>(symbol);
  return Predecessors(&pred_[2 * cell], pred_len_[cell]);
}

int DfaView::find_symbol(const Colour& c, bool reversed) const {
  auto it =
      std::lower_bound(colours_.begin(), colours_.end(), c, colour_less);
  if (it == colours_.end() || !(*it == c)) return -1;
  return static_cast<int>(it - colours_.begin()) + (reversed ? k_ : 0);
}

int DfaView::delta_hat(int state, const std::vector<int>& word) const {
  for (int x : word) state = delta(state, x);
  return state;
}

std::vector<std::vector<int>> StatePartition::real_classes(
    const DfaView& dfa) const {
  // Classes never mix real states and sinks (the initial partition separates
  // them and refinement only splits), so the first member decides.
  std::vector<std::vector<int>> out;
  for (const auto& cls : classes) {
    if (!cls.empty() && cls.front() <= dfa.real_count()) out.push_back(cls);
  }
  return out;
}

namespace {

// Partition of states 1..count into numbered classes, supporting
// mark-and-split in O(1) per mark.  Marked states are swapped to the front
// of their class's range; splitting moves the marked range into a new class
// (which takes a fresh id) and shrinks the old class to the rest.
class Refinable {
 public:
  // Initial classes: [1..real] and [real+1..count].
  Refinable(int count, int real) : pos_(count + 1), cls_(count + 1) {
    elems_.resize(static_cast<std::size_t>(count));
    for (int s = 1; s <= count; ++s) {
      elems_[static_cast<std::size_t>(s - 1)] = s;
      pos_[static_cast<std::size_t>(s)] = s - 1;
      cls_[static_cast<std::size_t>(s)] = s <= real ? 0 : 1;
    }
    begin_ = {0, real};
    end_ = {real, count};
    marked_ = {0, 0};
  }

  int class_count() const { return static_cast<int>(begin_.size()); }
  int class_of(int state) const {
    return cls_[static_cast<std::size_t>(state)];
  }
  int size(int c) const {
    return end_[static_cast<std::size_t>(c)] -
           begin_[static_cast<std::size_t>(c)];
  }
  int marked(int c) const { return marked_[static_cast<std::size_t>(c)]; }

  // Members of a class, in the current internal layout order.
  std::vector<int> members(int c) const {
    return {elems_.begin() + begin_[static_cast<std::size_t>(c)],
            elems_.begin() + end_[static_cast<std::size_t>(c)]};
  }

  // Marks a state; returns its class if this was the class's first mark.
  int mark(int state, std::vector<int>& touched) {
    const int c = cls_[static_cast<std::size_t>(state)];
    const int p = pos_[static_cast<std::size_t>(state)];
    const int mend = begin_[static_cast<std::size_t>(c)] +
                     marked_[static_cast<std::size_t>(c)];
    if (p < mend) return c;  // already marked
    if (marked_[static_cast<std::size_t>(c)] == 0) touched.push_back(c);
    std::swap(elems_[static_cast<std::size_t>(p)],
              elems_[static_cast<std::size_t>(mend)]);
    pos_[static_cast<std::size_t>(elems_[static_cast<std::size_t>(p)])] = p;
    pos_[static_cast<std::size_t>(state)] = mend;
    ++marked_[static_cast<std::size_t>(c)];
    return c;
  }

  // Splits class c after marking.  Returns the new class id holding the
  // marked half, or -1 when every member was marked (no split; marks reset).
  int split(int c) {
    if (marked_[static_cast<std::size_t>(c)] == size(c)) {
      marked_[static_cast<std::size_t>(c)] = 0;
      return -1;
    }
    const int fresh = class_count();
    const int b = begin_[static_cast<std::size_t>(c)];
    const int mid = b + marked_[static_cast<std::size_t>(c)];
    begin_.push_back(b);
    end_.push_back(mid);
    marked_.push_back(0);
    begin_[static_cast<std::size_t>(c)] = mid;
    marked_[static_cast<std::size_t>(c)] = 0;
    for (int i = b; i < mid; ++i) {
      cls_[static_cast<std::size_t>(elems_[static_cast<std::size_t>(i)])] =
          fresh;
    }
    return fresh;
  }

 private:
  std::vector<int> elems_;
  std::vector<int> pos_;
  std::vector<int> cls_;
  std::vector<int> begin_;
  std::vector<int> end_;
  std::vector<int> marked_;
};

// Refinement shares the labellers' input contract: a connected graph (so at
// least one vertex).  Rigidity is enforced by the automaton view itself.
void require_refinable(const ColouredGraph& g) {
  if (!is_connected(g)) {
    throw Error("refinement requires a connected graph with at least one "
                "vertex");
  }
}

StatePartition to_partition(const Refinable& p, int state_count,
                            std::optional<int> least) {
  StatePartition out;
  out.classes.assign(static_cast<std::size_t>(p.class_count()), {});
  out.class_of.assign(static_cast<std::size_t>(state_count + 1), -1);
  for (int s = 1; s <= state_count; ++s) {
    const int c = p.class_of(s);
    out.classes[static_cast<std::size_t>(c)].push_back(s);
    out.class_of[static_cast<std::size_t>(s)] = c;
  }
  // Members arrive in increasing state order, so classes are sorted already.
  out.least = least;
  return out;
}

}  // namespace

StatePartition hopcroft_extended(const ColouredGraph& g) {
  require_refinable(g);
  return hopcroft_extended(DfaView(g));
}

StatePartition hopcroft_extended(const DfaView& dfa) {
  const int n = dfa.real_count();
  const int symbols = dfa.symbol_count();
  Refinable part(dfa.state_count(), n);
  int least = 0;  // the class whose members the labellers would start from

  // Pending refiners, processed front-first.  Initialised with the sink
  // class for every symbol, prepended in increasing symbol order.
  std::list<std::pair<int, int>> work;
  std::unordered_map<long long, std::list<std::pair<int, int>>::iterator>
      in_work;
  const auto key = [symbols](int c, int x) {
    return static_cast<long long>(c) * symbols + x;
  };
  for (int x = 0; x < symbols; ++x) {
    work.push_front({1, x});
    in_work[key(1, x)] = work.begin();
  }

  std::vector<int> touched;
  while (!work.empty()) {
    const auto [q, x] = work.front();
    in_work.erase(key(q, x));
    work.pop_front();

    touched.clear();
    for (int state : part.members(q)) {
      for (int s : dfa.predecessors(state, x)) part.mark(s, touched);
    }
    // Splitting in increasing class-id order keeps fresh ids (and therefore
    // the whole refinement trace) identical across isomorphic inputs.
    std::sort(touched.begin(), touched.end());
    for (int b : touched) {
      const int marked = part.marked(b);
      const int rest = part.size(b) - marked;
      const int fresh = part.split(b);
      if (fresh < 0) continue;
      for (int y = 0; y < symbols; ++y) {
        auto it = in_work.find(key(b, y));
        if (it != in_work.end()) {
          // Both halves must be processed for y; queue the new one just
          // before the surviving old entry.
          in_work[key(fresh, y)] = work.insert(it->second, {fresh, y});
        } else {
          // Queue the smaller half; on a tie, the new (marked) one.
          const auto chosen = marked <= rest ? std::pair{fresh, y}
                                             : std::pair{b, y};
          work.push_front(chosen);
          in_work[key(chosen.first, chosen.second)] = work.begin();
        }
      }
      if (b == least) least = fresh;
    }
  }
  return to_partition(part, dfa.state_count(), least);
}

StatePartition hopcroft_original(const ColouredGraph& g) {
  require_refinable(g);
  return hopcroft_original(DfaView(g));
}

StatePartition hopcroft_original(const DfaView& dfa) {
  // Same refinement, independently chosen policies: a vector stack for the
  // worklist, symbols seeded in decreasing order, touched classes split in
  // decreasing id order, ties queue the complement half, and a refiner of a
  // split class is re-queued as both halves.
  const int n = dfa.real_count();
  const int symbols = dfa.symbol_count();
  Refinable part(dfa.state_count(), n);

  std::vector<std::pair<int, int>> work;
  for (int x = symbols - 1; x >= 0; --x) work.push_back({1, x});

  std::vector<int> touched;
  while (!work.empty()) {
    const auto [q, x] = work.back();
    work.pop_back();

    touched.clear();
    for (int state : part.members(q)) {
      for (int s : dfa.predecessors(state, x)) part.mark(s, touched);
    }
    std::sort(touched.rbegin(), touched.rend());
    for (int b : touched) {
      const int marked = part.marked(b);
      const int rest = part.size(b) - marked;
      const int fresh = part.split(b);
      if (fresh < 0) continue;
      for (int y = 0; y < symbols; ++y) {
        const auto pending = std::find(work.begin(), work.end(),
                                       std::pair{b, y});
        if (pending != work.end()) {
          work.erase(pending);
          work.push_back({b, y});
          work.push_back({fresh, y});
        } else if (marked < rest) {
          work.push_back({fresh, y});
        } else {
          work.push_back({b, y});
        }
      }
    }
  }
  return to_partition(part, dfa.state_count(), std::nullopt);
}

StatePartition bisim_fixpoint(const ColouredGraph& g) {
  require_refinable(g);
  return bisim_fixpoint(DfaView(g));
}

StatePartition bisim_fixpoint(const DfaView& dfa) {
  const int n = dfa.real_count();
  const int states = dfa.state_count();
  const int symbols = dfa.symbol_count();

  std::vector<int> cls(static_cast<std::size_t>(states + 1));
  for (int s = 1; s <= states; ++s) cls[static_cast<std::size_t>(s)] = s <= n;
  int count = 2;
  while (true) {
    // Signature: own class plus the classes reached on every symbol.
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(static_cast<std::size_t>(states + 1));
    for (int s = 1; s <= states; ++s) {
      std::vector<int> sig;
      sig.reserve(static_cast<std::size_t>(symbols) + 1);
      sig.push_back(cls[static_cast<std::size_t>(s)]);
      for (int x = 0; x < symbols; ++x) {
        sig.push_back(cls[static_cast<std::size_t>(dfa.delta(s, x))]);
      }
      auto [it, inserted] = ids.emplace(std::move(sig),
                                        static_cast<int>(ids.size()));
      next[static_cast<std::size_t>(s)] = it->second;
    }
    const int new_count = static_cast<int>(ids.size());
    cls = std::move(next);
    if (new_count == count) break;
    count = new_count;
  }

  StatePartition out;
  out.classes.assign(static_cast<std::size_t>(count), {});
  out.class_of.assign(static_cast<std::size_t>(states + 1), -1);
  for (int s = 1; s <= states; ++s) {
    out.classes[static_cast<std::size_t>(cls[static_cast<std::size_t>(s)])]
        .push_back(s);
    out.class_of[static_cast<std::size_t>(s)] =
        cls[static_cast<std::size_t>(s)];
  }
  return out;
}

}  // namespace sgcanon

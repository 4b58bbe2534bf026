#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sgcanon/colgraph.hpp"

namespace sgcanon {

// A coloured graph viewed as a deterministic finite automaton, completed
// with one sink per state:
//  - states 1..n are the graph's vertices ("real"), state n+v is the sink
//    reached from v on any colour v has no out-edge for;
//  - symbols 0..k-1 are the graph's colours in sorted order, symbols
//    k..2k-1 are the same colours reversed (following an in-edge backwards);
//  - sinks absorb every symbol.
// On a rigid graph the transition function restricted to real states is
// injective per symbol, so each state has at most two predecessors per
// symbol (one real, plus possibly the sink pairing of a real state).
class DfaView {
 public:
  // Since a (state, symbol) pair has at most two predecessors, they are
  // stored in fixed-width slots and handed out as a borrowed range.
  class Predecessors {
   public:
    const int* begin() const { return data_; }
    const int* end() const { return data_ + size_; }
    std::size_t size() const { return static_cast<std::size_t>(size_); }
    bool empty() const { return size_ == 0; }
    int operator[](std::size_t i) const { return data_[i]; }

   private:
    friend class DfaView;
    Predecessors(const int* data, int size) : data_(data), size_(size) {}
    const int* data_;
    int size_;
  };

  explicit DfaView(const ColouredGraph& g);

  int real_count() const { return n_; }
  int state_count() const { return 2 * n_; }
  int symbol_count() const { return 2 * k_; }

  bool is_sink(int state) const { return state > n_; }
  int sink_of(int v) const { return n_ + v; }

  // Transition from state on symbol (states 1-based, symbols 0-based).
  int delta(int state, int symbol) const;

  // States s with delta(s, symbol) == state; size at most 2.
  Predecessors predecessors(int state, int symbol) const;

  // Symbol id for a colour in the forward (0) or reversed (1) direction;
  // -1 when the colour is not in the graph.
  int find_symbol(const Colour& c, bool reversed) const;

  // delta extended to words.
  int delta_hat(int state, const std::vector<int>& word) const;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<int> delta_;      // (2n) x (2k) row-major
  std::vector<int> pred_;       // same shape, two slots per cell
  std::vector<int> pred_len_;   // same shape, slots used (<= 2)
  std::vector<Colour> colours_;
};

// A partition of the DFA's states.  Classes hold 1-based state ids; classes
// over real states only are exposed separately.  `least` is the id of the
// least class: the class of real states that a least-element tracking
// refinement singled out (only set by hopcroft_extended).
struct StatePartition {
  std::vector<std::vector<int>> classes;  // each sorted ascending
  std::vector<int> class_of;              // state -> class index
  std::optional<int> least;               // index into classes, if tracked

  // Classes containing real states only, in class-id order.
  std::vector<std::vector<int>> real_classes(const DfaView& dfa) const;
};

// Partition refinement (Hopcroft's algorithm) over the DFA view, extended to
// track the least class: the class that always contains the minimum-rank
// start the labellers would pick.  Splitter choice and split ordering are
// fixed so that runs on isomorphic graphs refine along corresponding steps.
// Like the labellers, all three refinements require g rigid, connected and
// non-empty; they throw Error otherwise.
StatePartition hopcroft_extended(const ColouredGraph& g);

// The same refinement with independently chosen processing policies (stack
// worklist, reversed initialisation order, opposite tie handling).  Used to
// check that the computed partition does not depend on policy choices.
StatePartition hopcroft_original(const ColouredGraph& g);

// Naive bisimulation fixpoint: refine {real states, sinks} by transition
// signatures until stable.  Quadratic; serves as an oracle for the two
// Hopcroft variants.
StatePartition bisim_fixpoint(const ColouredGraph& g);

// The same three refinements over an existing automaton view, for callers
// that run several of them on one graph.  The view construction already
// rejected non-rigid graphs; the caller is responsible for only wrapping
// connected non-empty graphs.
StatePartition hopcroft_extended(const DfaView& dfa);
StatePartition hopcroft_original(const DfaView& dfa);
StatePartition bisim_fixpoint(const DfaView& dfa);

}  // namespace sgcanon

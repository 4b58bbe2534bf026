#include "sgcanon/labelling.hpp"

#include <algorithm>
#include <array>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stop_token>
#include <string>
#include <thread>
#include <utility>
#include <variant>

#include "sgcanon/enumerate.hpp"
#include "sgcanon/error.hpp"
#include "sgcanon/refine.hpp"
#include "sgcanon/serialise.hpp"

namespace sgcanon {

namespace {

// Thrown inside a racing labeller when the other one already won.
struct Cancelled {};

void check_stop(const std::stop_token* stop) {
  if (stop && stop->stop_requested()) throw Cancelled{};
}

void require_labellable(const ColouredGraph& g) {
  if (!is_connected(g)) {
    throw Error(
        "canonical labelling requires a connected graph with at least one "
        "vertex");
  }
  if (!is_rigid(g)) {
    throw Error("canonical labelling requires a rigid graph: " +
                check_rigidity(g).front().message);
  }
}

std::vector<int> normalise_starts(const ColouredGraph& g,
                                  const std::optional<std::vector<int>>& starts) {
  std::vector<int> out;
  if (starts) {
    out = *starts;
    for (int s : out) {
      if (s < 1 || s > g.vertex_count()) {
        throw Error("start vertex " + std::to_string(s) + " is outside 1.." +
                    std::to_string(g.vertex_count()));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw Error("the start set must not be empty");
  } else {
    out.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 1; v <= g.vertex_count(); ++v) {
      out[static_cast<std::size_t>(v - 1)] = v;
    }
  }
  return out;
}

CanonicalForm form_from(ColouredGraph graph, Permutation witness) {
  CanonicalForm form;
  form.bytes = coloured_graph_bytes(graph);
  form.digest = sha256(form.bytes);
  form.graph = std::move(graph);
  form.witness = std::move(witness);
  return form;
}

// The converted sequence as (source, target, colour-id) triples.  For
// enumerations of one graph, triple order equals annotated-edge order,
// because colour ids are assigned in colour order.
void converted_triples(const ColouredGraph& g, const EdgeEnumeration& e,
                       std::vector<std::array<int, 3>>& out) {
  const std::vector<int>& ids = g.edge_colour_ids();
  out.clear();
  out.reserve(e.order.size());
  for (int id : e.order) {
    const ColouredEdge& edge = g.edges()[static_cast<std::size_t>(id)];
    out.push_back({e.renaming(edge.from), e.renaming(edge.to),
                   ids[static_cast<std::size_t>(id)]});
  }
}

CanonicalForm pairwise_impl(const ColouredGraph& g,
                            const std::optional<std::vector<int>>& start_set,
                            LabelStats* stats, bool prune,
                            const std::stop_token* stop) {
  require_labellable(g);
  const std::vector<int> starts = normalise_starts(g, start_set);

  std::set<int> pending(starts.begin(), starts.end());
  std::vector<char> enumerated(static_cast<std::size_t>(g.vertex_count() + 1),
                               0);
  std::optional<EdgeEnumeration> best;
  std::vector<std::array<int, 3>> best_seq;
  std::vector<std::array<int, 3>> seq;
  std::size_t outer = 0;

  while (!pending.empty()) {
    check_stop(stop);
    ++outer;
    const int v = *pending.begin();
    pending.erase(pending.begin());
    EdgeEnumeration en = bfs_enumerate(g, v);
    enumerated[static_cast<std::size_t>(v)] = 1;

    if (!best) {
      best = std::move(en);
      converted_triples(g, *best, best_seq);
      continue;
    }
    converted_triples(g, en, seq);
    const auto cmp = seq <=> best_seq;
    if (cmp < 0) {
      best = std::move(en);
      std::swap(best_seq, seq);
      continue;
    }
    if (cmp != 0 || !prune) continue;

    // Equal sequences expose an automorphism; use it to drop starts whose
    // enumerations are forced to repeat ones already seen.  Membership is
    // judged against a snapshot so removals inside the pass cannot change
    // later decisions.
    const Permutation pi = compose(best->renaming.inverse(), en.renaming);
    const std::vector<int> snapshot(pending.begin(), pending.end());
    for (int w : snapshot) {
      const int u = pi(w);
      if (u == w) continue;
      if (std::binary_search(snapshot.begin(), snapshot.end(), u)) {
        pending.erase(std::min(w, u));
      } else if (enumerated[static_cast<std::size_t>(u)]) {
        // w's enumeration equals u's, which was fully compared already.
        pending.erase(w);
      }
      // Otherwise u was pruned earlier or is outside the start set; w stays
      // so its equivalence class keeps a live representative.
    }
  }

  if (stats) stats->outer_iterations = outer;
  return form_from(apply_renaming(g, best->renaming), best->renaming);
}

CanonicalForm parallel_impl(const ColouredGraph& g,
                            const std::optional<std::vector<int>>& start_set,
                            LabelStats* stats, const std::stop_token* stop) {
  require_labellable(g);
  const std::vector<int> starts = normalise_starts(g, start_set);

  std::vector<LazyEnumerator> runs;
  runs.reserve(starts.size());
  for (int s : starts) runs.emplace_back(g, s);
  std::vector<std::size_t> live(runs.size());
  for (std::size_t i = 0; i < runs.size(); ++i) live[i] = i;

  const std::size_t rounds = g.edges().size();
  std::size_t rounds_to_unique = 0;
  if (stats) stats->survivor_trace.clear();

  // Rounds compare edges of one graph, so (source, target, colour-id)
  // triples order exactly like annotated edges.
  const std::vector<int>& ids = g.edge_colour_ids();
  std::vector<std::array<int, 3>> emitted;
  for (std::size_t round = 1; round <= rounds; ++round) {
    check_stop(stop);
    emitted.clear();
    for (std::size_t i : live) {
      const auto step = std::get<LazyEnumerator::Step>(runs[i].next());
      emitted.push_back({step.edge.source, step.edge.target,
                         ids[static_cast<std::size_t>(step.edge_index)]});
    }
    std::size_t best = 0;
    for (std::size_t j = 1; j < emitted.size(); ++j) {
      if (emitted[j] < emitted[best]) best = j;
    }
    std::vector<std::size_t> survivors;
    for (std::size_t j = 0; j < emitted.size(); ++j) {
      if (emitted[j] == emitted[best]) {
        survivors.push_back(live[j]);
      }
    }
    live = std::move(survivors);
    if (stats) stats->survivor_trace.push_back(live.size());
    if (rounds_to_unique == 0 && live.size() == 1) rounds_to_unique = round;
  }
  if (rounds_to_unique == 0 && live.size() > 1) rounds_to_unique = rounds;

  // Any survivor yields the same renamed graph; take the smallest start so
  // the witness is deterministic.
  auto done = std::get<LazyEnumerator::Done>(runs[live.front()].next());
  if (stats) {
    stats->parallel_rounds = rounds;
    stats->rounds_to_unique = rounds_to_unique;
  }
  return form_from(std::move(done.graph), std::move(done.renaming));
}

}  // namespace

std::string CanonicalForm::digest_hex() const { return to_hex(digest); }

CanonicalForm make_canonical_form(const ColouredGraph& g,
                                  const Permutation& witness) {
  return form_from(apply_renaming(g, witness), witness);
}

CanonicalForm canon_pairwise(const ColouredGraph& g,
                             std::optional<std::vector<int>> starts,
                             LabelStats* stats, bool prune) {
  return pairwise_impl(g, starts, stats, prune, nullptr);
}

CanonicalForm canon_parallel(const ColouredGraph& g,
                             std::optional<std::vector<int>> starts,
                             LabelStats* stats) {
  CanonicalForm form = parallel_impl(g, starts, stats, nullptr);
#ifndef NDEBUG
  // Debug builds cross-check against the pairwise labeller on every call.
  const CanonicalForm check = pairwise_impl(g, starts, nullptr, true, nullptr);
  if (check.digest != form.digest) {
    throw Error("parallel and pairwise labellers disagree on this graph");
  }
#endif
  return form;
}

CanonicalForm canon_combined(const ColouredGraph& g, InnerLabeller inner,
                             LabelStats* stats) {
  require_labellable(g);
  const StatePartition partition = hopcroft_extended(g);
  if (!partition.least) {
    throw Error("refinement did not produce a start class");
  }
  const std::vector<int>& starts =
      partition.classes[static_cast<std::size_t>(*partition.least)];
  if (stats) {
    std::size_t real = 0;
    for (const auto& cls : partition.classes) {
      if (!cls.empty() && cls.front() <= g.vertex_count()) ++real;
    }
    stats->refine_class_count = real;
    stats->least_class_size = starts.size();
  }
  return inner == InnerLabeller::kPairwise
             ? canon_pairwise(g, starts, stats)
             : canon_parallel(g, starts, stats);
}

// Persistent helper threads for the race labeller.  Spawning two fresh
// threads per call stalls badly once many callers race at the same time:
// every thread start and exit remaps stack memory under the process-wide
// address-space lock, which serialises otherwise independent callers.
class HelperPool {
 public:
  static HelperPool& instance() {
    static HelperPool pool;
    return pool;
  }

  std::uint64_t submit(std::function<void()> task) {
    const std::lock_guard<std::mutex> lock(mutex_);
    const std::uint64_t ticket = next_ticket_++;
    queue_.emplace(ticket, std::move(task));
    cv_.notify_one();
    return ticket;
  }

  // True if the task had not started and never will.  False once a worker
  // owns it; the caller must then await the task's own completion signal.
  bool revoke(std::uint64_t ticket) {
    const std::lock_guard<std::mutex> lock(mutex_);
    return queue_.erase(ticket) > 0;
  }

 private:
  HelperPool() {
    const unsigned n = std::max(2u, std::thread::hardware_concurrency());
    workers_.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
      workers_.emplace_back([this](std::stop_token st) { run(st); });
    }
  }

  void run(std::stop_token st) {
    std::unique_lock<std::mutex> lock(mutex_);
    while (cv_.wait(lock, st, [this] { return !queue_.empty(); })) {
      const auto node = queue_.extract(queue_.begin());
      lock.unlock();
      node.mapped()();
      lock.lock();
    }
  }

  std::mutex mutex_;
  std::condition_variable_any cv_;
  std::map<std::uint64_t, std::function<void()>> queue_;  // FIFO by ticket
  std::uint64_t next_ticket_ = 0;
  std::vector<std::jthread> workers_;
};

CanonicalForm canon_race(const ColouredGraph& g) {
  require_labellable(g);

  std::mutex mutex;
  std::condition_variable cv;
  std::optional<CanonicalForm> winner;
  std::optional<std::string> errors[2];
  bool helper_done = false;
  std::stop_source stop;

  const auto run = [&](int which) {
    try {
      std::stop_token token = stop.get_token();
      CanonicalForm form =
          which == 0 ? pairwise_impl(g, {}, nullptr, true, &token)
                     : parallel_impl(g, {}, nullptr, &token);
      const std::lock_guard<std::mutex> lock(mutex);
      if (!winner) {
        winner = std::move(form);
        stop.request_stop();
      }
    } catch (const Cancelled&) {
      // Lost the race; nothing to report.
    } catch (const std::exception& e) {
      const std::lock_guard<std::mutex> lock(mutex);
      errors[which] = e.what();
    }
  };

  // The pairwise lane goes to a helper; the parallel lane runs right here,
  // so the race progresses even while every helper is busy.  A helper lane
  // still queued once the local lane has finished is withdrawn: it had not
  // started, so it could only have lost.
  const std::uint64_t ticket = HelperPool::instance().submit([&] {
    run(0);
    const std::lock_guard<std::mutex> lock(mutex);
    helper_done = true;
    cv.notify_one();  // under the lock: cv dies when the caller returns
  });
  run(1);
  if (!HelperPool::instance().revoke(ticket)) {
    std::unique_lock<std::mutex> lock(mutex);
    cv.wait(lock, [&] { return helper_done; });
  }

  if (winner) return std::move(*winner);
  std::string message = "both labellers failed:";
  if (errors[0]) message += " pairwise: " + *errors[0];
  if (errors[1]) message += std::string(errors[0] ? ";" : "") +
                            " parallel: " + *errors[1];
  throw Error(message);
}

}  // namespace sgcanon

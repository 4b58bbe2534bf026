#include "sgcanon/enumerate.hpp"

#include <string>
#include <utility>

#include "sgcanon/error.hpp"

namespace sgcanon {

LazyEnumerator::LazyEnumerator(const ColouredGraph& g, int start)
    : g_(&g), start_(start) {
  if (!is_connected(g)) {
    throw Error("enumeration requires a connected graph with at least one "
                "vertex");
  }
  if (start < 1 || start > g.vertex_count()) {
    throw Error("start vertex " + std::to_string(start) + " is outside 1.." +
                std::to_string(g.vertex_count()));
  }
  rank_.assign(static_cast<std::size_t>(g.vertex_count() + 1), 0);
  edge_seen_.assign(g.edges().size(), 0);
  rank_[static_cast<std::size_t>(start)] = next_rank_++;
  queue_.push_back(start);
}

std::variant<LazyEnumerator::Step, LazyEnumerator::Done>
LazyEnumerator::next() {
  if (finished_) throw Error("enumeration already finished");

  const auto discover = [this](int edge_index) {
    edge_seen_[static_cast<std::size_t>(edge_index)] = 1;
    const ColouredEdge& e = g_->edges()[static_cast<std::size_t>(edge_index)];
    const int other = current_vertex_ == e.from ? e.to : e.from;
    if (rank_[static_cast<std::size_t>(other)] == 0) {
      rank_[static_cast<std::size_t>(other)] = next_rank_++;
      queue_.push_back(other);
    }
    return Step{edge_index,
                AnnotatedEdge{rank_[static_cast<std::size_t>(e.from)],
                              rank_[static_cast<std::size_t>(e.to)], e.colour}};
  };

  while (true) {
    if (!walking_) {
      if (queue_head_ == queue_.size()) {
        finished_ = true;
        std::vector<int> images(
            static_cast<std::size_t>(g_->vertex_count()));
        for (int v = 1; v <= g_->vertex_count(); ++v) {
          images[static_cast<std::size_t>(v - 1)] =
              rank_[static_cast<std::size_t>(v)];
        }
        Permutation renaming(std::move(images));
        return Done{apply_renaming(*g_, renaming), std::move(renaming)};
      }
      current_vertex_ = queue_[queue_head_++];
      walking_ = true;
      out_pos_ = 0;
      in_pos_ = 0;
    }
    const std::vector<int>& out = g_->out_edges(current_vertex_);
    while (out_pos_ < out.size()) {
      const int id = out[out_pos_++];
      ++examined_;
      if (!edge_seen_[static_cast<std::size_t>(id)]) return discover(id);
    }
    const std::vector<int>& in = g_->in_edges(current_vertex_);
    while (in_pos_ < in.size()) {
      const int id = in[in_pos_++];
      ++examined_;
      if (!edge_seen_[static_cast<std::size_t>(id)]) return discover(id);
    }
    walking_ = false;
  }
}

EdgeEnumeration bfs_enumerate(const ColouredGraph& g, int start) {
  LazyEnumerator lazy(g, start);
  EdgeEnumeration result;
  result.order.reserve(g.edges().size());
  while (true) {
    auto step = lazy.next();
    if (auto* done = std::get_if<LazyEnumerator::Done>(&step)) {
      result.renaming = std::move(done->renaming);
      result.edges_examined = lazy.edges_examined();
      return result;
    }
    result.order.push_back(std::get<LazyEnumerator::Step>(step).edge_index);
  }
}

std::strong_ordering annotated_edge_compare(const AnnotatedEdge& a,
                                            const AnnotatedEdge& b) {
  if (auto c = a.source <=> b.source; c != 0) return c;
  if (auto c = a.target <=> b.target; c != 0) return c;
  return colour_compare(a.colour, b.colour);
}

std::vector<AnnotatedEdge> converted_sequence(const ColouredGraph& g,
                                              const EdgeEnumeration& e) {
  if (e.order.size() != g.edges().size() ||
      e.renaming.size() != g.vertex_count()) {
    throw Error("enumeration does not belong to this graph");
  }
  std::vector<AnnotatedEdge> out;
  out.reserve(e.order.size());
  for (int id : e.order) {
    const ColouredEdge& edge = g.edges()[static_cast<std::size_t>(id)];
    out.push_back(
        {e.renaming(edge.from), e.renaming(edge.to), edge.colour});
  }
  return out;
}

std::strong_ordering compare_converted(const ColouredGraph& g,
                                       const EdgeEnumeration& a,
                                       const EdgeEnumeration& b) {
  const std::vector<AnnotatedEdge> sa = converted_sequence(g, a);
  const std::vector<AnnotatedEdge> sb = converted_sequence(g, b);
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (auto c = annotated_edge_compare(sa[i], sb[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace sgcanon

#pragma once

#include "dnalg/word.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dnalg {

class DiagramError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Closed link diagram: 4-valent crossings, turn-back vertices (smoothers)
/// and crossing-free circles.  Edge identifiers are dense 0..edge_count-1;
/// every edge appears in exactly two vertex ports.
///
/// Port layout per node: TL=0, TR=1, BL=2, BR=3, with TL,BL,BR,TR in
/// counterclockwise cyclic order around the vertex.  A crossing's through
/// strands are TL-BR and TR-BL; `positive` means the TL-BR strand passes
/// under.  A smoother connects TL-TR and BL-BR.
class PlanarDiagram {
public:
  enum Port { TL = 0, TR = 1, BL = 2, BR = 3 };

  struct Node {
    bool is_crossing = true;
    bool positive = true; // meaningful for crossings only
    std::array<int, 4> e{-1, -1, -1, -1};
  };

  struct Slot {
    int node = -1;
    int port = -1;
  };

  struct Mark {
    std::string label;
    int edge = -1;
    bool forward = true; // direction end0 -> end1 of the edge
  };

  std::vector<Node> nodes;
  std::vector<std::array<Slot, 2>> edge_ends; // the two ports holding each edge
  int free_loops = 0;
  std::vector<Mark> marks;
  std::vector<std::vector<std::pair<std::string, int>>> free_loop_marks;

  int edge_count() const { return static_cast<int>(edge_ends.size()); }

  int crossing_count() const {
    int c = 0;
    for (const auto &n : nodes) c += n.is_crossing ? 1 : 0;
    return c;
  }
  int smoother_count() const { return static_cast<int>(nodes.size()) - crossing_count(); }

  /// Partner port on the same strand through a node.
  static int through_partner(const Node &n, int port) {
    if (n.is_crossing) {
      static constexpr int p[4] = {BR, BL, TR, TL};
      return p[port];
    }
    static constexpr int p[4] = {TR, TL, BR, BL};
    return p[port];
  }

  // ---- traversal ----------------------------------------------------------

  struct StrandPass {
    int strand = 0;    // 0 = TL-BR strand, 1 = TR-BL strand
    int dir = 0;       // +1 when traversed TL->BR (resp. TR->BL)
    int component = -1;
  };

  struct Traversal {
    int edge_components = 0; // components that own at least one edge
    int total_components = 0;
    // per crossing node: the pass of each of its two strands
    std::vector<std::array<StrandPass, 2>> crossing_passes;
    // per component (edge components first, then free loops), the marked
    // (label, sign) readout in traversal order, uncanonicalized
    std::vector<std::vector<std::pair<std::string, int>>> sequences;
  };

  /// Deterministic full traversal: each component starts at its smallest
  /// edge id and proceeds toward the smaller-indexed neighboring edge.
  Traversal traverse() const {
    Traversal t;
    t.crossing_passes.resize(nodes.size());
    std::vector<std::vector<const Mark *>> edge_marks(edge_ends.size());
    for (const auto &m : marks) edge_marks[m.edge].push_back(&m);

    std::vector<bool> visited(edge_ends.size(), false);
    for (int start = 0; start < edge_count(); ++start) {
      if (visited[start]) continue;
      int comp = t.edge_components++;
      t.sequences.emplace_back();
      auto &seq = t.sequences.back();

      // pick the leaving end whose neighbor edge id is smaller
      int n0 = neighbor_edge(start, 0);
      int n1 = neighbor_edge(start, 1);
      int leaving = (n1 < n0) ? 1 : 0;

      int edge = start;
      visited[start] = true;
      record_marks(seq, edge_marks[edge], /*forward_travel=*/leaving == 1);
      while (true) {
        Slot s = edge_ends[edge][leaving];
        const Node &nd = nodes[s.node];
        int out = through_partner(nd, s.port);
        if (nd.is_crossing) {
          int strand = (s.port == TL || s.port == BR) ? 0 : 1;
          int dir = (s.port == TL || s.port == TR) ? +1 : -1;
          t.crossing_passes[s.node][strand] = {strand, dir, comp};
        }
        int next = nd.e[out];
        if (next == start) break; // component closed
        if (visited[next]) throw DiagramError("inconsistent diagram traversal");
        int enter = same_slot(edge_ends[next][0], s.node, out) ? 0 : 1;
        visited[next] = true;
        edge = next;
        leaving = 1 - enter;
        record_marks(seq, edge_marks[edge], /*forward_travel=*/leaving == 1);
      }
    }
    for (const auto &fl : free_loop_marks) t.sequences.push_back(fl);
    for (int i = 0; i < free_loops - static_cast<int>(free_loop_marks.size()); ++i)
      t.sequences.emplace_back();
    t.total_components = t.edge_components + free_loops;
    return t;
  }

  int component_count() const { return traverse().total_components; }

private:
  static bool same_slot(const Slot &s, int node, int port) {
    return s.node == node && s.port == port;
  }
  int neighbor_edge(int edge, int end) const {
    Slot s = edge_ends[edge][end];
    return nodes[s.node].e[through_partner(nodes[s.node], s.port)];
  }
  static void record_marks(std::vector<std::pair<std::string, int>> &seq,
                           const std::vector<const Mark *> &ms, bool forward_travel) {
    for (const Mark *m : ms) seq.emplace_back(m->label, forward_travel == m->forward ? +1 : -1);
  }
};

/// Canonical form of a circular (label, sign) readout: lexicographic minimum
/// over all rotations and all rotations of the reversed-and-negated sequence.
inline std::vector<std::pair<std::string, int>>
canonical_cycle(std::vector<std::pair<std::string, int>> seq) {
  if (seq.empty()) return seq;
  auto best = seq;
  auto consider = [&best](std::vector<std::pair<std::string, int>> v) {
    for (std::size_t r = 0; r < v.size(); ++r) {
      std::rotate(v.begin(), v.begin() + 1, v.end());
      if (v < best) best = v;
    }
  };
  consider(seq);
  std::reverse(seq.begin(), seq.end());
  for (auto &p : seq) p.second = -p.second;
  consider(seq);
  return best;
}

/// Per-component canonical marked readout.
inline std::vector<std::vector<std::pair<std::string, int>>>
read_marked_sequence(const PlanarDiagram &d) {
  auto t = d.traverse();
  std::vector<std::vector<std::pair<std::string, int>>> out;
  out.reserve(t.sequences.size());
  for (auto &s : t.sequences) out.push_back(canonical_cycle(std::move(s)));
  return out;
}

/// Incremental diagram assembly: open-ended strand segments that are closed
/// onto node ports or welded end-to-end.  Welding tracks mark positions and
/// directions so closure arcs can carry sequence labels.
class DiagramBuilder {
public:
  using EndId = int;

  int add_node(bool is_crossing, bool positive = true) {
    nodes_.push_back({is_crossing, positive, {-1, -1, -1, -1}});
    return static_cast<int>(nodes_.size()) - 1;
  }

  /// New segment slotted into (node, port) at one end; returns the open end.
  EndId strand_from(int node, int port) {
    int seg = new_segment();
    segs_[seg].ep[0] = {false, node, port};
    return new_end(seg, 1);
  }

  /// New segment open at both ends.
  std::pair<EndId, EndId> free_strand() {
    int seg = new_segment();
    return {new_end(seg, 0), new_end(seg, 1)};
  }

  void close_onto(EndId e, int node, int port) {
    auto [seg, idx] = resolve(e);
    segs_[seg].ep[idx] = {false, node, port};
    ends_[e].alive = false;
  }

  void weld(EndId a, EndId b) { weld_impl(a, b, nullptr); }
  void weld_marked(EndId a, EndId b, const std::string &label) { weld_impl(a, b, &label); }

  PlanarDiagram finish() {
    PlanarDiagram d;
    d.nodes = nodes_;
    d.free_loops = free_loops_;
    d.free_loop_marks = free_loop_marks_;
    std::vector<int> edge_id(segs_.size(), -1);
    for (std::size_t s = 0; s < segs_.size(); ++s) {
      if (segs_[s].dead) continue;
      for (int i = 0; i < 2; ++i)
        if (segs_[s].ep[i].open)
          throw DiagramError("diagram has a dangling strand end");
      edge_id[s] = d.edge_count();
      d.edge_ends.push_back({PlanarDiagram::Slot{segs_[s].ep[0].node, segs_[s].ep[0].port},
                             PlanarDiagram::Slot{segs_[s].ep[1].node, segs_[s].ep[1].port}});
      for (int i = 0; i < 2; ++i) {
        auto &slot = d.nodes[segs_[s].ep[i].node].e[segs_[s].ep[i].port];
        if (slot != -1) throw DiagramError("node port filled twice");
        slot = edge_id[s];
      }
      for (const auto &m : segs_[s].marks)
        d.marks.push_back({m.label, edge_id[s], m.forward});
    }
    for (const auto &n : d.nodes)
      for (int p = 0; p < 4; ++p)
        if (n.e[p] == -1) throw DiagramError("unfilled node port");
    return d;
  }

private:
  struct EP {
    bool open = true;
    int node = -1, port = -1;
  };
  struct SegMark {
    std::string label;
    bool forward = true; // along the segment end0 -> end1
  };
  struct Seg {
    std::array<EP, 2> ep;
    bool dead = false;
    std::vector<SegMark> marks; // ordered along end0 -> end1
  };
  struct EndRef {
    int seg = -1, idx = -1;
    bool alive = true;
  };

  int new_segment() {
    segs_.emplace_back();
    return static_cast<int>(segs_.size()) - 1;
  }
  EndId new_end(int seg, int idx) {
    ends_.push_back({seg, idx, true});
    EndId e = static_cast<EndId>(ends_.size()) - 1;
    end_at_[{seg, idx}] = e;
    return e;
  }
  std::pair<int, int> resolve(EndId e) const {
    if (e < 0 || e >= static_cast<EndId>(ends_.size()) || !ends_[e].alive)
      throw DiagramError("stale strand end handle");
    const auto &r = ends_[e];
    if (!segs_[r.seg].ep[r.idx].open) throw DiagramError("strand end already closed");
    return {r.seg, r.idx};
  }

  // Marks of `seg` re-expressed for travel entering at end `enter`.
  static std::vector<SegMark> oriented_marks(const Seg &s, int enter) {
    auto ms = s.marks;
    if (enter == 1) {
      std::reverse(ms.begin(), ms.end());
      for (auto &m : ms) m.forward = !m.forward;
    }
    return ms;
  }

  void weld_impl(EndId ea, EndId eb, const std::string *label) {
    auto [sa, ia] = resolve(ea);
    auto [sb, ib] = resolve(eb);
    ends_[ea].alive = false;
    ends_[eb].alive = false;
    if (sa == sb) {
      // both ends of one segment: the weld closes a crossing-free loop
      // unless the segment is slotted -- but a single segment with two open
      // ends can carry no slots, so this is always a free loop.
      ++free_loops_;
      if (!segs_[sa].marks.empty()) {
        std::vector<std::pair<std::string, int>> seq;
        for (const auto &m : oriented_marks(segs_[sa], ia == 0 ? 1 : 0))
          seq.emplace_back(m.label, m.forward ? +1 : -1);
        if (label) seq.emplace_back(*label, +1);
        free_loop_marks_.push_back(std::move(seq));
      } else if (label) {
        free_loop_marks_.push_back({{*label, +1}});
      }
      segs_[sa].dead = true;
      return;
    }
    // merged segment runs from sa's far end, through the weld, to sb's far end
    int seg = new_segment();
    Seg &m = segs_[seg];
    m.ep[0] = segs_[sa].ep[1 - ia];
    m.ep[1] = segs_[sb].ep[1 - ib];
    for (const auto &mk : oriented_marks(segs_[sa], 1 - ia)) m.marks.push_back(mk);
    if (label) m.marks.push_back({*label, true});
    for (const auto &mk : oriented_marks(segs_[sb], ib)) m.marks.push_back(mk);
    // re-point any live handles at the far ends
    repoint(sa, 1 - ia, seg, 0);
    repoint(sb, 1 - ib, seg, 1);
    segs_[sa].dead = true;
    segs_[sb].dead = true;
  }

  void repoint(int seg, int idx, int nseg, int nidx) {
    auto it = end_at_.find({seg, idx});
    if (it == end_at_.end()) return;
    EndId e = it->second;
    end_at_.erase(it);
    if (!ends_[e].alive) return;
    ends_[e].seg = nseg;
    ends_[e].idx = nidx;
    end_at_[{nseg, nidx}] = e;
  }

  std::vector<PlanarDiagram::Node> nodes_;
  std::vector<Seg> segs_;
  std::vector<EndRef> ends_;
  std::map<std::pair<int, int>, EndId> end_at_;
  int free_loops_ = 0;
  std::vector<std::vector<std::pair<std::string, int>>> free_loop_marks_;
};

enum class Closure { Plat, Trace };

/// Optional labels for plat closure arcs; arc j pairs strands (2j+1, 2j+2),
/// 0-based j.  Mark direction is left-to-right along the arc.
struct PlatMarks {
  std::map<int, std::string> bottom;
  std::map<int, std::string> top;
};

/// Close a generator word into a planar diagram.  Plat closure joins
/// adjacent strand pairs at top and bottom and requires an even strand
/// count; trace closure joins each bottom endpoint to the same-index top.
inline PlanarDiagram close_word(const GenWord &w, Closure closure,
                                const PlatMarks *marks = nullptr) {
  if (w.has_affine_letter()) throw DiagramError("affine letters cannot be closed");
  int n = w.strand_count();
  if (closure == Closure::Plat && n % 2 != 0)
    throw DiagramError("plat closure requires an even strand count");

  DiagramBuilder b;
  std::vector<DiagramBuilder::EndId> top(n), cur(n);
  for (int i = 0; i < n; ++i) {
    auto [t, c] = b.free_strand();
    top[i] = t;
    cur[i] = c;
  }
  for (const auto &g : w.letters()) {
    int i = g.index - 1;
    int node = b.add_node(g.is_crossing(), g.kind == Generator::Kind::Sigma);
    b.close_onto(cur[i], node, PlanarDiagram::TL);
    b.close_onto(cur[i + 1], node, PlanarDiagram::TR);
    cur[i] = b.strand_from(node, PlanarDiagram::BL);
    cur[i + 1] = b.strand_from(node, PlanarDiagram::BR);
  }
  if (closure == Closure::Plat) {
    for (int j = 0; 2 * j < n; ++j) {
      auto tl = top[2 * j], tr = top[2 * j + 1];
      auto bl = cur[2 * j], br = cur[2 * j + 1];
      const std::string *tm = nullptr, *bm = nullptr;
      if (marks) {
        if (auto it = marks->top.find(j); it != marks->top.end()) tm = &it->second;
        if (auto it = marks->bottom.find(j); it != marks->bottom.end()) bm = &it->second;
      }
      if (tm)
        b.weld_marked(tl, tr, *tm);
      else
        b.weld(tl, tr);
      if (bm)
        b.weld_marked(bl, br, *bm);
      else
        b.weld(bl, br);
    }
  } else {
    for (int i = 0; i < n; ++i) b.weld(cur[i], top[i]);
  }
  return b.finish();
}

inline PlanarDiagram plat_closure(const GenWord &w, const PlatMarks *marks = nullptr) {
  return close_word(w, Closure::Plat, marks);
}
inline PlanarDiagram trace_closure(const GenWord &w) {
  return close_word(w, Closure::Trace);
}

/// PD-code JSON text.  Crossings list ports in counterclockwise cyclic
/// order [TL, BL, BR, TR] followed by "over_first"/"under_first" for the
/// first-listed edge; smoothers list [TL, TR, BL, BR].
inline std::string pd_json(const PlanarDiagram &d) {
  std::string s = "{\"crossings\": [";
  bool first = true;
  for (const auto &n : d.nodes) {
    if (!n.is_crossing) continue;
    if (!first) s += ", ";
    first = false;
    s += "[" + std::to_string(n.e[PlanarDiagram::TL]) + ", " +
         std::to_string(n.e[PlanarDiagram::BL]) + ", " + std::to_string(n.e[PlanarDiagram::BR]) +
         ", " + std::to_string(n.e[PlanarDiagram::TR]) + ", \"" +
         (n.positive ? "under_first" : "over_first") + "\"]";
  }
  s += "], \"smoothers\": [";
  first = true;
  for (const auto &n : d.nodes) {
    if (n.is_crossing) continue;
    if (!first) s += ", ";
    first = false;
    s += "[" + std::to_string(n.e[PlanarDiagram::TL]) + ", " +
         std::to_string(n.e[PlanarDiagram::TR]) + ", " + std::to_string(n.e[PlanarDiagram::BL]) +
         ", " + std::to_string(n.e[PlanarDiagram::BR]) + "]";
  }
  s += "], \"loops\": " + std::to_string(d.free_loops) + "}";
  return s;
}

} // namespace dnalg

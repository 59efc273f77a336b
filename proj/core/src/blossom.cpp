#include "randic/blossom.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace randic {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
constexpr std::int64_t kMaxWeight = std::int64_t{1} << 40;

// Primal-dual blossom algorithm for minimum-weight perfect matching, using
// the odd-set formulation with duals z_B on x(gamma(B)) <= (|B|-1)/2.
//
// Multi-tree variant: every vertex left unmatched by the greedy start roots
// an alternating tree; all trees share one global dual clock (S nodes +delta,
// T nodes -delta). A tight edge between two S nodes of different trees
// augments and dissolves exactly those two trees; within one tree it shrinks
// a blossom. Weights are doubled internally and initial duals floored to
// even, which keeps every dual integral: vertices connected by tight edges
// share parity, and all roots start at the same clock, so S-S slacks stay
// even across trees.
//
// Node ids: 0..n-1 are vertices, n.. are blossoms (ids recycled via a free
// list). Only top-level nodes (parent_ == -1) carry labels and tree edges.
class BlossomSolver {
public:
    BlossomSolver(int n, const std::vector<WeightedEdge>& edges) : n_(n) {
        eu_.reserve(edges.size());
        ev_.reserve(edges.size());
        ew_.reserve(edges.size());
        adj_.assign(static_cast<size_t>(n_), {});
        for (const auto& e : edges) {
            if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_ || e.u == e.v)
                throw std::invalid_argument("matching edge endpoints invalid");
            if (e.w > kMaxWeight || e.w < -kMaxWeight)
                throw std::invalid_argument("matching edge weight exceeds 2^40");
            int id = static_cast<int>(eu_.size());
            eu_.push_back(e.u);
            ev_.push_back(e.v);
            ew_.push_back(2 * e.w);
            adj_[static_cast<size_t>(e.u)].push_back(id);
            adj_[static_cast<size_t>(e.v)].push_back(id);
        }
        const int ids = n_ + n_ / 2 + 2;  // vertices + max simultaneously alive blossoms
        y_.assign(static_cast<size_t>(n_), 0);
        top_of_.resize(static_cast<size_t>(n_));
        for (int v = 0; v < n_; ++v) top_of_[static_cast<size_t>(v)] = v;
        parent_.assign(static_cast<size_t>(ids), -1);
        base_vertex_.resize(static_cast<size_t>(ids));
        for (int v = 0; v < n_; ++v) base_vertex_[static_cast<size_t>(v)] = v;
        label_.assign(static_cast<size_t>(ids), kFree);
        tree_edge_.assign(static_cast<size_t>(ids), -1);
        stamp_.assign(static_cast<size_t>(ids), 0);
        z_.assign(static_cast<size_t>(ids), 0);
        alive_.assign(static_cast<size_t>(ids), false);
        children_.resize(static_cast<size_t>(ids));
        cycle_edges_.resize(static_cast<size_t>(ids));
        mark_.assign(static_cast<size_t>(ids), 0);
        root_.assign(static_cast<size_t>(ids), -1);
        tree_nodes_.resize(static_cast<size_t>(ids));
        in_tree_list_.assign(static_cast<size_t>(ids), 0);
        mate_edge_.assign(static_cast<size_t>(n_), -1);
        for (int b = n_; b < ids; ++b) free_ids_.push_back(b);
    }

    PerfectMatchingResult solve() {
        PerfectMatchingResult result;
        if (n_ % 2 != 0) return result;
        greedy_init();
        for (int v = 0; v < n_; ++v) {
            if (mate_edge_[static_cast<size_t>(v)] != -1) continue;
            int r = top(v);
            ++trees_alive_;
            root_[static_cast<size_t>(r)] = r;
            set_label(r, kS, -1);
        }
        if (!run() ) return result;
        result.feasible = true;
        result.mate.assign(static_cast<size_t>(n_), -1);
        for (int v = 0; v < n_; ++v) {
            int e = mate_edge_[static_cast<size_t>(v)];
            result.mate[static_cast<size_t>(v)] = other_end(e, v);
            if (v < result.mate[static_cast<size_t>(v)]) result.weight += ew_[static_cast<size_t>(e)] / 2;
        }
        verify_certificate(result.weight);
        result.dual_y = y_;
        return result;
    }

private:
    static constexpr int kFree = 0;
    static constexpr int kS = 1;
    static constexpr int kT = 2;

    int n_;
    std::vector<int> eu_, ev_;
    std::vector<std::int64_t> ew_;
    std::vector<std::vector<int>> adj_;

    std::vector<std::int64_t> y_;         // vertex duals
    std::vector<int> top_of_;             // vertex -> top-level node id
    std::vector<int> parent_;             // node -> enclosing blossom (-1 = top)
    std::vector<int> base_vertex_;        // node -> base vertex
    std::vector<int> label_;              // top-level tree label
    std::vector<int> tree_edge_;          // top-level edge toward tree parent
    std::vector<std::int64_t> stamp_;     // delta_sum_ when the top was last materialized
    std::vector<std::int64_t> z_;         // blossom duals (even)
    std::vector<bool> alive_;             // blossom id in use
    std::vector<std::vector<int>> children_;     // cycle children, base child first
    std::vector<std::vector<int>> cycle_edges_;  // cycle_edges_[k]: children[k]-children[k+1]
    std::vector<int> free_ids_;
    std::vector<int> mate_edge_;          // vertex -> matched edge id
    std::vector<int> mark_;               // scratch for LCA / certificate
    int mark_epoch_ = 0;

    std::vector<int> root_;                       // top node -> its tree root
    std::vector<std::vector<int>> tree_nodes_;    // root -> node ids ever labeled in the tree
    std::vector<char> in_tree_list_;
    int trees_alive_ = 0;

    // Event queue. Every pending event (edge going tight, T-blossom dual
    // hitting zero) decays at rate 1 per unit of dual change, so entries are
    // keyed by value-at-push + delta_sum_ and revalidated lazily on pop.
    // Whenever a label change speeds an edge's decay up, the affected edges
    // are re-pushed with fresh keys; stale entries are dropped or re-keyed.
    struct QueueEntry {
        std::int64_t key;
        int id;        // edge id, or blossom id for expand events
        bool expand;
        bool operator>(const QueueEntry& o) const {
            return key != o.key ? key > o.key : (id != o.id ? id > o.id : expand && !o.expand);
        }
    };
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> events_;
    std::int64_t delta_sum_ = 0;
    std::vector<int> scratch_verts_;
    std::vector<int> scratch_flush_;

    int top(int v) const { return top_of_[static_cast<size_t>(v)]; }
    int other_end(int e, int x) const {
        return eu_[static_cast<size_t>(e)] == x ? ev_[static_cast<size_t>(e)] : eu_[static_cast<size_t>(e)];
    }
    bool is_blossom(int id) const { return id >= n_; }

    int mate_of_top(int t) const {
        int b = base_vertex_[static_cast<size_t>(t)];
        int e = mate_edge_[static_cast<size_t>(b)];
        return e;
    }

    // Duals of tree nodes drift with every dual update; instead of touching
    // every vertex per update, each top carries a stamp and the drift
    // (delta_sum_ - stamp) is resolved on read and materialized on flush.
    std::int64_t drift_of(int t) const {
        int lab = label_[static_cast<size_t>(t)];
        if (lab == kFree) return 0;
        std::int64_t d = delta_sum_ - stamp_[static_cast<size_t>(t)];
        return lab == kS ? d : -d;
    }

    std::int64_t y_true(int v) const { return y_[static_cast<size_t>(v)] + drift_of(top(v)); }

    std::int64_t z_true(int b) const {
        return z_[static_cast<size_t>(b)] + 2 * drift_of(b);
    }

    // materialize pending drift so the node's structure or label may change
    void flush_top(int t) {
        if (label_[static_cast<size_t>(t)] == kFree) return;
        std::int64_t dy = drift_of(t);
        stamp_[static_cast<size_t>(t)] = delta_sum_;
        if (dy == 0) return;
        scratch_flush_.clear();
        collect_vertices(t, scratch_flush_);
        for (int v : scratch_flush_) y_[static_cast<size_t>(v)] += dy;
        if (is_blossom(t)) z_[static_cast<size_t>(t)] += 2 * dy;
    }

    // slack of an edge whose endpoints lie in different top nodes: no alive
    // blossom contains both, so the z terms vanish
    std::int64_t slack(int e) const {
        return ew_[static_cast<size_t>(e)] - y_true(eu_[static_cast<size_t>(e)]) -
               y_true(ev_[static_cast<size_t>(e)]);
    }

    void collect_vertices(int id, std::vector<int>& out) const {
        if (!is_blossom(id)) {
            out.push_back(id);
            return;
        }
        for (int c : children_[static_cast<size_t>(id)]) collect_vertices(c, out);
    }

    bool contains_vertex(int id, int v) const {
        for (int cur = v; cur != -1; cur = parent_[static_cast<size_t>(cur)])
            if (cur == id) return true;
        return false;
    }

    // child of blossom b containing vertex v
    int child_containing(int b, int v) const {
        int cur = v;
        while (parent_[static_cast<size_t>(cur)] != b) cur = parent_[static_cast<size_t>(cur)];
        return cur;
    }

    void greedy_init() {
        if (eu_.empty()) return;
        std::int64_t wmin = kInf;
        for (std::int64_t w : ew_) wmin = std::min(wmin, w);
        // floor wmin/2 down to an even integer: all duals start even, so
        // slacks stay even and every dual adjustment is integral
        std::int64_t y0 = wmin >= 0 ? wmin / 2 : (wmin - 1) / 2;
        if (y0 % 2 != 0) --y0;
        for (int v = 0; v < n_; ++v) y_[static_cast<size_t>(v)] = y0;
        // single dual-ascent pass: give every vertex a tight incident edge
        for (int v = 0; v < n_; ++v) {
            std::int64_t best = kInf;
            for (int e : adj_[static_cast<size_t>(v)]) best = std::min(best, slack(e));
            if (best < kInf) y_[static_cast<size_t>(v)] += best;
        }
        for (size_t e = 0; e < eu_.size(); ++e) {
            int u = eu_[e], v = ev_[e];
            if (mate_edge_[static_cast<size_t>(u)] == -1 && mate_edge_[static_cast<size_t>(v)] == -1 &&
                slack(static_cast<int>(e)) == 0) {
                mate_edge_[static_cast<size_t>(u)] = static_cast<int>(e);
                mate_edge_[static_cast<size_t>(v)] = static_cast<int>(e);
            }
        }
    }

    // root_[node] must be set before labeling
    void set_label(int node, int lab, int via_edge) {
        label_[static_cast<size_t>(node)] = lab;
        tree_edge_[static_cast<size_t>(node)] = via_edge;
        stamp_[static_cast<size_t>(node)] = delta_sum_;
        if (!in_tree_list_[static_cast<size_t>(node)]) {
            in_tree_list_[static_cast<size_t>(node)] = 1;
            tree_nodes_[static_cast<size_t>(root_[static_cast<size_t>(node)])].push_back(node);
        }
        if (lab == kS) scan_new_s(node);
        if (lab == kT && is_blossom(node))
            events_.push({z_[static_cast<size_t>(node)] / 2 + delta_sum_, node, true});
    }

    // classify one edge against current labels and queue its event, if any
    void push_edge_event(int e) {
        int tu = top(eu_[static_cast<size_t>(e)]);
        int tv = top(ev_[static_cast<size_t>(e)]);
        if (tu == tv) return;
        int lu = label_[static_cast<size_t>(tu)];
        int lv = label_[static_cast<size_t>(tv)];
        if (lu != kS) {
            std::swap(lu, lv);
        }
        if (lu != kS || lv == kT) return;
        std::int64_t s = slack(e);
        if (lv == kS) {
            if (s % 2 != 0) throw std::logic_error("odd slack on S-S edge");
            events_.push({s / 2 + delta_sum_, e, false});
        } else {
            events_.push({s + delta_sum_, e, false});
        }
    }

    void scan_new_s(int node) {
        scratch_verts_.clear();
        collect_vertices(node, scratch_verts_);
        for (int v : scratch_verts_)
            for (int e : adj_[static_cast<size_t>(v)]) push_edge_event(e);
    }

    // labeled tops drift implicitly: advancing delta_sum_ is the update
    void apply_dual_delta(std::int64_t delta) { delta_sum_ += delta; }

    // ---- matching rotation ------------------------------------------------

    // Rotate the internal matching of node id so that vertex x becomes its
    // base (every other vertex matched inside). No-op for plain vertices.
    void rebase(int id, int x) {
        if (!is_blossom(id)) return;
        auto& ch = children_[static_cast<size_t>(id)];
        auto& ce = cycle_edges_[static_cast<size_t>(id)];
        const int sz = static_cast<int>(ch.size());
        int j = 0;
        {
            int cj = child_containing(id, x);
            while (ch[static_cast<size_t>(j)] != cj) ++j;
        }
        rebase(ch[static_cast<size_t>(j)], x);
        // new internal pairs walk the cycle from j: (j+1,j+2), (j+3,j+4), ...
        for (int t = 1; t < sz; t += 2) {
            int ia = (j + t) % sz;
            int ib = (j + t + 1) % sz;
            int e = ce[static_cast<size_t>(ia)];
            int a = contains_vertex(ch[static_cast<size_t>(ia)], eu_[static_cast<size_t>(e)])
                        ? eu_[static_cast<size_t>(e)]
                        : ev_[static_cast<size_t>(e)];
            int b = other_end(e, a);
            rebase(ch[static_cast<size_t>(ia)], a);
            rebase(ch[static_cast<size_t>(ib)], b);
            mate_edge_[static_cast<size_t>(a)] = e;
            mate_edge_[static_cast<size_t>(b)] = e;
        }
        std::rotate(ch.begin(), ch.begin() + j, ch.end());
        std::rotate(ce.begin(), ce.begin() + j, ce.end());
        base_vertex_[static_cast<size_t>(id)] = x;
    }

    // ---- phase events -----------------------------------------------------

    void grow(int e) {
        int tu = top(eu_[static_cast<size_t>(e)]);
        int tv = top(ev_[static_cast<size_t>(e)]);
        if (label_[static_cast<size_t>(tu)] != kS) std::swap(tu, tv);
        set_label(tv, kT, e);
        int me = mate_of_top(tv);
        int mate_vertex = other_end(me, base_vertex_[static_cast<size_t>(tv)]);
        set_label(top(mate_vertex), kS, me);
    }

    void augment(int e) {
        int tu = top(eu_[static_cast<size_t>(e)]);
        int tv = top(ev_[static_cast<size_t>(e)]);
        if (label_[static_cast<size_t>(tu)] != kS) std::swap(tu, tv);
        // collect tree path from the S endpoint up to the root
        std::vector<int> path_edges;  // e, then parent edges walking up
        path_edges.push_back(e);
        int cur = tu;
        while (tree_edge_[static_cast<size_t>(cur)] != -1) {
            int pe = tree_edge_[static_cast<size_t>(cur)];
            path_edges.push_back(pe);
            int in_cur = contains_vertex(cur, eu_[static_cast<size_t>(pe)])
                             ? eu_[static_cast<size_t>(pe)]
                             : ev_[static_cast<size_t>(pe)];
            cur = top(other_end(pe, in_cur));
        }
        // edges at even positions (0-based: e, grow edges) become matched
        for (size_t i = 0; i < path_edges.size(); i += 2) {
            int me = path_edges[i];
            int a = eu_[static_cast<size_t>(me)];
            int b = ev_[static_cast<size_t>(me)];
            rebase(top(a), a);
            rebase(top(b), b);
            mate_edge_[static_cast<size_t>(a)] = me;
            mate_edge_[static_cast<size_t>(b)] = me;
        }
    }

    void shrink(int e) {
        int tu = top(eu_[static_cast<size_t>(e)]);
        int tv = top(ev_[static_cast<size_t>(e)]);
        // mark path from tu to root, then walk from tv to the first mark
        ++mark_epoch_;
        for (int cur = tu;;) {
            mark_[static_cast<size_t>(cur)] = mark_epoch_;
            int pe = tree_edge_[static_cast<size_t>(cur)];
            if (pe == -1) break;
            int in_cur = contains_vertex(cur, eu_[static_cast<size_t>(pe)])
                             ? eu_[static_cast<size_t>(pe)]
                             : ev_[static_cast<size_t>(pe)];
            cur = top(other_end(pe, in_cur));
        }
        int lca = tv;
        while (mark_[static_cast<size_t>(lca)] != mark_epoch_) {
            int pe = tree_edge_[static_cast<size_t>(lca)];
            int in_cur = contains_vertex(lca, eu_[static_cast<size_t>(pe)])
                             ? eu_[static_cast<size_t>(pe)]
                             : ev_[static_cast<size_t>(pe)];
            lca = top(other_end(pe, in_cur));
        }

        auto path_to = [&](int from, std::vector<int>& nodes, std::vector<int>& edges) {
            for (int cur = from; cur != lca;) {
                nodes.push_back(cur);
                int pe = tree_edge_[static_cast<size_t>(cur)];
                edges.push_back(pe);
                int in_cur = contains_vertex(cur, eu_[static_cast<size_t>(pe)])
                                 ? eu_[static_cast<size_t>(pe)]
                                 : ev_[static_cast<size_t>(pe)];
                cur = top(other_end(pe, in_cur));
            }
        };
        std::vector<int> u_nodes, u_edges, v_nodes, v_edges;
        path_to(tu, u_nodes, u_edges);
        path_to(tv, v_nodes, v_edges);

        if (free_ids_.empty()) throw std::logic_error("blossom id pool exhausted");
        int b = free_ids_.back();
        free_ids_.pop_back();
        alive_[static_cast<size_t>(b)] = true;
        z_[static_cast<size_t>(b)] = 0;
        stamp_[static_cast<size_t>(b)] = delta_sum_;

        // materialize the children's pending drift before they stop being tops
        for (int c : u_nodes) flush_top(c);
        for (int c : v_nodes) flush_top(c);
        flush_top(lca);

        // cycle: lca -> (reversed u path) -> tu -e- tv -> (v path) -> lca,
        // so ce[k] connecting ch[k] and ch[k+1] is reverse(u_edges), e, v_edges
        auto& ch = children_[static_cast<size_t>(b)];
        auto& ce = cycle_edges_[static_cast<size_t>(b)];
        ch.clear();
        ce.clear();
        ch.push_back(lca);
        for (size_t i = u_nodes.size(); i-- > 0;) {
            ch.push_back(u_nodes[i]);
            ce.push_back(u_edges[i]);
        }
        ce.push_back(e);
        for (size_t i = 0; i < v_nodes.size(); ++i) {
            ch.push_back(v_nodes[i]);
            ce.push_back(v_edges[i]);
        }

        base_vertex_[static_cast<size_t>(b)] = base_vertex_[static_cast<size_t>(lca)];
        tree_edge_[static_cast<size_t>(b)] = tree_edge_[static_cast<size_t>(lca)];
        label_[static_cast<size_t>(b)] = kS;
        if (!in_labeled_[static_cast<size_t>(b)]) {
            in_labeled_[static_cast<size_t>(b)] = 1;
            labeled_.push_back(b);
        }
        std::vector<int> former_t;
        for (int c : ch) {
            parent_[static_cast<size_t>(c)] = b;
            if (label_[static_cast<size_t>(c)] == kT) former_t.push_back(c);
        }
        scratch_verts_.clear();
        collect_vertices(b, scratch_verts_);
        for (int v : scratch_verts_) top_of_[static_cast<size_t>(v)] = b;
        // vertices previously on the T side now sit in an S node; their edges
        // join the event queue with S-side decay rates
        for (int c : former_t) {
            scratch_verts_.clear();
            collect_vertices(c, scratch_verts_);
            for (int v : scratch_verts_)
                for (int ae : adj_[static_cast<size_t>(v)]) push_edge_event(ae);
        }
    }

    void expand(int b) {
        flush_top(b);  // materialize drift; z_[b] is now exactly zero
        if (z_[static_cast<size_t>(b)] != 0) throw std::logic_error("expanding blossom with z != 0");
        auto& ch = children_[static_cast<size_t>(b)];
        auto& ce = cycle_edges_[static_cast<size_t>(b)];
        const int sz = static_cast<int>(ch.size());
        int pe = tree_edge_[static_cast<size_t>(b)];
        int in_v = contains_vertex(b, eu_[static_cast<size_t>(pe)]) ? eu_[static_cast<size_t>(pe)]
                                                                    : ev_[static_cast<size_t>(pe)];
        std::vector<int> verts;
        for (int c : ch) {
            parent_[static_cast<size_t>(c)] = -1;
            label_[static_cast<size_t>(c)] = kFree;
            tree_edge_[static_cast<size_t>(c)] = -1;
            verts.clear();
            collect_vertices(c, verts);
            for (int v : verts) top_of_[static_cast<size_t>(v)] = c;
        }
        int j = 0;
        while (!contains_vertex(ch[static_cast<size_t>(j)], in_v)) ++j;

        // walk from entry child to base child along the alternating side
        // (cycle edge ce[k] matched iff k odd with the base child at index 0)
        std::vector<std::pair<int, int>> path;  // (child, parent edge)
        path.emplace_back(ch[static_cast<size_t>(j)], pe);
        if (j % 2 == 0) {
            for (int i = j - 1; i >= 0; --i)
                path.emplace_back(ch[static_cast<size_t>(i)], ce[static_cast<size_t>(i)]);
        } else {
            for (int i = j + 1; i <= sz; ++i)
                path.emplace_back(ch[static_cast<size_t>(i % sz)],
                                  ce[static_cast<size_t>((i - 1 + sz) % sz)]);
        }
        for (size_t i = 0; i < path.size(); ++i) {
            auto [node, via] = path[i];
            set_label(node, i % 2 == 0 ? kT : kS, via);
        }
        // children left outside the tree become free: edges from S nodes to
        // them start decaying again, so re-queue them
        for (int c : ch) {
            if (label_[static_cast<size_t>(c)] != kFree || c == ch[static_cast<size_t>(j)]) continue;
            scratch_verts_.clear();
            collect_vertices(c, scratch_verts_);
            for (int v : scratch_verts_)
                for (int ae : adj_[static_cast<size_t>(v)]) push_edge_event(ae);
        }

        alive_[static_cast<size_t>(b)] = false;
        label_[static_cast<size_t>(b)] = kFree;
        tree_edge_[static_cast<size_t>(b)] = -1;
        ch.clear();
        ce.clear();
        free_ids_.push_back(b);
    }

    void end_phase() {
        for (int id : labeled_) {
            if (!(is_blossom(id) && !alive_[static_cast<size_t>(id)]) &&
                parent_[static_cast<size_t>(id)] == -1)
                flush_top(id);
        }
        for (int id : labeled_) {
            in_labeled_[static_cast<size_t>(id)] = 0;
            if (is_blossom(id) && !alive_[static_cast<size_t>(id)]) continue;
            label_[static_cast<size_t>(id)] = kFree;
            tree_edge_[static_cast<size_t>(id)] = -1;
        }
        labeled_.clear();
        events_ = {};
        delta_sum_ = 0;
    }

    bool run_phase(int root) {
        set_label(root, kS, -1);
        while (!events_.empty()) {
            QueueEntry entry = events_.top();
            events_.pop();
            std::int64_t implied = entry.key - delta_sum_;

            if (entry.expand) {
                int b = entry.id;
                if (!alive_[static_cast<size_t>(b)] || parent_[static_cast<size_t>(b)] != -1 ||
                    label_[static_cast<size_t>(b)] != kT)
                    continue;
                std::int64_t val = z_true(b) / 2;
                if (val > implied) {
                    events_.push({val + delta_sum_, b, true});
                    continue;
                }
                if (val < implied) throw std::logic_error("expand event underestimated");
                apply_dual_delta(val);
                expand(b);
                continue;
            }

            int e = entry.id;
            int tu = top(eu_[static_cast<size_t>(e)]);
            int tv = top(ev_[static_cast<size_t>(e)]);
            if (tu == tv) continue;
            int lu = label_[static_cast<size_t>(tu)];
            int lv = label_[static_cast<size_t>(tv)];
            if (lu != kS) {
                std::swap(tu, tv);
                std::swap(lu, lv);
            }
            if (lu != kS || lv == kT) continue;
            std::int64_t s = slack(e);
            std::int64_t val = lv == kS ? s / 2 : s;
            if (val > implied) {
                events_.push({val + delta_sum_, e, false});
                continue;
            }
            if (val < implied) throw std::logic_error("edge event underestimated");
            apply_dual_delta(val);
            if (lv == kS) {
                shrink(e);
            } else if (mate_of_top(tv) == -1) {
                augment(e);
                end_phase();
                return true;
            } else {
                grow(e);
            }
        }
        end_phase();  // no event possible: no perfect matching exists
        return false;
    }

    // ---- certificate -------------------------------------------------------

    void verify_certificate(std::int64_t reported_weight) {
        // dual feasibility: w - y_u - y_v + sum of z over common blossoms >= 0,
        // equality on matched edges; dual objective equals the primal weight
        std::vector<std::vector<int>> chain(static_cast<size_t>(n_));
        std::vector<std::int64_t> nv(z_.size(), 0);
        for (int v = 0; v < n_; ++v) {
            for (int curb = parent_[static_cast<size_t>(v)]; curb != -1;
                 curb = parent_[static_cast<size_t>(curb)]) {
                chain[static_cast<size_t>(v)].push_back(curb);
                ++nv[static_cast<size_t>(curb)];
            }
        }
        std::int64_t dual = 0;
        for (int v = 0; v < n_; ++v) dual += y_[static_cast<size_t>(v)];
        for (size_t b = 0; b < z_.size(); ++b) {
            if (!alive_[b]) continue;
            if (z_[b] < 0) throw std::logic_error("negative blossom dual");
            dual -= z_[b] * ((nv[b] - 1) / 2);
        }
        for (size_t e = 0; e < eu_.size(); ++e) {
            std::int64_t s = ew_[e] - y_[static_cast<size_t>(eu_[e])] - y_[static_cast<size_t>(ev_[e])];
            ++mark_epoch_;
            for (int b : chain[static_cast<size_t>(eu_[e])]) mark_[static_cast<size_t>(b)] = mark_epoch_;
            for (int b : chain[static_cast<size_t>(ev_[e])])
                if (mark_[static_cast<size_t>(b)] == mark_epoch_) s += z_[static_cast<size_t>(b)];
            if (s < 0) throw std::logic_error("dual infeasible edge");
            bool matched = mate_edge_[static_cast<size_t>(eu_[e])] == static_cast<int>(e) &&
                           mate_edge_[static_cast<size_t>(ev_[e])] == static_cast<int>(e);
            if (matched && s != 0) throw std::logic_error("matched edge not tight");
        }
        if (dual != 2 * reported_weight) throw std::logic_error("duality gap");
    }
};

}  // namespace

PerfectMatchingResult min_weight_perfect_matching(int n, const std::vector<WeightedEdge>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n == 0) return {true, 0, {}};
    BlossomSolver solver(n, edges);
    return solver.solve();
}

}  // namespace randic

#include "sgg/genus.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "sgg/bounds.hpp"
#include "sgg/error.hpp"

namespace sgg {

bool is_planar(const SimpleGraph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>>;
  BoostGraph bg(g.vertex_count());
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

GenusBound euler_lower_bound(const SimpleGraph& g) {
  if (!is_triangle_free(g))
    fail(ErrorKind::NotTriangleFree, "the Euler bound for triangle-free graphs does not apply");
  GenusBound out;
  for (auto& comp : connected_components(g)) {
    std::size_t edges = 0;
    for (auto v : comp) edges += g.degree(v);
    edges /= 2;
    if (edges == 0) continue;
    ComponentBound c;
    c.edge_count = edges;
    c.acyclic = edges + 1 == comp.size();
    // A lone edge bounds a single face of length 2, outside the formula's
    // face-length hypothesis.
    c.raw = edges == 1 ? Rational(0) : euler_formula(comp.size(), edges);
    c.integer = c.acyclic ? BigInt(0) : std::max(BigInt(0), c.raw.ceil());
    c.vertices = std::move(comp);
    out.raw += c.raw;
    out.integer += c.integer;
    out.components.push_back(std::move(c));
  }
  return out;
}

RotationSystem RotationSystem::sorted(const SimpleGraph& g) {
  std::vector<std::vector<std::size_t>> order(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    order[v].assign(nb.begin(), nb.end());
  }
  return RotationSystem(std::move(order));
}

bool RotationSystem::is_valid_for(const SimpleGraph& g) const {
  if (order_.size() != g.vertex_count()) return false;
  for (std::size_t v = 0; v < order_.size(); ++v) {
    auto sorted = order_[v];
    std::sort(sorted.begin(), sorted.end());
    auto nb = g.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) return false;
  }
  return true;
}

std::size_t count_faces(const SimpleGraph& g, const RotationSystem& rot) {
  if (!rot.is_valid_for(g)) fail(ErrorKind::InvalidArgument, "rotation system does not match the graph");
  const std::size_t n = g.vertex_count();
  // Dart (v -> rot[v][i]) has id offset[v] + i.
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + rot.at(v).size();
  std::vector<std::vector<std::size_t>> position(n);
  for (std::size_t v = 0; v < n; ++v) {
    position[v].assign(n, SIZE_MAX);
    for (std::size_t i = 0; i < rot.at(v).size(); ++i) position[v][rot.at(v)[i]] = i;
  }
  const std::size_t darts = offset[n];
  std::vector<std::size_t> tail(darts), index(darts);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t i = 0; i < rot.at(v).size(); ++i) {
      tail[offset[v] + i] = v;
      index[offset[v] + i] = i;
    }

  std::vector<bool> used(darts, false);
  std::size_t faces = 0;
  for (std::size_t d0 = 0; d0 < darts; ++d0) {
    if (used[d0]) continue;
    ++faces;
    for (std::size_t d = d0; !used[d];) {
      used[d] = true;
      const std::size_t u = tail[d], v = rot.at(u)[index[d]];
      const auto& around = rot.at(v);
      const std::size_t next = (position[v][u] + 1) % around.size();
      d = offset[v] + next;
    }
  }
  return faces;
}

int genus_of_rotation(const SimpleGraph& g, const RotationSystem& rot) {
  if (!is_connected(g)) fail(ErrorKind::Disconnected, "genus_of_rotation needs a connected graph");
  if (g.edge_count() == 0) {
    if (!rot.is_valid_for(g)) fail(ErrorKind::InvalidArgument, "rotation system does not match the graph");
    return 0;
  }
  const auto faces = static_cast<long long>(count_faces(g, rot));
  const auto twice = 2 - static_cast<long long>(g.vertex_count()) +
                     static_cast<long long>(g.edge_count()) - faces;
  if (twice < 0 || twice % 2 != 0) fail(ErrorKind::Internal, "face count violates Euler's relation");
  return static_cast<int>(twice / 2);
}

int simple_genus_lower_bound(const SimpleGraph& g) {
  const auto V = static_cast<long long>(g.vertex_count());
  const auto E = static_cast<long long>(g.edge_count());
  if (E < 2) return 0;
  auto ceil_div = [](long long a, long long b) { return a <= 0 ? 0 : (a + b - 1) / b; };
  long long lb = ceil_div(E - 3 * V + 6, 6);
  if (is_triangle_free(g)) lb = std::max(lb, ceil_div(E - 2 * V + 4, 4));
  return static_cast<int>(lb);
}

namespace {

// Branch and bound over rotation systems, one face at a time. Following a
// face into a vertex whose successor for the incoming edge is still open, it
// branches over the admissible successors. Partial successor maps at each
// vertex are kept as disjoint paths so only
// a full cycle may close.
class GenusSearch {
 public:
  GenusSearch(const SimpleGraph& g, const GenusBudget& budget)
      : n_(g.vertex_count()),
        edges_(g.edge_count()),
        min_face_(is_triangle_free(g) ? 4 : 3),
        budget_(budget) {
    offset_.assign(n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) offset_[v + 1] = offset_[v] + g.degree(v);
    darts_ = offset_[n_];
    vertex_of_.resize(darts_);
    head_in_.resize(darts_);
    for (std::size_t v = 0; v < n_; ++v) {
      auto nb = g.neighbors(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        const std::size_t w = nb[i];
        auto wn = g.neighbors(w);
        const auto back = static_cast<std::size_t>(std::lower_bound(wn.begin(), wn.end(), v) - wn.begin());
        vertex_of_[offset_[v] + i] = v;
        // Dart v->w arrives at w through w's position of v.
        head_in_[offset_[v] + i] = offset_[w] + back;
      }
    }
    neighbors_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      auto nb = g.neighbors(v);
      neighbors_[v].assign(nb.begin(), nb.end());
    }
  }

  // Runs the search with an initial upper bound from the greedy embedding.
  void run(int lower_bound) {
    lower_bound_ = lower_bound;
    deadline_ = std::chrono::steady_clock::now() + budget_.time_limit;
    reset();
    greedy_ = true;
    best_ = INT32_MAX;
    next_face();
    greedy_ = false;
    if (best_ <= lower_bound_) {
      complete_ = true;
      return;
    }
    reset();
    next_face();
    complete_ = !aborted_;
  }

  bool complete() const noexcept { return complete_; }
  int best() const noexcept { return best_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

  std::vector<std::vector<std::size_t>> best_rotation() const {
    std::vector<std::vector<std::size_t>> out(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      const std::size_t d = offset_[v + 1] - offset_[v];
      if (d == 0) continue;
      std::size_t p = offset_[v];
      for (std::size_t k = 0; k < d; ++k) {
        out[v].push_back(neighbors_[v][p - offset_[v]]);
        p = best_succ_[p];
      }
    }
    return out;
  }

 private:
  static constexpr std::size_t kNone = SIZE_MAX;

  void reset() {
    succ_.assign(darts_, kNone);
    pred_.assign(darts_, kNone);
    other_end_.resize(darts_);
    for (std::size_t d = 0; d < darts_; ++d) other_end_[d] = d;
    links_.assign(n_, 0);
    used_.assign(darts_, false);
    used_count_ = 0;
    faces_ = 0;
    face_len_ = 0;
    done_ = false;
  }

  bool stop() const noexcept { return aborted_ || done_; }

  void record_solution() {
    const long long twice = 2 - static_cast<long long>(n_) + static_cast<long long>(edges_) -
                            static_cast<long long>(faces_);
    const int g = static_cast<int>(twice / 2);
    if (g < best_) {
      best_ = g;
      best_succ_ = succ_;
    }
    if (greedy_ || best_ <= lower_bound_) done_ = true;
  }

  void next_face() {
    if (used_count_ == darts_) {
      record_solution();
      return;
    }
    std::size_t start = 0;
    while (used_[start]) ++start;
    trace(start, start);
  }

  // Adds dart d to the face that began at start.
  void trace(std::size_t d, std::size_t start) {
    if (stop()) return;
    if (++nodes_ > budget_.max_nodes ||
        ((nodes_ & 4095) == 0 && std::chrono::steady_clock::now() > deadline_)) {
      aborted_ = true;
      return;
    }
    used_[d] = true;
    ++used_count_;
    ++face_len_;

    if (!greedy_ && !promising()) {
      used_[d] = false;
      --used_count_;
      --face_len_;
      return;
    }

    const std::size_t in = head_in_[d];
    const std::size_t v = vertex_of_[in];
    if (succ_[in] != kNone) {
      follow(succ_[in], start);
    } else {
      // Closing the face first keeps faces short.
      if (pred_[start] == kNone && vertex_of_[start] == v && can_link(in, start)) {
        link(in, start);
        follow(start, start);
        unlink(in, start);
      }
      for (std::size_t q = offset_[v]; q < offset_[v + 1] && !stop(); ++q) {
        if (q == start || pred_[q] != kNone || !can_link(in, q)) continue;
        link(in, q);
        follow(q, start);
        unlink(in, q);
      }
    }
    used_[d] = false;
    --used_count_;
    --face_len_;
  }

  void follow(std::size_t next, std::size_t start) {
    if (stop()) return;
    if (next == start) {
      const std::size_t len = face_len_;
      face_len_ = 0;
      ++faces_;
      next_face();
      --faces_;
      face_len_ = len;
    } else {
      trace(next, start);
    }
  }

  // Upper bound on the final face count: closed faces, the open one, and
  // every remaining dart in faces no shorter than the girth bound. Faces of a
  // simple graph have length >= 3, >= 4 without triangles.
  bool promising() const noexcept {
    const std::size_t remaining = darts_ - used_count_;
    const std::size_t open_need = face_len_ >= min_face_ ? 0 : min_face_ - face_len_;
    if (remaining < open_need) return false;
    const std::size_t max_faces = faces_ + 1 + (remaining - open_need) / min_face_;
    const long long twice = 2 - static_cast<long long>(n_) + static_cast<long long>(edges_) -
                            static_cast<long long>(max_faces);
    const long long lb = twice <= 0 ? 0 : (twice + 1) / 2;
    return lb < best_;
  }

  bool can_link(std::size_t p, std::size_t q) const noexcept {
    if (other_end_[p] != q) return true;
    const std::size_t v = vertex_of_[p];
    return links_[v] + 1 == offset_[v + 1] - offset_[v];
  }

  void link(std::size_t p, std::size_t q) {
    const std::size_t v = vertex_of_[p];
    succ_[p] = q;
    pred_[q] = p;
    ++links_[v];
    const std::size_t head = other_end_[p], tail = other_end_[q];
    undo_.push_back({head, other_end_[head], tail, other_end_[tail]});
    if (head != q) {
      other_end_[head] = tail;
      other_end_[tail] = head;
    }
  }

  void unlink(std::size_t p, std::size_t q) {
    const auto u = undo_.back();
    undo_.pop_back();
    other_end_[u.tail] = u.tail_old;
    other_end_[u.head] = u.head_old;
    succ_[p] = kNone;
    pred_[q] = kNone;
    --links_[vertex_of_[p]];
  }

  struct Undo {
    std::size_t head, head_old, tail, tail_old;
  };

  std::size_t n_, edges_, min_face_, darts_ = 0;
  GenusBudget budget_;
  std::vector<std::size_t> offset_, vertex_of_, head_in_;
  std::vector<std::vector<std::size_t>> neighbors_;

  std::vector<std::size_t> succ_, pred_, other_end_, links_;
  std::vector<bool> used_;
  std::vector<Undo> undo_;
  std::size_t used_count_ = 0, faces_ = 0, face_len_ = 0;

  int lower_bound_ = 0;
  int best_ = INT32_MAX;
  std::vector<std::size_t> best_succ_;
  bool greedy_ = false, done_ = false, aborted_ = false, complete_ = false;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace

GenusResult exact_genus(const SimpleGraph& g, const GenusBudget& budget) {
  GenusResult result;
  std::vector<std::vector<std::size_t>> rotation(g.vertex_count());
  int total = 0;
  bool known = true, witness_missing = false;
  for (auto& comp : connected_components(g)) {
    const SimpleGraph sub = g.induced_subgraph(comp);
    ComponentGenus cg;
    cg.vertices = comp;
    auto record = [&](int genus, std::vector<std::vector<std::size_t>> rot) {
      for (std::size_t i = 0; i < comp.size(); ++i) {
        rotation[comp[i]].clear();
        for (auto w : rot[i]) rotation[comp[i]].push_back(comp[w]);
      }
      cg.genus = genus;
      cg.lower_bound = cg.upper_bound = genus;
    };

    const bool tree = sub.edge_count() + 1 == sub.vertex_count();
    if (tree) {
      record(0, RotationSystem::sorted(sub).orders());
    } else if (budget.planarity_fast_path && is_planar(sub)) {
      // Planarity is decisive; the search only recovers a witness embedding.
      GenusSearch search(sub, budget);
      search.run(0);
      cg.nodes = search.nodes();
      if (search.best() == 0) {
        record(0, search.best_rotation());
      } else {
        cg.genus = 0;
        witness_missing = true;
      }
    } else {
      int lb = simple_genus_lower_bound(sub);
      if (budget.planarity_fast_path) lb = std::max(lb, 1);
      GenusSearch search(sub, budget);
      search.run(lb);
      cg.nodes = search.nodes();
      cg.lower_bound = lb;
      cg.upper_bound = search.best();
      if (search.complete()) {
        record(search.best(), search.best_rotation());
      } else {
        known = false;
      }
    }
    result.nodes += cg.nodes;
    if (cg.genus) total += *cg.genus;
    result.components.push_back(std::move(cg));
  }
  if (known) {
    result.genus = total;
    RotationSystem rs(std::move(rotation));
    if (!witness_missing && rs.is_valid_for(g)) result.embedding = std::move(rs);
  }
  return result;
}

}  // namespace sgg

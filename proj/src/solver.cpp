#include "msr/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace msr {

namespace {

constexpr int kMaxTierSum = 16;
constexpr int kMaxCandidates = 4096;

// Row-reduced span of coordinate vectors, for exact membership tests.
class SpanBasis {
 public:
  explicit SpanBasis(int dim) : dim_(dim) {}

  void add(const RationalVector& v) {
    RationalVector r = reduce(v);
    for (int c = 0; c < dim_; ++c) {
      if (!is_zero(r[c])) {
        Rational inv = r[c];
        for (int k = 0; k < dim_; ++k) r[k] /= inv;
        pivots_.push_back(c);
        rows_.push_back(std::move(r));
        return;
      }
    }
  }

  bool contains(const RationalVector& v) const {
    RationalVector r = reduce(v);
    for (const auto& x : r)
      if (!is_zero(x)) return false;
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  RationalVector reduce(RationalVector v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
      const Rational& f = v[pivots_[i]];
      if (is_zero(f)) continue;
      Rational factor = f;
      for (int c = 0; c < dim_; ++c) v[c] -= factor * rows_[i][c];
    }
    return v;
  }

  int dim_;
  std::vector<int> pivots_;
  std::vector<RationalVector> rows_;
};

bool proportional(const RationalVector& a, const RationalVector& b) {
  return !pairwise_independent({a, b}).ok;
}

// Free-variable assignments enumerated by total value-pool depth: tier s
// lists all index tuples summing to s, earlier variables taking the larger
// index first. Coordinate slots prepend 0 to the pool; auxiliary slots use
// the pool as-is (never zero).
struct Enumerator {
  std::vector<int> caps;  // max index per variable
  int tier = 0;
  size_t pos = 0;
  long emitted = 0;
  std::vector<std::vector<int>> current_tier;

  explicit Enumerator(const std::vector<std::vector<Rational>>& vals) {
    for (const auto& v : vals) caps.push_back(static_cast<int>(v.size()) - 1);
    fill_tier();
  }

  bool next(std::vector<int>& out) {
    while (emitted < kMaxCandidates) {
      if (pos < current_tier.size()) {
        out = current_tier[pos++];
        ++emitted;
        return true;
      }
      ++tier;
      if (tier > kMaxTierSum) return false;
      fill_tier();
    }
    return false;
  }

 private:
  void fill_tier() {
    current_tier.clear();
    pos = 0;
    std::vector<int> idx(caps.size(), 0);
    gen(idx, 0, tier);
  }

  void gen(std::vector<int>& idx, size_t at, int remaining) {
    if (static_cast<long>(current_tier.size()) > kMaxCandidates) return;
    if (at == idx.size()) {
      if (remaining == 0) current_tier.push_back(idx);
      return;
    }
    for (int v = std::min(remaining, caps[at]); v >= 0; --v) {
      idx[at] = v;
      gen(idx, at + 1, remaining - v);
    }
    idx[at] = 0;
  }
};

struct Candidate {
  RationalVector w;           // full d+p solution
  RationalVector coords;      // first d entries
  RationalVector aux_values;  // per adjacency row
};

struct EnumState {
  std::vector<RationalVector> basis;  // nullspace generators, one per free col
  std::vector<int> free_cols;
  std::vector<std::vector<Rational>> value_lists;
};

EnumState prepare_enumeration(const ConstraintSystem& sys, const SolverConfig& cfg) {
  EnumState st;
  st.basis = solve_parametric(sys.matrix);
  RrefResult r = rref(sys.matrix);
  st.free_cols = r.free_cols;
  std::vector<Rational> aux_vals, coord_vals;
  for (long v : cfg.value_pool) aux_vals.push_back(Rational(v));
  coord_vals.push_back(Rational(0));
  for (long v : cfg.value_pool) coord_vals.push_back(Rational(v));
  for (int c : st.free_cols)
    st.value_lists.push_back(c < sys.coord_count ? coord_vals : aux_vals);
  if (cfg.seed_vector_policy == SeedPolicy::basis_descending) {
    // Reverse the roles of free coordinate slots so bumps start at the top.
    std::vector<size_t> coord_positions;
    for (size_t i = 0; i < st.free_cols.size(); ++i)
      if (st.free_cols[i] < sys.coord_count) coord_positions.push_back(i);
    std::reverse(coord_positions.begin(), coord_positions.end());
    std::vector<RationalVector> nb = st.basis;
    std::vector<int> nf = st.free_cols;
    size_t k = 0;
    for (size_t i = 0; i < st.free_cols.size(); ++i) {
      if (st.free_cols[i] < sys.coord_count) {
        nb[i] = st.basis[coord_positions[k]];
        nf[i] = st.free_cols[coord_positions[k]];
        ++k;
      }
    }
    st.basis = nb;
    st.free_cols = nf;
  }
  return st;
}

Candidate assemble(const ConstraintSystem& sys, const EnumState& st,
                   const std::vector<int>& idx) {
  Candidate cand;
  cand.w.assign(sys.coord_count + sys.aux_count, Rational(0));
  for (size_t k = 0; k < st.basis.size(); ++k) {
    const Rational& val = st.value_lists[k][idx[k]];
    if (is_zero(val)) continue;
    for (size_t c = 0; c < cand.w.size(); ++c) cand.w[c] += val * st.basis[k][c];
  }
  cand.coords.assign(cand.w.begin(), cand.w.begin() + sys.coord_count);
  for (size_t row = 0; row < sys.row_aux_col.size(); ++row) {
    int c = sys.row_aux_col[row];
    if (c >= 0) cand.aux_values.push_back(cand.w[c]);
  }
  return cand;
}

bool aux_all_nonzero(const ConstraintSystem& sys, const Candidate& cand) {
  for (int c = sys.coord_count; c < sys.coord_count + sys.aux_count; ++c)
    if (is_zero(cand.w[c])) return false;
  return true;
}

bool coords_nonzero(const Candidate& cand) {
  for (const auto& x : cand.coords)
    if (!is_zero(x)) return true;
  return false;
}

bool pairwise_ok_with(const std::vector<RationalVector>& previous,
                      const RationalVector& coords) {
  for (const auto& p : previous)
    if (proportional(p, coords)) return false;
  return true;
}

}  // namespace

ConstraintSystem build_constraint_system(const std::vector<RationalVector>& previous,
                                         const std::vector<char>& adjacency,
                                         int dimension) {
  if (previous.size() != adjacency.size())
    throw std::invalid_argument("adjacency row count mismatch");
  for (const auto& v : previous)
    if (static_cast<int>(v.size()) != dimension)
      throw std::invalid_argument("previous vector dimension mismatch");
  ConstraintSystem sys;
  sys.coord_count = dimension;
  sys.aux_count = 0;
  for (char a : adjacency)
    if (a) ++sys.aux_count;
  int rows = static_cast<int>(previous.size());
  sys.matrix = RationalMatrix(rows, dimension + sys.aux_count);
  sys.row_aux_col.assign(rows, -1);
  int next_aux = dimension;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < dimension; ++c) sys.matrix.at(r, c) = previous[r][c];
    if (adjacency[r]) {
      sys.matrix.at(r, next_aux) = -1;
      sys.row_aux_col[r] = next_aux;
      ++next_aux;
    }
  }
  return sys;
}

ExtendOutcome extend_vertex(const ConstraintSystem& sys,
                            const std::vector<RationalVector>& previous,
                            const SolverConfig& config) {
  ExtendOutcome out;
  EnumState st = prepare_enumeration(sys, config);
  if (st.basis.empty()) {
    out.reason = "empty_nullspace";
    return out;
  }
  int d = sys.coord_count;
  bool need_span_growth = static_cast<int>(previous.size()) + 1 < d;
  SpanBasis span(d);
  if (need_span_growth)
    for (const auto& p : previous) span.add(p);

  Enumerator en(st.value_lists);
  std::vector<int> idx;
  while (en.next(idx)) {
    Candidate cand = assemble(sys, st, idx);
    if (!aux_all_nonzero(sys, cand)) continue;
    if (!coords_nonzero(cand)) continue;
    if (!pairwise_ok_with(previous, cand.coords)) continue;
    if (need_span_growth && span.contains(cand.coords)) {
      // The pattern is satisfiable but the span cannot grow here; treat the
      // vertex as stuck and let the caller revise an earlier choice.
      out.reason = "span_blocked";
      return out;
    }
    out.feasible = true;
    out.coords = std::move(cand.coords);
    out.aux_values = std::move(cand.aux_values);
    return out;
  }
  out.reason = "exhausted";
  return out;
}

namespace {

// Revision: admissible replacement values for a placed vertex against every
// other placed vertex, skipping directions already tried. Returns up to
// `limit` candidates in enumeration order.
std::vector<RationalVector> revision_candidates(
    const ConstraintSystem& sys, const std::vector<RationalVector>& others,
    const std::vector<RationalVector>& tried, int placed_count,
    const SolverConfig& config, size_t limit) {
  std::vector<RationalVector> out;
  EnumState st = prepare_enumeration(sys, config);
  if (st.basis.empty()) return out;
  int d = sys.coord_count;
  bool need_span_growth = placed_count < d;
  SpanBasis span(d);
  if (need_span_growth)
    for (const auto& p : others) span.add(p);

  Enumerator en(st.value_lists);
  std::vector<int> idx;
  while (out.size() < limit && en.next(idx)) {
    Candidate cand = assemble(sys, st, idx);
    if (!aux_all_nonzero(sys, cand)) continue;
    if (!coords_nonzero(cand)) continue;
    if (!pairwise_ok_with(others, cand.coords)) continue;
    if (need_span_growth && span.contains(cand.coords)) continue;
    bool seen = false;
    for (const auto& t : tried)
      if (proportional(t, cand.coords)) {
        seen = true;
        break;
      }
    for (const auto& t : out)
      if (proportional(t, cand.coords)) {
        seen = true;
        break;
      }
    if (seen) continue;
    out.push_back(cand.coords);
  }
  return out;
}

}  // namespace

std::vector<BigInt> clear_denominators(const RationalVector& v) {
  BigInt lcm_den = 1;
  for (const auto& q : v) {
    BigInt d = q.get_den();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<BigInt> z;
  z.reserve(v.size());
  BigInt g = 0;
  for (const auto& q : v) {
    BigInt t = q.get_num() * (lcm_den / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_mpz_t());
    z.push_back(t);
  }
  if (g > 1)
    for (auto& t : z) t /= g;
  return z;
}

std::vector<RationalVector> to_rational_vectors(const std::vector<std::vector<BigInt>>& v) {
  std::vector<RationalVector> out;
  out.reserve(v.size());
  for (const auto& row : v) {
    RationalVector r;
    r.reserve(row.size());
    for (const auto& z : row) r.push_back(Rational(z));
    out.push_back(std::move(r));
  }
  return out;
}

BuildResult build_representation(const Graph& h, const VertexOrdering& order,
                                 int dimension, const SolverConfig& config) {
  BuildResult result;
  int n = h.order();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("ordering size mismatch");
  std::vector<char> seen(n + 1, 0);
  for (int v : order) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("ordering is not a permutation");
    seen[v] = 1;
  }
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");

  std::vector<RationalVector> placed;  // by rank
  std::vector<std::vector<RationalVector>> tried(n);

  auto adjacency_rows = [&](int rank_of_vertex, int count, int skip_rank) {
    // Adjacency of order[rank_of_vertex] against ranks 0..count-1 (skipping
    // skip_rank), in rank order.
    std::vector<char> adj;
    for (int r = 0; r < count; ++r) {
      if (r == skip_rank) continue;
      adj.push_back(h.adjacent(order[rank_of_vertex], order[r]) ? 1 : 0);
    }
    return adj;
  };

  int m = 0;  // ranks placed so far
  while (m < n) {
    auto adj = adjacency_rows(m, m, -1);
    ConstraintSystem sys = build_constraint_system(placed, adj, dimension);
    ExtendOutcome out = extend_vertex(sys, placed, config);
    if (out.feasible) {
      placed.push_back(out.coords);
      result.trace.push_back({TraceEvent::Kind::placed, m + 1, out.coords, ""});
      ++m;
      continue;
    }
    result.trace.push_back({TraceEvent::Kind::infeasible, m + 1, {}, out.reason});
    if (result.backtracks >= config.max_backtracks) {
      result.failure = "stuck at rank " + std::to_string(m + 1) + " (" + out.reason +
                       ") after " + std::to_string(result.backtracks) + " backtracks";
      return result;
    }
    // Revise the earliest placed vertex whose own system kept free variables,
    // preferring (one-step lookahead) a replacement that unblocks this rank.
    constexpr size_t kLookahead = 16;
    int fallback_t = -1;
    RationalVector fallback_vec;
    bool revised = false;
    for (int t = 0; t < m && !revised; ++t) {
      auto own_adj = adjacency_rows(t, t, -1);
      std::vector<RationalVector> own_prev(placed.begin(), placed.begin() + t);
      ConstraintSystem own = build_constraint_system(own_prev, own_adj, dimension);
      if (static_cast<int>(solve_parametric(own.matrix).size()) < 2) continue;
      std::vector<RationalVector> others;
      for (int r = 0; r < m; ++r)
        if (r != t) others.push_back(placed[r]);
      auto full_adj = adjacency_rows(t, m, t);
      ConstraintSystem aug = build_constraint_system(others, full_adj, dimension);
      std::vector<RationalVector> skip = tried[t];
      skip.push_back(placed[t]);
      auto candidates = revision_candidates(aug, others, skip, m, config, kLookahead);
      if (!candidates.empty() && fallback_t < 0) {
        fallback_t = t;
        fallback_vec = candidates.front();
      }
      for (const auto& cand : candidates) {
        RationalVector saved = placed[t];
        placed[t] = cand;
        // The failing system references the old vectors; rebuild it.
        auto retry_adj = adjacency_rows(m, m, -1);
        ConstraintSystem retry = build_constraint_system(placed, retry_adj, dimension);
        ExtendOutcome probe = extend_vertex(retry, placed, config);
        if (probe.feasible) {
          tried[t].push_back(saved);
          ++result.backtracks;
          result.trace.push_back({TraceEvent::Kind::revised, t + 1, cand, ""});
          revised = true;
          break;
        }
        placed[t] = saved;
      }
    }
    if (!revised && fallback_t >= 0) {
      tried[fallback_t].push_back(placed[fallback_t]);
      placed[fallback_t] = fallback_vec;
      ++result.backtracks;
      result.trace.push_back({TraceEvent::Kind::revised, fallback_t + 1, fallback_vec, ""});
      revised = true;
    }
    if (!revised) {
      result.failure = "stuck at rank " + std::to_string(m + 1) + " (" + out.reason +
                       ") after " + std::to_string(result.backtracks) + " backtracks";
      return result;
    }
  }

  OrthogonalRepresentation rep;
  rep.graph = h;
  rep.order = order;
  rep.dimension = dimension;
  rep.vectors.resize(n);
  for (int r = 0; r < n; ++r) rep.vectors[order[r] - 1] = clear_denominators(placed[r]);
  result.success = true;
  result.rep = std::move(rep);
  return result;
}

VerificationReport verify_representation(const Graph& h,
                                         const OrthogonalRepresentation& rep) {
  if (!(rep.graph == h)) throw std::invalid_argument("representation targets a different graph");
  if (static_cast<int>(rep.vectors.size()) != h.order())
    throw std::invalid_argument("vector count mismatch");
  for (const auto& v : rep.vectors)
    if (static_cast<int>(v.size()) != rep.dimension)
      throw std::invalid_argument("vector dimension mismatch");

  VerificationReport report;
  report.bound = rep.dimension;
  auto vecs = to_rational_vectors(rep.vectors);
  RationalMatrix gram = gram_matrix(vecs);
  int n = h.order();
  report.pattern_ok = true;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      bool expected_zero = !h.adjacent(i, j);
      bool got_zero = is_zero(gram.at(i - 1, j - 1));
      if (expected_zero != got_zero) {
        report.pattern_ok = false;
        report.failures.push_back({i, j, expected_zero, gram.at(i - 1, j - 1)});
      }
    }
  }
  report.pairwise_ok = pairwise_independent(vecs).ok;
  report.rank = rank(matrix_from_rows(vecs));
  report.psd_ok = psd_pivots(gram).psd;
  return report;
}

}  // namespace msr

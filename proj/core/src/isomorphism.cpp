#include "skyring/isomorphism.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "skyring/error.hpp"

namespace skyring {

namespace {

ClassVector grade_vector(int s, int grade, const std::vector<Int>& coords) {
  ClassVector v = ClassVector::zero(s);
  v.grades[grade] = coords;
  return v;
}

void check_shapes(const ChowRing& r, const ChowRing& target, const GradedHom& phi) {
  if (r.num_centers() != target.num_centers())
    throw Error(ErrorCode::rank_mismatch,
                "rings have different ranks (" + std::to_string(r.num_centers() + 1) + " vs " +
                    std::to_string(target.num_centers() + 1) + " in codimension 1)");
  const std::size_t n = static_cast<std::size_t>(r.rank(1));
  if (phi.m1.rows() != n || phi.m1.cols() != n || phi.m2.rows() != n || phi.m2.cols() != n)
    throw Error(ErrorCode::rank_mismatch, "homomorphism matrices do not match the ring ranks");
}

std::string basis_name(const ChowRing& r, int grade, int index) { return r.label(grade, index); }

// deg(b_i * b_j * b_k) for grade-1 basis elements.
std::vector<Int> cubic_form(const ChowRing& r) {
  const int n = r.rank(1);
  std::vector<Int> c(static_cast<std::size_t>(n) * n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Int v = 0;
        for (int m = 0; m < n; ++m) v += r.product11(i, j, m) * r.product12(k, m);
        c[(i * n + j) * n + k] = v;
      }
  return c;
}

}  // namespace

ClassVector apply(const GradedHom& phi, const ChowRing& target, const ClassVector& x) {
  target.check_basis(x);
  ClassVector y = ClassVector::zero(target.num_centers());
  y.grades[0] = x.grades[0];
  y.grades[1] = phi.m1.apply(x.grades[1]);
  y.grades[2] = phi.m2.apply(x.grades[2]);
  y.grades[3][0] = checked_mul(phi.m3, x.grades[3][0]);
  return y;
}

std::optional<GradedHom> inverse(const GradedHom& phi) {
  auto a = unimodular_inverse(phi.m1);
  auto b = unimodular_inverse(phi.m2);
  if (!a || !b || (phi.m3 != 1 && phi.m3 != -1)) return std::nullopt;
  return GradedHom{*a, *b, phi.m3};
}

std::string VerificationReport::to_string() const {
  if (ok()) return "verified: multiplicative on all basis pairs\n";
  std::ostringstream os;
  os << violations.size() << " violated basis pair(s)\n";
  for (const auto& v : violations) os << "  " << v.description << '\n';
  return os.str();
}

namespace {

template <class OnViolation>
void walk_pairs(const ChowRing& r, const ChowRing& target, const GradedHom& phi,
                OnViolation&& on_violation) {
  check_shapes(r, target, phi);
  const int n = r.rank(1);
  const int s = r.num_centers();
  std::vector<ClassVector> img1, img2;
  for (int i = 0; i < n; ++i) img1.push_back(grade_vector(s, 1, phi.m1.column(i)));
  for (int k = 0; k < n; ++k) img2.push_back(grade_vector(s, 2, phi.m2.column(k)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      ClassVector lhs = target.multiply(img1[i], img1[j]);
      ClassVector rhs = grade_vector(s, 2, phi.m2.apply(r.product11(i, j)));
      if (lhs != rhs && !on_violation(1, i, 1, j, std::move(lhs), std::move(rhs))) return;
    }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      ClassVector lhs = target.multiply(img1[i], img2[k]);
      ClassVector rhs = grade_vector(s, 3, {checked_mul(phi.m3, r.product12(i, k))});
      if (lhs != rhs && !on_violation(1, i, 2, k, std::move(lhs), std::move(rhs))) return;
    }
}

}  // namespace

VerificationReport check_hom(const ChowRing& r, const ChowRing& target, const GradedHom& phi) {
  VerificationReport report;
  walk_pairs(r, target, phi, [&](int gx, int ix, int gy, int iy, ClassVector lhs, ClassVector rhs) {
    HomViolation v{gx, ix, gy, iy, std::move(lhs), std::move(rhs), {}};
    v.description = basis_name(r, gx, ix) + " * " + basis_name(r, gy, iy) +
                    ": phi(x)*phi(y) = " + format_class(target, v.image_product) +
                    ", phi(x*y) = " + format_class(target, v.product_image);
    report.violations.push_back(std::move(v));
    return true;
  });
  return report;
}

bool is_hom(const ChowRing& r, const ChowRing& target, const GradedHom& phi) {
  bool ok = true;
  walk_pairs(r, target, phi, [&](int, int, int, int, ClassVector, ClassVector) {
    ok = false;
    return false;
  });
  return ok;
}

namespace {

struct Found {
  std::vector<int> key;
  GradedHom hom;
};

class Searcher {
 public:
  Searcher(const ChowRing& r, const ChowRing& t, const SearchConfig& cfg, bool anchored)
      : r_(r), t_(t), cfg_(cfg), anchored_(anchored), n_(r.rank(1)) {
    src_cubic_ = cubic_form(r);
    dst_cubic_ = cubic_form(t);
    prepare_m2_solver();
    enumerate_candidates();
  }

  SearchResult run() {
    SearchResult out;
    out.bound = cfg_.bound;
    const int first = anchored_ ? 1 : 0;
    if (first >= n_) {
      // s = 0 anchored: M1 is forced to the identity.
      std::vector<std::vector<Int>> cols{unit(0)};
      Worker w(*this);
      w.leaf(cols, {});
      collect(out, {std::move(w)});
      return out;
    }
    const unsigned threads = std::max(1u, cfg_.threads);
    std::vector<Worker> workers(threads, Worker(*this));
    auto body = [&](unsigned id) {
      Worker& w = workers[id];
      std::vector<std::vector<Int>> cols;
      if (anchored_) cols.push_back(unit(0));
      std::vector<int> key;
      const auto& top = lists_[first];
      for (std::size_t c = id; c < top.size() && !w.stopped; c += threads) {
        if (!fits(cols, first, top[c])) continue;
        cols.push_back(top[c]);
        key.push_back(static_cast<int>(c));
        w.dfs(cols, key, first + 1);
        cols.pop_back();
        key.pop_back();
      }
    };
    if (threads == 1) {
      body(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned id = 0; id < threads; ++id) pool.emplace_back(body, id);
      for (auto& th : pool) th.join();
    }
    collect(out, std::move(workers));
    return out;
  }

 private:
  struct Worker {
    explicit Worker(const Searcher& s) : self(&s) {}
    const Searcher* self;
    std::vector<Found> found;
    std::uint64_t candidates = 0;
    bool stopped = false;

    void dfs(std::vector<std::vector<Int>>& cols, std::vector<int>& key, int c) {
      if (stopped) return;
      if (c == self->n_) {
        leaf(cols, key);
        return;
      }
      const auto& list = self->lists_[c];
      for (std::size_t k = 0; k < list.size() && !stopped; ++k) {
        if (!self->fits(cols, c, list[k])) continue;
        cols.push_back(list[k]);
        key.push_back(static_cast<int>(k));
        dfs(cols, key, c + 1);
        cols.pop_back();
        key.pop_back();
      }
    }

    void leaf(const std::vector<std::vector<Int>>& cols, const std::vector<int>& key) {
      const int n = self->n_;
      IntMatrix m1(n, n);
      for (int c = 0; c < n; ++c) m1.set_column(c, cols[c]);
      const Int d1 = determinant(m1);
      if (d1 == 0) return;
      if (self->cfg_.require_unit_determinants && d1 != 1 && d1 != -1) return;
      ++candidates;
      auto m2 = self->solve_m2(m1);
      if (!m2) return;
      if (self->cfg_.require_unit_determinants) {
        const Int d2 = determinant(*m2);
        if (d2 != 1 && d2 != -1) return;
      }
      GradedHom phi{std::move(m1), std::move(*m2), 1};
      if (!is_hom(self->r_, self->t_, phi)) return;
      found.push_back({key, std::move(phi)});
      if (self->cfg_.limit != 0 && found.size() >= self->cfg_.limit) stopped = true;
    }
  };

  void collect(SearchResult& out, std::vector<Worker> workers) const {
    std::vector<Found> all;
    for (auto& w : workers) {
      out.candidates += w.candidates;
      if (w.stopped) out.exhausted = false;
      for (auto& f : w.found) all.push_back(std::move(f));
    }
    std::sort(all.begin(), all.end(),
              [](const Found& a, const Found& b) { return a.key < b.key; });
    if (cfg_.limit != 0 && all.size() > cfg_.limit) {
      all.resize(cfg_.limit);
      out.exhausted = false;
    }
    for (auto& f : all) out.solutions.push_back(std::move(f.hom));
  }

  std::vector<Int> unit(int k) const {
    std::vector<Int> v(static_cast<std::size_t>(n_), 0);
    v[k] = 1;
    return v;
  }

  Int src(int i, int j, int k) const { return src_cubic_[(i * n_ + j) * n_ + k]; }

  Int dst(const std::vector<Int>& x, const std::vector<Int>& y, const std::vector<Int>& z) const {
    Int total = 0;
    for (int i = 0; i < n_; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < n_; ++j) {
        if (y[j] == 0) continue;
        const Int xy = x[i] * y[j];
        const Int* row = &dst_cubic_[(i * n_ + j) * n_];
        for (int k = 0; k < n_; ++k) total += xy * row[k] * z[k];
      }
    }
    return total;
  }

  // Cubic-form constraints for placing v as column c after columns 0..c-1.
  bool fits(const std::vector<std::vector<Int>>& cols, int c, const std::vector<Int>& v) const {
    for (int a = 0; a < c; ++a) {
      if (dst(cols[a], v, v) != src(a, c, c)) return false;
      for (int b = a; b < c; ++b)
        if (dst(cols[a], cols[b], v) != src(a, b, c)) return false;
    }
    return true;
  }

  void enumerate_candidates() {
    const Int B = cfg_.bound;
    if (B < 1) throw Error(ErrorCode::invalid_argument, "search bound must be at least 1");
    lists_.assign(static_cast<std::size_t>(n_), {});
    std::vector<Int> v(static_cast<std::size_t>(n_), -B);
    const std::vector<Int> h = unit(0);
    for (;;) {
      for (int c = anchored_ ? 1 : 0; c < n_; ++c) {
        if (dst(v, v, v) != src(c, c, c)) continue;
        if (anchored_ && (dst(h, h, v) != src(0, 0, c) || dst(h, v, v) != src(0, c, c))) continue;
        lists_[c].push_back(v);
      }
      int pos = n_ - 1;
      while (pos >= 0 && v[pos] == B) v[pos--] = -B;
      if (pos < 0) break;
      ++v[pos];
    }
  }

  void prepare_m2_solver() {
    // Independent products b_i*b_j of the source span grade 2 over Q.
    std::vector<std::vector<Int>> rows;
    for (int i = 0; i < n_ && static_cast<int>(pairs_.size()) < n_; ++i)
      for (int j = i; j < n_ && static_cast<int>(pairs_.size()) < n_; ++j) {
        rows.push_back(r_.product11(i, j));
        if (rank(IntMatrix::from_rows(rows)) == rows.size()) pairs_.emplace_back(i, j);
        else rows.pop_back();
      }
    if (static_cast<int>(pairs_.size()) == n_) {
      IntMatrix p = IntMatrix::from_rows(rows).transposed();
      p_det_ = determinant(p);
      p_adj_ = adjugate(p);
    } else {
      pairs_.clear();
    }
    src_pairing_ = pairing_matrix(r_);
    auto inv = unimodular_inverse(pairing_matrix(t_));
    if (inv) dst_pairing_inv_ = *inv;
  }

  std::optional<IntMatrix> solve_m2(const IntMatrix& m1) const {
    const int s = r_.num_centers();
    if (!pairs_.empty()) {
      IntMatrix rhs(n_, n_);
      for (int c = 0; c < n_; ++c) {
        const auto [i, j] = pairs_[c];
        const ClassVector prod = t_.multiply(grade_vector(s, 1, m1.column(i)),
                                             grade_vector(s, 1, m1.column(j)));
        rhs.set_column(c, prod.grades[2]);
      }
      IntMatrix scaled = rhs * p_adj_;
      IntMatrix m2(n_, n_);
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
          if (scaled(a, b) % p_det_ != 0) return std::nullopt;
          m2(a, b) = scaled(a, b) / p_det_;
        }
      return m2;
    }
    // Degenerate source products: fall back to the pairing.
    auto inv = unimodular_inverse(m1);
    if (!inv || dst_pairing_inv_.empty()) return std::nullopt;
    return dst_pairing_inv_ * inv->transposed() * src_pairing_;
  }

  const ChowRing& r_;
  const ChowRing& t_;
  SearchConfig cfg_;
  bool anchored_;
  int n_;
  std::vector<Int> src_cubic_, dst_cubic_;
  std::vector<std::vector<std::vector<Int>>> lists_;
  std::vector<std::pair<int, int>> pairs_;
  Int p_det_ = 1;
  IntMatrix p_adj_;
  IntMatrix src_pairing_;
  IntMatrix dst_pairing_inv_;
};

}  // namespace

SearchResult search_isomorphisms(const ChowRing& r, const ChowRing& target,
                                 const SearchConfig& cfg) {
  if (r.num_centers() != target.num_centers()) {
    SearchResult empty;
    empty.bound = cfg.bound;
    return empty;
  }
  SearchResult out = Searcher(r, target, cfg, true).run();
  if (cfg.diagnose) {
    SearchConfig all = cfg;
    all.limit = 0;
    SearchResult wide = Searcher(r, target, all, false).run();
    for (auto& phi : wide.solutions) {
      bool anchored = phi.m1(0, 0) == 1;
      for (std::size_t k = 1; k < phi.m1.rows(); ++k) anchored = anchored && phi.m1(k, 0) == 0;
      if (!anchored) out.unanchored.push_back(std::move(phi));
    }
  }
  return out;
}

GradedHom canonical_swap_hom(const ChowRing& r, const ChowRing& target, int i, int j,
                             SwapConfiguration config) {
  const int s = r.num_centers();
  if (target.num_centers() != s)
    throw Error(ErrorCode::rank_mismatch, "rings have different ranks");
  if (i < 1 || i > s || j < 1 || j > s || i == j)
    throw Error(ErrorCode::index_out_of_range,
                "swap needs two distinct components in 1.." + std::to_string(s));
  const int n = s + 1;
  IntMatrix m1 = IntMatrix::identity(n);
  std::vector<Int> ei(n, 0), ej(n, 0), diff(n, 0);
  ei[i] = 1;
  ej[j] = 1;
  diff[i] = 1;
  diff[j] = -1;
  switch (config) {
    case SwapConfiguration::both_proximate:
      m1.set_column(i, diff);
      m1.set_column(j, ei);
      break;
    case SwapConfiguration::both_t_proximate: break;
    case SwapConfiguration::mixed:
      m1.set_column(i, diff);
      m1.set_column(j, ej);
      break;
  }
  std::map<int, std::vector<Int>> fibers;
  for (int k = 1; k <= s; ++k) {
    if (r.kind(k) != CenterKind::curve) continue;
    std::vector<Int> q(n, 0);
    q[k] = 1;
    fibers[k] = q;
  }
  return hom_from_generators(r, target, std::move(m1), fibers);
}

GradedHom hom_from_generators(const ChowRing& r, const ChowRing& target, IntMatrix m1,
                              const std::map<int, std::vector<Int>>& fiber_images) {
  const int s = r.num_centers();
  const int n = s + 1;
  if (target.num_centers() != s || m1.rows() != static_cast<std::size_t>(n) ||
      m1.cols() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::rank_mismatch, "grade-1 matrix does not match the rings");
  auto image = [&](int k) { return grade_vector(s, 1, m1.column(k)); };
  IntMatrix m2(n, n);
  const ClassVector h_image = image(0);
  m2.set_column(0, target.multiply(h_image, h_image).grades[2]);
  for (int k = 1; k <= s; ++k) {
    if (r.kind(k) == CenterKind::point) {
      m2.set_column(k, target.multiply(image(k), image(k)).grades[2]);
      continue;
    }
    auto it = fiber_images.find(k);
    if (it == fiber_images.end() || it->second.size() != static_cast<std::size_t>(n))
      throw Error(ErrorCode::rank_mismatch, "missing image for w" + std::to_string(k));
    m2.set_column(k, it->second);
  }
  const Int m3 = degree(target, target.multiply(h_image, target.multiply(h_image, h_image)));
  return GradedHom{std::move(m1), std::move(m2), m3};
}

}  // namespace skyring

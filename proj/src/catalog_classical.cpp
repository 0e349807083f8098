#include <sstream>
#include <utility>

#include "kantor/catalog.hpp"

namespace kantor {

namespace {

using M = Matrix<Q>;
using Blocks = std::vector<M>;

M anti_diagonal(std::size_t k) {
  M s(k, k);
  for (std::size_t i = 0; i < k; ++i) s(i, k - 1 - i) = Q(1);
  return s;
}

/// J_{2k} = [[0, S_k], [-S_k, 0]].
M symplectic_unit(std::size_t k) {
  M j(2 * k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    j(i, k + (k - 1 - i)) = Q(1);
    j(k + i, k - 1 - i) = Q(-1);
  }
  return j;
}

M diagonal(const std::vector<Q>& d) {
  M m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

/// x' = S_n x^t S_m for x of size m×n.
M reflexive_transpose(const M& x) { return anti_diagonal(x.cols()) * x.transpose() * anti_diagonal(x.rows()); }

struct Block {
  std::size_t rows = 0, cols = 0;
  bool antireflexive = false;
  std::vector<std::pair<std::size_t, std::size_t>> reps;  // free coordinates
};

Block free_block(std::size_t rows, std::size_t cols) {
  Block b{rows, cols, false, {}};
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) b.reps.emplace_back(i, j);
  return b;
}

/// Square matrices with x_{ij} = -x_{n-1-j, n-1-i}.
Block antireflexive_block(std::size_t n) {
  Block b{n, n, true, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::pair<std::size_t, std::size_t> partner{n - 1 - j, n - 1 - i};
      if (std::make_pair(i, j) < partner) b.reps.emplace_back(i, j);
    }
  return b;
}

class MatrixModel {
 public:
  explicit MatrixModel(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    for (const auto& b : blocks_) {
      offsets_.push_back(dim_);
      dim_ += b.reps.size();
    }
  }
  std::size_t dim() const { return dim_; }

  Blocks basis_element(std::size_t idx) const {
    Blocks x;
    for (const auto& b : blocks_) x.emplace_back(b.rows, b.cols);
    for (std::size_t k = blocks_.size(); k-- > 0;)
      if (idx >= offsets_[k]) {
        auto [i, j] = blocks_[k].reps[idx - offsets_[k]];
        x[k](i, j) = Q(1);
        if (blocks_[k].antireflexive) x[k](blocks_[k].rows - 1 - j, blocks_[k].rows - 1 - i) = Q(-1);
        return x;
      }
    return x;
  }

  SV encode(const Blocks& x) const {
    SV out(dim_);
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      const Block& b = blocks_[k];
      for (std::size_t r = 0; r < b.reps.size(); ++r) {
        auto [i, j] = b.reps[r];
        if (!x[k](i, j).is_zero()) out.push(static_cast<uint32_t>(offsets_[k] + r), x[k](i, j));
      }
      if (b.antireflexive) {
        const std::size_t n = b.rows;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (x[k](i, j) != -x[k](n - 1 - j, n - 1 - i))
              throw std::logic_error("product leaves the antireflexive matrices");
      }
    }
    return out;
  }

 private:
  std::vector<Block> blocks_;
  std::vector<std::size_t> offsets_;
  std::size_t dim_ = 0;
};

using BlockProduct = std::function<Blocks(const Blocks&, const Blocks&, const Blocks&)>;

TripleSystem make_system(std::string id, MatrixModel model, BlockProduct product) {
  const std::size_t n = model.dim();
  std::vector<Blocks> basis;
  for (std::size_t k = 0; k < n; ++k) basis.push_back(model.basis_element(k));
  return TripleSystem(std::move(id), n, [model, basis, product](std::size_t i, std::size_t j, std::size_t k) {
    return model.encode(product(basis[i], basis[j], basis[k]));
  });
}

/// Product on M_{m,n} ⊕ M_{r,m} built from a pair of "star" maps.
TripleSystem two_block_system(std::string id, std::size_t m, std::size_t n, std::size_t r,
                              std::function<M(const M&)> star1, std::function<M(const M&)> star2) {
  MatrixModel model({free_block(m, n), free_block(r, m)});
  return make_system(std::move(id), model, [star1, star2](const Blocks& x, const Blocks& y, const Blocks& z) {
    M y1 = star1(y[0]), y2 = star2(y[1]);
    M out1 = x[0] * y1 * z[0] + z[0] * y1 * x[0] - y2 * x[1] * z[0];
    M out2 = x[1] * y2 * z[1] + z[1] * y2 * x[1] - z[1] * x[0] * y1;
    return Blocks{out1, out2};
  });
}

/// (xyz) = x A y^♮ B z + z A y^♮ B x - B y A x^♮ z on a single matrix block.
TripleSystem one_block_system(std::string id, std::size_t rows, std::size_t cols, M a, M b,
                              std::function<M(const M&)> natural) {
  MatrixModel model({free_block(rows, cols)});
  return make_system(std::move(id), model, [a, b, natural](const Blocks& x, const Blocks& y, const Blocks& z) {
    M yn = natural(y[0]), xn = natural(x[0]);
    return Blocks{x[0] * a * yn * b * z[0] + z[0] * a * yn * b * x[0] - b * y[0] * a * xn * z[0]};
  });
}

std::string join(const std::string& head, std::initializer_list<std::size_t> params, const std::string& tail) {
  std::ostringstream os;
  os << head << "(";
  bool first = true;
  for (auto p : params) {
    os << (first ? "" : ",") << p;
    first = false;
  }
  if (!tail.empty()) os << ";" << tail;
  os << ")";
  return os.str();
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterOutOfRange(what);
}

}  // namespace

TripleSystem ksl_transpose(std::size_t m, std::size_t n, std::size_t r) {
  require(m >= 1 && n >= 1 && r >= 1, "Ksl(m,n,r;t) needs positive sizes");
  auto t = [](const M& x) { return x.transpose(); };
  return two_block_system(join("Ksl", {m, n, r}, "t"), m, n, r, t, t);
}

TripleSystem ksl_symplectic(std::size_t h, std::size_t k, std::size_t l) {
  require(h >= 1 && k >= 1 && l >= 1, "Ksl(2h,2k,2l;st) needs positive sizes");
  M jh = symplectic_unit(h), jk = symplectic_unit(k), jl = symplectic_unit(l);
  M jh_inv = jh.scaled(Q(-1)), jl_inv = jl.scaled(Q(-1));
  auto s1 = [jk, jh_inv](const M& x) { return jk * x.transpose() * jh_inv; };
  auto s2 = [jh, jl_inv](const M& x) { return jh * x.transpose() * jl_inv; };
  return two_block_system(join("Ksl", {2 * h, 2 * k, 2 * l}, "st"), 2 * h, 2 * k, 2 * l, s1, s2);
}

TripleSystem ksl_split(std::size_t m, std::size_t n, std::size_t k) {
  require(m >= 1 && n >= 1 && k <= m, "Ksl(m,n;k) needs m, n >= 1 and k <= m");
  std::vector<Q> d(m, Q(1));
  for (std::size_t i = 0; i < k; ++i) d[i] = Q(-1);
  M b = diagonal(d);
  MatrixModel model({free_block(m, n), free_block(n, m)});
  // A = Id: phi(x) = B x, psi(x) = x B
  return make_system(join("Ksl", {m, n}, std::to_string(k)), model,
                     [b](const Blocks& x, const Blocks& y, const Blocks& z) {
                       M phi = b * y[0], psi = y[1] * b;
                       M out1 = x[0] * psi * z[0] + z[0] * psi * x[0] - phi * x[1] * z[0];
                       M out2 = x[1] * phi * z[1] + z[1] * phi * x[1] - z[1] * x[0] * psi;
                       return Blocks{out1, out2};
                     });
}

TripleSystem kso_reflexive(std::size_t m, std::size_t n, std::size_t k) {
  require(m >= 1 && n >= 1 && 2 * k <= m, "Kso(m,n;k) needs 2k <= m");
  M b(m, m);
  for (std::size_t i = 0; i < k; ++i) {
    b(i, m - 1 - i) = Q(1);
    b(m - 1 - i, i) = Q(1);
  }
  for (std::size_t i = k; i < m - k; ++i) b(i, i) = Q(1);
  return one_block_system(join("Kso", {m, n}, std::to_string(k)), m, n, M::identity(n), b, reflexive_transpose);
}

TripleSystem kso_antireflexive(std::size_t l, std::size_t j) {
  require(l >= 1 && j >= 1, "Kso(2l,2j;JS) needs positive sizes");
  M a = symplectic_unit(j) * anti_diagonal(2 * j);
  M b = (symplectic_unit(l) * anti_diagonal(2 * l)).scaled(Q::i());
  return one_block_system(join("Kso", {2 * l, 2 * j}, "JS"), 2 * l, 2 * j, a, b, reflexive_transpose);
}

TripleSystem ksp_symplectic(std::size_t m, std::size_t n) {
  require(m >= 1 && n >= 1, "Ksp(2m,n;J) needs positive sizes");
  M jm = symplectic_unit(m);
  M jm_inv = jm.scaled(Q(-1));
  auto xi = [jm_inv](const M& x) { return anti_diagonal(x.cols()) * x.transpose() * jm_inv; };
  return one_block_system(join("Ksp", {2 * m, n}, "J"), 2 * m, n, M::identity(n), jm, xi);
}

TripleSystem ksp_split(std::size_t m, std::size_t l, std::size_t k) {
  require(m >= 1 && l >= 1 && k <= m, "Ksp(2m,2l;k) needs k <= m");
  M a = symplectic_unit(l) * anti_diagonal(2 * l);
  std::vector<Q> d(2 * m, Q(1));
  for (std::size_t i = 0; i < k; ++i) {
    d[i] = Q(-1);
    d[2 * m - 1 - i] = Q(-1);
  }
  M b = diagonal(d);
  M jm_inv = symplectic_unit(m).scaled(Q(-1));
  auto xi = [jm_inv](const M& x) { return anti_diagonal(x.cols()) * x.transpose() * jm_inv; };
  return one_block_system(join("Ksp", {2 * m, 2 * l}, std::to_string(k)), 2 * m, 2 * l, a, b, xi);
}

TripleSystem kar(std::size_t n) {
  require(n >= 2, "Kar(n) needs n >= 2");
  MatrixModel model({free_block(n, 1), antireflexive_block(n)});
  M s = anti_diagonal(n);
  return make_system(join("Kar", {n}, ""), model, [s](const Blocks& x, const Blocks& y, const Blocks& z) {
    M y1t = y[0].transpose();
    M out1 = x[0] * y1t * z[0] + z[0] * y1t * x[0] - y[1].transpose() * x[1] * z[0];
    // (y_1')^t x_1' = S y_1 x_1^t S
    M out2 = x[1] * y[1].transpose() * z[1] + z[1] * y[1].transpose() * x[1] - z[1] * x[0] * y1t -
             s * y[0] * x[0].transpose() * s * z[1];
    return Blocks{out1, out2};
  });
}

namespace {

std::size_t sl_dim(std::size_t n) { return n * n - 1; }
std::size_t so_dim(std::size_t n) { return n * (n - 1) / 2; }
std::size_t sp_dim(std::size_t n) { return n * (2 * n + 1); }  // sp(2n)

Expectation graded(std::size_t total, std::size_t top, std::size_t one) {
  Expectation e;
  e.tkk_dims = {top, one, total - 2 * top - 2 * one, one, top};
  return e;
}

CatalogEntry entry(TripleSystem proto, std::string algebra, Expectation e, std::function<TripleSystem()> build) {
  CatalogEntry c;
  c.id = proto.id();
  c.algebra = std::move(algebra);
  c.kind = "classical";
  c.dim = proto.dim();
  c.expected = e;
  c.build = std::move(build);
  return c;
}

// Each family below lists triples (dim V, expectation, builder); the tensor is built on demand.
struct Grid {
  std::size_t max_dim;
  std::vector<CatalogEntry> out;
  void add(std::size_t dim, std::string algebra, Expectation e, std::function<TripleSystem()> build) {
    if (dim > max_dim) return;
    TripleSystem proto = build();
    out.push_back(entry(proto, std::move(algebra), e, std::move(build)));
  }
};

}  // namespace

std::vector<CatalogEntry> classical_grid(std::size_t max_dim) {
  Grid g{max_dim, {}};
  const std::size_t cap = max_dim + 2;
  // Ksl(a,b,c;t) and Ksl(2a,2b,2c;st): blocks (b | a | c) of sl(a+b+c), b <= (a+b+c-1)/2.
  for (std::size_t a = 1; a <= cap; ++a)
    for (std::size_t b = 1; b <= cap; ++b)
      for (std::size_t c = 1; c <= cap; ++c) {
        const std::size_t n = a + b + c;
        if (2 * b > n - 1 || a * b + c * a > max_dim) continue;
        g.add(a * b + c * a, "sl(" + std::to_string(n) + ")", graded(sl_dim(n), b * c, a * b + c * a),
              [=] { return ksl_transpose(a, b, c); });
        if (4 * (a * b + c * a) <= max_dim)
          g.add(4 * (a * b + c * a), "sl(" + std::to_string(2 * n) + ")",
                graded(sl_dim(2 * n), 4 * b * c, 4 * (a * b + c * a)), [=] { return ksl_symplectic(a, b, c); });
      }
  // Ksl(a,b;k) in sl(a+2b).
  for (std::size_t a = 1; a <= cap; ++a)
    for (std::size_t b = 1; b <= cap; ++b) {
      if (a + 2 * b < 3 || 2 * a * b > max_dim) continue;
      for (std::size_t k = 0; k <= a / 2; ++k)
        g.add(2 * a * b, "sl(" + std::to_string(a + 2 * b) + ")", graded(sl_dim(a + 2 * b), b * b, 2 * a * b),
              [=] { return ksl_split(a, b, k); });
    }
  // Kso(a,b;k) in so(a+2b), b >= 2, a+2b >= 7.
  for (std::size_t a = 1; a <= cap; ++a)
    for (std::size_t b = 2; b <= cap; ++b) {
      if (a + 2 * b < 7 || a * b > max_dim) continue;
      for (std::size_t k = 0; k <= a / 2; ++k)
        g.add(a * b, "so(" + std::to_string(a + 2 * b) + ")", graded(so_dim(a + 2 * b), so_dim(b), a * b),
              [=] { return kso_reflexive(a, b, k); });
    }
  // Kso(2a,2b;JS) in so(2a+4b), a+2b >= 4.
  for (std::size_t a = 1; a <= cap; ++a)
    for (std::size_t b = 1; b <= cap; ++b) {
      if (a + 2 * b < 4 || 4 * a * b > max_dim) continue;
      g.add(4 * a * b, "so(" + std::to_string(2 * a + 4 * b) + ")", graded(so_dim(2 * a + 4 * b), so_dim(2 * b), 4 * a * b),
            [=] { return kso_antireflexive(a, b); });
    }
  // Ksp(2a,b;J) in sp(2(a+b)), a+b >= 3.
  for (std::size_t a = 1; a <= cap; ++a)
    for (std::size_t b = 1; b <= cap; ++b) {
      if (a + b < 3 || 2 * a * b > max_dim) continue;
      g.add(2 * a * b, "sp(" + std::to_string(2 * (a + b)) + ")", graded(sp_dim(a + b), b * (b + 1) / 2, 2 * a * b),
            [=] { return ksp_symplectic(a, b); });
    }
  // Ksp(2a,2b;k) in sp(2(a+2b)), a+2b >= 3.
  for (std::size_t a = 1; a <= cap; ++a)
    for (std::size_t b = 1; b <= cap; ++b) {
      if (a + 2 * b < 3 || 4 * a * b > max_dim) continue;
      for (std::size_t k = 0; k <= a / 2; ++k)
        g.add(4 * a * b, "sp(" + std::to_string(2 * (a + 2 * b)) + ")",
              graded(sp_dim(a + 2 * b), b * (2 * b + 1), 4 * a * b), [=] { return ksp_split(a, b, k); });
    }
  // Kar(n) in so(2n+2), n >= 4.
  for (std::size_t n = 4; n + so_dim(n) <= max_dim; ++n)
    g.add(n + so_dim(n), "so(" + std::to_string(2 * n + 2) + ")", graded(so_dim(2 * n + 2), n, n + so_dim(n)),
          [=] { return kar(n); });
  return std::move(g.out);
}

CatalogEntry classical_entry(const std::string& id) {
  for (auto& e : classical_grid(64))
    if (e.id == id) return e;
  throw UnknownId("unknown classical system " + id);
}

}  // namespace kantor

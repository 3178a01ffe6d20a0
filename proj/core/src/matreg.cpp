#include "lpa/matreg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpa {

MatDecomposition MatDecomposition::build(const GraphPtr& g, Field field) {
  if (!g) throw std::invalid_argument("null graph");
  if (g->has_infinite_emitter())
    throw std::domain_error("decompose: graph has an infinite emitter");
  if (g->find_cycle())
    throw std::domain_error("decompose: graph has a cycle");

  MatDecomposition d;
  d.graph_ = g;
  d.field_ = field;
  d.sinks_ = g->sink_indices();
  d.blocks_.resize(d.sinks_.size());
  d.index_.resize(d.sinks_.size());
  d.to_sink_.assign(g->vertex_count(), {});
  for (std::size_t i = 0; i < d.sinks_.size(); ++i) {
    d.blocks_[i] = g->paths_to(d.sinks_[i]);
    for (std::size_t r = 0; r < d.blocks_[i].size(); ++r) {
      const Path& p = d.blocks_[i][r];
      d.index_[i].emplace(p, r);
      // The suffix view: every path p from v to the sink is recorded at v.
      d.to_sink_[p.src].push_back({i, p});
    }
  }
  return d;
}

MatDecomposition decompose(const GraphPtr& g, Field field) {
  return MatDecomposition::build(g, field);
}

std::vector<std::size_t> MatDecomposition::block_sizes() const {
  std::vector<std::size_t> s;
  for (const auto& b : blocks_) s.push_back(b.size());
  return s;
}

std::vector<Matrix> MatDecomposition::forward(const Element& a) const {
  if (a.graph().get() != graph_.get() || !(a.field() == field_))
    throw std::invalid_argument("element does not live in this decomposition");
  std::vector<Matrix> mats;
  for (const auto& b : blocks_) mats.emplace_back(field_, b.size(), b.size());
  for (const auto& [m, k] : a.terms()) {
    // pq* with r(p) = r(q) = v expands over all paths v -> sink.
    for (const auto& [blk, alpha] : to_sink_[m.real.rng]) {
      Path pa = *concat(m.real, alpha);
      Path qa = *concat(m.ghost, alpha);
      mats[blk].at(index_[blk].at(pa), index_[blk].at(qa)) += k;
    }
  }
  return mats;
}

Element MatDecomposition::backward_unit(std::size_t i, std::size_t p,
                                        std::size_t q) const {
  return Element::path_monomial(graph_, field_, blocks_[i][p], blocks_[i][q],
                                Scalar::one(field_));
}

Element MatDecomposition::backward(const std::vector<Matrix>& mats) const {
  if (mats.size() != blocks_.size())
    throw std::invalid_argument("block count mismatch");
  RawTerms raw;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const auto& b = blocks_[i];
    if (mats[i].rows() != b.size() || mats[i].cols() != b.size())
      throw std::invalid_argument("block size mismatch");
    for (std::size_t r = 0; r < b.size(); ++r)
      for (std::size_t c = 0; c < b.size(); ++c)
        if (!mats[i].at(r, c).is_zero())
          raw.emplace_back(Monomial(*graph_, b[r], b[c]), mats[i].at(r, c));
  }
  return normalize(graph_, field_, raw);
}

std::size_t dimension(const GraphPtr& g) {
  if (g->has_infinite_emitter())
    throw std::domain_error("dimension: graph has an infinite emitter");
  if (g->find_cycle())
    throw std::domain_error("dimension: graph has a cycle");
  const SpecialEdgeChoice gamma = SpecialEdgeChoice::minimal(*g);
  // All paths, grouped by range.
  std::vector<std::vector<Path>> by_range(g->vertex_count());
  for (std::uint32_t v = 0; v < g->vertex_count(); ++v)
    for (auto& p : g->paths_to(v)) by_range[v].push_back(p);
  std::size_t count = 0;
  for (std::uint32_t v = 0; v < g->vertex_count(); ++v) {
    for (const auto& p : by_range[v]) {
      for (const auto& q : by_range[v]) {
        bool reducible = !p.empty() && !q.empty() &&
                         p.edges.back() == q.edges.back() &&
                         gamma.defined(g->edge_source(p.edges.back())) &&
                         gamma.at(g->edge_source(p.edges.back())) ==
                             p.edges.back();
        if (!reducible) ++count;
      }
    }
  }
  return count;
}

std::string RegularityCertificate::kind_name() const {
  switch (kind) {
    case Kind::VonNeumann: return "vonNeumann";
    case Kind::Drazin: return "drazin";
    case Kind::PiRegular: return "piRegular";
    case Kind::UnitRegular: return "unitRegular";
    case Kind::SpecialClean: return "specialClean";
  }
  return "?";
}

nlohmann::json RegularityCertificate::to_json() const {
  nlohmann::json j{{"kind", kind_name()}, {"subject", subject.to_string()}};
  if (y) j["y"] = y->to_string();
  if (kind == Kind::Drazin || kind == Kind::PiRegular) j["n"] = n;
  if (x) j["x"] = x->to_string();
  if (u) j["u"] = u->to_string();
  if (u_inv) j["u_inv"] = u_inv->to_string();
  if (e) j["e"] = e->to_string();
  return j;
}

bool verify_certificate(const MatDecomposition& d,
                        const RegularityCertificate& c) {
  const Element& a = c.subject;
  switch (c.kind) {
    case RegularityCertificate::Kind::VonNeumann:
      return c.y && multiply(multiply(a, *c.y), a) == a;
    case RegularityCertificate::Kind::Drazin: {
      if (!c.x || c.n < 1) return false;
      Element an = a.power(static_cast<unsigned>(c.n));
      Element an1 = multiply(an, a);
      return multiply(a, *c.x) == multiply(*c.x, a) &&
             multiply(an1, *c.x) == an && multiply(*c.x, an1) == an;
    }
    case RegularityCertificate::Kind::PiRegular: {
      if (!c.y || c.n < 1) return false;
      Element an = a.power(static_cast<unsigned>(c.n));
      return multiply(multiply(an, *c.y), an) == an;
    }
    case RegularityCertificate::Kind::UnitRegular: {
      if (!c.u || !c.u_inv) return false;
      Element id = d.algebra_identity();
      return multiply(*c.u, *c.u_inv) == id && multiply(*c.u_inv, *c.u) == id &&
             multiply(multiply(a, *c.u), a) == a;
    }
    case RegularityCertificate::Kind::SpecialClean: {
      if (!c.e || !c.u || !c.u_inv) return false;
      Element id = d.algebra_identity();
      if (multiply(*c.e, *c.e) != *c.e) return false;
      if (*c.e + *c.u != a) return false;
      if (multiply(*c.u, *c.u_inv) != id || multiply(*c.u_inv, *c.u) != id)
        return false;
      // aR n eR = 0 per block: rank [A|E] = rank A + rank E.
      auto am = d.forward(a), em = d.forward(*c.e);
      for (std::size_t i = 0; i < am.size(); ++i) {
        const std::size_t m = am[i].rows();
        Matrix stacked(d.field(), m, 2 * m);
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t cc = 0; cc < m; ++cc) {
            stacked.at(r, cc) = am[i].at(r, cc);
            stacked.at(r, m + cc) = em[i].at(r, cc);
          }
        if (stacked.rank() != am[i].rank() + em[i].rank()) return false;
      }
      return true;
    }
  }
  return false;
}

namespace {

void check_element(const MatDecomposition& d, const Element& a) {
  if (a.graph().get() != d.graph().get() || !(a.field() == d.field()))
    throw std::invalid_argument("element does not live in this decomposition");
}

}  // namespace

RegularityCertificate vn_inverse(const MatDecomposition& d, const Element& a) {
  check_element(d, a);
  auto mats = d.forward(a);
  std::vector<Matrix> ys;
  for (const auto& m : mats) {
    auto rf = m.rank_factorize();
    // y = V^-1 D U^-1: the rank-factorization {1}-inverse (equals u a u for
    // the unit u = V^-1 U^-1).
    Matrix diag(m.field(), m.rows(), m.rows());
    for (std::size_t i = 0; i < rf.rank; ++i)
      diag.at(i, i) = Scalar::one(m.field());
    ys.push_back(rf.v_inv * diag * rf.u_inv);
  }
  RegularityCertificate c{RegularityCertificate::Kind::VonNeumann, a,
                          d.backward(ys), 0, {}, {}, {}, {}};
  return c;
}

RegularityCertificate unit_regular_inverse(const MatDecomposition& d,
                                           const Element& a) {
  check_element(d, a);
  auto mats = d.forward(a);
  std::vector<Matrix> us, uinvs;
  for (const auto& m : mats) {
    auto rf = m.rank_factorize();
    us.push_back(rf.v_inv * rf.u_inv);
    uinvs.push_back(rf.u * rf.v);
  }
  RegularityCertificate c{RegularityCertificate::Kind::UnitRegular, a,
                          {},       0,
                          {},       d.backward(us),
                          d.backward(uinvs), {}};
  return c;
}

namespace {

// Core-nilpotent data of one block: least index n >= 1 with
// rank A^n = rank A^{n+1}, and the Drazin inverse assembled through a basis
// adapted to col(A^n) + ker(A^n).
struct BlockDrazin {
  int index;
  Matrix x;
};

BlockDrazin block_drazin(const Matrix& a) {
  const std::size_t n = a.rows();
  const Field f = a.field();
  if (n == 0) return {1, a};
  int idx = 1;
  Matrix power = a;  // A^idx
  while (power.rank() != (power * a).rank()) {
    power = power * a;
    ++idx;
  }
  const std::size_t r = power.rank();

  // P = [column basis of A^idx | kernel basis of A^idx]
  Matrix p(f, n, n);
  auto cols = power.column_space_basis();
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) p.at(i, j) = power.at(i, cols[j]);
  auto ker = power.kernel_basis();
  for (std::size_t j = 0; j < ker.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) p.at(i, r + j) = ker[j][i];
  auto pinv = p.inverse();
  if (!pinv) throw std::logic_error("core-nilpotent basis not invertible");

  Matrix b = *pinv * a * p;  // [[C,0],[0,N]] with C invertible r x r
  Matrix core(f, r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) core.at(i, j) = b.at(i, j);
  Matrix xr(f, n, n);
  if (r > 0) {
    auto core_inv = core.inverse();
    if (!core_inv) throw std::logic_error("core block not invertible");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) xr.at(i, j) = core_inv->at(i, j);
  }
  return {idx, p * xr * *pinv};
}

}  // namespace

RegularityCertificate drazin_witness(const MatDecomposition& d,
                                     const Element& a) {
  check_element(d, a);
  auto mats = d.forward(a);
  std::vector<Matrix> xs;
  int n = 1;
  for (const auto& m : mats) {
    auto bd = block_drazin(m);
    n = std::max(n, bd.index);
    xs.push_back(bd.x);
  }
  RegularityCertificate c{RegularityCertificate::Kind::Drazin, a,
                          {}, n, d.backward(xs), {}, {}, {}};
  return c;
}

RegularityCertificate pi_witness_from_drazin(const RegularityCertificate& c) {
  if (c.kind != RegularityCertificate::Kind::Drazin || !c.x || c.n < 1)
    throw std::invalid_argument("pi_witness_from_drazin: not a Drazin witness");
  const Element& a = c.subject;
  Element an = a.power(static_cast<unsigned>(c.n));
  Element an1 = multiply(an, a);
  if (multiply(a, *c.x) != multiply(*c.x, a) || multiply(an1, *c.x) != an ||
      multiply(*c.x, an1) != an)
    throw std::invalid_argument("pi_witness_from_drazin: invalid certificate");
  RegularityCertificate out{RegularityCertificate::Kind::PiRegular, a,
                            c.x->power(static_cast<unsigned>(c.n)), c.n,
                            {}, {}, {}, {}};
  return out;
}

namespace {

// Column-space membership test helper: does v lie in span(cols)?
bool in_span(const Field& f, const std::vector<std::vector<Scalar>>& cols,
             const std::vector<Scalar>& v) {
  if (cols.empty())
    return std::all_of(v.begin(), v.end(),
                       [](const Scalar& s) { return s.is_zero(); });
  Matrix m(f, v.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, j) = cols[j][i];
  return m.solve(v).has_value();
}

// Greedy vector outside both spans; a vector space over any field is never
// the union of two proper subspaces.
std::vector<Scalar> outside_both(const Field& f,
                                 const std::vector<std::vector<Scalar>>& s1,
                                 const std::vector<std::vector<Scalar>>& s2,
                                 std::size_t dim) {
  std::optional<std::size_t> i1, i2;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Scalar> ei(dim, Scalar::zero(f));
    ei[i] = Scalar::one(f);
    bool in1 = in_span(f, s1, ei), in2 = in_span(f, s2, ei);
    if (!in1 && !in2) return ei;
    if (!in1 && !i1) i1 = i;
    if (!in2 && !i2) i2 = i;
  }
  // e_{i1} escapes s1 but lies in s2, e_{i2} vice versa: the sum escapes both.
  if (!i1 || !i2) throw std::logic_error("subspace not proper");
  std::vector<Scalar> v(dim, Scalar::zero(f));
  v[*i1] = Scalar::one(f);
  v[*i2] += Scalar::one(f);
  return v;
}

// Special clean decomposition of one block: an idempotent projection E with
// im(E) complementary to col(A) and ker(E) transversal to ker(A); then
// A - E is invertible and col(A) n col(E) = 0.
struct BlockClean {
  Matrix e, w, w_inv;
};

BlockClean block_clean(const Matrix& a) {
  const std::size_t n = a.rows();
  const Field f = a.field();
  std::vector<std::size_t> piv = a.column_space_basis();
  const std::size_t r = piv.size();

  std::vector<std::vector<Scalar>> col_a;
  for (auto j : piv) {
    std::vector<Scalar> c(n, Scalar::zero(f));
    for (std::size_t i = 0; i < n; ++i) c[i] = a.at(i, j);
    col_a.push_back(std::move(c));
  }
  std::vector<std::vector<Scalar>> ker_a = a.kernel_basis();

  // W: complement of col(A), grown greedily from standard basis vectors.
  std::vector<std::vector<Scalar>> w_basis;
  {
    auto grown = col_a;
    for (std::size_t i = 0; i < n && w_basis.size() < n - r; ++i) {
      std::vector<Scalar> ei(n, Scalar::zero(f));
      ei[i] = Scalar::one(f);
      if (in_span(f, grown, ei)) continue;
      grown.push_back(ei);
      w_basis.push_back(std::move(ei));
    }
  }
  // K0: common complement of W and ker(A) (both have dimension n - r).
  std::vector<std::vector<Scalar>> k_basis;
  {
    auto grown_w = w_basis;
    auto grown_k = ker_a;
    while (k_basis.size() < r) {
      auto v = outside_both(f, grown_w, grown_k, n);
      grown_w.push_back(v);
      grown_k.push_back(v);
      k_basis.push_back(std::move(v));
    }
  }

  Matrix p(f, n, n);
  for (std::size_t j = 0; j < n - r; ++j)
    for (std::size_t i = 0; i < n; ++i) p.at(i, j) = w_basis[j][i];
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < n; ++i) p.at(i, n - r + j) = k_basis[j][i];
  auto pinv = p.inverse();
  if (!pinv) throw std::logic_error("clean projection basis not invertible");

  Matrix diag(f, n, n);
  for (std::size_t i = 0; i < n - r; ++i) diag.at(i, i) = Scalar::one(f);
  Matrix e = p * diag * *pinv;
  Matrix w = a - e;
  auto w_inv = w.inverse();
  if (!w_inv) throw std::logic_error("clean complement not invertible");
  return {e, w, *w_inv};
}

}  // namespace

RegularityCertificate special_clean(const MatDecomposition& d,
                                    const Element& a) {
  check_element(d, a);
  auto mats = d.forward(a);
  std::vector<Matrix> es, ws, winvs;
  for (const auto& m : mats) {
    auto bc = block_clean(m);
    es.push_back(bc.e);
    ws.push_back(bc.w);
    winvs.push_back(bc.w_inv);
  }
  RegularityCertificate c{RegularityCertificate::Kind::SpecialClean, a,
                          {}, 0, {},
                          d.backward(ws), d.backward(winvs), d.backward(es)};
  return c;
}

}  // namespace lpa

#include "sj/catalog.hpp"

#include <bit>
#include <cstdint>

namespace sj {

namespace {

constexpr int kMaxSide = 8;     // matrix algebra block bound
constexpr int kMaxGrass = 10;   // Grassmann generator bound

void require_range(int v, int lo, int hi, const std::string& what) {
  if (v < lo || v > hi)
    throw catalog_error(what + " out of range [" + std::to_string(lo) + "," +
                        std::to_string(hi) + "]: " + std::to_string(v));
}

const Rational kOne = 1;
const Rational kHalf = Rational(1, 2);

int grass_sign_exp(unsigned s, unsigned t) {
  // number of pairs i in s, j in t with i > j
  int inv = 0;
  for (unsigned i = 0; i < 32; ++i)
    if (s >> i & 1u) inv += std::popcount(t & ((1u << i) - 1u));
  return inv;
}

Matrix<Rational> inverse(const Matrix<Rational>& m) {
  const int n = m.rows();
  Matrix<Rational> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  rref_in_place(aug);
  for (int i = 0; i < n; ++i)
    if (aug(i, i) != 1) throw catalog_error("form matrix is singular");
  Matrix<Rational> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace

Superalgebra<Rational> kaplansky() {
  // basis e | x, y
  SuperalgebraBuilder b("K3", {0, 1, 1}, kOne);
  b.add(0, 0, 0, 1);
  b.add(0, 1, 1, kHalf);
  b.add(1, 0, 1, kHalf);
  b.add(0, 2, 2, kHalf);
  b.add(2, 0, 2, kHalf);
  b.add(1, 2, 0, 1);
  b.add(2, 1, 0, -1);
  return b.build();
}

Superalgebra<Rational> d_t(const Rational& t) {
  if (is_zero(t)) throw catalog_error("ZeroParameter: Dt needs t != 0");
  // basis e, f | u, v
  SuperalgebraBuilder b("Dt:" + to_string(t), {0, 0, 1, 1}, kOne);
  b.add(0, 0, 0, 1);
  b.add(1, 1, 1, 1);
  for (int odd : {2, 3}) {
    for (int ev : {0, 1}) {
      b.add(ev, odd, odd, kHalf);
      b.add(odd, ev, odd, kHalf);
    }
  }
  b.add(2, 3, 0, 1);
  b.add(2, 3, 1, t);
  b.add(3, 2, 0, -1);
  b.add(3, 2, 1, -t);
  return b.build();
}

Superalgebra<Rational> superform_algebra(int p, int q) {
  require_range(p, 0, 16, "superform p");
  require_range(q, 0, 16, "superform q");
  if (p + q == 0) throw catalog_error("superform needs p + q > 0");
  const int dim = 1 + p + 2 * q;
  ParityVec par(dim, 0);
  for (int i = 1 + p; i < dim; ++i) par[i] = 1;
  SuperalgebraBuilder b("superform:" + std::to_string(p) + "," + std::to_string(q),
                        par, kOne);
  for (int i = 0; i < dim; ++i) {
    b.add(0, i, i, 1);
    if (i) b.add(i, 0, i, 1);
  }
  for (int i = 1; i <= p; ++i) b.add(i, i, 0, 1);
  for (int i = 0; i < q; ++i) {
    b.add(1 + p + i, 1 + p + q + i, 0, 1);
    b.add(1 + p + q + i, 1 + p + i, 0, -1);
  }
  return b.build();
}

Superalgebra<Rational> matrix_superalgebra(int p, int q) {
  require_range(p, 0, kMaxSide, "M p");
  require_range(q, 0, kMaxSide, "M q");
  const int n = p + q;
  if (n == 0) throw catalog_error("M needs p + q > 0");
  ParityVec par(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      par[i * n + j] = static_cast<std::uint8_t>((i < p) != (j < p));
  SuperalgebraBuilder b("M:" + std::to_string(p) + "," + std::to_string(q), par,
                        kOne);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) b.add(i * n + j, j * n + l, i * n + l, 1);
  Realization<Rational> r;
  r.block_p = p;
  r.block_q = q;
  r.q_form = false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix<Rational> m(n, n);
      m(i, j) = 1;
      r.mats.push_back(std::move(m));
    }
  b.set_realization(std::move(r));
  return b.build();
}

Superalgebra<Rational> q_n(int n) {
  require_range(n, 1, kMaxSide, "Q n");
  // basis: E(i,j) = e_ij + e_{n+i,n+j} (even), F(i,j) = e_{i,n+j} + e_{n+i,j}
  // (odd); all products reduce to delta_{jk}.
  const int nn = n * n;
  ParityVec par(2 * static_cast<std::size_t>(nn));
  for (int i = 0; i < nn; ++i) par[nn + i] = 1;
  SuperalgebraBuilder b("Q:" + std::to_string(n), par, kOne);
  auto E = [&](int i, int j) { return i * n + j; };
  auto F = [&](int i, int j) { return nn + i * n + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        b.add(E(i, j), E(j, l), E(i, l), 1);
        b.add(E(i, j), F(j, l), F(i, l), 1);
        b.add(F(i, j), E(j, l), F(i, l), 1);
        b.add(F(i, j), F(j, l), E(i, l), 1);
      }
  Realization<Rational> r;
  r.block_p = n;
  r.block_q = n;
  r.q_form = true;
  for (int half = 0; half < 2; ++half)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Matrix<Rational> m(2 * n, 2 * n);
        if (half == 0) {
          m(i, j) = 1;
          m(n + i, n + j) = 1;
        } else {
          m(i, n + j) = 1;
          m(n + i, j) = 1;
        }
        r.mats.push_back(std::move(m));
      }
  b.set_realization(std::move(r));
  return b.build();
}

Superalgebra<Rational> grassmann(int n) {
  require_range(n, 0, kMaxGrass, "grassmann n");
  const unsigned dim = 1u << n;
  ParityVec par(dim);
  for (unsigned s = 0; s < dim; ++s)
    par[s] = static_cast<std::uint8_t>(std::popcount(s) & 1);
  SuperalgebraBuilder b("grassmann:" + std::to_string(n), par, kOne);
  for (unsigned s = 0; s < dim; ++s)
    for (unsigned t = 0; t < dim; ++t) {
      if (s & t) continue;
      b.add(static_cast<int>(s), static_cast<int>(t), static_cast<int>(s | t),
            (grass_sign_exp(s, t) & 1) ? -1 : 1);
    }
  return b.build();
}

Superalgebra<Rational> kantor_double(int n) {
  require_range(n, 1, 6, "kantor n");
  const unsigned gd = 1u << n;
  auto gpar = [&](unsigned s) { return std::popcount(s) & 1; };
  // grassmann product as sparse terms
  auto gprod = [&](unsigned s, unsigned t) -> std::pair<int, Rational> {
    if (s & t) return {-1, Rational(0)};
    return {static_cast<int>(s | t),
            (grass_sign_exp(s, t) & 1) ? Rational(-1) : Rational(1)};
  };
  // left super-derivative of e_S by e_i
  auto deriv = [&](unsigned s, int i) -> std::pair<unsigned, int> {
    // returns (S \ i, sign exponent); caller checks membership
    return {s & ~(1u << i),
            std::popcount(s & ((1u << i) - 1u)) & 1};
  };
  ParityVec par(2 * gd);
  for (unsigned s = 0; s < gd; ++s) {
    par[s] = static_cast<std::uint8_t>(gpar(s));
    par[gd + s] = static_cast<std::uint8_t>(gpar(s) ^ 1);
  }
  SuperalgebraBuilder b("kantor:" + std::to_string(n), par, kOne);
  for (unsigned s = 0; s < gd; ++s)
    for (unsigned t = 0; t < gd; ++t) {
      auto [st, c] = gprod(s, t);
      if (st >= 0) {
        // a b, a (bx) = (ab)x, (ax) b = (-1)^{b} (ab)x   [b even here means
        // sign +; the paper writes (bx)a = (-1)^{a}(ba)x]
        b.add(static_cast<int>(s), static_cast<int>(t), st, c);
        b.add(static_cast<int>(s), static_cast<int>(gd + t),
              static_cast<int>(gd) + st, c);
        auto [ts, c2] = gprod(t, s);
        b.add(static_cast<int>(gd + t), static_cast<int>(s),
              static_cast<int>(gd) + ts,
              gpar(s) ? -c2 : c2);
      }
      // (sx)(tx) = (-1)^{t} {s,t},  {f,g} = sum_i (-1)^{f} df/de_i dg/de_i
      for (int i = 0; i < n; ++i) {
        if (!(s >> i & 1u) || !(t >> i & 1u)) continue;
        auto [s2, sg1] = deriv(s, i);
        auto [t2, sg2] = deriv(t, i);
        auto [m, cm] = gprod(s2, t2);
        if (m < 0) continue;
        int sgn = sg1 + sg2 + gpar(s) + gpar(t);
        b.add(static_cast<int>(gd + s), static_cast<int>(gd + t), m,
              (sgn & 1) ? -cm : cm);
      }
    }
  return b.build();
}

Superalgebra<Rational> unital_hull(const Superalgebra<Rational>& j) {
  if (j.unit().has_value())
    throw catalog_error("AlreadyUnital: " + j.name + " has a unit");
  ParityVec par(j.dim() + 1, 0);
  for (int i = 0; i < j.dim(); ++i) par[i + 1] = j.parities[i];
  SuperalgebraBuilder b("hull:" + j.name, par, kOne);
  b.add(0, 0, 0, 1);
  for (int i = 0; i < j.dim(); ++i) {
    b.add(0, i + 1, i + 1, 1);
    b.add(i + 1, 0, i + 1, 1);
    for (int k = 0; k < j.dim(); ++k)
      for (const auto& [l, c] : j.prod(i, k)) b.add(i + 1, k + 1, l + 1, c);
  }
  return b.build();
}

Superinvolution<Rational> transpose_superinvolution(int n) {
  require_range(n, 1, kMaxSide, "transpose n");
  const int N = 2 * n;
  Matrix<Rational> m(N * N, N * N);
  auto idx = [&](int i, int j) { return i * N + j; };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i < n && j < n)
        m(idx(n + j, n + i), idx(i, j)) = 1;
      else if (i >= n && j >= n)
        m(idx(j - n, i - n), idx(i, j)) = 1;
      else if (i < n)
        m(idx(j - n, n + i), idx(i, j)) = -1;
      else
        m(idx(n + j, i - n), idx(i, j)) = 1;
    }
  return {"transpose", std::move(m)};
}

Superinvolution<Rational> orthosymplectic_superinvolution(int n, int m) {
  require_range(n, 1, kMaxSide, "osp n");
  require_range(m, 1, kMaxSide / 2, "osp m");
  const int N = n + 2 * m;
  // q has a single entry per row: row r -> (r+m, +1) for r < m, else (r-m, -1)
  auto qcol = [&](int r) { return r < m ? r + m : r - m; };
  auto qval = [&](int r) { return r < m ? 1 : -1; };
  Matrix<Rational> mat(N * N, N * N);
  auto idx = [&](int i, int j) { return i * N + j; };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i < n && j < n) {
        mat(idx(j, i), idx(i, j)) = 1;
      } else if (i < n) {
        int jj = j - n;  // b block: -> -sum_r q_{jj,r} e_{n+r,i}
        mat(idx(n + qcol(jj), i), idx(i, j)) = -qval(jj);
      } else if (j < n) {
        int ii = i - n;  // c block: -> sum_s q_{ii,s} e_{j,n+s}
        mat(idx(j, n + qcol(ii)), idx(i, j)) = qval(ii);
      } else {
        // d block: q^t d^t q sends e_{n+ii,n+jj} to
        // qval(ii) qval(jj) e_{n+qcol(jj), n+qcol(ii)}
        int ii = i - n, jj = j - n;
        mat(idx(n + qcol(jj), n + qcol(ii)), idx(i, j)) =
            qval(ii) * qval(jj);
      }
    }
  return {"orthosymplectic", std::move(mat)};
}

Superinvolution<Rational> superinvolution_from_form(
    const Superalgebra<Rational>& a, const Matrix<Rational>& gram) {
  if (!a.realization) throw no_realization("superinvolution_from_form: " + a.name);
  const auto& real = *a.realization;
  const int N = gram.rows();
  if (real.mats[0].rows() != N)
    throw dimension_mismatch("form size vs realization size");
  Matrix<Rational> ginv = inverse(gram);
  Matrix<Rational> dodd(N, N);
  for (int r = 0; r < N; ++r) dodd(r, r) = (r < real.block_p) ? 1 : -1;
  std::vector<Vec<Rational>> flats;
  for (const auto& mm : real.mats) flats.push_back(mm.flattened());
  CoordSolver<Rational> solver(flats, N * N, kOne);
  Matrix<Rational> map(a.dim(), a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    Matrix<Rational> ft = real.mats[i].transpose();
    Matrix<Rational> star =
        a.parity(i) ? ginv * (dodd * ft * gram) : ginv * (ft * gram);
    auto coords = solver.express(star.flattened());
    if (!coords)
      throw invalid_superinvolution("adjoint leaves the realized algebra: " +
                                    a.name);
    for (int k = 0; k < a.dim(); ++k) map(k, i) = (*coords)[k];
  }
  return {"form-adjoint", std::move(map)};
}

HermitianPart<Rational> p_jordan(int n) {
  auto a = matrix_superalgebra(n, n);
  auto h = hermitian_part(a, transpose_superinvolution(n));
  h.algebra.name = "p:" + std::to_string(n);
  return h;
}

HermitianPart<Rational> osp_jordan(int n, int m) {
  auto a = matrix_superalgebra(n, 2 * m);
  auto h = hermitian_part(a, orthosymplectic_superinvolution(n, m));
  h.algebra.name = "osp:" + std::to_string(n) + "," + std::to_string(m);
  return h;
}

namespace {

GradedLinearMap<Rational> map_from_columns(
    const std::vector<Vec<Rational>>& cols) {
  GradedLinearMap<Rational> phi;
  phi.mat = Matrix<Rational>(static_cast<int>(cols[0].size()),
                             static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[0].size(); ++i)
      phi.mat(static_cast<int>(i), static_cast<int>(j)) = cols[j][i];
  return phi;
}

}  // namespace

IsoFixture fixture_d1_superform() {
  IsoFixture f;
  f.name = "D1~superform:1,1";
  f.src = d_t(1);
  f.tgt = superform_algebra(1, 1);
  // e -> (1 + v)/2, f -> (1 - v)/2, u -> w1, v -> w2
  f.map = map_from_columns({{kHalf, kHalf, 0, 0},
                            {kHalf, -kHalf, 0, 0},
                            {0, 0, 1, 0},
                            {0, 0, 0, 1}});
  return f;
}

IsoFixture fixture_dm1_m11plus() {
  IsoFixture f;
  f.name = "D-1~M:1,1+";
  f.src = d_t(-1);
  f.tgt = plus_algebra(matrix_superalgebra(1, 1));
  // e -> e11, f -> e22, u -> e12, v -> 2 e21
  f.map = map_from_columns(
      {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 2, 0}});
  return f;
}

IsoFixture fixture_dm2_osp12() {
  IsoFixture f;
  f.name = "D-2~osp:1,1";
  f.src = d_t(-2);
  auto h = osp_jordan(1, 1);
  f.tgt = h.algebra;
  // ambient 3x3 images: e -> e22+e33, f -> e11, u -> -2(e13+e21), v -> -e12+e31
  auto amb = [&](std::initializer_list<std::pair<int, Rational>> terms) {
    Vec<Rational> v = zero_vec<Rational>(9);
    for (auto& [i, c] : terms) v[i] = c;
    return v;
  };
  std::vector<Vec<Rational>> hcols;
  for (int i = 0; i < f.tgt.dim(); ++i)
    hcols.push_back(h.inclusion.image_of_basis(i));
  CoordSolver<Rational> solver(hcols, 9, kOne);
  std::vector<Vec<Rational>> cols;
  for (auto& img : {amb({{4, 1}, {8, 1}}), amb({{0, 1}}),
                    amb({{2, -2}, {3, -2}}), amb({{1, -1}, {6, 1}})}) {
    auto c = solver.express(img);
    if (!c) throw catalog_error("osp(1,2) fixture image outside hermitian part");
    cols.push_back(*c);
  }
  f.map = map_from_columns(cols);
  return f;
}

IsoFixture fixture_dt_dinv(const Rational& t) {
  if (is_zero(t)) throw catalog_error("D_t inversion fixture needs t != 0");
  IsoFixture f;
  f.name = "Dt~D1/t[t=" + to_string(t) + "]";
  f.src = d_t(t);
  f.tgt = d_t(Rational(1) / t);
  // e -> f', f -> e', u -> t u', v -> v'
  f.map = map_from_columns(
      {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, t, 0}, {0, 0, 0, 1}});
  return f;
}

std::vector<IsoFixture> all_iso_fixtures() {
  return {fixture_d1_superform(), fixture_dm1_m11plus(), fixture_dm2_osp12(),
          fixture_dt_dinv(2)};
}

std::vector<Superalgebra<Rational>> corrupted_fixtures() {
  std::vector<Superalgebra<Rational>> out;
  {
    // K3 with e acting as identity on x (still supercommutative)
    SuperalgebraBuilder b("corrupt:K3-half", {0, 1, 1}, kOne);
    b.add(0, 0, 0, 1);
    b.add(0, 1, 1, 1);
    b.add(1, 0, 1, 1);
    b.add(0, 2, 2, kHalf);
    b.add(2, 0, 2, kHalf);
    b.add(1, 2, 0, 1);
    b.add(2, 1, 0, -1);
    out.push_back(b.build());
  }
  {
    // D_2 with f acting as identity instead of 1/2 on u (still
    // supercommutative)
    SuperalgebraBuilder b("corrupt:D2-uv", {0, 0, 1, 1}, kOne);
    b.add(0, 0, 0, 1);
    b.add(1, 1, 1, 1);
    for (int odd : {2, 3})
      for (int ev : {0, 1}) {
        Rational c = (ev == 1 && odd == 2) ? Rational(1) : kHalf;
        b.add(ev, odd, odd, c);
        b.add(odd, ev, odd, c);
      }
    b.add(2, 3, 0, 1);
    b.add(2, 3, 1, 2);
    b.add(3, 2, 0, -1);
    b.add(3, 2, 1, -2);
    out.push_back(b.build());
  }
  {
    // superform(1,1) with the unit acting by 1/2 on the even vector
    SuperalgebraBuilder b("corrupt:superform-unit", {0, 0, 1, 1}, kOne);
    b.add(0, 0, 0, 1);
    b.add(0, 1, 1, kHalf);
    b.add(1, 0, 1, kHalf);
    for (int i : {2, 3}) {
      b.add(0, i, i, 1);
      b.add(i, 0, i, 1);
    }
    b.add(1, 1, 0, 1);
    b.add(2, 3, 0, 1);
    b.add(3, 2, 0, -1);
    out.push_back(b.build());
  }
  return out;
}

VerificationReport grassmann_envelope_check(const Superalgebra<Rational>& j,
                                            int n_env, int random_pairs,
                                            std::uint64_t seed) {
  auto env = grassmann_envelope(grassmann(n_env), j);
  return envelope_jordan_check(env, random_pairs, seed);
}

namespace {

int parse_int(const std::string& s) {
  if (s.empty()) throw catalog_error("expected an integer");
  std::size_t pos = 0;
  int v;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw catalog_error("bad integer: " + s);
  }
  if (pos != s.size()) throw catalog_error("bad integer: " + s);
  return v;
}

std::pair<int, int> parse_int_pair(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw catalog_error("expected p,q in: " + s);
  return {parse_int(s.substr(0, comma)), parse_int(s.substr(comma + 1))};
}

}  // namespace

Superalgebra<Rational> build_catalog(const std::string& spec) {
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "K3") {
    if (!arg.empty()) throw catalog_error("K3 takes no arguments");
    return kaplansky();
  }
  if (head == "Dt") return d_t(parse_rational(arg));
  if (head == "superform") {
    auto [p, q] = parse_int_pair(arg);
    return superform_algebra(p, q);
  }
  if (head == "M") {
    auto [p, q] = parse_int_pair(arg);
    return matrix_superalgebra(p, q);
  }
  if (head == "Q") return q_n(parse_int(arg));
  if (head == "grassmann") return grassmann(parse_int(arg));
  if (head == "kantor") return kantor_double(parse_int(arg));
  if (head == "p") return p_jordan(parse_int(arg)).algebra;
  if (head == "osp") {
    auto [n, m] = parse_int_pair(arg);
    return osp_jordan(n, m).algebra;
  }
  if (head == "hull") return unital_hull(build_catalog(arg));
  throw catalog_error("unknown catalog spec: " + spec);
}

std::vector<std::string> catalog_names() {
  return {"K3",        "Dt:<t>",       "superform:p,q", "M:p,q",
          "Q:n",       "grassmann:n",  "kantor:n",      "p:n",
          "osp:n,m",   "hull:<spec>"};
}

}  // namespace sj

#include "sj/osp.hpp"

namespace sj {

namespace {
const Rational kOne = 1;
}

OspAlgebra osp12() {
  // 0:h 1:e 2:f 3:x 4:y
  SuperalgebraBuilder b("osp12-lie", {0, 0, 0, 1, 1}, kOne);
  auto add = [&](int i, int j, int k, const Rational& c) {
    b.add(i, j, k, c);
    // super-anticommutativity fills the mirror entry
    int sg = (i >= 3 && j >= 3) ? 1 : -1;
    if (i != j) b.add(j, i, k, sg * c);
  };
  add(0, 1, 1, 2);   // [h,e] = 2e
  add(0, 2, 2, -2);  // [h,f] = -2f
  add(1, 2, 0, 1);   // [e,f] = h
  add(0, 3, 3, 1);   // [h,x] = x
  add(0, 4, 4, -1);  // [h,y] = -y
  add(1, 4, 3, 1);   // [e,y] = x
  add(2, 3, 4, 1);   // [f,x] = y
  b.add(3, 3, 1, -2);  // [x,x] = -2e
  b.add(4, 4, 2, 2);   // [y,y] = 2f
  add(3, 4, 0, 1);     // [x,y] = h
  OspAlgebra g;
  g.bracket = b.build();
  auto mat = [](std::initializer_list<std::initializer_list<int>> rows) {
    Matrix<Rational> m(3, 3);
    int i = 0;
    for (auto& r : rows) {
      int j = 0;
      for (int v : r) m(i, j++) = v;
      ++i;
    }
    return m;
  };
  g.mats = {mat({{0, 0, 0}, {0, 1, 0}, {0, 0, -1}}),   // h
            mat({{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}),    // e
            mat({{0, 0, 0}, {0, 0, 0}, {0, 1, 0}}),    // f
            mat({{0, 0, -1}, {1, 0, 0}, {0, 0, 0}}),   // x
            mat({{0, 1, 0}, {0, 0, 0}, {1, 0, 0}})};   // y
  return g;
}

VerificationReport check_lie_super(const Superalgebra<Rational>& g) {
  const int n = g.dim();
  const std::string check = "lie-super(" + g.name + ")";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int sg = (g.parity(i) & g.parity(j)) ? 1 : -1;
      if (g.prod_vec(i, j) != vec_scaled(g.prod_vec(j, i), Rational(sg)))
        return VerificationReport::fail(
            check, "super-anticommutativity fails on (" + std::to_string(i) +
                       "," + std::to_string(j) + ")");
    }
  // (-1)^{ac}[a,[b,c]] + (-1)^{ba}[b,[c,a]] + (-1)^{cb}[c,[a,b]] = 0
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        auto sg = [&](int u, int v) {
          return Rational((g.parity(u) & g.parity(v)) ? -1 : 1);
        };
        Vec<Rational> s = vec_scaled(
            g.multiply(g.basis_vec(a), g.prod_vec(b, c)), sg(a, c));
        vec_axpy(s, sg(b, a),
                 g.multiply(g.basis_vec(b), g.prod_vec(c, a)));
        vec_axpy(s, sg(c, b),
                 g.multiply(g.basis_vec(c), g.prod_vec(a, b)));
        if (!vec_is_zero(s))
          return VerificationReport::fail(
              check, "super Jacobi fails on (" + std::to_string(a) + "," +
                         std::to_string(b) + "," + std::to_string(c) + ")");
      }
  return VerificationReport::ok(check);
}

VmModule vm_module(int m, bool opposite_parity) {
  if (m < 0) throw bad_parameter("vm_module: m >= 0 required");
  VmModule mod;
  mod.m = m;
  mod.opposite_parity = opposite_parity;
  const int d = 2 * m + 1;
  mod.parities.resize(d);
  for (int i = 0; i < d; ++i)
    mod.parities[i] = static_cast<std::uint8_t>((i & 1) ^ (opposite_parity ? 1 : 0));
  mod.rho_h = Matrix<Rational>(d, d);
  mod.rho_e = Matrix<Rational>(d, d);
  mod.rho_f = Matrix<Rational>(d, d);
  mod.rho_x = Matrix<Rational>(d, d);
  mod.rho_y = Matrix<Rational>(d, d);
  for (int i = 0; i < d; ++i) {
    mod.rho_h(i, i) = m - i;
    if (i + 2 < d) mod.rho_f(i + 2, i) = 1;
    if (i + 1 < d) mod.rho_y(i + 1, i) = 1;
  }
  for (int i = 0; 2 * i < d; ++i) {
    // x e_{2i} = -i e_{2i-1}, e e_{2i} = i(m-i+1) e_{2i-2}
    if (i > 0) {
      mod.rho_x(2 * i - 1, 2 * i) = -i;
      mod.rho_e(2 * i - 2, 2 * i) = Rational(i) * (m - i + 1);
    }
    // x e_{2i+1} = (m-i) e_{2i}, e e_{2i+1} = i(m-i) e_{2i-1}
    if (2 * i + 1 < d) {
      mod.rho_x(2 * i, 2 * i + 1) = m - i;
      if (i > 0) mod.rho_e(2 * i - 1, 2 * i + 1) = Rational(i) * (m - i);
    }
  }
  return mod;
}

VerificationReport check_rep(const VmModule& mod) {
  auto g = osp12();
  const std::string check = "rep(V(" + std::to_string(mod.m) + "))";
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      Matrix<Rational> lhs(mod.dim(), mod.dim());
      for (const auto& [k, c] : g.bracket.prod(a, b)) lhs = lhs + c * mod.rho(k);
      Rational sg = (g.bracket.parity(a) & g.bracket.parity(b)) ? -1 : 1;
      Matrix<Rational> rhs =
          mod.rho(a) * mod.rho(b) - sg * (mod.rho(b) * mod.rho(a));
      if (lhs != rhs)
        return VerificationReport::fail(
            check, std::string("bracket compatibility fails on (") +
                       OspAlgebra::labels[a] + "," + OspAlgebra::labels[b] + ")");
    }
  return VerificationReport::ok(check);
}

std::vector<Rational> minimal_poly(const Matrix<Rational>& t) {
  const int d = t.rows();
  std::vector<Vec<Rational>> powers;
  Matrix<Rational> cur = Matrix<Rational>::identity(d, kOne);
  for (int k = 0;; ++k) {
    CoordSolver<Rational> solver(powers, d * d, kOne);
    auto coords = solver.express(cur.flattened());
    if (coords) {
      // cur = sum coords_i powers_i, so min poly is X^k - sum coords_i X^i
      std::vector<Rational> poly(k + 1);
      for (int i = 0; i < k; ++i) poly[i] = -(*coords)[i];
      poly[k] = 1;
      return poly;
    }
    powers.push_back(cur.flattened());
    cur = cur * t;
    if (k > d) throw algebra_error("minimal_poly: no relation found");
  }
}

std::vector<Rational> minimal_poly_xyyx(const VmModule& mod) {
  return minimal_poly(mod.rho_x * mod.rho_y - mod.rho_y * mod.rho_x);
}

InvariantForm vm_form(const VmModule& mod) {
  const int m = mod.m;
  const int d = mod.dim();
  Matrix<Rational> g(d, d);
  for (int r = 0; 2 * r < d; ++r) {
    Rational s = (r & 1) ? -1 : 1;
    g(2 * r, 2 * (m - r)) = s;
    if (2 * r + 1 < d) g(2 * r + 1, 2 * (m - r) - 1) = s;
  }
  if (mod.opposite_parity) {
    // primed form (u|v)' = (-1)^{|u|}(u|v), |u| the natural parity
    for (int i = 0; i < d; ++i)
      if (i & 1)
        for (int j = 0; j < d; ++j) g(i, j) = -g(i, j);
  }
  return {std::move(g)};
}

namespace {
Matrix<Rational> parity_signs(const ParityVec& par) {
  const int d = static_cast<int>(par.size());
  Matrix<Rational> p(d, d);
  for (int i = 0; i < d; ++i) p(i, i) = par[i] ? -1 : 1;
  return p;
}
}  // namespace

bool form_supersymmetric_for(const VmModule& mod, const InvariantForm& form,
                             const Matrix<Rational>& rho_z) {
  return rho_z.transpose() * form.gram ==
         parity_signs(mod.parities) * form.gram * rho_z;
}

bool form_skew_for(const InvariantForm& form, const Matrix<Rational>& rho_z) {
  return rho_z.transpose() * form.gram ==
         Rational(-1) * (form.gram * rho_z);
}

int form_solution_space_dim(const VmModule& mod) {
  const int d = mod.dim();
  const Matrix<Rational> p = parity_signs(mod.parities);
  // unknown G, equations rho_z^T G - P G rho_z = 0 for z in {x, y}, plus
  // G(i,j) = 0 when parities differ
  std::vector<Vec<Rational>> rows;
  auto idx = [&](int i, int j) { return i * d + j; };
  for (const Matrix<Rational>* z : {&mod.rho_x, &mod.rho_y})
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Vec<Rational> row = zero_vec<Rational>(d * d);
        // (z^T G)(i,j) = sum_k z(k,i) G(k,j)
        for (int k = 0; k < d; ++k) row[idx(k, j)] += (*z)(k, i);
        // (P G z)(i,j) = p_i sum_k G(i,k) z(k,j)
        for (int k = 0; k < d; ++k) row[idx(i, k)] -= p(i, i) * (*z)(k, j);
        rows.push_back(std::move(row));
      }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (mod.parities[i] != mod.parities[j]) {
        Vec<Rational> row = zero_vec<Rational>(d * d);
        row[idx(i, j)] = 1;
        rows.push_back(std::move(row));
      }
  Matrix<Rational> sys = Matrix<Rational>::from_rows(rows, d * d);
  return d * d - rank(sys);
}

DtEmbedding embed_dt(int m, int which) {
  if (m < 1) throw bad_parameter("embed_dt: m >= 1 required");
  if (which != 0 && which != 1) throw bad_parameter("embed_dt: which in {0,1}");
  DtEmbedding emb;
  emb.t = which == 0 ? Rational(-m, m + 1) : Rational(-(m + 1), m);
  emb.module = vm_module(m);
  const int d = emb.module.dim();
  const Rational t = emb.t;
  Matrix<Rational> id = Matrix<Rational>::identity(d, kOne);
  Matrix<Rational> c =
      emb.module.rho_x * emb.module.rho_y - emb.module.rho_y * emb.module.rho_x;
  Matrix<Rational> ie = (kOne / (t - 1)) * (t * id + (1 + t) * c);
  Matrix<Rational> iff = (kOne / (1 - t)) * (id + (1 + t) * c);
  Matrix<Rational> iu = Rational(2) * emb.module.rho_x;
  Matrix<Rational> iv = (Rational(-1) - t) * emb.module.rho_y;
  emb.images = {ie, iff, iu, iv};
  // even basis vectors first
  for (int i = 0; i < d; i += 2) emb.perm.push_back(i);
  for (int i = 1; i < d; i += 2) emb.perm.push_back(i);
  emb.target = plus_algebra(matrix_superalgebra(m + 1, m));
  GradedLinearMap<Rational> phi;
  phi.mat = Matrix<Rational>(d * d, 4);
  for (int col = 0; col < 4; ++col)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        phi.mat(i * d + j, col) = emb.images[col](emb.perm[i], emb.perm[j]);
  emb.map = std::move(phi);
  return emb;
}

EmbeddingClaims verify_embedding_claims(int m, int which) {
  EmbeddingClaims out;
  const std::string check = "embedding-claims(m=" + std::to_string(m) +
                            ",which=" + std::to_string(which) + ")";
  auto emb = embed_dt(m, which);
  const int d = 2 * m + 1;

  // (c) parameter bookkeeping: t = -p/q or -q/p with p = m+1, q = p-1
  Rational p = m + 1, q = m;
  if (emb.t != -p / q && emb.t != -q / p) {
    out.report = VerificationReport::fail(check, "t is not -p/q or -q/p");
    return out;
  }

  // the hermitian claim lives on V(m) for even m and on V(m)^op for odd m
  VmModule mod = vm_module(m, m % 2 == 1);
  InvariantForm form = vm_form(mod);
  for (const Matrix<Rational>* z : {&mod.rho_x, &mod.rho_y})
    if (!form_supersymmetric_for(mod, form, *z)) {
      out.report = VerificationReport::fail(check, "form not supersymmetric");
      return out;
    }

  // sort the module basis even-first and express everything there
  std::vector<int> perm;
  for (int i = 0; i < d; ++i)
    if (mod.parities[i] == 0) perm.push_back(i);
  int pcnt = static_cast<int>(perm.size());
  for (int i = 0; i < d; ++i)
    if (mod.parities[i] == 1) perm.push_back(i);
  auto permute = [&](const Matrix<Rational>& mm) {
    Matrix<Rational> r(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) r(i, j) = mm(perm[i], perm[j]);
    return r;
  };
  auto A = matrix_superalgebra(pcnt, d - pcnt);
  auto star = superinvolution_from_form(A, permute(form.gram));
  auto si = check_superinvolution(A, star);
  if (!si.pass) {
    out.report = VerificationReport::fail(check, "form adjoint: " + si.detail);
    return out;
  }
  out.hermitian = true;
  std::vector<Vec<Rational>> gens;
  for (const auto& img : emb.images) {
    Vec<Rational> v = permute(img).flattened();
    if (star.apply(v) != v) {
      out.hermitian = false;
      out.report = VerificationReport::fail(check, "image not *-fixed");
      return out;
    }
    gens.push_back(std::move(v));
  }

  // associative closure of the image is all of End(V(m))
  auto cl = assoc_closure(A, gens);
  out.closure_dim = cl.dim();
  if (cl.dim() != d * d) {
    out.report = VerificationReport::fail(
        check, "associative closure has dim " + std::to_string(cl.dim()) +
                   " != " + std::to_string(d * d));
    return out;
  }
  out.report = VerificationReport::ok(check);
  return out;
}

VerificationReport peirce_obstruction_qn(int n, int s, std::uint64_t seed) {
  const std::string check = "peirce-obstruction(Q" + std::to_string(n) + ",s=" +
                            std::to_string(s) + ")";
  if (s < 1 || s >= n) throw bad_parameter("peirce_obstruction_qn: 1 <= s < n");
  auto A = q_n(n);
  auto J = plus_algebra(A);
  const int nn = n * n;
  Vec<Rational> e = zero_vec<Rational>(A.dim());
  Vec<Rational> f = zero_vec<Rational>(A.dim());
  for (int k = 0; k < n; ++k) (k < s ? e : f)[k * n + k] = 1;
  auto pd = peirce_decompose(J, e);
  std::vector<Vec<Rational>> half_odd;
  for (const auto& v : pd.half_part.odd().rows()) half_odd.push_back(v);
  if (half_odd.empty())
    return VerificationReport::fail(check, "odd Peirce-1/2 space is zero");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto sample = [&] {
    Vec<Rational> v = zero_vec<Rational>(A.dim());
    bool nz = false;
    while (!nz)
      for (const auto& b : half_odd) {
        int c = coeff(rng);
        if (c) {
          vec_axpy(v, Rational(c), b);
          nz = true;
        }
      }
    return v;
  };
  Vec<Rational> u = sample(), v = sample();
  auto cl = assoc_closure(A, std::vector<Vec<Rational>>{e, f, u, v});
  if (cl.dim() >= A.dim())
    return VerificationReport::fail(
        check, "closure of {e,f,u,v} is all of Q_n, dim " +
                   std::to_string(cl.dim()));
  return VerificationReport::ok(check);
}

}  // namespace sj

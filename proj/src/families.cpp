#include "sj/families.hpp"

#include "sj/osp.hpp"

#include <memory>
#include <random>

namespace sj {

namespace {

const Rational kOne = 1;

GradedSubspace<Rational> span_in(const Superalgebra<Rational>& J,
                                 const std::vector<Vec<Rational>>& gens) {
  return span_of_homogeneous(gens, J.parities);
}

Vec<Rational> basis_sum(const Superalgebra<Rational>& J,
                        std::initializer_list<int> idx) {
  Vec<Rational> v = zero_vec<Rational>(J.dim());
  for (int i : idx) v[i] = 1;
  return v;
}

std::vector<int> odd_indices(const Superalgebra<Rational>& J) {
  std::vector<int> r;
  for (int i = 0; i < J.dim(); ++i)
    if (J.parity(i)) r.push_back(i);
  return r;
}

// random nonzero vector supported on the given coordinates
Vec<Rational> random_on(const std::vector<int>& support, int dim,
                        std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  Vec<Rational> v = zero_vec<Rational>(dim);
  bool nz = false;
  while (!nz)
    for (int i : support) {
      int c = coeff(rng);
      if (c) {
        v[i] = c;
        nz = true;
      }
    }
  return v;
}

// random subspace of the given codimension-1 inside the span of `support`
std::vector<Vec<Rational>> random_hyperplane(const std::vector<int>& support,
                                             int dim, std::mt19937_64& rng) {
  const int k = static_cast<int>(support.size()) - 1;
  RowSpan<Rational> span(dim);
  std::vector<Vec<Rational>> out;
  while (static_cast<int>(out.size()) < k) {
    Vec<Rational> v = random_on(support, dim, rng);
    if (span.add(v)) out.push_back(v);
  }
  return out;
}

}  // namespace

MaximalFamily make_family(std::string id, Superalgebra<Rational> ambient,
                          GradedSubspace<Rational> sub, bool open,
                          std::string note) {
  require_proper_subalgebra(ambient, sub);
  return {std::move(id), std::move(ambient), std::move(sub), open,
          std::move(note)};
}

std::vector<MaximalFamily> easy_maximals_k3(int random_variants,
                                            std::uint64_t seed) {
  auto J = kaplansky();
  std::vector<MaximalFamily> out;
  out.push_back(make_family("thm2.1.i.K3", J,
                            span_in(J, {basis_sum(J, {0}), basis_sum(J, {1})})));
  std::mt19937_64 rng(seed);
  for (int r = 1; r <= random_variants; ++r)
    out.push_back(make_family(
        "thm2.1.i.K3.r" + std::to_string(r), J,
        span_in(J, {basis_sum(J, {0}), random_on({1, 2}, J.dim(), rng)})));
  return out;
}

std::vector<MaximalFamily> easy_maximals_dt(const Rational& t,
                                            int random_variants,
                                            std::uint64_t seed) {
  auto J = d_t(t);
  std::string base = "thm2.1.ii." + J.name;
  std::vector<MaximalFamily> out;
  out.push_back(make_family(
      base, J,
      span_in(J, {basis_sum(J, {0}), basis_sum(J, {1}), basis_sum(J, {2})})));
  std::mt19937_64 rng(seed);
  for (int r = 1; r <= random_variants; ++r)
    out.push_back(make_family(
        base + ".r" + std::to_string(r), J,
        span_in(J, {basis_sum(J, {0}), basis_sum(J, {1}),
                    random_on({2, 3}, J.dim(), rng)})));
  return out;
}

MaximalFamily d1_unit_family() {
  auto J = d_t(1);
  return make_family(
      "thm2.1.ii.D1.unit", J,
      span_in(J, {basis_sum(J, {0, 1}), basis_sum(J, {2}), basis_sum(J, {3})}));
}

std::vector<MaximalFamily> easy_maximals_superform(int p, int q, int kind,
                                                   int random_variants,
                                                   std::uint64_t seed) {
  auto J = superform_algebra(p, q);
  std::string base = "thm2.1.iii." + J.name + (kind == 0 ? ".odd" : ".even");
  std::vector<int> odd = odd_indices(J);
  std::vector<int> v0;
  for (int i = 1; i <= p; ++i) v0.push_back(i);
  std::vector<MaximalFamily> out;
  std::mt19937_64 rng(seed);
  for (int r = 0; r <= random_variants; ++r) {
    std::vector<Vec<Rational>> gens;
    if (kind == 0) {
      // J0 plus a codimension-1 odd subspace
      gens.push_back(basis_sum(J, {0}));
      for (int i : v0) gens.push_back(basis_sum(J, {i}));
      if (r == 0) {
        for (std::size_t i = 0; i + 1 < odd.size(); ++i)
          gens.push_back(basis_sum(J, {odd[i]}));
      } else {
        for (auto& v : random_hyperplane(odd, J.dim(), rng))
          gens.push_back(std::move(v));
      }
    } else {
      // F1 plus a codimension-1 even-vector subspace, plus all of J1
      gens.push_back(basis_sum(J, {0}));
      if (r == 0) {
        for (std::size_t i = 0; i + 1 < v0.size(); ++i)
          gens.push_back(basis_sum(J, {v0[i]}));
      } else {
        if (v0.size() <= 1) break;  // no nontrivial random choice exists
        for (auto& v : random_hyperplane(v0, J.dim(), rng))
          gens.push_back(std::move(v));
      }
      for (int i : odd) gens.push_back(basis_sum(J, {i}));
    }
    out.push_back(make_family(r == 0 ? base : base + ".r" + std::to_string(r),
                              J, span_in(J, gens)));
  }
  return out;
}

MaximalFamily hermitian_maximal_in_plus_transpose(int n) {
  auto A = matrix_superalgebra(n, n);
  auto h = hermitian_part(A, transpose_superinvolution(n));
  return make_family("thm4.3.p:" + std::to_string(n), plus_algebra(A), h.fixed);
}

MaximalFamily hermitian_maximal_in_plus_osp(int n, int m) {
  auto A = matrix_superalgebra(n, 2 * m);
  auto h = hermitian_part(A, orthosymplectic_superinvolution(n, m));
  return make_family(
      "thm4.3.osp:" + std::to_string(n) + "," + std::to_string(m),
      plus_algebra(A), h.fixed);
}

MaximalFamily assoc_family_1a(int p, int q, int k1, int k2) {
  if (k1 < 0 || k1 > p || k2 < 0 || k2 > q || (k1 + k2 == 0) ||
      (k1 == p && k2 == q))
    throw bad_blocks("assoc_family_1a: need a nontrivial idempotent");
  auto A = matrix_superalgebra(p, q);
  const int n = p + q;
  Vec<Rational> e = zero_vec<Rational>(A.dim());
  for (int i = 0; i < k1; ++i) e[i * n + i] = 1;
  for (int i = 0; i < k2; ++i) e[(p + i) * n + (p + i)] = 1;
  Vec<Rational> f = *A.unit();
  for (int i = 0; i < A.dim(); ++i) f[i] -= e[i];
  std::vector<Vec<Rational>> gens;
  for (int i = 0; i < A.dim(); ++i) {
    Vec<Rational> b = A.basis_vec(i);
    gens.push_back(A.multiply(A.multiply(e, b), e));
    gens.push_back(A.multiply(A.multiply(e, b), f));
    gens.push_back(A.multiply(A.multiply(f, b), f));
  }
  std::string id = "thm4.4.1a." + A.name + ".e" + std::to_string(k1) + "," +
                   std::to_string(k2);
  return make_family(std::move(id), plus_algebra(A), span_in(A, gens));
}

MaximalFamily assoc_family_1b(int p) {
  auto A = matrix_superalgebra(p, p);
  const int n = 2 * p;
  Vec<Rational> u = zero_vec<Rational>(A.dim());
  for (int i = 0; i < p; ++i) {
    u[i * n + (p + i)] = 1;
    u[(p + i) * n + i] = 1;
  }
  // plain centralizer of u: kernel of L_u - R_u
  Matrix<Rational> lu = A.left_mult(u);
  Matrix<Rational> ru(A.dim(), A.dim());
  for (int j = 0; j < A.dim(); ++j) {
    Vec<Rational> col = A.multiply(A.basis_vec(j), u);
    for (int k = 0; k < A.dim(); ++k) ru(k, j) = col[k];
  }
  RowSpan<Rational> ker(A.dim());
  for (auto& v : nullspace(lu - ru, kOne)) ker.add(std::move(v));
  auto g = graded_split(ker, A.parities);
  if (!g) throw bad_blocks("assoc_family_1b: centralizer not graded");
  return make_family("thm4.4.1b." + A.name, plus_algebra(A), *g);
}

MaximalFamily assoc_family_2a(int n, int r) {
  if (r < 1 || r >= n) throw bad_blocks("assoc_family_2a: 1 <= r < n");
  auto A = q_n(n);
  std::vector<Vec<Rational>> gens;
  for (int half = 0; half < 2; ++half)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!(i >= r && j < r))
          gens.push_back(A.basis_vec(half * n * n + i * n + j));
  return make_family("thm4.4.2a." + A.name + ".r" + std::to_string(r),
                     plus_algebra(A), span_in(A, gens));
}

MaximalFamily assoc_family_2b(int n) {
  auto A = q_n(n);
  std::vector<Vec<Rational>> gens;
  for (int i = 0; i < n * n; ++i) gens.push_back(A.basis_vec(i));
  return make_family("thm4.4.2b." + A.name, plus_algebra(A), span_in(A, gens));
}

MaximalFamily assoc_family_2c(int n, int r) {
  if (r < 1 || r >= n) throw bad_blocks("assoc_family_2c: 1 <= r < n");
  auto A = q_n(n);
  std::vector<Vec<Rational>> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool same = (i < r) == (j < r);
      if (same) gens.push_back(A.basis_vec(i * n + j));
      else gens.push_back(A.basis_vec(n * n + i * n + j));
    }
  return make_family("thm4.4.2c." + A.name + ".r" + std::to_string(r),
                     plus_algebra(A), span_in(A, gens));
}

namespace {

// star-fixed part of a graded ambient subspace, computed per parity
std::vector<Vec<Rational>> fixed_part(const Superalgebra<Rational>& A,
                                      const Superinvolution<Rational>& star,
                                      const GradedSubspace<Rational>& C) {
  std::vector<Vec<Rational>> out;
  for (int parity = 0; parity < 2; ++parity) {
    const auto& rows = parity ? C.odd().rows() : C.even().rows();
    if (rows.empty()) continue;
    const int k = static_cast<int>(rows.size());
    Matrix<Rational> sys(A.dim(), k);
    for (int j = 0; j < k; ++j) {
      Vec<Rational> d = star.apply(rows[j]);
      for (int i = 0; i < A.dim(); ++i) sys(i, j) = rows[j][i] - d[i];
    }
    for (const auto& alpha : nullspace(sys, kOne)) {
      Vec<Rational> v = zero_vec<Rational>(A.dim());
      for (int j = 0; j < k; ++j)
        if (!is_zero(alpha[j])) vec_axpy(v, alpha[j], rows[j]);
      out.push_back(std::move(v));
    }
  }
  return out;
}

GradedSubspace<Rational> to_h_coords(const HermitianPart<Rational>& h,
                                     const std::vector<Vec<Rational>>& vecs) {
  std::vector<Vec<Rational>> hbasis;
  for (int i = 0; i < h.algebra.dim(); ++i)
    hbasis.push_back(h.inclusion.image_of_basis(i));
  CoordSolver<Rational> solver(hbasis, h.inclusion.mat.rows(), kOne);
  std::vector<Vec<Rational>> coords;
  for (const auto& v : vecs) {
    auto c = solver.express(v);
    if (!c) throw side_condition_violated("vector outside the hermitian part");
    coords.push_back(*c);
  }
  return span_of_homogeneous(coords, h.algebra.parities);
}

// H(corner)' = corner fullness condition, with corner = pAp for an even
// *-fixed idempotent p
void check_corner_fullness(const Superalgebra<Rational>& A,
                           const Superinvolution<Rational>& star,
                           const Vec<Rational>& p, const std::string& what) {
  std::vector<Vec<Rational>> corner_gens;
  for (int i = 0; i < A.dim(); ++i)
    corner_gens.push_back(A.multiply(A.multiply(p, A.basis_vec(i)), p));
  auto corner = span_in(A, corner_gens);
  if (corner.dim() == 0) throw side_condition_violated(what + ": zero corner");
  auto fixed = fixed_part(A, star, corner);
  auto cl = assoc_closure(A, fixed);
  if (cl.dim() != corner.dim())
    throw side_condition_violated(
        what + ": hermitian part of the corner generates dim " +
        std::to_string(cl.dim()) + " != corner dim " +
        std::to_string(corner.dim()));
}

MaximalFamily herm_case_i(const std::string& id,
                          const Superalgebra<Rational>& A,
                          const Superinvolution<Rational>& star,
                          const Vec<Rational>& e) {
  if (A.multiply(e, e) != e) throw bad_blocks(id + ": e not idempotent");
  if (star.apply(e) != e) throw bad_blocks(id + ": e not *-fixed");
  Vec<Rational> f = *A.unit();
  for (int i = 0; i < A.dim(); ++i) f[i] -= e[i];
  check_corner_fullness(A, star, e, id + " (eAe)");
  check_corner_fullness(A, star, f, id + " (fAf)");
  std::vector<Vec<Rational>> gens;
  for (int i = 0; i < A.dim(); ++i) {
    Vec<Rational> b = A.basis_vec(i);
    gens.push_back(A.multiply(A.multiply(e, b), e));
    gens.push_back(A.multiply(A.multiply(f, b), f));
  }
  auto h = hermitian_part(A, star);
  auto C = span_in(A, gens);
  auto B = to_h_coords(h, fixed_part(A, star, C));
  return make_family(id, h.algebra, B);
}

MaximalFamily herm_case_ii(const std::string& id,
                           const Superalgebra<Rational>& A,
                           const Superinvolution<Rational>& star,
                           const Vec<Rational>& e) {
  if (A.multiply(e, e) != e) throw bad_blocks(id + ": e not idempotent");
  Vec<Rational> es = star.apply(e);
  if (!vec_is_zero(A.multiply(e, es)) || !vec_is_zero(A.multiply(es, e)))
    throw bad_blocks(id + ": e and e* not orthogonal");
  Vec<Rational> g = *A.unit();
  for (int i = 0; i < A.dim(); ++i) g[i] -= e[i] + es[i];
  if (A.multiply(g, g) != g) throw bad_blocks(id + ": 1-e-e* not idempotent");
  check_corner_fullness(A, star, g, id + " (ff*Aff*)");
  std::vector<Vec<Rational>> gens;
  for (int i = 0; i < A.dim(); ++i) {
    Vec<Rational> b = A.basis_vec(i);
    gens.push_back(A.multiply(e, b));
    gens.push_back(A.multiply(b, es));
    gens.push_back(A.multiply(A.multiply(g, b), g));
  }
  auto h = hermitian_part(A, star);
  auto C = span_in(A, gens);
  auto B = to_h_coords(h, fixed_part(A, star, C));
  return make_family(id, h.algebra, B);
}

}  // namespace

MaximalFamily herm_family_i1(int n, int k) {
  if (k < 1 || k >= n) throw bad_blocks("herm_family_i1: 1 <= k < n");
  auto A = matrix_superalgebra(n, n);
  auto star = transpose_superinvolution(n);
  const int N = 2 * n;
  Vec<Rational> e = zero_vec<Rational>(A.dim());
  for (int i = 0; i < k; ++i) {
    e[i * N + i] = 1;
    e[(n + i) * N + (n + i)] = 1;
  }
  return herm_case_i("thm5.2.i1.p:" + std::to_string(n), A, star, e);
}

MaximalFamily herm_family_ii1(int n) {
  auto A = matrix_superalgebra(n, n);
  auto star = transpose_superinvolution(n);
  Vec<Rational> e = zero_vec<Rational>(A.dim());
  e[0] = 1;  // e_11; its image under * is e_{n+1,n+1}
  return herm_case_ii("thm5.2.ii1.p:" + std::to_string(n), A, star, e);
}

MaximalFamily herm_family_i2() {
  auto A = matrix_superalgebra(2, 2);
  auto star = orthosymplectic_superinvolution(2, 1);
  // e = e_11 + e_33 + e_44, f = e_22
  Vec<Rational> e = zero_vec<Rational>(A.dim());
  e[0 * 4 + 0] = 1;
  e[2 * 4 + 2] = 1;
  e[3 * 4 + 3] = 1;
  return herm_case_i("thm5.2.i2.osp:2,2", A, star, e);
}

MaximalFamily herm_family_ii2() {
  auto A = matrix_superalgebra(2, 2);
  auto star = orthosymplectic_superinvolution(2, 1);
  // e = e_33, e* = e_44, ff* = e_11 + e_22
  Vec<Rational> e = zero_vec<Rational>(A.dim());
  e[2 * 4 + 2] = 1;
  return herm_case_ii("thm5.2.ii2.osp:2,2", A, star, e);
}

MaximalFamily nonss_example_m11() {
  auto A = matrix_superalgebra(1, 1);
  auto J = plus_algebra(A);
  auto B = span_in(J, {basis_sum(J, {0}), basis_sum(J, {3}),
                       basis_sum(J, {1, 2})});
  return make_family("ex4.3", J, B, false,
                     "non-semisimple codimension-1 subalgebra of M_{1,1}+");
}

MaximalFamily nonss_example_osp12() {
  auto h = osp_jordan(1, 1);
  // ambient 3x3 coordinates: E1 = e_11, E2 = e_22+e_33,
  // W = -e_12 + e_13 + e_21 + e_31
  Vec<Rational> e1 = zero_vec<Rational>(9), e2 = zero_vec<Rational>(9),
                w = zero_vec<Rational>(9);
  e1[0] = 1;
  e2[4] = 1;
  e2[8] = 1;
  w[1] = -1;
  w[2] = 1;
  w[3] = 1;
  w[6] = 1;
  auto B = to_h_coords(h, {e1, e2, w});
  return make_family("ex5.3", h.algebra, B, false,
                     "non-semisimple codimension-1 subalgebra of osp(1,2)");
}

MaximalFamily dt_image_family(int m, int which) {
  auto emb = embed_dt(m, which);
  VmModule mod = vm_module(m, m % 2 == 1);
  const int d = 2 * m + 1;
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
  auto star = superinvolution_from_form(A, permute(vm_form(mod).gram));
  auto h = hermitian_part(A, star);
  std::vector<Vec<Rational>> images;
  for (const auto& img : emb.images) images.push_back(permute(img).flattened());
  auto B = to_h_coords(h, images);
  return make_family("q5.1.m:" + std::to_string(m) +
                         (which ? ".tb" : ".ta"),
                     h.algebra, B, true,
                     "D_t image inside the hermitian algebra; maximality open");
}

VerificationReport trace_obstruction(const Superalgebra<Rational>& assoc,
                                     int pairs, std::uint64_t seed) {
  const std::string check = "trace-obstruction(" + assoc.name + ")";
  if (!assoc.realization)
    return VerificationReport::fail(check, "no matrix realization");
  // diagonal idempotents have nonzero trace
  std::vector<int> diag;
  const bool qf = assoc.realization->q_form;
  const int n = qf ? assoc.realization->block_p
                   : assoc.realization->block_p + assoc.realization->block_q;
  for (int i = 0; i < n; ++i) diag.push_back(i * n + i);
  for (unsigned mask = 1; mask < (1u << diag.size()); ++mask) {
    Vec<Rational> e = zero_vec<Rational>(assoc.dim());
    for (std::size_t i = 0; i < diag.size(); ++i)
      if (mask >> i & 1u) e[diag[i]] = 1;
    if (assoc.multiply(e, e) != e)
      return VerificationReport::fail(check, "diagonal sum not idempotent");
    if (is_zero(matrix_trace(assoc, e)))
      return VerificationReport::fail(check, "idempotent with zero trace");
  }
  // u o v is traceless for odd u, v
  std::vector<int> odd = odd_indices(assoc);
  std::mt19937_64 rng(seed);
  const Rational half(1, 2);
  for (int t = 0; t < pairs; ++t) {
    Vec<Rational> u = random_on(odd, assoc.dim(), rng);
    Vec<Rational> v = random_on(odd, assoc.dim(), rng);
    Vec<Rational> uv = assoc.multiply(u, v);
    Vec<Rational> vu = assoc.multiply(v, u);
    Vec<Rational> circ = zero_vec<Rational>(assoc.dim());
    for (int i = 0; i < assoc.dim(); ++i) circ[i] = half * (uv[i] - vu[i]);
    if (!is_zero(matrix_trace(assoc, circ)))
      return VerificationReport::fail(
          check, "odd pair #" + std::to_string(t) + " has nonzero trace");
  }
  return VerificationReport::ok(check);
}

bool glob_match(const std::string& pattern, const std::string& s) {
  // '*' wildcard only
  std::size_t p = 0, i = 0, star = std::string::npos, mark = 0;
  while (i < s.size()) {
    if (p < pattern.size() && (pattern[p] == s[i])) {
      ++p;
      ++i;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = i;
    } else if (star != std::string::npos) {
      p = star + 1;
      i = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::vector<Claim> claims_registry() {
  std::vector<Claim> claims;
  auto add = [&](MaximalFamily (*fn)()) {
    MaximalFamily probe = fn();
    claims.push_back({probe.id, probe.open, false, fn});
  };
  auto add_list = [&](std::vector<MaximalFamily> fams) {
    for (auto& f : fams) {
      auto shared = std::make_shared<MaximalFamily>(std::move(f));
      claims.push_back(
          {shared->id, shared->open, false, [shared] { return *shared; }});
    }
  };
  add_list(easy_maximals_k3(3));
  add_list(easy_maximals_dt(2, 3));
  add_list(easy_maximals_dt(-2, 0));
  add_list(easy_maximals_dt(Rational(-2, 3), 0));
  add_list(easy_maximals_dt(1, 0));
  add(&d1_unit_family);
  add_list(easy_maximals_superform(1, 1, 0, 0));
  add_list(easy_maximals_superform(1, 1, 1, 0));
  add_list(easy_maximals_superform(2, 1, 0, 3));
  add_list(easy_maximals_superform(2, 1, 1, 0));
  add_list({hermitian_maximal_in_plus_transpose(2)});
  add_list({hermitian_maximal_in_plus_osp(1, 1)});
  add_list({assoc_family_1a(1, 1, 1, 0)});
  add_list({assoc_family_1a(2, 1, 1, 0)});
  add_list({assoc_family_1b(2)});
  add_list({assoc_family_2a(2, 1)});
  add_list({assoc_family_2b(2)});
  add_list({assoc_family_2c(2, 1)});
  add_list({herm_family_i1(4, 2)});
  add_list({herm_family_ii1(3)});
  add_list({herm_family_i2()});
  add_list({herm_family_ii2()});
  add(&nonss_example_m11);
  add(&nonss_example_osp12);
  add_list({dt_image_family(2, 0)});
  add_list({dt_image_family(3, 0)});
  // open-question hunters: one-generator subalgebra scans mod 5
  claims.push_back({"q4.3.unique", true, true, [] {
                      auto J = plus_algebra(matrix_superalgebra(1, 1));
                      return MaximalFamily{
                          "q4.3.unique", J,
                          GradedSubspace<Rational>(J.dim(), J.parities), true,
                          "scan hunter"};
                    }});
  claims.push_back({"q5.3.unique", true, true, [] {
                      auto J = osp_jordan(1, 1).algebra;
                      return MaximalFamily{
                          "q5.3.unique", J,
                          GradedSubspace<Rational>(J.dim(), J.parities), true,
                          "scan hunter"};
                    }});
  return claims;
}

RegistryRun run_registry(const std::string& filter,
                         const std::vector<MaximalityOptions>& modes) {
  RegistryRun run;
  for (const auto& claim : claims_registry()) {
    if (!filter.empty() && !glob_match(filter, claim.id)) continue;
    MaximalFamily fam = claim.build();
    if (claim.scan_hunter) {
      ClaimResult r;
      r.id = claim.id;
      r.open = true;
      r.mode = "scan-mod-5";
      r.ambient_dim = fam.ambient.dim();
      auto Jp = reduce_mod_p(fam.ambient, 5);
      auto found = exhaustive_subalgebra_scan_mod_p(
          Jp, GradedSubspace<Fp>(Jp.dim(), Jp.parities), 5);
      r.verdict = Verdict::Inconclusive;
      r.detail = std::to_string(found.size()) +
                 " one-generator proper subalgebras found (evidence only)";
      run.results.push_back(std::move(r));
      continue;
    }
    for (const auto& opt : modes) {
      ClaimResult r;
      r.id = claim.id;
      r.open = claim.open;
      r.ambient_dim = fam.ambient.dim();
      r.sub_even = fam.sub.even_dim();
      r.sub_odd = fam.sub.odd_dim();
      if (opt.mode == MaximalityMode::ExhaustiveModP &&
          fam.ambient.dim() - fam.sub.dim() > 6) {
        r.mode = "exhaustive-mod-" + std::to_string(opt.p);
        r.detail = "skipped: complement too large for exhaustive enumeration";
        run.results.push_back(std::move(r));
        continue;
      }
      try {
        MaximalityReport rep = maximality_check(fam.ambient, fam.sub, opt);
        r.mode = rep.mode;
        r.verdict = rep.verdict;
        r.proof = rep.proof;
        r.tested = rep.tested;
        r.detail = rep.detail;
        if (!rep.witnesses.empty() &&
            rep.verdict == Verdict::CounterexampleFound)
          r.detail += (r.detail.empty() ? "" : "; ") +
                      std::string("witness ") + rep.witnesses.back().vec;
        if (!claim.open && rep.verdict == Verdict::CounterexampleFound) {
          r.ok = false;
          ++run.failed;
        }
      } catch (const bad_prime& ex) {
        r.mode = "exhaustive-mod-" + std::to_string(opt.p);
        r.detail = std::string("skipped: ") + ex.what();
      }
      run.results.push_back(std::move(r));
    }
  }
  return run;
}

}  // namespace sj

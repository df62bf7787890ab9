#ifndef SJ_SUPERALGEBRA_HPP
#define SJ_SUPERALGEBRA_HPP

#include "sj/matrix.hpp"
#include "sj/subspace.hpp"

#include <array>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sj {

struct algebra_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct not_associative : algebra_error {
  using algebra_error::algebra_error;
};
struct not_idempotent : algebra_error {
  using algebra_error::algebra_error;
};
struct not_peirce_decomposable : algebra_error {
  using algebra_error::algebra_error;
};
struct invalid_superinvolution : algebra_error {
  using algebra_error::algebra_error;
};
struct no_realization : algebra_error {
  using algebra_error::algebra_error;
};
struct not_an_ideal : algebra_error {
  using algebra_error::algebra_error;
};

struct VerificationReport {
  std::string check;
  bool pass = true;
  std::string detail;

  static VerificationReport ok(std::string check) { return {std::move(check), true, ""}; }
  static VerificationReport fail(std::string check, std::string detail) {
    return {std::move(check), false, std::move(detail)};
  }
};

// Matrix model of a superalgebra: one matrix per basis element plus the
// block sizes of the grading. q_form marks the Q_n-style grading of
// M_{n,n} (diagonal/antidiagonal blocks) as opposed to the M_{p,q} one.
template <class K>
struct Realization {
  int block_p = 0;
  int block_q = 0;
  bool q_form = false;
  std::vector<Matrix<K>> mats;
};

// A finite dimensional superalgebra given by a graded basis and an exact
// structure-constant tensor, stored sparsely: basis_i basis_j =
// sum_k c[i][j][k] basis_k. Immutable after construction.
template <class K>
class Superalgebra {
 public:
  using Term = std::pair<int, K>;

  Superalgebra() = default;

  std::string name;
  ParityVec parities;
  K one{};

  int dim() const { return static_cast<int>(parities.size()); }
  int parity(int i) const { return parities[i]; }
  int even_dim() const {
    int n = 0;
    for (auto p : parities) n += (p == 0);
    return n;
  }
  int odd_dim() const { return dim() - even_dim(); }

  const std::vector<Term>& prod(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * dim() + j];
  }

  Vec<K> basis_vec(int i) const {
    Vec<K> v = zero_vec<K>(dim());
    v[i] = one;
    return v;
  }

  Vec<K> prod_vec(int i, int j) const {
    Vec<K> v = zero_vec<K>(dim());
    for (const auto& [k, c] : prod(i, j)) v[k] += c;
    return v;
  }

  Vec<K> multiply(const Vec<K>& u, const Vec<K>& v) const {
    if (static_cast<int>(u.size()) != dim() ||
        static_cast<int>(v.size()) != dim())
      throw dimension_mismatch("multiply: element length");
    Vec<K> r = zero_vec<K>(dim());
    for (int i = 0; i < dim(); ++i) {
      if (is_zero(u[i])) continue;
      for (int j = 0; j < dim(); ++j) {
        if (is_zero(v[j])) continue;
        K uv = u[i] * v[j];
        for (const auto& [k, c] : prod(i, j)) r[k] += uv * c;
      }
    }
    return r;
  }

  // Left multiplication operator of a basis element.
  Matrix<K> left_mult_basis(int i) const {
    Matrix<K> m(dim(), dim());
    for (int j = 0; j < dim(); ++j)
      for (const auto& [k, c] : prod(i, j)) m(k, j) += c;
    return m;
  }

  Matrix<K> left_mult(const Vec<K>& u) const {
    Matrix<K> m(dim(), dim());
    for (int i = 0; i < dim(); ++i) {
      if (is_zero(u[i])) continue;
      for (int j = 0; j < dim(); ++j)
        for (const auto& [k, c] : prod(i, j)) m(k, j) += u[i] * c;
    }
    return m;
  }

  // Two-sided identity element, if one exists.
  std::optional<Vec<K>> unit() const {
    const int n = dim();
    Matrix<K> sys(2 * n * n, n);
    Vec<K> rhs = zero_vec<K>(2 * n * n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        for (const auto& [k, c] : prod(i, j)) sys(j * n + k, i) += c;
        for (const auto& [k, c] : prod(j, i))
          sys(n * n + j * n + k, i) += c;
      }
    for (int j = 0; j < n; ++j) {
      rhs[j * n + j] = one;
      rhs[n * n + j * n + j] = one;
    }
    return solve(sys, rhs);
  }

  bool has_realization() const { return realization.has_value(); }
  std::optional<Realization<K>> realization;

  Matrix<K> realize(const Vec<K>& u) const {
    if (!realization) throw no_realization("algebra " + name + " has no matrix realization");
    const auto& mats = realization->mats;
    Matrix<K> m(mats[0].rows(), mats[0].cols());
    for (int i = 0; i < dim(); ++i)
      if (!is_zero(u[i])) m = m + u[i] * mats[i];
    return m;
  }

  template <class K2>
  friend class SuperalgebraBuilderT;

 private:
  std::vector<std::vector<Term>> table_;
};

template <class K>
class SuperalgebraBuilderT {
 public:
  SuperalgebraBuilderT(std::string name, ParityVec parities, K one)
      : name_(std::move(name)), parities_(std::move(parities)),
        one_(std::move(one)),
        table_(parities_.size() * parities_.size()) {}

  int dim() const { return static_cast<int>(parities_.size()); }

  void add(int i, int j, int k, K c) {
    if (is_zero(c)) return;
    if (((parities_[i] + parities_[j]) & 1) != parities_[k])
      throw algebra_error("grading violated in " + name_ + " at (" +
                          std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + ")");
    auto& cell = table_[static_cast<std::size_t>(i) * dim() + j];
    for (auto& [kk, cc] : cell)
      if (kk == k) {
        cc += c;
        return;
      }
    cell.emplace_back(k, std::move(c));
  }

  void set_realization(Realization<K> r) { realization_ = std::move(r); }

  Superalgebra<K> build() {
    Superalgebra<K> a;
    a.name = std::move(name_);
    a.parities = std::move(parities_);
    a.one = std::move(one_);
    for (auto& cell : table_) {
      std::vector<typename Superalgebra<K>::Term> clean;
      for (auto& t : cell)
        if (!is_zero(t.second)) clean.push_back(std::move(t));
      cell = std::move(clean);
    }
    a.table_ = std::move(table_);
    a.realization = std::move(realization_);
    return a;
  }

 private:
  std::string name_;
  ParityVec parities_;
  K one_;
  std::vector<std::vector<typename Superalgebra<K>::Term>> table_;
  std::optional<Realization<K>> realization_;
};

using SuperalgebraBuilder = SuperalgebraBuilderT<Rational>;

namespace detail {
inline int sign_exp(int a, int b) { return (a & b & 1); }
template <class K>
K pm(const K& one, int exp) {
  return (exp & 1) ? K{} - one : one;
}
template <class K>
std::string vec_str(const Vec<K>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << to_string(v[i]);
  os << ")";
  return os.str();
}
}  // namespace detail

// Supercommutativity plus the three equalities among the four operator
// expressions of the graded Jordan identity, verified on all homogeneous
// basis triples as exact operator-matrix identities.
template <class K>
VerificationReport check_jordan_super(const Superalgebra<K>& A) {
  const int n = A.dim();
  const K one = A.one;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec<K> lhs = A.prod_vec(i, j);
      Vec<K> rhs = vec_scaled(A.prod_vec(j, i),
                              detail::pm(one, A.parity(i) * A.parity(j)));
      if (lhs != rhs)
        return VerificationReport::fail(
            "jordan-super(" + A.name + ")",
            "supercommutativity fails on basis pair (" + std::to_string(i) +
                "," + std::to_string(j) + ")");
    }

  // The identity is an equality of operators, i.e. of their values on every
  // basis vector e_d. Structure-constant tables are sparse, so evaluating on
  // quadruples (a,b,c,d) with precomputed triple products e_i(e_j e_k) is far
  // cheaper than composing dense left-multiplication matrices.
  using Term = std::pair<int, K>;
  // TT[i * n * n + j * n + k] = e_i (e_j e_k), sparse
  std::vector<std::vector<Term>> TT(static_cast<std::size_t>(n) * n * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (const auto& [l, c] : A.prod(j, k))
        for (int i = 0; i < n; ++i) {
          auto& dst = TT[(static_cast<std::size_t>(i) * n + j) * n + k];
          for (const auto& [m, cm] : A.prod(i, l)) {
            bool merged = false;
            for (auto& [mi, ci] : dst)
              if (mi == m) {
                ci += c * cm;
                merged = true;
                break;
              }
            if (!merged) dst.emplace_back(m, c * cm);
          }
        }
  auto tt = [&](int i, int j, int k) -> const std::vector<Term>& {
    return TT[(static_cast<std::size_t>(i) * n + j) * n + k];
  };

  const K zero = one - one;
  // (sparse x) * e_b, sparse
  auto rmul = [&](const std::vector<Term>& x, int b) {
    std::vector<Term> out;
    for (const auto& [k, ck] : x)
      for (const auto& [l, cl] : A.prod(k, b)) {
        bool merged = false;
        for (auto& [li, ci] : out)
          if (li == l) {
            ci += ck * cl;
            merged = true;
            break;
          }
        if (!merged) out.emplace_back(l, ck * cl);
      }
    return out;
  };

  // four accumulators with touched-index tracking, reset cheaply per tuple
  std::array<Vec<K>, 4> acc;
  std::array<std::vector<int>, 4> touched;
  for (auto& v : acc) v = zero_vec<K>(n);
  auto bump = [&](int w, int l, const K& c) {
    if (is_zero(acc[w][l])) touched[w].push_back(l);
    acc[w][l] += c;
  };
  // acc[w] += sgn * e_i (e_j s) for a sparse vector s
  auto add_ijs = [&](int w, const K& sgn, int i, int j,
                     const std::vector<Term>& s) {
    for (const auto& [k, ck] : s) {
      K c = sgn * ck;
      for (const auto& [l, cl] : tt(i, j, k)) bump(w, l, c * cl);
    }
  };
  // acc[w] += sgn * x y for sparse vectors x, y
  auto add_pp = [&](int w, const K& sgn, const std::vector<Term>& x,
                    const std::vector<Term>& y) {
    for (const auto& [k, ck] : x)
      for (const auto& [l, cl] : y) {
        K c = sgn * ck * cl;
        for (const auto& [m, cm] : A.prod(k, l)) bump(w, m, c * cm);
      }
  };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int ab = detail::sign_exp(A.parity(a), A.parity(b));
        const int ac = detail::sign_exp(A.parity(a), A.parity(c));
        const int bc = detail::sign_exp(A.parity(b), A.parity(c));
        const K s_abacbc = detail::pm(one, ab + ac + bc);
        const K s_bc = detail::pm(one, bc);
        const K s_abac = detail::pm(one, ab + ac);
        const K s_ab = detail::pm(one, ab);
        const K s_acbc = detail::pm(one, ac + bc);
        const std::vector<Term> acb = rmul(A.prod(a, c), b);
        for (int d = 0; d < n; ++d) {
          const auto& cd = A.prod(c, d);
          const auto& bd = A.prod(b, d);
          const auto& ad = A.prod(a, d);
          const auto& abp = A.prod(a, b);
          const auto& acp = A.prod(a, c);
          const auto& bcp = A.prod(b, c);
          std::vector<Term> basis_d = {{d, one}};
          // E1 = a(b(cd)) + (-1)^{ab+ac+bc} c(b(ad)) + (-1)^{bc} ((ac)b)d
          add_ijs(0, one, a, b, cd);
          add_ijs(0, s_abacbc, c, b, ad);
          add_pp(0, s_bc, acb, basis_d);
          // E2 = (ab)(cd) + (-1)^{bc} (ac)(bd) + (-1)^{ab+ac} (bc)(ad)
          add_pp(1, one, abp, cd);
          add_pp(1, s_bc, acp, bd);
          add_pp(1, s_abac, bcp, ad);
          // E3 = (-1)^{ab} b(a(cd)) + (-1)^{ac+bc} c(a(bd)) + (a(bc))d
          add_ijs(2, s_ab, b, a, cd);
          add_ijs(2, s_acbc, c, a, bd);
          add_pp(2, one, tt(a, b, c), basis_d);
          // E4 = (-1)^{ac+bc} c((ab)d) + (-1)^{ab} b((ac)d) + a((bc)d)
          for (const auto& [k, ck] : abp) add_ijs(3, s_acbc * ck, c, k, basis_d);
          for (const auto& [k, ck] : acp) add_ijs(3, s_ab * ck, b, k, basis_d);
          for (const auto& [k, ck] : bcp) add_ijs(3, ck, a, k, basis_d);
          // compare and reset
          bool bad = false;
          int bad_pair = 0;
          for (int w = 1; w < 4 && !bad; ++w) {
            for (int l : touched[0])
              if (acc[0][l] != acc[w][l]) {
                bad = true;
                bad_pair = w;
                break;
              }
            for (int l : touched[w])
              if (acc[0][l] != acc[w][l]) {
                bad = true;
                bad_pair = w;
                break;
              }
          }
          for (int w = 0; w < 4; ++w) {
            for (int l : touched[w]) acc[w][l] = zero;
            touched[w].clear();
          }
          if (bad)
            return VerificationReport::fail(
                "jordan-super(" + A.name + ")",
                "operator identity (rows 1=" + std::to_string(bad_pair + 1) +
                    ") fails on triple (" + std::to_string(a) + "," +
                    std::to_string(b) + "," + std::to_string(c) +
                    ") applied to basis vector " + std::to_string(d));
        }
      }
  return VerificationReport::ok("jordan-super(" + A.name + ")");
}

template <class K>
VerificationReport check_associative(const Superalgebra<K>& A) {
  const int n = A.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec<K> ij = A.prod_vec(i, j);
      for (int k = 0; k < n; ++k) {
        Vec<K> lhs = A.multiply(ij, A.basis_vec(k));
        Vec<K> rhs = A.multiply(A.basis_vec(i), A.prod_vec(j, k));
        if (lhs != rhs)
          return VerificationReport::fail(
              "associative(" + A.name + ")",
              "(ab)c != a(bc) on triple (" + std::to_string(i) + "," +
                  std::to_string(j) + "," + std::to_string(k) + ")");
      }
    }
  return VerificationReport::ok("associative(" + A.name + ")");
}

// A^+ : same graded space, product x o y = (xy + (-1)^{xy} yx)/2.
template <class K>
Superalgebra<K> plus_algebra(const Superalgebra<K>& A) {
  auto assoc = check_associative(A);
  if (!assoc.pass) throw not_associative("plus_algebra: " + assoc.detail);
  const int n = A.dim();
  const K one = A.one;
  const K half = one / (one + one);
  SuperalgebraBuilderT<K> b(A.name + "+", A.parities, one);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      K s = detail::pm(one, A.parity(i) * A.parity(j));
      for (const auto& [k, c] : A.prod(i, j)) b.add(i, j, k, half * c);
      for (const auto& [k, c] : A.prod(j, i)) b.add(i, j, k, half * s * c);
    }
  if (A.realization) b.set_realization(*A.realization);
  return b.build();
}

// Parity-preserving involutive sign-twisted anti-automorphism of an
// associative superalgebra, stored as its matrix on the basis.
template <class K>
struct Superinvolution {
  std::string name;
  Matrix<K> map;

  Vec<K> apply(const Vec<K>& v) const { return map.apply(v); }
};

template <class K>
VerificationReport check_superinvolution(const Superalgebra<K>& A,
                                         const Superinvolution<K>& s) {
  const int n = A.dim();
  const K one = A.one;
  const std::string check = "superinvolution(" + s.name + " on " + A.name + ")";
  if (s.map.rows() != n || s.map.cols() != n)
    return VerificationReport::fail(check, "map shape mismatch");
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (!is_zero(s.map(i, j)) && A.parity(i) != A.parity(j))
        return VerificationReport::fail(check, "map is not parity-preserving");
  if (s.map * s.map != Matrix<K>::identity(n, one))
    return VerificationReport::fail(check, "map is not involutive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec<K> lhs = s.apply(A.prod_vec(i, j));
      Vec<K> rhs = vec_scaled(
          A.multiply(s.apply(A.basis_vec(j)), s.apply(A.basis_vec(i))),
          detail::pm(one, A.parity(i) * A.parity(j)));
      if (lhs != rhs)
        return VerificationReport::fail(
            check, "(xy)* != (-1)^{xy} y*x* on basis pair (" +
                       std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return VerificationReport::ok(check);
}

// Graded linear map between superalgebras, columns = images of the source
// basis, with an optional parity shift.
template <class K>
struct GradedLinearMap {
  Matrix<K> mat;  // target.dim x source.dim
  int parity_shift = 0;

  Vec<K> apply(const Vec<K>& v) const { return mat.apply(v); }
  Vec<K> image_of_basis(int i) const {
    Vec<K> r(mat.rows());
    for (int k = 0; k < mat.rows(); ++k) r[k] = mat(k, i);
    return r;
  }
};

template <class K>
VerificationReport check_graded_hom(const Superalgebra<K>& src,
                                    const Superalgebra<K>& tgt,
                                    const GradedLinearMap<K>& phi,
                                    bool require_unital = false) {
  const std::string check = "graded-hom(" + src.name + " -> " + tgt.name + ")";
  if (phi.mat.cols() != src.dim() || phi.mat.rows() != tgt.dim())
    return VerificationReport::fail(check, "map shape mismatch");
  for (int i = 0; i < src.dim(); ++i) {
    int want = (src.parity(i) + phi.parity_shift) & 1;
    for (int k = 0; k < tgt.dim(); ++k)
      if (!is_zero(phi.mat(k, i)) && tgt.parity(k) != want)
        return VerificationReport::fail(
            check, "grading violated at basis " + std::to_string(i));
  }
  for (int i = 0; i < src.dim(); ++i)
    for (int j = 0; j < src.dim(); ++j) {
      Vec<K> lhs = phi.apply(src.prod_vec(i, j));
      Vec<K> rhs = tgt.multiply(phi.image_of_basis(i), phi.image_of_basis(j));
      if (lhs != rhs)
        return VerificationReport::fail(
            check, "phi(ab) != phi(a)phi(b) on basis pair (" +
                       std::to_string(i) + "," + std::to_string(j) + ")");
    }
  if (require_unital) {
    auto su = src.unit();
    auto tu = tgt.unit();
    if (!su || !tu)
      return VerificationReport::fail(check, "unital check on non-unital algebra");
    if (phi.apply(*su) != *tu)
      return VerificationReport::fail(check, "unit is not preserved");
  }
  return VerificationReport::ok(check);
}

// Builds a superalgebra from a closed independent list of matrices; the
// structure constants are recovered exactly by expressing pairwise products
// in the given basis.
template <class K>
Superalgebra<K> superalgebra_from_matrices(const std::string& name,
                                           const std::vector<Matrix<K>>& mats,
                                           const ParityVec& parities,
                                           const K& one, int block_p,
                                           int block_q, bool q_form) {
  const int n = static_cast<int>(mats.size());
  if (n == 0) throw algebra_error("empty matrix basis");
  const int ambient = mats[0].rows() * mats[0].cols();
  std::vector<Vec<K>> flats;
  flats.reserve(n);
  for (const auto& m : mats) flats.push_back(m.flattened());
  CoordSolver<K> solver(flats, ambient, one);
  if (solver.rank() != n)
    throw algebra_error(name + ": matrix basis is linearly dependent");
  SuperalgebraBuilderT<K> b(name, parities, one);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix<K> pm = mats[i] * mats[j];
      auto coords = solver.express(pm.flattened());
      if (!coords)
        throw algebra_error(name + ": matrix basis is not closed under products");
      for (int k = 0; k < n; ++k)
        if (!is_zero((*coords)[k])) b.add(i, j, k, (*coords)[k]);
    }
  Realization<K> r;
  r.block_p = block_p;
  r.block_q = block_q;
  r.q_form = q_form;
  r.mats = mats;
  b.set_realization(std::move(r));
  return b.build();
}

template <class K>
struct SubalgebraView {
  Superalgebra<K> algebra;
  GradedLinearMap<K> inclusion;  // view coords -> ambient coords
};

// A product-closed graded subspace as a superalgebra in its own coordinates.
template <class K>
SubalgebraView<K> subalgebra_view(const Superalgebra<K>& J,
                                  const GradedSubspace<K>& S,
                                  const std::string& name) {
  std::vector<Vec<K>> basis = S.basis();
  const int d = static_cast<int>(basis.size());
  ParityVec par(d);
  for (int i = 0; i < d; ++i)
    par[i] = static_cast<std::uint8_t>(vector_parity(basis[i], J.parities));
  CoordSolver<K> solver(basis, J.dim(), J.one);
  SuperalgebraBuilderT<K> b(name, par, J.one);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto coords = solver.express(J.multiply(basis[i], basis[j]));
      if (!coords) throw algebra_error(name + ": span is not product-closed");
      for (int k = 0; k < d; ++k)
        if (!is_zero((*coords)[k])) b.add(i, j, k, (*coords)[k]);
    }
  if (J.realization) {
    Realization<K> r;
    r.block_p = J.realization->block_p;
    r.block_q = J.realization->block_q;
    r.q_form = J.realization->q_form;
    for (int i = 0; i < d; ++i) r.mats.push_back(J.realize(basis[i]));
    b.set_realization(std::move(r));
  }
  GradedLinearMap<K> incl;
  incl.mat = Matrix<K>(J.dim(), d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < J.dim(); ++k) incl.mat(k, i) = basis[i][k];
  return {b.build(), std::move(incl)};
}

template <class K>
struct HermitianPart {
  Superalgebra<K> algebra;           // H(A,*) with the A^+ product
  GradedLinearMap<K> inclusion;      // H -> A^+ coordinates
  GradedSubspace<K> fixed;           // image of H in A
  GradedSubspace<K> skew;            // the skew complement
};

// Fixed subspace of a superinvolution as a Jordan subalgebra of A^+.
template <class K>
HermitianPart<K> hermitian_part(const Superalgebra<K>& A,
                                const Superinvolution<K>& s) {
  auto rep = check_superinvolution(A, s);
  if (!rep.pass) throw invalid_superinvolution(rep.detail);
  const int n = A.dim();
  const K one = A.one;
  const K half = one / (one + one);
  Matrix<K> id = Matrix<K>::identity(n, one);

  auto graded_from_nullspace = [&](const Matrix<K>& m) {
    RowSpan<K> span(n);
    for (auto& v : nullspace(m, one)) span.add(std::move(v));
    auto g = graded_split(span, A.parities);
    if (!g) throw invalid_superinvolution("eigenspace of * is not graded");
    return *g;
  };
  GradedSubspace<K> fixed = graded_from_nullspace(s.map - id);
  GradedSubspace<K> skew = graded_from_nullspace(s.map + id);

  std::vector<Vec<K>> hbasis = fixed.basis();
  const int h = static_cast<int>(hbasis.size());
  ParityVec hpar(h);
  for (int i = 0; i < h; ++i)
    hpar[i] = static_cast<std::uint8_t>(vector_parity(hbasis[i], A.parities));

  CoordSolver<K> solver(hbasis, n, one);
  SuperalgebraBuilderT<K> b("H(" + A.name + "," + s.name + ")", hpar, one);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      K sg = detail::pm(one, hpar[i] * hpar[j]);
      Vec<K> xy = A.multiply(hbasis[i], hbasis[j]);
      Vec<K> yx = A.multiply(hbasis[j], hbasis[i]);
      Vec<K> circ = zero_vec<K>(n);
      for (int k = 0; k < n; ++k) circ[k] = half * (xy[k] + sg * yx[k]);
      auto coords = solver.express(circ);
      if (!coords)
        throw invalid_superinvolution("hermitian part is not product-closed");
      for (int k = 0; k < h; ++k)
        if (!is_zero((*coords)[k])) b.add(i, j, k, (*coords)[k]);
    }
  if (A.realization) {
    Realization<K> r;
    r.block_p = A.realization->block_p;
    r.block_q = A.realization->block_q;
    r.q_form = A.realization->q_form;
    for (int i = 0; i < h; ++i) r.mats.push_back(A.realize(hbasis[i]));
    b.set_realization(std::move(r));
  }
  GradedLinearMap<K> incl;
  incl.mat = Matrix<K>(n, h);
  for (int i = 0; i < h; ++i)
    for (int k = 0; k < n; ++k) incl.mat(k, i) = hbasis[i][k];
  return {b.build(), std::move(incl), std::move(fixed), std::move(skew)};
}

template <class K>
struct PeirceDecomposition {
  GradedSubspace<K> one_part;   // J_1(e)
  GradedSubspace<K> half_part;  // J_{1/2}(e)
  GradedSubspace<K> zero_part;  // J_0(e)
};

// Eigenspaces of L_e for eigenvalues 1, 1/2, 0. Any other spectrum is an
// error, matching the idempotent Peirce theory the construction relies on.
template <class K>
PeirceDecomposition<K> peirce_decompose(const Superalgebra<K>& J,
                                        const Vec<K>& e) {
  const K one = J.one;
  const K half = one / (one + one);
  if (vector_parity(e, J.parities) != 0)
    throw not_idempotent("peirce: idempotent must be even");
  if (J.multiply(e, e) != e) throw not_idempotent("peirce: e*e != e");
  Matrix<K> Le = J.left_mult(e);
  Matrix<K> id = Matrix<K>::identity(J.dim(), one);

  auto eigenspace = [&](const K& lambda) {
    RowSpan<K> span(J.dim());
    for (auto& v : nullspace(Le - lambda * id, one)) span.add(std::move(v));
    auto g = graded_split(span, J.parities);
    if (!g) throw not_peirce_decomposable("peirce eigenspace is not graded");
    return *g;
  };
  PeirceDecomposition<K> d{eigenspace(one), eigenspace(half), eigenspace(K{})};
  if (d.one_part.dim() + d.half_part.dim() + d.zero_part.dim() != J.dim())
    throw not_peirce_decomposable(
        "L_e has eigenvalues outside {0, 1/2, 1} in " + J.name);
  return d;
}

template <class K>
bool is_graded_ideal(const Superalgebra<K>& J, const GradedSubspace<K>& S) {
  for (const auto& s : S.basis())
    for (int i = 0; i < J.dim(); ++i) {
      if (!S.contains(J.multiply(J.basis_vec(i), s))) return false;
      if (!S.contains(J.multiply(s, J.basis_vec(i)))) return false;
    }
  return true;
}

// Least k with S^k = 0 where S^k = sum_{i+j=k} S^i S^j; nullopt if S is not
// nilpotent within dim+1 steps.
template <class K>
std::optional<int> nilpotency_index(const Superalgebra<K>& J,
                                    const GradedSubspace<K>& S) {
  if (!is_graded_ideal(J, S)) throw not_an_ideal("nilpotency_index: not a graded ideal");
  if (S.dim() == 0) return 1;
  std::vector<RowSpan<K>> pw;
  pw.emplace_back(J.dim());  // unused slot 0
  RowSpan<K> s1(J.dim());
  for (const auto& v : S.basis()) s1.add(v);
  pw.push_back(s1);
  for (int k = 2; k <= J.dim() + 1; ++k) {
    RowSpan<K> sk(J.dim());
    for (int i = 1; i < k; ++i)
      for (const auto& x : pw[i].rows())
        for (const auto& y : pw[k - i].rows()) sk.add(J.multiply(x, y));
    if (sk.dim() == 0) return k;
    pw.push_back(std::move(sk));
  }
  return std::nullopt;
}

template <class K>
K matrix_trace(const Superalgebra<K>& A, const Vec<K>& u) {
  return A.realize(u).trace();
}

// Even part of G  (x)  J with the super sign rule; G must be the Grassmann
// algebra (or any associative supercommutative superalgebra).
template <class K>
Superalgebra<K> grassmann_envelope(const Superalgebra<K>& G,
                                   const Superalgebra<K>& J) {
  const K one = J.one;
  std::vector<std::pair<int, int>> basis;  // (g index, a index), equal parity
  std::vector<std::vector<int>> index(G.dim(), std::vector<int>(J.dim(), -1));
  for (int g = 0; g < G.dim(); ++g)
    for (int a = 0; a < J.dim(); ++a)
      if (G.parity(g) == J.parity(a)) {
        index[g][a] = static_cast<int>(basis.size());
        basis.emplace_back(g, a);
      }
  ParityVec par(basis.size(), 0);
  SuperalgebraBuilderT<K> b("G(" + J.name + ")", par, one);
  for (std::size_t x = 0; x < basis.size(); ++x)
    for (std::size_t y = 0; y < basis.size(); ++y) {
      auto [g, a] = basis[x];
      auto [h, bb] = basis[y];
      K sign = detail::pm(one, J.parity(a) * G.parity(h));
      for (const auto& [gh, cg] : G.prod(g, h))
        for (const auto& [ab, ca] : J.prod(a, bb)) {
          int k = index[gh][ab];
          if (k < 0)
            throw algebra_error("grassmann envelope: product left the even part");
          b.add(static_cast<int>(x), static_cast<int>(y), k, sign * cg * ca);
        }
    }
  return b.build();
}

// Commutativity and the ordinary Jordan identity (x y)(x x) = x (y (x x))
// on the even envelope: all basis pairs, then `random_pairs` seeded random
// small-coordinate pairs.
template <class K>
VerificationReport envelope_jordan_check(const Superalgebra<K>& env,
                                         int random_pairs,
                                         std::uint64_t seed) {
  const int n = env.dim();
  const std::string check = "envelope-jordan(" + env.name + ")";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (env.prod_vec(i, j) != env.prod_vec(j, i))
        return VerificationReport::fail(
            check, "envelope not commutative on basis pair (" +
                       std::to_string(i) + "," + std::to_string(j) + ")");
  auto jordan_ok = [&](const Vec<K>& x, const Vec<K>& y) {
    Vec<K> xx = env.multiply(x, x);
    return env.multiply(env.multiply(x, y), xx) ==
           env.multiply(x, env.multiply(y, xx));
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!jordan_ok(env.basis_vec(i), env.basis_vec(j)))
        return VerificationReport::fail(
            check, "(xy)(xx) != x(y(xx)) on basis pair (" + std::to_string(i) +
                       "," + std::to_string(j) + ")");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  auto random_vec = [&] {
    Vec<K> v = zero_vec<K>(n);
    for (int k = 0; k < n; ++k) {
      int c = coeff(rng);
      if (c > 0)
        for (int t = 0; t < c; ++t) v[k] += env.one;
      else
        for (int t = 0; t < -c; ++t) v[k] -= env.one;
    }
    return v;
  };
  for (int t = 0; t < random_pairs; ++t) {
    Vec<K> x = random_vec();
    Vec<K> y = random_vec();
    if (!jordan_ok(x, y))
      return VerificationReport::fail(
          check, "(xy)(xx) != x(y(xx)) on random pair #" + std::to_string(t) +
                     " x=" + detail::vec_str(x) + " y=" + detail::vec_str(y));
  }
  return VerificationReport::ok(check);
}

// Mod-p image of a rational superalgebra; throws bad_prime if any structure
// constant has a denominator divisible by p.
inline Superalgebra<Fp> reduce_mod_p(const Superalgebra<Rational>& A,
                                     long long p) {
  SuperalgebraBuilderT<Fp> b(A.name + " mod " + std::to_string(p), A.parities,
                             Fp(1, p));
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j)
      for (const auto& [k, c] : A.prod(i, j))
        b.add(i, j, k, reduce_mod_p(c, p));
  if (A.realization) {
    Realization<Fp> r;
    r.block_p = A.realization->block_p;
    r.block_q = A.realization->block_q;
    r.q_form = A.realization->q_form;
    for (const auto& m : A.realization->mats) {
      Matrix<Fp> mm(m.rows(), m.cols());
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
          if (!is_zero(m(i, j))) mm(i, j) = reduce_mod_p(m(i, j), p);
      r.mats.push_back(std::move(mm));
    }
    b.set_realization(std::move(r));
  }
  return b.build();
}

}  // namespace sj

#endif

#ifndef SJ_OSP_HPP
#define SJ_OSP_HPP

#include "sj/catalog.hpp"
#include "sj/generation.hpp"
#include "sj/superalgebra.hpp"

namespace sj {

struct bad_parameter : algebra_error {
  using algebra_error::algebra_error;
};

// The five-dimensional Lie superalgebra with basis h, e, f | x, y; the
// bracket is stored as a (non-Jordan) product table, together with its 3x3
// matrix realization inside M_{1,2}.
struct OspAlgebra {
  Superalgebra<Rational> bracket;       // indices 0:h 1:e 2:f 3:x 4:y
  std::vector<Matrix<Rational>> mats;   // same order, 3x3
  static constexpr const char* labels[5] = {"h", "e", "f", "x", "y"};
};

OspAlgebra osp12();

// super-anticommutativity and the super Jacobi identity on all basis triples
VerificationReport check_lie_super(const Superalgebra<Rational>& g);

// Irreducible module of dimension 2m+1; basis e_0..e_2m, parity i mod 2
// (flipped when opposite_parity).
struct VmModule {
  int m = 0;
  bool opposite_parity = false;
  ParityVec parities;
  Matrix<Rational> rho_h, rho_e, rho_f, rho_x, rho_y;

  int dim() const { return 2 * m + 1; }
  const Matrix<Rational>& rho(int osp_index) const {
    switch (osp_index) {
      case 0: return rho_h;
      case 1: return rho_e;
      case 2: return rho_f;
      case 3: return rho_x;
      default: return rho_y;
    }
  }
};

VmModule vm_module(int m, bool opposite_parity = false);

// rho_{[a,b]} = rho_a rho_b - (-1)^{ab} rho_b rho_a on all basis pairs
VerificationReport check_rep(const VmModule& mod);

// monic minimal polynomial of rho_x rho_y - rho_y rho_x, ascending coeffs
std::vector<Rational> minimal_poly_xyyx(const VmModule& mod);

std::vector<Rational> minimal_poly(const Matrix<Rational>& t);

struct InvariantForm {
  Matrix<Rational> gram;
};

// The invariant even bilinear form of V(m) (primed variant when the module
// carries the opposite parity).
InvariantForm vm_form(const VmModule& mod);

// (zv|w) = (-1)^{|v|} (v|zw) for z, as the matrix identity
// rho_z^T G = P G rho_z with P the parity sign matrix.
bool form_supersymmetric_for(const VmModule& mod, const InvariantForm& form,
                             const Matrix<Rational>& rho_z);
// (zv|w) = -(v|zw), i.e. rho_z^T G = -G rho_z.
bool form_skew_for(const InvariantForm& form, const Matrix<Rational>& rho_z);

// dimension of the space of even Gram matrices making rho_x, rho_y
// supersymmetric; 1 = the form is unique up to scalar
int form_solution_space_dim(const VmModule& mod);

struct DtEmbedding {
  Rational t;
  VmModule module;
  std::vector<int> perm;        // sorted index -> natural index
  Superalgebra<Rational> target;  // End(V(m))^+ as M_{p,q}^+ in sorted basis
  GradedLinearMap<Rational> map;  // D_t -> target
  std::vector<Matrix<Rational>> images;  // e, f, u, v on the natural basis
};

// which = 0 picks t = -m/(m+1), which = 1 picks t = -(m+1)/m
DtEmbedding embed_dt(int m, int which);

struct EmbeddingClaims {
  VerificationReport report;
  int closure_dim = 0;
  bool hermitian = false;
};

EmbeddingClaims verify_embedding_claims(int m, int which);

// In Q_n^+ with the block idempotent e of rank s: sample seeded odd vectors
// u, v in the Peirce-1/2 space and certify the associative closure of
// {e, f, u, v} stays proper.
VerificationReport peirce_obstruction_qn(int n, int s,
                                         std::uint64_t seed = kDefaultSeed);

}  // namespace sj

#endif

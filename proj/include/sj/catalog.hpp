#ifndef SJ_CATALOG_HPP
#define SJ_CATALOG_HPP

#include "sj/superalgebra.hpp"

#include <string>
#include <vector>

namespace sj {

struct catalog_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- simple Jordan superalgebras ---
Superalgebra<Rational> kaplansky();                       // K3, dim 1|2
Superalgebra<Rational> d_t(const Rational& t);            // D_t, dim 2|2
Superalgebra<Rational> superform_algebra(int p, int q);   // F1 + V, dim (1+p)|2q
Superalgebra<Rational> matrix_superalgebra(int p, int q); // associative M_{p,q}
Superalgebra<Rational> q_n(int n);                        // associative Q_n in M_{n,n}
Superalgebra<Rational> grassmann(int n);                  // associative, dim 2^n
Superalgebra<Rational> kantor_double(int n);              // J = G(n) + G(n)x
Superalgebra<Rational> unital_hull(const Superalgebra<Rational>& j);

// --- superinvolutions of matrix superalgebras ---
Superinvolution<Rational> transpose_superinvolution(int n);          // on M_{n,n}
Superinvolution<Rational> orthosymplectic_superinvolution(int n, int m);  // on M_{n,2m}

// Adjoint superinvolution f -> G^{-1} D fT G of a bilinear form with Gram
// matrix G on the ambient column space of the realization.
Superinvolution<Rational> superinvolution_from_form(
    const Superalgebra<Rational>& a, const Matrix<Rational>& gram);

// H(M_{n,n}, transpose) and H(M_{n,2m}, orthosymplectic) as Jordan
// superalgebras with matrix realizations.
HermitianPart<Rational> p_jordan(int n);
HermitianPart<Rational> osp_jordan(int n, int m);

// --- exact isomorphism fixtures ---
struct IsoFixture {
  std::string name;
  Superalgebra<Rational> src;
  Superalgebra<Rational> tgt;
  GradedLinearMap<Rational> map;
};

IsoFixture fixture_d1_superform();      // D_1 ~ superform(1,1)
IsoFixture fixture_dm1_m11plus();       // D_{-1} ~ M_{1,1}^+
IsoFixture fixture_dm2_osp12();         // D_{-2} ~ osp_{1,2}
IsoFixture fixture_dt_dinv(const Rational& t);  // D_t ~ D_{1/t}
std::vector<IsoFixture> all_iso_fixtures();

// --- deliberately broken structure tables for negative testing ---
std::vector<Superalgebra<Rational>> corrupted_fixtures();

// Even part of G(n_env) (x) J, checked for commutativity and the Jordan
// identity on basis pairs plus seeded random pairs.
VerificationReport grassmann_envelope_check(const Superalgebra<Rational>& j,
                                            int n_env = 2,
                                            int random_pairs = 200,
                                            std::uint64_t seed = 1);

// Grammar: K3 | Dt:<rational> | superform:p,q | M:p,q | Q:n | grassmann:n |
// kantor:n | p:n | osp:n,m | hull:<spec>
Superalgebra<Rational> build_catalog(const std::string& spec);
std::vector<std::string> catalog_names();

}  // namespace sj

#endif

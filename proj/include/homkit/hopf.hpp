#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "homkit/linalg.hpp"
#include "homkit/report.hpp"

namespace homkit {

// (A, alpha, m, eta): multiplication and unit with alpha-twisted
// associativity alpha(a)(bc) = (ab)alpha(c) and weak unit a1 = 1a = alpha(a).
struct HomAlgebra {
  std::size_t dim = 0;
  Tensor3 mul;   // mul[i][j][k]: coeff of e_k in e_i e_j
  Vec unit;      // image of 1
  Matrix alpha;  // invertible, multiplicative, unital
};

// (C, gamma, Delta, eps) with gamma-twisted coassociativity and weak counit.
struct HomCoalgebra {
  std::size_t dim = 0;
  Tensor3 comul;  // comul[i][j][k]: coeff of e_j (x) e_k in Delta(e_i)
  Vec counit;     // covector
  Matrix gamma;
};

// Algebra and coalgebra on the same space, sharing one automorphism.
struct HomBialgebra {
  HomAlgebra algebra;
  HomCoalgebra coalgebra;
};

struct VerifyOptions {
  bool stop_on_failure = false;
};

// The septuple (H, alpha, m, eta, Delta, eps, S). Inverses of alpha and S
// are precomputed when they exist; a singular alpha or S is representable
// so that broken structures can still be fed to the verifiers.
class HomHopfAlgebra {
 public:
  HomHopfAlgebra(HomBialgebra bi, Matrix antipode);

  std::size_t dim() const { return bi_.algebra.dim; }
  const FieldSpec& field() const { return bi_.algebra.alpha.field(); }
  const HomBialgebra& bialgebra() const { return bi_; }
  const Tensor3& mul() const { return bi_.algebra.mul; }
  const Vec& unit() const { return bi_.algebra.unit; }
  const Tensor3& comul() const { return bi_.coalgebra.comul; }
  const Vec& counit() const { return bi_.coalgebra.counit; }
  const Matrix& alpha() const { return bi_.algebra.alpha; }
  const Matrix& antipode() const { return antipode_; }

  bool alpha_invertible() const { return alpha_inv_.has_value(); }
  const Matrix& alpha_inv() const;  // throws Error(singular) when absent
  bool antipode_invertible() const { return antipode_inv_.has_value(); }
  const Matrix& antipode_inv() const;  // throws Error(singular) when absent

  Scalar eps(const Vec& v) const;  // counit evaluation

  // Full axiom verification, lazily computed once and cached.
  const VerificationReport& verification() const;
  bool is_verified() const { return verification().all_pass(); }
  void require_verified(const char* who) const;

 private:
  HomBialgebra bi_;
  Matrix antipode_;
  std::optional<Matrix> alpha_inv_;
  std::optional<Matrix> antipode_inv_;

  struct VerifyCache {
    std::once_flag once;
    std::optional<VerificationReport> report;
  };
  std::shared_ptr<VerifyCache> verify_cache_;
};

VerificationReport verify_hom_algebra(const HomAlgebra& a, const VerifyOptions& opt = {});
VerificationReport verify_hom_coalgebra(const HomCoalgebra& c, const VerifyOptions& opt = {});
VerificationReport verify_hom_bialgebra(const HomBialgebra& b, const VerifyOptions& opt = {});
VerificationReport verify_hom_hopf(const HomHopfAlgebra& h, const VerifyOptions& opt = {});

// Twist of a classical Hopf algebra (alpha = id) along a bialgebra
// automorphism commuting with S: multiplication becomes aut o m, the
// comultiplication Delta o aut^{-1}. Preconditions are checked and
// violations reported as distinct input errors.
HomHopfAlgebra yau_twist(const HomHopfAlgebra& classical, const Matrix& aut);

// m o (f (x) g) o Delta
Matrix convolution(const Matrix& f, const Matrix& g, const HomHopfAlgebra& h);

// Matrix inverse of S; throws Error(singular) when S is not bijective,
// which downstream code reports as "braiding inverse unavailable".
Matrix antipode_inverse(const HomHopfAlgebra& h);

// Right adjoint action g <| h = (S(h_1) alpha^{-1}(g)) alpha(h_2),
// returned as an action tensor t[g][h][k].
Tensor3 adjoint_right(const HomHopfAlgebra& h);
// Left adjoint action h |> g = alpha(h_1) (alpha^{-1}(g) S(h_2)),
// returned as an action tensor t[h][g][k].
Tensor3 adjoint_left(const HomHopfAlgebra& h);

}  // namespace homkit

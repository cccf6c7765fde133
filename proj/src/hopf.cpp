#include "homkit/hopf.hpp"

#include <array>

namespace homkit {

namespace {

void require_shapes(const HomAlgebra& a) {
  std::size_t d = a.dim;
  bool ok = a.mul.d0() == d && a.mul.d1() == d && a.mul.d2() == d && a.unit.size() == d &&
            a.alpha.rows() == d && a.alpha.cols() == d;
  if (!ok) throw Error(Error::Kind::input, "hom-algebra shape mismatch");
}

void require_shapes(const HomCoalgebra& c) {
  std::size_t d = c.dim;
  bool ok = c.comul.d0() == d && c.comul.d1() == d && c.comul.d2() == d &&
            c.counit.size() == d && c.gamma.rows() == d && c.gamma.cols() == d;
  if (!ok) throw Error(Error::Kind::input, "hom-coalgebra shape mismatch");
}

// (A (x) B) v for sparse v, evaluated column-by-column
Vec apply_pair(const Matrix& a, const Matrix& b, const Vec& v) {
  Vec out = zero_vec(a.rows() * b.rows(), a.field());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const Scalar& c = v[i * b.cols() + j];
      if (c.is_zero()) continue;
      Vec t = tensor2(a.col(i), b.col(j));
      vec_axpy(out, c, t);
    }
  }
  return out;
}

}  // namespace

HomHopfAlgebra::HomHopfAlgebra(HomBialgebra bi, Matrix antipode)
    : bi_(std::move(bi)), antipode_(std::move(antipode)),
      verify_cache_(std::make_shared<VerifyCache>()) {
  require_shapes(bi_.algebra);
  require_shapes(bi_.coalgebra);
  if (bi_.algebra.dim != bi_.coalgebra.dim ||
      antipode_.rows() != bi_.algebra.dim || antipode_.cols() != bi_.algebra.dim) {
    throw Error(Error::Kind::input, "hom-hopf shape mismatch");
  }
  alpha_inv_ = bi_.algebra.alpha.inverse();
  antipode_inv_ = antipode_.inverse();
}

const Matrix& HomHopfAlgebra::alpha_inv() const {
  if (!alpha_inv_) throw Error(Error::Kind::singular, "alpha is not invertible");
  return *alpha_inv_;
}

const Matrix& HomHopfAlgebra::antipode_inv() const {
  if (!antipode_inv_) {
    throw Error(Error::Kind::singular,
                "antipode is not invertible: braiding inverses unavailable");
  }
  return *antipode_inv_;
}

Scalar HomHopfAlgebra::eps(const Vec& v) const {
  Scalar s = Scalar::zero(field());
  for (std::size_t i = 0; i < v.size(); ++i) s.add_mul(counit()[i], v[i]);
  return s;
}

const VerificationReport& HomHopfAlgebra::verification() const {
  std::call_once(verify_cache_->once,
                 [this] { verify_cache_->report = verify_hom_hopf(*this); });
  return *verify_cache_->report;
}

void HomHopfAlgebra::require_verified(const char* who) const {
  if (!is_verified()) {
    throw Error(Error::Kind::precondition,
                std::string(who) + " requires a verified Hom-Hopf algebra");
  }
}

VerificationReport verify_hom_algebra(const HomAlgebra& a, const VerifyOptions& opt) {
  require_shapes(a);
  VerificationReport rep;
  rep.stop_on_failure = opt.stop_on_failure;
  std::size_t d = a.dim;
  const FieldSpec& f = a.alpha.field();
  std::optional<Matrix> alpha_inv = a.alpha.inverse();

  if (alpha_inv) {
    rep.add_pass("alpha_invertible");
  } else {
    rep.add_fail("alpha_invertible", Witness{{}, {}});
  }
  if (rep.should_stop()) return rep;

  std::array<std::size_t, 2> dd{d, d};
  check_tuples(rep, "alpha_multiplicative", dd,
               [&](auto ix) { return a.alpha.apply(a.mul.apply2(basis_vec(d, ix[0], f), basis_vec(d, ix[1], f))); },
               [&](auto ix) { return a.mul.apply2(a.alpha.col(ix[0]), a.alpha.col(ix[1])); });
  check_tuples(rep, "alpha_unital", {}, [&](auto) { return a.alpha.apply(a.unit); },
               [&](auto) { return a.unit; });

  std::array<std::size_t, 3> ddd{d, d, d};
  check_tuples(rep, "hom_associativity", ddd,
               [&](auto ix) {
                 return a.mul.apply2(a.alpha.col(ix[0]),
                                     a.mul.apply2(basis_vec(d, ix[1], f), basis_vec(d, ix[2], f)));
               },
               [&](auto ix) {
                 return a.mul.apply2(a.mul.apply2(basis_vec(d, ix[0], f), basis_vec(d, ix[1], f)),
                                     a.alpha.col(ix[2]));
               });
  std::array<std::size_t, 1> d1{d};
  check_tuples(rep, "weak_unit_left", d1,
               [&](auto ix) { return a.mul.apply2(a.unit, basis_vec(d, ix[0], f)); },
               [&](auto ix) { return a.alpha.col(ix[0]); });
  check_tuples(rep, "weak_unit_right", d1,
               [&](auto ix) { return a.mul.apply2(basis_vec(d, ix[0], f), a.unit); },
               [&](auto ix) { return a.alpha.col(ix[0]); });
  return rep;
}

VerificationReport verify_hom_coalgebra(const HomCoalgebra& c, const VerifyOptions& opt) {
  require_shapes(c);
  VerificationReport rep;
  rep.stop_on_failure = opt.stop_on_failure;
  std::size_t d = c.dim;
  const FieldSpec& f = c.gamma.field();
  std::optional<Matrix> gamma_inv = c.gamma.inverse();

  if (gamma_inv) {
    rep.add_pass("gamma_invertible");
  } else {
    rep.add_fail("gamma_invertible", Witness{{}, {}});
  }
  if (rep.should_stop()) return rep;

  std::array<std::size_t, 1> d1{d};
  check_tuples(rep, "gamma_comultiplicative", d1,
               [&](auto ix) { return c.comul.coapply(c.gamma.col(ix[0])); },
               [&](auto ix) {
                 return apply_pair(c.gamma, c.gamma, c.comul.coapply(basis_vec(d, ix[0], f)));
               });
  check_tuples(rep, "gamma_counital", d1,
               [&](auto ix) {
                 Vec g = c.gamma.col(ix[0]);
                 Scalar s = Scalar::zero(f);
                 for (std::size_t i = 0; i < d; ++i) s.add_mul(c.counit[i], g[i]);
                 return Vec{s};
               },
               [&](auto ix) { return Vec{c.counit[ix[0]]}; });

  if (!gamma_inv) {
    rep.add_skip("hom_coassociativity", "gamma not invertible");
    rep.add_skip("weak_counit_left", "gamma not invertible");
    rep.add_skip("weak_counit_right", "gamma not invertible");
    rep.add_skip("coassoc_reindexing", "gamma not invertible");
    return rep;
  }

  // gamma^{-1}(c_1) (x) Delta(c_2) = Delta(c_1) (x) gamma^{-1}(c_2)
  check_tuples(rep, "hom_coassociativity", d1,
               [&](auto ix) {
                 Vec out = zero_vec(d * d * d, f);
                 c.comul.for_slice(ix[0], [&](std::size_t a, std::size_t b, const Scalar& co) {
                   Vec t = tensor2(gamma_inv->col(a), c.comul.coapply(basis_vec(d, b, f)));
                   vec_axpy(out, co, t);
                 });
                 return out;
               },
               [&](auto ix) {
                 Vec out = zero_vec(d * d * d, f);
                 c.comul.for_slice(ix[0], [&](std::size_t a, std::size_t b, const Scalar& co) {
                   Vec t = tensor2(c.comul.coapply(basis_vec(d, a, f)), gamma_inv->col(b));
                   vec_axpy(out, co, t);
                 });
                 return out;
               });
  check_tuples(rep, "weak_counit_left", d1,
               [&](auto ix) {
                 Vec out = zero_vec(d, f);
                 c.comul.for_slice(ix[0], [&](std::size_t a, std::size_t b, const Scalar& co) {
                   Scalar s = co * c.counit[b];
                   if (!s.is_zero()) out[a] += s;
                 });
                 return out;
               },
               [&](auto ix) { return gamma_inv->col(ix[0]); });
  check_tuples(rep, "weak_counit_right", d1,
               [&](auto ix) {
                 Vec out = zero_vec(d, f);
                 c.comul.for_slice(ix[0], [&](std::size_t a, std::size_t b, const Scalar& co) {
                   Scalar s = co * c.counit[a];
                   if (!s.is_zero()) out[b] += s;
                 });
                 return out;
               },
               [&](auto ix) { return gamma_inv->col(ix[0]); });

  // h_1 (x) h_211 (x) h_212 (x) h_22
  //   = gamma(h_11) (x) gamma^{-1}(h_12) (x) gamma^{-1}(h_21) (x) h_22
  check_tuples(rep, "coassoc_reindexing", d1,
               [&](auto ix) {
                 Vec out = zero_vec(d * d * d * d, f);
                 c.comul.for_slice(ix[0], [&](std::size_t h1, std::size_t h2, const Scalar& c1) {
                   c.comul.for_slice(h2, [&](std::size_t h21, std::size_t h22, const Scalar& c2) {
                     c.comul.for_slice(h21, [&](std::size_t u, std::size_t v, const Scalar& c3) {
                       Scalar co = c1 * c2;
                       co *= c3;
                       out[((h1 * d + u) * d + v) * d + h22] += co;
                     });
                   });
                 });
                 return out;
               },
               [&](auto ix) {
                 Vec out = zero_vec(d * d * d * d, f);
                 c.comul.for_slice(ix[0], [&](std::size_t a, std::size_t b, const Scalar& c1) {
                   c.comul.for_slice(a, [&](std::size_t h11, std::size_t h12, const Scalar& c2) {
                     c.comul.for_slice(b, [&](std::size_t h21, std::size_t h22, const Scalar& c3) {
                       Scalar co = c1 * c2;
                       co *= c3;
                       Vec t = tensor2(c.gamma.col(h11),
                                       tensor2(gamma_inv->col(h12),
                                               tensor2(gamma_inv->col(h21), basis_vec(d, h22, f))));
                       vec_axpy(out, co, t);
                     });
                   });
                 });
                 return out;
               });
  return rep;
}

VerificationReport verify_hom_bialgebra(const HomBialgebra& b, const VerifyOptions& opt) {
  VerificationReport rep;
  rep.stop_on_failure = opt.stop_on_failure;
  if (b.algebra.dim != b.coalgebra.dim) {
    throw Error(Error::Kind::input, "bialgebra dimension mismatch");
  }
  rep.merge("algebra.", verify_hom_algebra(b.algebra, opt));
  if (rep.should_stop()) return rep;
  rep.merge("coalgebra.", verify_hom_coalgebra(b.coalgebra, opt));
  if (rep.should_stop()) return rep;

  std::size_t d = b.algebra.dim;
  const FieldSpec& f = b.algebra.alpha.field();
  const Tensor3& mul = b.algebra.mul;
  const Tensor3& comul = b.coalgebra.comul;

  check_matrix_equal(rep, "same_automorphism", b.algebra.alpha, b.coalgebra.gamma);

  std::array<std::size_t, 2> dd{d, d};
  check_tuples(rep, "comul_multiplicative", dd,
               [&](auto ix) {
                 return comul.coapply(mul.apply2(basis_vec(d, ix[0], f), basis_vec(d, ix[1], f)));
               },
               [&](auto ix) {
                 Vec out = zero_vec(d * d, f);
                 comul.for_slice(ix[0], [&](std::size_t a1, std::size_t a2, const Scalar& c1) {
                   comul.for_slice(ix[1], [&](std::size_t b1, std::size_t b2, const Scalar& c2) {
                     Scalar co = c1 * c2;
                     Vec t = tensor2(mul.apply2(basis_vec(d, a1, f), basis_vec(d, b1, f)),
                                     mul.apply2(basis_vec(d, a2, f), basis_vec(d, b2, f)));
                     vec_axpy(out, co, t);
                   });
                 });
                 return out;
               });
  check_tuples(rep, "comul_unital", {},
               [&](auto) { return comul.coapply(b.algebra.unit); },
               [&](auto) { return tensor2(b.algebra.unit, b.algebra.unit); });
  check_tuples(rep, "counit_multiplicative", dd,
               [&](auto ix) {
                 Vec p = mul.apply2(basis_vec(d, ix[0], f), basis_vec(d, ix[1], f));
                 Scalar s = Scalar::zero(f);
                 for (std::size_t i = 0; i < d; ++i) s.add_mul(b.coalgebra.counit[i], p[i]);
                 return Vec{s};
               },
               [&](auto ix) {
                 return Vec{b.coalgebra.counit[ix[0]] * b.coalgebra.counit[ix[1]]};
               });
  check_tuples(rep, "counit_unital", {},
               [&](auto) {
                 Scalar s = Scalar::zero(f);
                 for (std::size_t i = 0; i < d; ++i) s.add_mul(b.coalgebra.counit[i], b.algebra.unit[i]);
                 return Vec{s};
               },
               [&](auto) { return Vec{Scalar::one(f)}; });
  return rep;
}

VerificationReport verify_hom_hopf(const HomHopfAlgebra& h, const VerifyOptions& opt) {
  VerificationReport rep;
  rep.stop_on_failure = opt.stop_on_failure;
  rep.merge("", verify_hom_bialgebra(h.bialgebra(), opt));
  if (rep.should_stop()) return rep;

  std::size_t d = h.dim();
  const FieldSpec& f = h.field();
  const Matrix& s = h.antipode();
  const Tensor3& mul = h.mul();
  const Tensor3& comul = h.comul();

  check_matrix_equal(rep, "antipode_commutes_automorphism", s * h.alpha(), h.alpha() * s);

  std::array<std::size_t, 1> d1{d};
  auto eta_eps = [&](std::size_t i) { return vec_scale(h.counit()[i], h.unit()); };
  check_tuples(rep, "convolution_left", d1,
               [&](auto ix) {
                 Vec out = zero_vec(d, f);
                 comul.for_slice(ix[0], [&](std::size_t a, std::size_t b, const Scalar& co) {
                   Vec t = mul.apply2(s.col(a), basis_vec(d, b, f));
                   vec_axpy(out, co, t);
                 });
                 return out;
               },
               [&](auto ix) { return eta_eps(ix[0]); });
  check_tuples(rep, "convolution_right", d1,
               [&](auto ix) {
                 Vec out = zero_vec(d, f);
                 comul.for_slice(ix[0], [&](std::size_t a, std::size_t b, const Scalar& co) {
                   Vec t = mul.apply2(basis_vec(d, a, f), s.col(b));
                   vec_axpy(out, co, t);
                 });
                 return out;
               },
               [&](auto ix) { return eta_eps(ix[0]); });

  // derived antipode properties, checked but never used as inputs
  std::array<std::size_t, 2> dd{d, d};
  check_tuples(rep, "antipode_antimultiplicative", dd,
               [&](auto ix) {
                 return s.apply(mul.apply2(basis_vec(d, ix[0], f), basis_vec(d, ix[1], f)));
               },
               [&](auto ix) { return mul.apply2(s.col(ix[1]), s.col(ix[0])); });
  check_tuples(rep, "antipode_unit", {}, [&](auto) { return s.apply(h.unit()); },
               [&](auto) { return h.unit(); });
  check_tuples(rep, "antipode_anticomultiplicative", d1,
               [&](auto ix) { return comul.coapply(s.col(ix[0])); },
               [&](auto ix) {
                 Vec out = zero_vec(d * d, f);
                 comul.for_slice(ix[0], [&](std::size_t a, std::size_t b, const Scalar& co) {
                   Vec t = tensor2(s.col(b), s.col(a));
                   vec_axpy(out, co, t);
                 });
                 return out;
               });
  check_tuples(rep, "antipode_counit", d1,
               [&](auto ix) {
                 Vec sc = s.col(ix[0]);
                 Scalar v = Scalar::zero(f);
                 for (std::size_t i = 0; i < d; ++i) v.add_mul(h.counit()[i], sc[i]);
                 return Vec{v};
               },
               [&](auto ix) { return Vec{h.counit()[ix[0]]}; });
  return rep;
}

HomHopfAlgebra yau_twist(const HomHopfAlgebra& classical, const Matrix& aut) {
  std::size_t d = classical.dim();
  const FieldSpec& f = classical.field();
  if (!classical.alpha().is_identity()) {
    throw Error(Error::Kind::input, "yau twist input must be classical (alpha = id)");
  }
  if (aut.rows() != d || aut.cols() != d || aut.field() != f) {
    throw Error(Error::Kind::input, "automorphism shape mismatch");
  }
  std::optional<Matrix> aut_inv = aut.inverse();
  if (!aut_inv) throw Error(Error::Kind::input, "twisting map is not invertible");

  Matrix mul_mat = classical.mul().as_map_2to1();
  Matrix comul_mat = classical.comul().as_map_1to2();
  Matrix aut2 = kron(aut, aut);
  if (aut * mul_mat != mul_mat * aut2 || aut.apply(classical.unit()) != classical.unit()) {
    throw Error(Error::Kind::input, "twisting map is not an algebra automorphism");
  }
  Matrix counit_row = Matrix::from_rows({classical.counit()}, d, f);
  if (comul_mat * aut != aut2 * comul_mat || counit_row * aut != counit_row) {
    throw Error(Error::Kind::input, "twisting map is not a coalgebra automorphism");
  }
  if (aut * classical.antipode() != classical.antipode() * aut) {
    throw Error(Error::Kind::input, "twisting map does not commute with the antipode");
  }

  HomBialgebra bi;
  bi.algebra.dim = d;
  bi.algebra.mul = Tensor3::from_map_2to1(aut * mul_mat, d, d);
  bi.algebra.unit = classical.unit();
  bi.algebra.alpha = aut;
  bi.coalgebra.dim = d;
  bi.coalgebra.comul = Tensor3::from_map_1to2(comul_mat * (*aut_inv), d, d);
  bi.coalgebra.counit = classical.counit();
  bi.coalgebra.gamma = aut;
  return HomHopfAlgebra(std::move(bi), classical.antipode());
}

Matrix convolution(const Matrix& fm, const Matrix& g, const HomHopfAlgebra& h) {
  std::size_t d = h.dim();
  if (fm.rows() != d || fm.cols() != d || g.rows() != d || g.cols() != d) {
    throw Error(Error::Kind::input, "convolution operand shape mismatch");
  }
  return h.mul().as_map_2to1() * kron(fm, g) * h.comul().as_map_1to2();
}

Matrix antipode_inverse(const HomHopfAlgebra& h) { return h.antipode_inv(); }

Tensor3 adjoint_right(const HomHopfAlgebra& h) {
  std::size_t d = h.dim();
  const FieldSpec& f = h.field();
  const Matrix& ainv = h.alpha_inv();
  Tensor3 t(d, d, d, f);
  for (std::size_t g = 0; g < d; ++g) {
    for (std::size_t x = 0; x < d; ++x) {
      Vec out = zero_vec(d, f);
      h.comul().for_slice(x, [&](std::size_t h1, std::size_t h2, const Scalar& co) {
        Vec inner = h.mul().apply2(h.antipode().col(h1), ainv.col(g));
        Vec v = h.mul().apply2(inner, h.alpha().col(h2));
        vec_axpy(out, co, v);
      });
      for (std::size_t k = 0; k < d; ++k) t.at(g, x, k) = std::move(out[k]);
    }
  }
  return t;
}

Tensor3 adjoint_left(const HomHopfAlgebra& h) {
  std::size_t d = h.dim();
  const FieldSpec& f = h.field();
  const Matrix& ainv = h.alpha_inv();
  Tensor3 t(d, d, d, f);
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t g = 0; g < d; ++g) {
      Vec out = zero_vec(d, f);
      h.comul().for_slice(x, [&](std::size_t h1, std::size_t h2, const Scalar& co) {
        Vec inner = h.mul().apply2(ainv.col(g), h.antipode().col(h2));
        Vec v = h.mul().apply2(h.alpha().col(h1), inner);
        vec_axpy(out, co, v);
      });
      for (std::size_t k = 0; k < d; ++k) t.at(x, g, k) = std::move(out[k]);
    }
  }
  return t;
}

}  // namespace homkit

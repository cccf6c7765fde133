#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "homkit/scalar.hpp"

namespace homkit {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, const FieldSpec& f);
Vec basis_vec(std::size_t n, std::size_t i, const FieldSpec& f);
bool is_zero_vec(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
void vec_axpy(Vec& y, const Scalar& c, const Vec& x);  // y += c*x
Vec vec_scale(const Scalar& c, const Vec& v);
Vec tensor2(const Vec& a, const Vec& b);  // Kronecker, lexicographic
std::string vec_str(const Vec& v);

// Dense matrix over an exact field, row-major. Used as the carrier for
// every linear map in the kit (automorphisms, antipodes, projections, ...).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, FieldSpec f);

  static Matrix identity(std::size_t n, const FieldSpec& f);
  static Matrix from_rows(std::vector<Vec> rows, std::size_t cols, const FieldSpec& f);
  static Matrix from_cols(const std::vector<Vec>& cols, std::size_t rows, const FieldSpec& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Vec apply(const Vec& x) const;
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  Matrix transpose() const;
  bool is_identity() const;
  bool is_zero() const;

  std::optional<Matrix> inverse() const;
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  FieldSpec field_;
  std::vector<Scalar> e_;
};

// Tensor product of linear maps in lexicographic basis order.
Matrix kron(const Matrix& a, const Matrix& b);
// flip(m, n): m*n x m*n permutation with e_i (x) e_j |-> e_j (x) e_i.
Matrix flip(std::size_t m, std::size_t n, const FieldSpec& f);

struct RrefResult {
  Matrix mat;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row-echelon form with deterministic pivoting: leftmost column,
// lowest row index. Zero rows are moved to the bottom.
RrefResult rref(const Matrix& m);

// Subspace of an ambient coordinate space, stored as an RREF basis.
class Subspace {
 public:
  Subspace(std::size_t ambient_dim, FieldSpec f);  // zero subspace
  static Subspace from_vectors(std::size_t ambient_dim, const std::vector<Vec>& vectors,
                               const FieldSpec& f);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const FieldSpec& field() const { return field_; }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  // Coefficients of v in the RREF basis; nullopt if v is outside.
  std::optional<Vec> coords(const Vec& v) const;
  Vec lift(const Vec& coords) const;

 private:
  std::size_t ambient_ = 0;
  FieldSpec field_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

// Null space of m, as an RREF-based subspace of the column coordinate space.
Subspace kernel(const Matrix& m);

// Ambient space modulo a relation subspace, with the canonical projection
// (quotient coordinates = non-pivot ambient coordinates) and section.
class QuotientSpace {
 public:
  QuotientSpace(std::size_t ambient_dim, Subspace relations, Matrix project, Matrix section);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return project_.rows(); }
  const Subspace& relations() const { return relations_; }
  const Matrix& project() const { return project_; }
  const Matrix& section() const { return section_; }
  const FieldSpec& field() const { return relations_.field(); }

 private:
  std::size_t ambient_;
  Subspace relations_;
  Matrix project_;
  Matrix section_;
};

QuotientSpace quotient_by(std::size_t ambient_dim, const std::vector<Vec>& relation_vectors,
                          const FieldSpec& f);

// Rank-3 structure tensor. Entry conventions, fixed across the kit:
//   map V0 (x) V1 -> V2 (multiplications, actions):  t[i][j][k] = coeff of
//     e_k in (e_i, e_j);
//   map V0 -> V1 (x) V2 (comultiplications, coactions): t[i][j][k] = coeff
//     of e_j (x) e_k in the image of e_i.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2, FieldSpec f);

  std::size_t d0() const { return d0_; }
  std::size_t d1() const { return d1_; }
  std::size_t d2() const { return d2_; }
  const FieldSpec& field() const { return field_; }
  std::size_t size() const { return e_.size(); }

  Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
    return e_[(i * d1_ + j) * d2_ + k];
  }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return e_[(i * d1_ + j) * d2_ + k];
  }
  Scalar& flat(std::size_t n) { return e_[n]; }
  const Scalar& flat(std::size_t n) const { return e_[n]; }

  bool operator==(const Tensor3& o) const;
  bool operator!=(const Tensor3& o) const { return !(*this == o); }

  // V0 (x) V1 -> V2 as a d2 x (d0*d1) matrix
  Matrix as_map_2to1() const;
  // V0 -> V1 (x) V2 as a (d1*d2) x d0 matrix
  Matrix as_map_1to2() const;
  static Tensor3 from_map_2to1(const Matrix& m, std::size_t d0, std::size_t d1);
  static Tensor3 from_map_1to2(const Matrix& m, std::size_t d1, std::size_t d2);

  // bilinear evaluation (x in V0, y in V1), skipping zero terms
  Vec apply2(const Vec& x, const Vec& y) const;
  // V0 -> V1 (x) V2 evaluation; output has length d1*d2
  Vec coapply(const Vec& x) const;

  // visit nonzero entries of slice [i][.][.] as f(j, k, coeff)
  template <class F>
  void for_slice(std::size_t i, F&& f) const {
    const Scalar* base = e_.data() + i * d1_ * d2_;
    for (std::size_t j = 0; j < d1_; ++j) {
      for (std::size_t k = 0; k < d2_; ++k) {
        const Scalar& c = base[j * d2_ + k];
        if (!c.is_zero()) f(j, k, c);
      }
    }
  }

 private:
  std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
  FieldSpec field_;
  std::vector<Scalar> e_;
};

}  // namespace homkit

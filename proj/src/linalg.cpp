#include "homkit/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace homkit {

Vec zero_vec(std::size_t n, const FieldSpec& f) {
  return Vec(n, Scalar::zero(f));
}

Vec basis_vec(std::size_t n, std::size_t i, const FieldSpec& f) {
  Vec v(n, Scalar::zero(f));
  v[i] = Scalar::one(f);
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(Error::Kind::input, "vector size mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(Error::Kind::input, "vector size mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

void vec_axpy(Vec& y, const Scalar& c, const Vec& x) {
  if (y.size() != x.size()) throw Error(Error::Kind::input, "vector size mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!x[i].is_zero()) y[i].add_mul(c, x[i]);
  }
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& s : r) s *= c;
  return r;
}

Vec tensor2(const Vec& a, const Vec& b) {
  FieldSpec f = a.empty() ? (b.empty() ? FieldSpec() : b[0].field()) : a[0].field();
  Vec r = zero_vec(a.size() * b.size(), f);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i * b.size() + j] = a[i] * b[j];
    }
  }
  return r;
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].str();
  }
  os << "]";
  return os.str();
}

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldSpec f)
    : rows_(rows), cols_(cols), field_(f), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, const FieldSpec& f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(std::vector<Vec> rows, std::size_t cols, const FieldSpec& f) {
  Matrix m(rows.size(), cols, f);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(Error::Kind::input, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = std::move(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, std::size_t rows, const FieldSpec& f) {
  Matrix m(rows, cols.size(), f);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error(Error::Kind::input, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || field_ != o.field_) {
    throw Error(Error::Kind::input, "matrix product shape/field mismatch");
  }
  Matrix r(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j).add_mul(a, b);
      }
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) {
    throw Error(Error::Kind::input, "matrix sum shape/field mismatch");
  }
  Matrix r = *this;
  for (std::size_t n = 0; n < e_.size(); ++n) r.e_[n] += o.e_[n];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) {
    throw Error(Error::Kind::input, "matrix difference shape/field mismatch");
  }
  Matrix r = *this;
  for (std::size_t n = 0; n < e_.size(); ++n) r.e_[n] -= o.e_[n];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && e_ == o.e_;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw Error(Error::Kind::input, "matrix apply size mismatch");
  Vec y = zero_vec(rows_, field_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = at(i, j);
      if (!a.is_zero()) y[i].add_mul(a, x[j]);
    }
  }
  return y;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

Vec Matrix::col(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Matrix a = *this;
  Matrix inv = Matrix::identity(rows_, field_);
  std::size_t n = rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t i = col; i < n; ++i) {
      if (!a.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == n) return std::nullopt;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    Scalar d = a.at(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) *= d;
      inv.at(col, j) *= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      Scalar c = -a.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j).add_mul(c, a.at(col, j));
        inv.at(i, j).add_mul(c, inv.at(col, j));
      }
    }
  }
  return inv;
}

std::size_t Matrix::rank() const {
  return rref(*this).pivots.size();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw Error(Error::Kind::input, "kron field mismatch");
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Scalar& c = a.at(i1, j1);
      if (c.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          const Scalar& d = b.at(i2, j2);
          if (!d.is_zero()) r.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = c * d;
        }
    }
  return r;
}

Matrix flip(std::size_t m, std::size_t n, const FieldSpec& f) {
  Matrix r(m * n, m * n, f);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) r.at(j * m + i, i * n + j) = Scalar::one(f);
  return r;
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::size_t nrows = a.rows(), ncols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
    std::size_t piv = nrows;
    for (std::size_t i = r; i < nrows; ++i) {
      if (!a.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == nrows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < ncols; ++j) std::swap(a.at(piv, j), a.at(r, j));
    }
    Scalar d = a.at(r, col).inverse();
    for (std::size_t j = col; j < ncols; ++j) a.at(r, j) *= d;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || a.at(i, col).is_zero()) continue;
      Scalar c = -a.at(i, col);
      for (std::size_t j = col; j < ncols; ++j) a.at(i, j).add_mul(c, a.at(r, j));
    }
    pivots.push_back(col);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

Subspace::Subspace(std::size_t ambient_dim, FieldSpec f) : ambient_(ambient_dim), field_(f) {}

Subspace Subspace::from_vectors(std::size_t ambient_dim, const std::vector<Vec>& vectors,
                                const FieldSpec& f) {
  Subspace s(ambient_dim, f);
  // incremental insertion keeps large generator sets cheap
  for (const Vec& v : vectors) {
    if (v.size() != ambient_dim) throw Error(Error::Kind::input, "generator length mismatch");
    Vec w = v;
    for (std::size_t r = 0; r < s.basis_.size(); ++r) {
      const Scalar& c = w[s.pivots_[r]];
      if (!c.is_zero()) {
        Scalar nc = -c;
        vec_axpy(w, nc, s.basis_[r]);
      }
    }
    std::size_t lead = ambient_dim;
    for (std::size_t j = 0; j < ambient_dim; ++j) {
      if (!w[j].is_zero()) {
        lead = j;
        break;
      }
    }
    if (lead == ambient_dim) continue;
    Scalar d = w[lead].inverse();
    for (auto& x : w) x *= d;
    // back-substitute into existing rows, insert keeping pivots ascending
    for (std::size_t r = 0; r < s.basis_.size(); ++r) {
      const Scalar& c = s.basis_[r][lead];
      if (!c.is_zero()) {
        Scalar nc = -c;
        vec_axpy(s.basis_[r], nc, w);
      }
    }
    auto pos = std::lower_bound(s.pivots_.begin(), s.pivots_.end(), lead);
    std::size_t idx = static_cast<std::size_t>(pos - s.pivots_.begin());
    s.pivots_.insert(pos, lead);
    s.basis_.insert(s.basis_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(w));
  }
  return s;
}

bool Subspace::contains(const Vec& v) const {
  return coords(v).has_value();
}

std::optional<Vec> Subspace::coords(const Vec& v) const {
  if (v.size() != ambient_) throw Error(Error::Kind::input, "coords length mismatch");
  Vec w = v;
  Vec c = zero_vec(basis_.size(), field_);
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Scalar& x = w[pivots_[r]];
    if (!x.is_zero()) {
      c[r] = x;
      Scalar nx = -x;
      vec_axpy(w, nx, basis_[r]);
    }
  }
  if (!is_zero_vec(w)) return std::nullopt;
  return c;
}

Vec Subspace::lift(const Vec& coords) const {
  if (coords.size() != basis_.size()) throw Error(Error::Kind::input, "lift length mismatch");
  Vec v = zero_vec(ambient_, field_);
  for (std::size_t r = 0; r < basis_.size(); ++r) vec_axpy(v, coords[r], basis_[r]);
  return v;
}

Subspace kernel(const Matrix& m) {
  RrefResult rr = rref(m);
  std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec x = zero_vec(n, m.field());
    x[f] = Scalar::one(m.field());
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
      const Scalar& c = rr.mat.at(r, f);
      if (!c.is_zero()) x[rr.pivots[r]] = -c;
    }
    basis.push_back(std::move(x));
  }
  return Subspace::from_vectors(n, basis, m.field());
}

QuotientSpace::QuotientSpace(std::size_t ambient_dim, Subspace relations, Matrix project,
                             Matrix section)
    : ambient_(ambient_dim),
      relations_(std::move(relations)),
      project_(std::move(project)),
      section_(std::move(section)) {}

QuotientSpace quotient_by(std::size_t ambient_dim, const std::vector<Vec>& relation_vectors,
                          const FieldSpec& f) {
  Subspace rel = Subspace::from_vectors(ambient_dim, relation_vectors, f);
  std::vector<bool> is_pivot(ambient_dim, false);
  for (std::size_t p : rel.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    if (!is_pivot[j]) free_cols.push_back(j);
  }
  std::size_t q = free_cols.size();
  Matrix project(q, ambient_dim, f);
  Matrix section(ambient_dim, q, f);
  for (std::size_t t = 0; t < q; ++t) {
    project.at(t, free_cols[t]) = Scalar::one(f);
    section.at(free_cols[t], t) = Scalar::one(f);
    for (std::size_t r = 0; r < rel.dim(); ++r) {
      const Scalar& c = rel.basis()[r][free_cols[t]];
      if (!c.is_zero()) project.at(t, rel.pivots()[r]) = -c;
    }
  }
  return QuotientSpace(ambient_dim, std::move(rel), std::move(project), std::move(section));
}

Tensor3::Tensor3(std::size_t d0, std::size_t d1, std::size_t d2, FieldSpec f)
    : d0_(d0), d1_(d1), d2_(d2), field_(f), e_(d0 * d1 * d2, Scalar::zero(f)) {}

bool Tensor3::operator==(const Tensor3& o) const {
  return d0_ == o.d0_ && d1_ == o.d1_ && d2_ == o.d2_ && field_ == o.field_ && e_ == o.e_;
}

Matrix Tensor3::as_map_2to1() const {
  Matrix m(d2_, d0_ * d1_, field_);
  for (std::size_t i = 0; i < d0_; ++i)
    for (std::size_t j = 0; j < d1_; ++j)
      for (std::size_t k = 0; k < d2_; ++k) m.at(k, i * d1_ + j) = at(i, j, k);
  return m;
}

Matrix Tensor3::as_map_1to2() const {
  Matrix m(d1_ * d2_, d0_, field_);
  for (std::size_t i = 0; i < d0_; ++i)
    for (std::size_t j = 0; j < d1_; ++j)
      for (std::size_t k = 0; k < d2_; ++k) m.at(j * d2_ + k, i) = at(i, j, k);
  return m;
}

Tensor3 Tensor3::from_map_2to1(const Matrix& m, std::size_t d0, std::size_t d1) {
  if (m.cols() != d0 * d1) throw Error(Error::Kind::input, "tensor shape mismatch");
  Tensor3 t(d0, d1, m.rows(), m.field());
  for (std::size_t i = 0; i < d0; ++i)
    for (std::size_t j = 0; j < d1; ++j)
      for (std::size_t k = 0; k < m.rows(); ++k) t.at(i, j, k) = m.at(k, i * d1 + j);
  return t;
}

Tensor3 Tensor3::from_map_1to2(const Matrix& m, std::size_t d1, std::size_t d2) {
  if (m.rows() != d1 * d2) throw Error(Error::Kind::input, "tensor shape mismatch");
  Tensor3 t(m.cols(), d1, d2, m.field());
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < d1; ++j)
      for (std::size_t k = 0; k < d2; ++k) t.at(i, j, k) = m.at(j * d2 + k, i);
  return t;
}

Vec Tensor3::apply2(const Vec& x, const Vec& y) const {
  if (x.size() != d0_ || y.size() != d1_) {
    throw Error(Error::Kind::input, "apply2 size mismatch");
  }
  Vec out = zero_vec(d2_, field_);
  for (std::size_t i = 0; i < d0_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d1_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      const Scalar* base = e_.data() + (i * d1_ + j) * d2_;
      for (std::size_t k = 0; k < d2_; ++k) {
        if (!base[k].is_zero()) out[k].add_mul(c, base[k]);
      }
    }
  }
  return out;
}

Vec Tensor3::coapply(const Vec& x) const {
  if (x.size() != d0_) throw Error(Error::Kind::input, "coapply size mismatch");
  Vec out = zero_vec(d1_ * d2_, field_);
  for (std::size_t i = 0; i < d0_; ++i) {
    if (x[i].is_zero()) continue;
    const Scalar* base = e_.data() + i * d1_ * d2_;
    for (std::size_t n = 0; n < d1_ * d2_; ++n) {
      if (!base[n].is_zero()) out[n].add_mul(x[i], base[n]);
    }
  }
  return out;
}

}  // namespace homkit

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "quintic/field.hpp"
#include "quintic/upoly.hpp"

namespace quintic {

template <class F>
struct Matrix {
  using E = typename F::Elem;
  F field;
  int rows = 0, cols = 0;
  std::vector<E> a;

  Matrix() = default;
  Matrix(const F& K, int r, int c) : field(K), rows(r), cols(c), a(static_cast<size_t>(r) * c, K.zero()) {}

  static Matrix identity(const F& K, int n) {
    Matrix m(K, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K.one();
    return m;
  }

  E& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const E& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(x.field, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        if (x.field.is_zero(x(i, k))) continue;
        for (int j = 0; j < y.cols; ++j) r(i, j) = r(i, j) + x(i, k) * y(k, j);
      }
    return r;
  }
  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    Matrix r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] + y.a[i];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    Matrix r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] - y.a[i];
    return r;
  }
  Matrix scaled(const E& s) const {
    Matrix r = *this;
    for (auto& v : r.a) v = v * s;
    return r;
  }
  Matrix transpose() const {
    Matrix r(field, cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  bool is_zero() const {
    for (const auto& v : a)
      if (!field.is_zero(v)) return false;
    return true;
  }
  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// Reduced row echelon form in place; returns pivot columns. Pivot search picks
// the lowest row index with a nonzero entry.
template <class F>
std::vector<int> rref(Matrix<F>& m) {
  const F& K = m.field;
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i)
      if (!K.is_zero(m(i, c))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(r, j));
    typename F::Elem inv = K.inv(m(r, c));
    for (int j = c; j < m.cols; ++j) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || K.is_zero(m(i, c))) continue;
      typename F::Elem f = m(i, c);
      for (int j = c; j < m.cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <class F>
int rank(Matrix<F> m) {
  return static_cast<int>(rref(m).size());
}

// Basis of the right kernel, one vector per free column.
template <class F>
std::vector<std::vector<typename F::Elem>> nullspace(Matrix<F> m) {
  const F& K = m.field;
  std::vector<int> piv = rref(m);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (int f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<typename F::Elem> v(m.cols, K.zero());
    v[f] = K.one();
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of a non-square matrix");
  int n = m.rows;
  Matrix<F> aug(m.field, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field.one();
  }
  std::vector<int> piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix<F> r(m.field, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

template <class F>
typename F::Elem det(Matrix<F> m) {
  const F& K = m.field;
  int n = m.rows;
  typename F::Elem d = K.one();
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i)
      if (!K.is_zero(m(i, c))) {
        sel = i;
        break;
      }
    if (sel < 0) return K.zero();
    if (sel != c) {
      for (int j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
      d = -d;
    }
    d = d * m(c, c);
    typename F::Elem inv = K.inv(m(c, c));
    for (int i = c + 1; i < n; ++i) {
      if (K.is_zero(m(i, c))) continue;
      typename F::Elem f = m(i, c) * inv;
      for (int j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return d;
}

// Characteristic polynomial det(X - m) via reduction to upper Hessenberg form.
template <class F>
UPoly<F> charpoly(Matrix<F> h) {
  const F& K = h.field;
  int n = h.rows;
  for (int c = 0; c < n - 2; ++c) {
    int sel = -1;
    for (int i = c + 1; i < n; ++i)
      if (!K.is_zero(h(i, c))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(h(sel, j), h(c + 1, j));
      for (int i = 0; i < n; ++i) std::swap(h(i, sel), h(i, c + 1));
    }
    typename F::Elem inv = K.inv(h(c + 1, c));
    for (int i = c + 2; i < n; ++i) {
      if (K.is_zero(h(i, c))) continue;
      typename F::Elem f = h(i, c) * inv;
      for (int j = 0; j < n; ++j) h(i, j) = h(i, j) - f * h(c + 1, j);
      for (int j = 0; j < n; ++j) h(j, c + 1) = h(j, c + 1) + f * h(j, i);
    }
  }
  // p_k = characteristic polynomial of the leading k x k block
  std::vector<UPoly<F>> p;
  p.push_back(UPoly<F>::constant(K, K.one()));
  UPoly<F> X = UPoly<F>::x(K);
  for (int k = 1; k <= n; ++k) {
    UPoly<F> next = (X - UPoly<F>::constant(K, h(k - 1, k - 1))) * p[k - 1];
    typename F::Elem prod = K.one();
    for (int i = k - 1; i >= 1; --i) {
      prod = prod * h(i, i - 1);
      if (K.is_zero(prod)) break;
      next = next - p[i - 1].scaled(prod * h(i - 1, k - 1));
    }
    p.push_back(next);
  }
  return p[n];
}

}  // namespace quintic

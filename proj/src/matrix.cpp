#include "cliffcalc/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace cliffcalc {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch " +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = Complex{1.0, 0.0};
  return m;
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "mat_mul");
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex aik = a.at(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

ComplexMatrix mat_add(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "mat_add");
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.entries().size(); ++i) out.entries()[i] += b.entries()[i];
  return out;
}

ComplexMatrix mat_scale(Complex alpha, const ComplexMatrix& m) {
  ComplexMatrix out = m;
  for (auto& e : out.entries()) e *= alpha;
  return out;
}

Complex mat_trace(const ComplexMatrix& m) {
  Complex t{};
  for (int i = 0; i < m.dim(); ++i) t += m.at(i, i);
  return t;
}

ComplexMatrix mat_hermitian_transpose(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) out.at(i, j) = std::conj(m.at(j, i));
  }
  return out;
}

Complex mat_det(const ComplexMatrix& m) {
  ComplexMatrix lu = m;
  const int n = lu.dim();
  Complex det{1.0, 0.0};
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(lu.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double cand = std::abs(lu.at(r, col));
      if (cand > best) {
        best = cand;
        pivot = r;
      }
    }
    if (best == 0.0) return Complex{};
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(lu.at(pivot, c), lu.at(col, c));
      det = -det;
    }
    det *= lu.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      const Complex factor = lu.at(r, col) / lu.at(col, col);
      if (factor == Complex{}) continue;
      for (int c = col; c < n; ++c) lu.at(r, c) -= factor * lu.at(col, c);
    }
  }
  return det;
}

ComplexMatrix mat_inverse(const ComplexMatrix& m) {
  const int n = m.dim();
  ComplexMatrix work = m;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(work.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double cand = std::abs(work.at(r, col));
      if (cand > best) {
        best = cand;
        pivot = r;
      }
    }
    if (best == 0.0) throw std::invalid_argument("mat_inverse: singular matrix");
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(work.at(pivot, c), work.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    }
    const Complex d = work.at(col, col);
    for (int c = 0; c < n; ++c) {
      work.at(col, c) /= d;
      inv.at(col, c) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex factor = work.at(r, col);
      if (factor == Complex{}) continue;
      for (int c = 0; c < n; ++c) {
        work.at(r, c) -= factor * work.at(col, c);
        inv.at(r, c) -= factor * inv.at(col, c);
      }
    }
  }
  return inv;
}

double mat_max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "mat_max_abs_diff");
  double best = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    best = std::max(best, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return best;
}

bool mat_approx_eq(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return mat_max_abs_diff(a, b) <= tol;
}

}  // namespace cliffcalc

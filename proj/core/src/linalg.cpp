#include "pacal/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "pacal/errors.hpp"

namespace pacal {

Vec Vec::basis(int n, int i) {
  Vec e(n);
  e[i] = 1.0;
  return e;
}

namespace {
void check_same_dim(int a, int b, const char* what) {
  if (a != b) {
    throw usage_error(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                      " vs " + std::to_string(b) + ")");
  }
}
} // namespace

Vec& Vec::operator+=(const Vec& o) {
  check_same_dim(dim(), o.dim(), "Vec::operator+=");
  for (int i = 0; i < dim(); ++i) c_[static_cast<std::size_t>(i)] += o[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  check_same_dim(dim(), o.dim(), "Vec::operator-=");
  for (int i = 0; i < dim(); ++i) c_[static_cast<std::size_t>(i)] -= o[i];
  return *this;
}

Vec& Vec::operator*=(double s) {
  for (double& x : c_) x *= s;
  return *this;
}

double Vec::dot(const Vec& o) const {
  check_same_dim(dim(), o.dim(), "Vec::dot");
  double s = 0.0;
  for (int i = 0; i < dim(); ++i) s += (*this)[i] * o[i];
  return s;
}

double Vec::norm() const { return std::sqrt(dot(*this)); }

double Vec::norm_inf() const {
  double m = 0.0;
  for (double x : c_) m = std::max(m, std::abs(x));
  return m;
}

bool Vec::all_zero() const {
  for (double x : c_)
    if (x != 0.0) return false;
  return true;
}

Mat::Mat(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  a_.reserve(static_cast<std::size_t>(rows_ * cols_));
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw usage_error("Mat: ragged initializer");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::diagonal(const Vec& d) {
  Mat m(d.dim(), d.dim());
  for (int i = 0; i < d.dim(); ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::rotation2(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return Mat{{c, -s}, {s, c}};
}

Mat Mat::rotation_generator2() { return Mat{{0.0, -1.0}, {1.0, 0.0}}; }

Mat& Mat::operator+=(const Mat& o) {
  check_same_dim(rows_ * cols_, o.rows_ * o.cols_, "Mat::operator+=");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  check_same_dim(rows_ * cols_, o.rows_ * o.cols_, "Mat::operator-=");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Mat& Mat::operator*=(double s) {
  for (double& x : a_) x *= s;
  return *this;
}

Mat Mat::operator*(const Mat& o) const {
  check_same_dim(cols_, o.rows_, "Mat::operator*");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const double aik = (*this)(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
    }
  return r;
}

Vec Mat::operator*(const Vec& x) const {
  check_same_dim(cols_, x.dim(), "Mat::operator*(Vec)");
  Vec y(rows_);
  for (int i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Mat::norm_inf() const {
  double m = 0.0;
  for (int i = 0; i < rows_; ++i) {
    double row = 0.0;
    for (int j = 0; j < cols_; ++j) row += std::abs((*this)(i, j));
    m = std::max(m, row);
  }
  return m;
}

bool Mat::is_diagonal(double tol) const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && std::abs((*this)(i, j)) > tol) return false;
  return true;
}

LuSolver::LuSolver(const Mat& m) : n_(m.rows()), lu_(m), perm_(static_cast<std::size_t>(m.rows())) {
  if (m.rows() != m.cols()) throw usage_error("LuSolver: matrix must be square");
  for (int i = 0; i < n_; ++i) perm_[static_cast<std::size_t>(i)] = i;

  double max_pivot = 0.0, min_pivot = 0.0;
  for (int k = 0; k < n_; ++k) {
    int piv = k;
    double best = std::abs(lu_(k, k));
    for (int i = k + 1; i < n_; ++i) {
      const double cand = std::abs(lu_(i, k));
      if (cand > best) {
        best = cand;
        piv = i;
      }
    }
    if (best == 0.0) throw numeric_error("LuSolver: singular matrix");
    if (piv != k) {
      for (int j = 0; j < n_; ++j) std::swap(lu_(k, j), lu_(piv, j));
      std::swap(perm_[static_cast<std::size_t>(k)], perm_[static_cast<std::size_t>(piv)]);
      sign_ = -sign_;
    }
    max_pivot = k == 0 ? best : std::max(max_pivot, best);
    min_pivot = k == 0 ? best : std::min(min_pivot, best);
    const double inv = 1.0 / lu_(k, k);
    for (int i = k + 1; i < n_; ++i) {
      lu_(i, k) *= inv;
      const double lik = lu_(i, k);
      if (lik == 0.0) continue;
      for (int j = k + 1; j < n_; ++j) lu_(i, j) -= lik * lu_(k, j);
    }
  }
  rcond_ = max_pivot > 0.0 ? min_pivot / max_pivot : 0.0;
  if (rcond_ < 1e-14) throw numeric_error("LuSolver: matrix numerically singular (rcond estimate too small)");
}

Vec LuSolver::solve(const Vec& rhs) const {
  check_same_dim(n_, rhs.dim(), "LuSolver::solve");
  Vec y(n_);
  for (int i = 0; i < n_; ++i) {
    double s = rhs[perm_[static_cast<std::size_t>(i)]];
    for (int j = 0; j < i; ++j) s -= lu_(i, j) * y[j];
    y[i] = s;
  }
  for (int i = n_ - 1; i >= 0; --i) {
    double s = y[i];
    for (int j = i + 1; j < n_; ++j) s -= lu_(i, j) * y[j];
    y[i] = s / lu_(i, i);
  }
  return y;
}

Mat LuSolver::inverse() const {
  Mat inv(n_, n_);
  for (int j = 0; j < n_; ++j) {
    const Vec col = solve(Vec::basis(n_, j));
    for (int i = 0; i < n_; ++i) inv(i, j) = col[i];
  }
  return inv;
}

double LuSolver::determinant() const {
  double d = sign_;
  for (int i = 0; i < n_; ++i) d *= lu_(i, i);
  return d;
}

Vec solve(const Mat& m, const Vec& rhs) { return LuSolver(m).solve(rhs); }

Mat inverse(const Mat& m) { return LuSolver(m).inverse(); }

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat mat_exp(const Mat& m) {
  if (m.rows() != m.cols()) throw usage_error("mat_exp: matrix must be square");
  const int n = m.rows();

  if (m.is_diagonal()) {
    Mat r = Mat::zeros(n);
    for (int i = 0; i < n; ++i) r(i, i) = std::exp(m(i, i));
    return r;
  }
  // a*J with J the 2x2 rotation generator exponentiates to a rotation
  if (n == 2 && m(0, 0) == 0.0 && m(1, 1) == 0.0 && m(0, 1) == -m(1, 0)) {
    return Mat::rotation2(m(1, 0));
  }

  // scaling and squaring, Pade order 6
  const double nrm = m.norm_inf();
  int squarings = 0;
  Mat a = m;
  if (nrm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
    a *= std::pow(2.0, -squarings);
  }

  static const double c[] = {1.0,           1.0 / 2.0,      5.0 / 44.0,   1.0 / 66.0,
                             1.0 / 792.0,   1.0 / 15840.0,  1.0 / 665280.0};
  Mat apow = Mat::identity(n);
  Mat num = Mat::zeros(n), den = Mat::zeros(n);
  for (int k = 0; k <= 6; ++k) {
    const Mat term = c[k] * apow;
    num += term;
    den += (k % 2 == 0) ? term : -1.0 * term;
    if (k < 6) apow = apow * a;
  }
  Mat r = LuSolver(den).inverse() * num;
  for (int s = 0; s < squarings; ++s) r = r * r;
  return r;
}

} // namespace pacal

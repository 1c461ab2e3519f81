#ifndef PACAL_LINALG_HPP
#define PACAL_LINALG_HPP

#include <initializer_list>
#include <vector>

namespace pacal {

//! Dense real n-tuple. The shared coordinate carrier for points, vectors and
//! translations; dimension is fixed at construction.
class Vec {
public:
  Vec() = default;
  explicit Vec(int n, double fill = 0.0) : c_(static_cast<std::size_t>(n), fill) {}
  Vec(std::initializer_list<double> xs) : c_(xs) {}
  explicit Vec(std::vector<double> xs) : c_(std::move(xs)) {}

  static Vec zeros(int n) { return Vec(n); }
  static Vec basis(int n, int i);

  int dim() const { return static_cast<int>(c_.size()); }
  double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& data() const { return c_; }

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(double s);

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(double s, Vec a) { return a *= s; }
  friend Vec operator*(Vec a, double s) { return a *= s; }
  friend Vec operator-(Vec a) { return a *= -1.0; }
  friend bool operator==(const Vec& a, const Vec& b) { return a.c_ == b.c_; }

  double dot(const Vec& o) const;
  double norm() const;
  double norm_inf() const;
  bool all_zero() const;

private:
  std::vector<double> c_;
};

//! Row-major dense matrix, sized for the small frame dimensions used here.
class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), fill) {}
  Mat(std::initializer_list<std::initializer_list<double>> rows);

  static Mat identity(int n);
  static Mat zeros(int n) { return Mat(n, n); }
  static Mat diagonal(const Vec& d);
  //! 2x2 counterclockwise rotation by angle theta.
  static Mat rotation2(double theta);
  //! 2x2 generator of rotations, [[0,-1],[1,0]].
  static Mat rotation_generator2();

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(double s);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(double s, Mat a) { return a *= s; }
  friend Mat operator*(Mat a, double s) { return a *= s; }

  Mat operator*(const Mat& o) const;
  Vec operator*(const Vec& x) const;
  Mat transpose() const;

  double norm_inf() const;
  bool is_diagonal(double tol = 0.0) const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

//! LU factorization with partial pivoting; throws numeric_error when the
//! matrix is singular to working precision.
class LuSolver {
public:
  explicit LuSolver(const Mat& m);
  Vec solve(const Vec& rhs) const;
  Mat inverse() const;
  double determinant() const;
  //! Crude reciprocal condition estimate from the pivot magnitudes.
  double rcond() const { return rcond_; }

private:
  int n_ = 0;
  Mat lu_;
  std::vector<int> perm_;
  double rcond_ = 0.0;
  int sign_ = 1;
};

Vec solve(const Mat& m, const Vec& rhs);
Mat inverse(const Mat& m);
Mat commutator(const Mat& a, const Mat& b);

//! Matrix exponential by scaling-and-squaring with a fixed-order Pade
//! approximant; exact closed forms for 2x2 rotation generators and diagonals.
Mat mat_exp(const Mat& m);

} // namespace pacal

#endif

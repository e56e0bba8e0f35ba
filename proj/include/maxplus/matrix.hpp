#ifndef MAXPLUS_MATRIX_HPP_
#define MAXPLUS_MATRIX_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "maxplus/extended_real.hpp"
#include "maxplus/op_counter.hpp"

namespace maxplus {

/**
 * Dense matrix over ExtendedReal.
 *
 * The same type holds max-plus and min-plus data; each free function below
 * states which semiring it works in. Storage is Eigen's default column-major
 * layout, which is also the column-stacking order used by vec().
 */
using TropicalMatrix =
    Eigen::Matrix<ExtendedReal, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename Derived>
std::string shape_string(const Eigen::MatrixBase<Derived>& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

namespace detail {

template <typename Derived>
void require_nonempty(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() < 1 || m.cols() < 1) {
    throw ShapeError(std::string(what) + ": empty matrix " + shape_string(m));
  }
}

template <typename DP, typename DQ>
void require_shape(bool ok, const Eigen::MatrixBase<DP>& p,
                   const Eigen::MatrixBase<DQ>& q, const char* what) {
  require_nonempty(p, what);
  require_nonempty(q, what);
  if (!ok) {
    throw ShapeError(std::string(what) + ": incompatible shapes " +
                     shape_string(p) + " and " + shape_string(q));
  }
}

struct MaxPlus {
  static constexpr ExtendedReal zero() noexcept { return kNegInf; }
  static constexpr ExtendedReal add(ExtendedReal a, ExtendedReal b) noexcept {
    return max_plus_add(a, b);
  }
  static constexpr ExtendedReal mul(ExtendedReal a, ExtendedReal b) noexcept {
    return max_plus_mul(a, b);
  }
};

struct MinPlus {
  static constexpr ExtendedReal zero() noexcept { return kPosInf; }
  static constexpr ExtendedReal add(ExtendedReal a, ExtendedReal b) noexcept {
    return min_plus_add(a, b);
  }
  static constexpr ExtendedReal mul(ExtendedReal a, ExtendedReal b) noexcept {
    return min_plus_mul(a, b);
  }
};

// result(i, j) = ⊕_l P(i, l) ⊗ Q(l, j). Loops run down columns so that plain
// column-major operands are read contiguously. A term whose right factor is
// the semiring zero is skipped: zero is absorbing for ⊗ and neutral for ⊕.
template <typename S, typename DP, typename DQ>
TropicalMatrix product(const Eigen::MatrixBase<DP>& p_in,
                       const Eigen::MatrixBase<DQ>& q_in, const char* what) {
  require_shape(p_in.cols() == q_in.rows(), p_in, q_in, what);
  const auto& p = p_in.derived();
  const auto& q = q_in.derived();
  TropicalMatrix r = TropicalMatrix::Constant(p.rows(), q.cols(), S::zero());
  for (Index j = 0; j < q.cols(); ++j) {
    for (Index l = 0; l < p.cols(); ++l) {
      const ExtendedReal s = q.coeff(l, j);
      if (s == S::zero()) {
        continue;
      }
      for (Index i = 0; i < p.rows(); ++i) {
        r.coeffRef(i, j) = S::add(r.coeff(i, j), S::mul(p.coeff(i, l), s));
      }
    }
  }
  op_counter::add(static_cast<std::uint64_t>(p.rows()) *
                  static_cast<std::uint64_t>(p.cols()) *
                  static_cast<std::uint64_t>(q.cols()));
  return r;
}

template <typename S, typename DP, typename DQ>
TropicalMatrix entrywise_sum(const Eigen::MatrixBase<DP>& p,
                             const Eigen::MatrixBase<DQ>& q,
                             const char* what) {
  require_shape(p.rows() == q.rows() && p.cols() == q.cols(), p, q, what);
  TropicalMatrix r = p.binaryExpr(q, [](ExtendedReal a, ExtendedReal b) {
    return S::add(a, b);
  });
  op_counter::add(static_cast<std::uint64_t>(r.size()));
  return r;
}

template <typename S, typename DM, typename DN>
TropicalMatrix kronecker(const Eigen::MatrixBase<DM>& m_in,
                         const Eigen::MatrixBase<DN>& n_in, const char* what) {
  require_nonempty(m_in, what);
  require_nonempty(n_in, what);
  const auto& m = m_in.derived();
  const TropicalMatrix n = n_in;
  TropicalMatrix r(m.rows() * n.rows(), m.cols() * n.cols());
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      const ExtendedReal s = m.coeff(i, j);
      r.block(i * n.rows(), j * n.cols(), n.rows(), n.cols()) =
          n.unaryExpr([s](ExtendedReal x) { return S::mul(s, x); });
    }
  }
  op_counter::add(static_cast<std::uint64_t>(m.size()) *
                  static_cast<std::uint64_t>(n.size()));
  return r;
}

}  // namespace detail

struct ConjugateOp {
  constexpr ExtendedReal operator()(ExtendedReal a) const noexcept {
    return conjugate_scalar(a);
  }
};

/// Max-plus unit matrix: 0 on the diagonal, NEG_INF elsewhere.
inline TropicalMatrix unit_matrix(Index n) {
  TropicalMatrix e = TropicalMatrix::Constant(n, n, kNegInf);
  e.diagonal().setConstant(ExtendedReal(0.0));
  return e;
}

/// Min-plus unit matrix: 0 on the diagonal, POS_INF elsewhere.
inline TropicalMatrix min_plus_unit_matrix(Index n) {
  TropicalMatrix e = TropicalMatrix::Constant(n, n, kPosInf);
  e.diagonal().setConstant(ExtendedReal(0.0));
  return e;
}

/// P ⊗ Q in max-plus. Throws ShapeError unless P.cols() == Q.rows().
template <typename DP, typename DQ>
TropicalMatrix max_plus_matmul(const Eigen::MatrixBase<DP>& p,
                               const Eigen::MatrixBase<DQ>& q) {
  return detail::product<detail::MaxPlus>(p, q, "max_plus_matmul");
}

/// P ⊗′ Q in min-plus. Throws ShapeError unless P.cols() == Q.rows().
template <typename DP, typename DQ>
TropicalMatrix min_plus_matmul(const Eigen::MatrixBase<DP>& p,
                               const Eigen::MatrixBase<DQ>& q) {
  return detail::product<detail::MinPlus>(p, q, "min_plus_matmul");
}

template <typename DP, typename DQ>
TropicalMatrix max_plus_matadd(const Eigen::MatrixBase<DP>& p,
                               const Eigen::MatrixBase<DQ>& q) {
  return detail::entrywise_sum<detail::MaxPlus>(p, q, "max_plus_matadd");
}

template <typename DP, typename DQ>
TropicalMatrix min_plus_matadd(const Eigen::MatrixBase<DP>& p,
                               const Eigen::MatrixBase<DQ>& q) {
  return detail::entrywise_sum<detail::MinPlus>(p, q, "min_plus_matadd");
}

/// Lazy A♯ = -Aᵀ (with infinities swapped). Holds a reference to `a`.
template <typename Derived>
auto conjugate_view(const Eigen::MatrixBase<Derived>& a) {
  return a.derived().transpose().unaryExpr(ConjugateOp{});
}

template <typename Derived>
TropicalMatrix conjugate(const Eigen::MatrixBase<Derived>& a) {
  return conjugate_view(a);
}

/**
 * A♯ ⊗′ B without materializing A♯.
 *
 * Same value as min_plus_matmul(conjugate(A), B) and the same operation
 * count, but both operands are walked down their columns.
 */
template <typename DA, typename DB>
TropicalMatrix left_residual(const Eigen::MatrixBase<DA>& a_in,
                             const Eigen::MatrixBase<DB>& b_in) {
  detail::require_shape(a_in.rows() == b_in.rows(), a_in, b_in,
                        "left_residual");
  const auto& a = a_in.derived();
  const auto& b = b_in.derived();
  TropicalMatrix r(a.cols(), b.cols());
  for (Index j = 0; j < b.cols(); ++j) {
    for (Index i = 0; i < a.cols(); ++i) {
      ExtendedReal acc = kPosInf;
      for (Index l = 0; l < a.rows(); ++l) {
        acc = min_plus_add(
            acc, min_plus_mul(conjugate_scalar(a.coeff(l, i)), b.coeff(l, j)));
      }
      r.coeffRef(i, j) = acc;
    }
  }
  op_counter::add(static_cast<std::uint64_t>(a.rows()) *
                  static_cast<std::uint64_t>(a.cols()) *
                  static_cast<std::uint64_t>(b.cols()));
  return r;
}

/// C ⊗′ B♯ without materializing B♯; equals min_plus_matmul(C, conjugate(B)).
template <typename DC, typename DB>
TropicalMatrix right_residual(const Eigen::MatrixBase<DC>& c_in,
                              const Eigen::MatrixBase<DB>& b_in) {
  detail::require_shape(c_in.cols() == b_in.cols(), c_in, b_in,
                        "right_residual");
  const auto& c = c_in.derived();
  const auto& b = b_in.derived();
  TropicalMatrix r = TropicalMatrix::Constant(c.rows(), b.rows(), kPosInf);
  for (Index j = 0; j < b.rows(); ++j) {
    for (Index l = 0; l < c.cols(); ++l) {
      const ExtendedReal s = conjugate_scalar(b.coeff(j, l));
      if (s.is_pos_inf()) {
        continue;
      }
      for (Index i = 0; i < c.rows(); ++i) {
        r.coeffRef(i, j) =
            min_plus_add(r.coeff(i, j), min_plus_mul(c.coeff(i, l), s));
      }
    }
  }
  op_counter::add(static_cast<std::uint64_t>(c.rows()) *
                  static_cast<std::uint64_t>(c.cols()) *
                  static_cast<std::uint64_t>(b.rows()));
  return r;
}

/// Stacks the columns of X into a (rows·cols)×1 column.
template <typename Derived>
TropicalMatrix vec(const Eigen::MatrixBase<Derived>& x) {
  detail::require_nonempty(x, "vec");
  const TropicalMatrix m = x;
  return m.reshaped();
}

/// Inverse of vec. Throws ShapeError unless v is (rows·cols)×1.
template <typename Derived>
TropicalMatrix unvec(const Eigen::MatrixBase<Derived>& v, Index rows,
                     Index cols) {
  if (rows < 1 || cols < 1 || v.cols() != 1 || v.rows() != rows * cols) {
    throw ShapeError("unvec: cannot reshape " + shape_string(v) + " into " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  }
  const TropicalMatrix m = v;
  return m.reshaped(rows, cols);
}

/// Right Kronecker product over max-plus: block (i, j) is M(i, j) ⊗ N.
template <typename DM, typename DN>
TropicalMatrix kron_max(const Eigen::MatrixBase<DM>& m,
                        const Eigen::MatrixBase<DN>& n) {
  return detail::kronecker<detail::MaxPlus>(m, n, "kron_max");
}

/// Right Kronecker product over min-plus: block (i, j) is M(i, j) ⊗′ N.
template <typename DM, typename DN>
TropicalMatrix kron_min(const Eigen::MatrixBase<DM>& m,
                        const Eigen::MatrixBase<DN>& n) {
  return detail::kronecker<detail::MinPlus>(m, n, "kron_min");
}

/// Entrywise P ≤ Q under NEG_INF < finite < POS_INF.
template <typename DP, typename DQ>
bool entrywise_leq(const Eigen::MatrixBase<DP>& p,
                   const Eigen::MatrixBase<DQ>& q) {
  detail::require_shape(p.rows() == q.rows() && p.cols() == q.cols(), p, q,
                        "entrywise_leq");
  return p.binaryExpr(q, [](ExtendedReal a, ExtendedReal b) { return a <= b; })
      .all();
}

/// Every finite entry is an integer (infinities are allowed).
template <typename Derived>
bool has_integral_entries(const Eigen::MatrixBase<Derived>& m) {
  return m.unaryExpr([](ExtendedReal a) { return !a.is_finite() || is_integral(a); })
      .all();
}

}  // namespace maxplus

#endif  // MAXPLUS_MATRIX_HPP_

#pragma once

// Representations of a quiver over an exact field, and their homological
// calculus through the standard two-term projective resolution:
//
//   0 -> Hom(M,N) -> (+)_i Hom_k(V_i, W_i) --Phi--> (+)_a Hom_k(V_s(a), W_t(a)) -> Ext^1(M,N) -> 0
//
// with Phi(u)_a = g_a u_s(a) - u_t(a) f_a. Coordinates on the domain are the
// vertex blocks in vertex order, each u_i flattened row-major; on the codomain
// the arrow blocks in arrow declaration order, each flattened row-major.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qrep/linalg.hpp"
#include "qrep/quiver.hpp"

namespace qrep {

/// One matrix per vertex (a morphism candidate) or per arrow (a cocycle).
template <class Scalar>
using MatrixFamily = std::vector<Mat<Scalar>>;

template <class Scalar>
class Representation {
 public:
  using F = FieldTraits<Scalar>;

  /// maps[a] must be dims[t(a)] x dims[s(a)]. Entries are normalized into the field.
  Representation(Quiver quiver, FieldSpec field, DimVector dims, MatrixFamily<Scalar> maps)
      : quiver_(std::move(quiver)), field_(field), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (!F::accepts(field_)) throw MismatchError("scalar type does not model field " + field_.name());
    if (dims_.size() != quiver_.vertex_count())
      throw MismatchError("dimension vector length does not match the quiver");
    if (static_cast<Eigen::Index>(maps_.size()) != quiver_.arrow_count())
      throw MismatchError("expected one matrix per arrow");
    for (Eigen::Index a = 0; a < quiver_.arrow_count(); ++a) {
      auto& m = maps_[static_cast<std::size_t>(a)];
      const auto& arrow = quiver_.arrow(a);
      if (m.rows() != dims_[arrow.target] || m.cols() != dims_[arrow.source])
        throw MismatchError("matrix for arrow '" + arrow.id + "' has shape " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected " + std::to_string(dims_[arrow.target]) + "x" +
                            std::to_string(dims_[arrow.source]));
      if constexpr (std::is_same_v<Scalar, Zp>)
        m = m.unaryExpr([p = field_.characteristic()](const Zp& x) { return Zp(x.value(), p); });
    }
  }

  static Representation zero(const Quiver& q, FieldSpec field) {
    return with_zero_maps(q, field, DimVector::zero(q.vertex_count()));
  }

  /// All arrow maps zero.
  static Representation with_zero_maps(const Quiver& q, FieldSpec field, const DimVector& dims) {
    MatrixFamily<Scalar> maps;
    for (const auto& a : q.arrows()) maps.push_back(Mat<Scalar>::Zero(dims[a.target], dims[a.source]));
    return Representation(q, field, dims, std::move(maps));
  }

  /// S_i: k at vertex i, zero elsewhere.
  static Representation simple(const Quiver& q, FieldSpec field, Eigen::Index vertex) {
    return with_zero_maps(q, field, DimVector::unit(q.vertex_count(), vertex));
  }

  [[nodiscard]] const Quiver& quiver() const noexcept { return quiver_; }
  [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }
  [[nodiscard]] const DimVector& dims() const noexcept { return dims_; }
  [[nodiscard]] Eigen::Index dim(Eigen::Index v) const { return static_cast<Eigen::Index>(dims_[v]); }
  [[nodiscard]] const MatrixFamily<Scalar>& maps() const noexcept { return maps_; }
  [[nodiscard]] const Mat<Scalar>& map(Eigen::Index a) const { return maps_.at(static_cast<std::size_t>(a)); }
  [[nodiscard]] bool is_zero() const { return dims_.is_zero(); }

  Scalar scalar(long long v) const { return F::from_int(field_, v); }

  /// Bit-exact equality of quiver, field, dimensions and matrices.
  friend bool operator==(const Representation& a, const Representation& b) {
    if (!(a.quiver_ == b.quiver_) || a.field_ != b.field_ || !(a.dims_ == b.dims_)) return false;
    for (std::size_t k = 0; k < a.maps_.size(); ++k)
      if (a.maps_[k] != b.maps_[k]) return false;
    return true;
  }

 private:
  Quiver quiver_;
  FieldSpec field_;
  DimVector dims_;
  MatrixFamily<Scalar> maps_;
};

/// Throws MismatchError unless both live on the same quiver and field.
template <class Scalar>
void require_compatible(const Representation<Scalar>& m, const Representation<Scalar>& n) {
  if (!(m.quiver() == n.quiver())) throw MismatchError("representations live on different quivers");
  if (m.field() != n.field())
    throw MismatchError("representations are over different fields (" + m.field().name() + ", " +
                        n.field().name() + ")");
}

// -- coordinates ----------------------------------------------------------

namespace detail {

template <class Scalar>
std::vector<Eigen::Index> vertex_offsets(const Representation<Scalar>& m, const Representation<Scalar>& n) {
  std::vector<Eigen::Index> off{0};
  for (Eigen::Index i = 0; i < m.quiver().vertex_count(); ++i) off.push_back(off.back() + n.dim(i) * m.dim(i));
  return off;
}

template <class Scalar>
std::vector<Eigen::Index> arrow_offsets(const Representation<Scalar>& m, const Representation<Scalar>& n) {
  std::vector<Eigen::Index> off{0};
  for (const auto& a : m.quiver().arrows()) off.push_back(off.back() + n.dim(a.target) * m.dim(a.source));
  return off;
}

template <class Scalar>
Vec<Scalar> flatten(const MatrixFamily<Scalar>& blocks, Eigen::Index total) {
  Vec<Scalar> out(total);
  Eigen::Index k = 0;
  for (const auto& b : blocks)
    for (Eigen::Index r = 0; r < b.rows(); ++r)
      for (Eigen::Index c = 0; c < b.cols(); ++c) out(k++) = b(r, c);
  if (k != total) throw MismatchError("matrix family has the wrong total size");
  return out;
}

template <class Scalar>
MatrixFamily<Scalar> unflatten(const Vec<Scalar>& v, const std::vector<std::pair<Eigen::Index, Eigen::Index>>& shapes) {
  MatrixFamily<Scalar> out;
  Eigen::Index k = 0;
  for (auto [rows, cols] : shapes) {
    Mat<Scalar> b(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
      for (Eigen::Index c = 0; c < cols; ++c) b(r, c) = v(k++);
    out.push_back(std::move(b));
  }
  return out;
}

template <class Scalar>
std::vector<std::pair<Eigen::Index, Eigen::Index>> vertex_shapes(const Representation<Scalar>& m,
                                                                const Representation<Scalar>& n) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> s;
  for (Eigen::Index i = 0; i < m.quiver().vertex_count(); ++i) s.emplace_back(n.dim(i), m.dim(i));
  return s;
}

template <class Scalar>
std::vector<std::pair<Eigen::Index, Eigen::Index>> arrow_shapes(const Representation<Scalar>& m,
                                                               const Representation<Scalar>& n) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> s;
  for (const auto& a : m.quiver().arrows()) s.emplace_back(n.dim(a.target), m.dim(a.source));
  return s;
}

}  // namespace detail

/// Flattens a vertex-indexed family u_i : V_i -> W_i into the domain coordinates of Phi.
template <class Scalar>
Vec<Scalar> flatten_vertex_family(const Representation<Scalar>& m, const Representation<Scalar>& n,
                                  const MatrixFamily<Scalar>& u) {
  return detail::flatten(u, detail::vertex_offsets(m, n).back());
}

template <class Scalar>
MatrixFamily<Scalar> unflatten_vertex_family(const Representation<Scalar>& m, const Representation<Scalar>& n,
                                             const Vec<Scalar>& v) {
  return detail::unflatten(v, detail::vertex_shapes(m, n));
}

/// Flattens an arrow-indexed family eta_a : V_s(a) -> W_t(a) into the codomain coordinates of Phi.
template <class Scalar>
Vec<Scalar> flatten_arrow_family(const Representation<Scalar>& m, const Representation<Scalar>& n,
                                 const MatrixFamily<Scalar>& eta) {
  const auto shapes = detail::arrow_shapes(m, n);
  if (eta.size() != shapes.size()) throw MismatchError("expected one matrix per arrow");
  for (std::size_t k = 0; k < shapes.size(); ++k)
    if (eta[k].rows() != shapes[k].first || eta[k].cols() != shapes[k].second)
      throw MismatchError("cocycle block for arrow '" + m.quiver().arrows()[k].id + "' has the wrong shape");
  return detail::flatten(eta, detail::arrow_offsets(m, n).back());
}

template <class Scalar>
MatrixFamily<Scalar> unflatten_arrow_family(const Representation<Scalar>& m, const Representation<Scalar>& n,
                                            const Vec<Scalar>& v) {
  return detail::unflatten(v, detail::arrow_shapes(m, n));
}

// -- Hom and Ext -------------------------------------------------------------

/// Phi : (+)_i Hom(V_i, W_i) -> (+)_a Hom(V_s(a), W_t(a)), u |-> (g_a u_s - u_t f_a)_a.
template <class Scalar>
Mat<Scalar> commutation_map(const Representation<Scalar>& m, const Representation<Scalar>& n) {
  require_compatible(m, n);
  const auto voff = detail::vertex_offsets(m, n);
  const auto aoff = detail::arrow_offsets(m, n);
  Mat<Scalar> phi = Mat<Scalar>::Zero(aoff.back(), voff.back());
  const auto& q = m.quiver();
  for (Eigen::Index a = 0; a < q.arrow_count(); ++a) {
    const auto s = q.arrow(a).source;
    const auto t = q.arrow(a).target;
    const Mat<Scalar>& f = m.map(a);
    const Mat<Scalar>& g = n.map(a);
    const Eigen::Index rows = n.dim(t), cols = m.dim(s);
    for (Eigen::Index r = 0; r < rows; ++r) {
      for (Eigen::Index c = 0; c < cols; ++c) {
        const Eigen::Index out = aoff[static_cast<std::size_t>(a)] + r * cols + c;
        // (g u_s)(r,c) = sum_k g(r,k) u_s(k,c)
        for (Eigen::Index k = 0; k < n.dim(s); ++k)
          phi(out, voff[static_cast<std::size_t>(s)] + k * m.dim(s) + c) += g(r, k);
        // (u_t f)(r,c) = sum_k u_t(r,k) f(k,c)
        for (Eigen::Index k = 0; k < m.dim(t); ++k)
          phi(out, voff[static_cast<std::size_t>(t)] + r * m.dim(t) + k) -= f(k, c);
      }
    }
  }
  return phi;
}

template <class Scalar>
struct MorphismSpace {
  DimVector source_dims;
  DimVector target_dims;
  std::vector<MatrixFamily<Scalar>> basis;

  [[nodiscard]] std::size_t dimension() const noexcept { return basis.size(); }
};

template <class Scalar>
struct ExtSpace {
  DimVector source_dims;
  DimVector target_dims;
  std::vector<MatrixFamily<Scalar>> cocycles;  ///< classes form a basis of Ext^1

  [[nodiscard]] std::size_t dimension() const noexcept { return cocycles.size(); }
};

template <class Scalar>
MorphismSpace<Scalar> hom_space(const Representation<Scalar>& m, const Representation<Scalar>& n) {
  const Mat<Scalar> kernel = kernel_basis(commutation_map(m, n));
  MorphismSpace<Scalar> out{m.dims(), n.dims(), {}};
  for (Eigen::Index k = 0; k < kernel.cols(); ++k)
    out.basis.push_back(unflatten_vertex_family(m, n, Vec<Scalar>(kernel.col(k))));
  return out;
}

template <class Scalar>
ExtSpace<Scalar> ext1_space(const Representation<Scalar>& m, const Representation<Scalar>& n) {
  const Mat<Scalar> reps = cokernel_basis(commutation_map(m, n));
  ExtSpace<Scalar> out{m.dims(), n.dims(), {}};
  for (Eigen::Index k = 0; k < reps.cols(); ++k)
    out.cocycles.push_back(unflatten_arrow_family(m, n, Vec<Scalar>(reps.col(k))));
  return out;
}

struct HomExtDims {
  std::size_t hom = 0;
  std::size_t ext = 0;
};

/// dim Hom and dim Ext^1 from a single rank computation of Phi.
template <class Scalar>
HomExtDims hom_ext_dims(const Representation<Scalar>& m, const Representation<Scalar>& n) {
  const Mat<Scalar> phi = commutation_map(m, n);
  const auto r = rank(phi);
  return {static_cast<std::size_t>(phi.cols() - r), static_cast<std::size_t>(phi.rows() - r)};
}

/// eta lies in the image of Phi.
template <class Scalar>
bool is_coboundary(const Representation<Scalar>& m, const Representation<Scalar>& n,
                   const MatrixFamily<Scalar>& eta) {
  const Vec<Scalar> rhs = flatten_arrow_family(m, n, eta);
  return solve(commutation_map(m, n), rhs).has_value();
}

/// Phi(u) as an arrow-indexed family.
template <class Scalar>
MatrixFamily<Scalar> coboundary(const Representation<Scalar>& m, const Representation<Scalar>& n,
                                const MatrixFamily<Scalar>& u) {
  return unflatten_arrow_family(m, n, Vec<Scalar>(commutation_map(m, n) * flatten_vertex_family(m, n, u)));
}

template <class Scalar>
std::size_t end_dim(const Representation<Scalar>& m) {
  return hom_ext_dims(m, m).hom;
}

/// End(M) = k. Throws std::invalid_argument on the zero representation.
template <class Scalar>
bool is_schur(const Representation<Scalar>& m) {
  if (m.is_zero()) throw std::invalid_argument("is_schur: zero representation");
  return end_dim(m) == 1;
}

template <class Scalar>
Representation<Scalar> direct_sum(const Representation<Scalar>& m, const Representation<Scalar>& n) {
  require_compatible(m, n);
  MatrixFamily<Scalar> maps;
  for (Eigen::Index a = 0; a < m.quiver().arrow_count(); ++a) {
    const Mat<Scalar>& f = m.map(a);
    const Mat<Scalar>& g = n.map(a);
    Mat<Scalar> block = Mat<Scalar>::Zero(f.rows() + g.rows(), f.cols() + g.cols());
    block.topLeftCorner(f.rows(), f.cols()) = f;
    block.bottomRightCorner(g.rows(), g.cols()) = g;
    maps.push_back(std::move(block));
  }
  return Representation<Scalar>(m.quiver(), m.field(), DimVector(IntVector(m.dims().coords() + n.dims().coords())),
                                std::move(maps));
}

// -- isomorphism ---------------------------------------------------------------

enum class IsoVerdict {
  isomorphic,       ///< an invertible morphism was found (and is returned)
  not_isomorphic,   ///< proven: no invertible morphism exists
  not_certified,    ///< search exhausted its budget without finding one
};

template <class Scalar>
struct IsoResult {
  IsoVerdict verdict = IsoVerdict::not_certified;
  std::optional<MatrixFamily<Scalar>> witness;

  explicit operator bool() const noexcept { return verdict == IsoVerdict::isomorphic; }
};

/// Every component is square of full rank.
template <class Scalar>
bool is_invertible_family(const MatrixFamily<Scalar>& u) {
  for (const auto& block : u)
    if (block.rows() != block.cols() || rank(block) != block.rows()) return false;
  return true;
}

struct IsoSearchOptions {
  std::uint64_t seed = 0;
  int rational_retries = 20;
  int rational_coefficient_bound = 3;
  int prime_retries = 20;
  std::size_t exhaustive_max_dim = 4;
  double exhaustive_max_candidates = 1e5;
};

/// Sound; complete up to the documented search. Proven negatives come from
/// unequal dimension vectors, an empty Hom, dim Hom(M,N), dim Hom(N,M) or
/// dim End(N) differing from dim End(M), or an exhaustive search over F_p. Otherwise random combinations of a Hom basis
/// are tried (integers in [-3,3] over Q, uniform residues over F_p).
template <class Scalar>
IsoResult<Scalar> is_isomorphic(const Representation<Scalar>& m, const Representation<Scalar>& n,
                                const IsoSearchOptions& opts = {}) {
  require_compatible(m, n);
  if (!(m.dims() == n.dims())) return {IsoVerdict::not_isomorphic, std::nullopt};
  if (m.is_zero())
    return {IsoVerdict::isomorphic,
            MatrixFamily<Scalar>(static_cast<std::size_t>(m.quiver().vertex_count()), Mat<Scalar>(0, 0))};
  const auto hom = hom_space(m, n);
  const std::size_t end_m = end_dim(m);
  if (hom.dimension() == 0 || hom.dimension() != end_m || end_dim(n) != end_m ||
      hom_ext_dims(n, m).hom != end_m)
    return {IsoVerdict::not_isomorphic, std::nullopt};

  auto combine = [&](const std::vector<long long>& coeffs) {
    MatrixFamily<Scalar> u = hom.basis.front();
    for (auto& block : u) block.setZero();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      const Scalar c = m.scalar(coeffs[k]);
      for (std::size_t v = 0; v < u.size(); ++v) u[v] += c * hom.basis[k][v];
    }
    return u;
  };
  auto found = [&](MatrixFamily<Scalar> u) { return IsoResult<Scalar>{IsoVerdict::isomorphic, std::move(u)}; };

  const std::size_t h = hom.dimension();
  // A single basis vector is the most common case (bricks); try it first.
  if (is_invertible_family(hom.basis.front())) return found(hom.basis.front());

  std::mt19937_64 rng(opts.seed);
  if constexpr (std::is_same_v<Scalar, Zp>) {
    const auto p = static_cast<long long>(m.field().characteristic());
    if (h <= opts.exhaustive_max_dim &&
        std::pow(static_cast<double>(p), static_cast<double>(h)) <= opts.exhaustive_max_candidates) {
      std::vector<long long> coeffs(h, 0);
      while (true) {
        std::size_t k = 0;
        while (k < h && ++coeffs[k] == p) coeffs[k++] = 0;
        if (k == h) break;
        auto u = combine(coeffs);
        if (is_invertible_family(u)) return found(std::move(u));
      }
      return {IsoVerdict::not_isomorphic, std::nullopt};
    }
    std::uniform_int_distribution<long long> dist(0, p - 1);
    for (int attempt = 0; attempt < opts.prime_retries; ++attempt) {
      std::vector<long long> coeffs(h);
      for (auto& c : coeffs) c = dist(rng);
      auto u = combine(coeffs);
      if (is_invertible_family(u)) return found(std::move(u));
    }
  } else {
    std::uniform_int_distribution<long long> dist(-opts.rational_coefficient_bound, opts.rational_coefficient_bound);
    for (int attempt = 0; attempt < opts.rational_retries; ++attempt) {
      std::vector<long long> coeffs(h);
      for (auto& c : coeffs) c = dist(rng);
      auto u = combine(coeffs);
      if (is_invertible_family(u)) return found(std::move(u));
    }
  }
  return {IsoVerdict::not_certified, std::nullopt};
}

/// u_t(a) f_a = g_a u_s(a) for every arrow.
template <class Scalar>
bool is_morphism(const Representation<Scalar>& m, const Representation<Scalar>& n, const MatrixFamily<Scalar>& u) {
  require_compatible(m, n);
  if (static_cast<Eigen::Index>(u.size()) != m.quiver().vertex_count()) return false;
  for (Eigen::Index i = 0; i < m.quiver().vertex_count(); ++i)
    if (u[static_cast<std::size_t>(i)].rows() != n.dim(i) || u[static_cast<std::size_t>(i)].cols() != m.dim(i))
      return false;
  for (Eigen::Index a = 0; a < m.quiver().arrow_count(); ++a) {
    const auto& arrow = m.quiver().arrow(a);
    const Mat<Scalar> lhs = u[static_cast<std::size_t>(arrow.target)] * m.map(a);
    const Mat<Scalar> rhs = n.map(a) * u[static_cast<std::size_t>(arrow.source)];
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace qrep

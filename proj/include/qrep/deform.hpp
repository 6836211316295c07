#pragma once

// First-order deformations over the dual numbers k[e] (e^2 = 0) and the
// universal deformation ring verdict derived from End and Ext^1.
//
// A lift of M over k[e] is free over k[e] with basis the chosen basis of M, so
// it is determined by arrow actions f_a + e g_a. Two lifts are isomorphic (as
// lifts, i.e. compatibly with reduction mod e) iff they are conjugate by some
// id + e h, which happens iff g^1 - g^2 = Phi(h) is a coboundary.

#include <string>

#include "qrep/indec.hpp"
#include "qrep/rep.hpp"

namespace qrep {

template <class Scalar>
class DualNumberLift {
 public:
  /// Throws MismatchError unless g has one matrix per arrow shaped like M's.
  DualNumberLift(Representation<Scalar> base, MatrixFamily<Scalar> perturbation)
      : base_(std::move(base)), perturbation_(std::move(perturbation)) {
    (void)flatten_arrow_family(base_, base_, perturbation_);
  }

  [[nodiscard]] const Representation<Scalar>& base() const noexcept { return base_; }
  [[nodiscard]] const MatrixFamily<Scalar>& perturbation() const noexcept { return perturbation_; }

  /// Reduction mod e: exactly the base representation.
  [[nodiscard]] const Representation<Scalar>& reduce() const noexcept { return base_; }

  /// The lift viewed as a kQ-representation of twice the dimension: in the
  /// k-basis (m, e m) each arrow acts by [[f, 0], [g, f]].
  [[nodiscard]] Representation<Scalar> as_k_representation() const {
    MatrixFamily<Scalar> maps;
    for (Eigen::Index a = 0; a < base_.quiver().arrow_count(); ++a) {
      const Mat<Scalar>& f = base_.map(a);
      const Mat<Scalar>& g = perturbation_[static_cast<std::size_t>(a)];
      Mat<Scalar> block = Mat<Scalar>::Zero(2 * f.rows(), 2 * f.cols());
      block.topLeftCorner(f.rows(), f.cols()) = f;
      block.bottomLeftCorner(f.rows(), f.cols()) = g;
      block.bottomRightCorner(f.rows(), f.cols()) = f;
      maps.push_back(std::move(block));
    }
    return Representation<Scalar>(base_.quiver(), base_.field(), DimVector(IntVector(2 * base_.dims().coords())),
                                  std::move(maps));
  }

 private:
  Representation<Scalar> base_;
  MatrixFamily<Scalar> perturbation_;
};

template <class Scalar>
DualNumberLift<Scalar> make_lift(const Representation<Scalar>& m, MatrixFamily<Scalar> g) {
  return DualNumberLift<Scalar>(m, std::move(g));
}

/// k[e] (x) M.
template <class Scalar>
DualNumberLift<Scalar> trivial_lift(const Representation<Scalar>& m) {
  MatrixFamily<Scalar> g;
  for (const auto& f : m.maps()) g.push_back(Mat<Scalar>::Zero(f.rows(), f.cols()));
  return DualNumberLift<Scalar>(m, std::move(g));
}

template <class Scalar>
bool lifts_isomorphic(const DualNumberLift<Scalar>& l1, const DualNumberLift<Scalar>& l2) {
  if (!(l1.base() == l2.base())) throw MismatchError("lifts of different representations");
  MatrixFamily<Scalar> diff = l1.perturbation();
  for (std::size_t a = 0; a < diff.size(); ++a) diff[a] -= l2.perturbation()[a];
  return is_coboundary(l1.base(), l1.base(), diff);
}

/// dim t_M = dim Ext^1(M, M). Throws std::invalid_argument on the zero representation.
template <class Scalar>
std::size_t tangent_space_dim(const Representation<Scalar>& m) {
  if (m.is_zero()) throw std::invalid_argument("tangent_space_dim: zero representation");
  return ext1_space(m, m).dimension();
}

enum class UdrVerdict {
  isomorphic_to_k,              ///< End = k and Ext^1 = 0: R(kQ, M) = k
  quotient_of_power_series,     ///< End = k, Ext^1 of dimension r > 0: k[[t_1..t_r]] ->> R
  no_universal_ring_guaranteed  ///< End != k
};

std::string verdict_name(UdrVerdict v);

struct UdrReport {
  std::size_t end_dim = 0;
  std::size_t ext_dim = 0;
  bool has_universal_ring = false;
  UdrVerdict verdict = UdrVerdict::no_universal_ring_guaranteed;

  /// "IsomorphicToK", "QuotientOfPowerSeries(r)" or "NoUniversalRingGuaranteed".
  [[nodiscard]] std::string verdict_text() const;
};

UdrReport make_udr_report(std::size_t end_dim, std::size_t ext_dim);

/// Throws std::invalid_argument on the zero representation.
template <class Scalar>
UdrReport udr_report(const Representation<Scalar>& m) {
  if (m.is_zero()) throw std::invalid_argument("udr_report: zero representation");
  const auto dims = hom_ext_dims(m, m);
  return make_udr_report(dims.hom, dims.ext);
}

}  // namespace qrep

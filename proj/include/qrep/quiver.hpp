#pragma once

#include <Eigen/Core>

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "qrep/errors.hpp"

namespace qrep {

using IntVector = Eigen::Matrix<long long, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

struct Arrow {
  std::string id;
  Eigen::Index source = 0;
  Eigen::Index target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite directed multigraph. Vertices are addressed by dense 0-based index in
/// declaration order; labels are only for input and output. Loops and parallel
/// arrows are allowed here and rejected later by classify().
class Quiver {
 public:
  Quiver(std::vector<std::string> vertex_labels, std::vector<Arrow> arrows, std::string name = {});
  /// Vertices labelled "1".."n"; arrows named "a1".."am" in the given order.
  static Quiver from_edges(Eigen::Index vertex_count,
                           const std::vector<std::pair<Eigen::Index, Eigen::Index>>& edges,
                           std::string name = {});

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] Eigen::Index vertex_count() const noexcept {
    return static_cast<Eigen::Index>(labels_.size());
  }
  [[nodiscard]] Eigen::Index arrow_count() const noexcept {
    return static_cast<Eigen::Index>(arrows_.size());
  }
  [[nodiscard]] const std::vector<std::string>& vertex_labels() const noexcept { return labels_; }
  [[nodiscard]] const std::string& label(Eigen::Index v) const { return labels_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  [[nodiscard]] const Arrow& arrow(Eigen::Index a) const { return arrows_.at(static_cast<std::size_t>(a)); }

  [[nodiscard]] std::optional<Eigen::Index> vertex_index(const std::string& label) const;
  [[nodiscard]] std::optional<Eigen::Index> arrow_index(const std::string& id) const;

  /// No arrow starts at v.
  [[nodiscard]] bool is_sink(Eigen::Index v) const;
  /// No arrow ends at v.
  [[nodiscard]] bool is_source(Eigen::Index v) const;
  /// Same quiver with every arrow incident to v reversed (ids and order kept).
  [[nodiscard]] Quiver reversed_at(Eigen::Index v) const;

  Quiver with_name(std::string name) const;

  /// Structural equality; the display name is ignored.
  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.labels_ == b.labels_ && a.arrows_ == b.arrows_;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Arrow> arrows_;
};

/// Non-negative integer vector indexed by the vertices of a quiver.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(IntVector coords);
  DimVector(std::initializer_list<long long> coords);

  static DimVector zero(Eigen::Index n) { return DimVector(IntVector::Zero(n)); }
  static DimVector unit(Eigen::Index n, Eigen::Index i);

  [[nodiscard]] Eigen::Index size() const noexcept { return coords_.size(); }
  [[nodiscard]] long long operator[](Eigen::Index i) const { return coords_(i); }
  [[nodiscard]] const IntVector& coords() const noexcept { return coords_; }
  [[nodiscard]] long long total() const { return coords_.sum(); }
  [[nodiscard]] bool is_zero() const { return coords_.isZero(); }
  /// Comma-separated coordinates, e.g. "1,2,1".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const DimVector& a, const DimVector& b) {
    return a.coords_.size() == b.coords_.size() && a.coords_ == b.coords_;
  }
  /// Lexicographic by coordinates, shorter vectors first.
  friend std::strong_ordering operator<=>(const DimVector& a, const DimVector& b);

 private:
  IntVector coords_;
};

/// <m, n> = sum_i m_i n_i - sum_arrows m_s n_t. Accepts arbitrary integer vectors.
long long euler_form(const Quiver& q, const IntVector& m, const IntVector& n);
inline long long euler_form(const Quiver& q, const DimVector& m, const DimVector& n) {
  return euler_form(q, m.coords(), n.coords());
}

/// q(n) = <n, n>.
long long tits_form(const Quiver& q, const IntVector& n);
inline long long tits_form(const Quiver& q, const DimVector& n) { return tits_form(q, n.coords()); }

/// B = C + C^T for the Euler matrix C, so that 2 q(n) = n^T B n.
IntMatrix symmetrized_matrix(const Quiver& q);

/// Sylvester's criterion on symmetrized_matrix, in exact big-integer arithmetic.
bool is_positive_definite(const Quiver& q);

struct DynkinType {
  enum class Family { A, D, E };
  Family family = Family::A;
  int rank = 1;

  [[nodiscard]] std::string name() const;
  /// Parses "A3", "D5", "E8"; returns nullopt for anything else (including D3, E9).
  static std::optional<DynkinType> parse(const std::string& text);

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

struct QuiverComponent {
  std::vector<Eigen::Index> vertices;  ///< ascending
  std::optional<DynkinType> type;      ///< set iff the component is a Dynkin graph
  std::string reason;                  ///< why it is not Dynkin, when type is empty
};

struct Classification {
  /// Connected components of the underlying graph, ordered by smallest vertex.
  std::vector<QuiverComponent> components;

  [[nodiscard]] bool is_finite() const;
  [[nodiscard]] std::vector<DynkinType> types() const;
  /// Reason naming the first non-Dynkin component; empty for finite type.
  [[nodiscard]] std::string witness() const;
};

/// Dynkin recognition by graph shape (loops, multiplicities, cycles, degree and
/// arm lengths), cross-checked per component against positive definiteness of
/// the Tits form. A disagreement throws InvariantViolation.
Classification classify(const Quiver& q);

/// Throws InfiniteTypeError unless classify(q) is of finite type.
void require_finite_type(const Quiver& q);

enum class Orientation {
  linear,       ///< every edge from lower to higher vertex index
  reversed,     ///< every edge from higher to lower index
  alternating,  ///< bipartite: even-coloured vertices are sources
  inward,       ///< every edge points toward the branch (or middle) vertex
};

std::string orientation_name(Orientation o);
std::vector<Orientation> all_orientations();

/// Standard labelling: A_n is the path 1-2-...-n; D_n is the path 1-...-(n-1) with n
/// attached to n-2; E_n is the path 1-...-(n-1) with n attached to 3.
Quiver dynkin_quiver(DynkinType type, Orientation orientation = Orientation::linear);
/// Two arrows 1 -> 2.
Quiver kronecker_quiver();
/// Oriented cycle 1 -> 2 -> ... -> n -> 1 (extended A_{n-1}).
Quiver cyclic_quiver(Eigen::Index n);
/// Four arms 1,2,3,4 -> 5 (extended D_4).
Quiver extended_d4_quiver();

}  // namespace qrep

#pragma once

// Text formats.
//
// Quiver file:
//   # comment
//   quiver <name>
//   vertices: v1 v2 ... vn
//   arrow <id>: <src> -> <dst>
//
// Representation file (vertices and arrows refer to a quiver file):
//   rep <name> over <Q | F<p>>
//   dim <vertex> = <nat>
//   map <arrow> = [[a, b/c], [d, e]]
//
// Missing `dim` lines mean 0. A `map` line may be omitted only when the matrix
// is empty. An empty matrix with r > 0 rows is written [[], ..., []].

#include <string>
#include <string_view>
#include <variant>

#include "qrep/rep.hpp"

namespace qrep {

Quiver parse_quiver(std::string_view text);
std::string format_quiver(const Quiver& q);

using AnyRepresentation = std::variant<Representation<Rational>, Representation<Zp>>;

struct ParsedRep {
  std::string name;
  AnyRepresentation rep;
};

/// Unknown vertices or arrows raise MismatchError (the file does not belong to
/// `q`); everything else malformed raises ParseError with line and column.
ParsedRep parse_rep(std::string_view text, const Quiver& q);

template <class Scalar>
std::string format_matrix(const Mat<Scalar>& m) {
  std::string out = "[";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (r) out += ", ";
    out += '[';
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += FieldTraits<Scalar>::to_string(m(r, c));
    }
    out += ']';
  }
  return out + "]";
}

template <class Scalar>
std::string format_rep(const Representation<Scalar>& m, const std::string& name) {
  const Quiver& q = m.quiver();
  std::string out = "rep " + name + " over " + m.field().name() + "\n";
  for (Eigen::Index v = 0; v < q.vertex_count(); ++v)
    out += "dim " + q.label(v) + " = " + std::to_string(m.dims()[v]) + "\n";
  for (Eigen::Index a = 0; a < q.arrow_count(); ++a)
    out += "map " + q.arrow(a).id + " = " + format_matrix(m.map(a)) + "\n";
  return out;
}

/// Comma-separated coordinates in vertex declaration order, e.g. "1,2,1".
DimVector parse_dim_vector(std::string_view text, const Quiver& q);

}  // namespace qrep

// Writes the bundled quiver and representation files under <dir>/quivers and <dir>/reps.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "qrep/io.hpp"

namespace fs = std::filesystem;

namespace {

void write(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

std::string file_stem(const qrep::Quiver& q) {
  std::string s = q.name();
  for (auto& c : s)
    if (c == '-') c = '_';
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_data <dir>\n";
    return 1;
  }
  const fs::path root = argv[1];
  fs::create_directories(root / "quivers");
  fs::create_directories(root / "reps");

  using qrep::DynkinType;
  std::vector<DynkinType> types;
  for (int n = 1; n <= 8; ++n) types.push_back({DynkinType::Family::A, n});
  for (int n = 4; n <= 8; ++n) types.push_back({DynkinType::Family::D, n});
  for (int n = 6; n <= 8; ++n) types.push_back({DynkinType::Family::E, n});
  for (const auto& t : types)
    for (auto o : qrep::all_orientations()) {
      const auto q = qrep::dynkin_quiver(t, o);
      write(root / "quivers" / (file_stem(q) + ".quiver"), qrep::format_quiver(q));
    }
  for (const auto& q : {qrep::kronecker_quiver(), qrep::cyclic_quiver(3), qrep::extended_d4_quiver(),
                        qrep::cyclic_quiver(1).with_name("loop")})
    write(root / "quivers" / (file_stem(q) + ".quiver"), qrep::format_quiver(q));

  // Small modules used by the examples in the README and the CLI tests.
  using R = qrep::Representation<qrep::Rational>;
  using M = qrep::Mat<qrep::Rational>;
  const auto QQ = qrep::FieldSpec::rationals();
  const auto a2 = qrep::dynkin_quiver({DynkinType::Family::A, 2});
  auto one = [](long long v) { return M::Constant(1, 1, qrep::Rational(v)); };
  write(root / "reps" / "A2_S1.rep", qrep::format_rep(R::simple(a2, QQ, 0), "S1"));
  write(root / "reps" / "A2_S2.rep", qrep::format_rep(R::simple(a2, QQ, 1), "S2"));
  write(root / "reps" / "A2_P1.rep", qrep::format_rep(R(a2, QQ, {1, 1}, {one(1)}), "P1"));
  write(root / "reps" / "A2_zero.rep", qrep::format_rep(R::zero(a2, QQ), "zero"));
  write(root / "reps" / "A2_S1_F2.rep",
        qrep::format_rep(qrep::Representation<qrep::Zp>::simple(a2, qrep::FieldSpec::prime(2), 0), "S1"));
  const auto kq = qrep::kronecker_quiver();
  write(root / "reps" / "kronecker_M.rep", qrep::format_rep(R(kq, QQ, {1, 1}, {one(1), one(0)}), "M"));
  return 0;
}

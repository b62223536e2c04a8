#include "toric/corpus.hpp"

namespace toric {

Fan make_projective_space(int n) {
  if (n < 1) fail(ErrorCode::BadInput, "dimension");
  IntMatrix rays = IntMatrix::Zero(n, n + 1);
  for (int i = 0; i < n; ++i) {
    rays(i, i) = 1;
    rays(i, n) = -1;
  }
  std::vector<std::vector<int>> cones;
  for (int omit = 0; omit <= n; ++omit) {
    std::vector<int> c;
    for (int k = 0; k <= n; ++k)
      if (k != omit) c.push_back(k);
    cones.push_back(std::move(c));
  }
  return Fan(n, std::move(rays), std::move(cones));
}

Fan make_s7() {
  IntMatrix rays(2, 5);
  rays << 1, 0, -1, 0, 1,
          0, 1, 0, -1, 1;
  std::vector<std::vector<int>> cones = {{0, 4}, {4, 1}, {1, 2}, {2, 3}, {3, 0}};
  return Fan(2, std::move(rays), std::move(cones));
}

Fan make_s6() {
  IntMatrix rays(2, 6);
  rays << 1, 0, -1, 0, 1, -1,
          0, 1, 0, -1, 1, -1;
  std::vector<std::vector<int>> cones = {{0, 4}, {4, 1}, {1, 2},
                                         {2, 5}, {5, 3}, {3, 0}};
  return Fan(2, std::move(rays), std::move(cones));
}

std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  out.push_back({"p2", make_projective_space(2)});
  out.push_back({"p3", make_projective_space(3)});
  out.push_back({"s7", make_s7()});
  out.push_back({"s6", make_s6()});
  out.push_back({"f0", kleinschmidt_build(1, 1, {0}).fan});
  out.push_back({"f1", kleinschmidt_build(1, 1, {1}).fan});
  out.push_back({"f2", kleinschmidt_build(1, 1, {2}).fan});
  out.push_back({"kl_2_1_2", kleinschmidt_build(2, 1, {2}).fan});
  out.push_back({"kl_1_2_01", kleinschmidt_build(1, 2, {0, 1}).fan});
  return out;
}

}  // namespace toric

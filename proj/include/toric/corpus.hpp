#pragma once

#include "toric/kleinschmidt.hpp"

#include <string>
#include <vector>

namespace toric {

Fan make_projective_space(int n);
Fan make_s7();  // del Pezzo of degree 7: blow-up of P^2 in two points
Fan make_s6();  // del Pezzo of degree 6; its effective cone is not simplicial

struct CorpusEntry {
  std::string name;
  Fan fan;
};

// The bundled test corpus: P^2, P^3, S7, S6, the Hirzebruch surfaces F0, F1,
// F2, and two higher Kleinschmidt bundles.
std::vector<CorpusEntry> corpus();

}  // namespace toric

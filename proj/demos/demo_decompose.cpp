/*
 * Splits every simple module of a small cyclotomic quotient under the
 * order-p token symmetry: inventory, inertia data, exact projectors, and
 * the squared-dimension bookkeeping for the fixed subalgebra.
 */

#include <hecke/clifford.hpp>

#include <iostream>

int main() {
  using namespace hecke;

  HrpnSpec spec = generic_hrpn_spec(2, 2, 2);
  long n = 2;
  std::cout << "r=" << spec.r << " p=" << spec.p << " n=" << n << "\n";

  SemisimplicityCertificate cert = check_semisimple(spec.cyclotomic(), n);
  if (!cert.semisimple) {
    std::cout << "not semisimple: " << cert.condition << "\n";
    return 1;
  }

  Inventory inv = modules_inventory(spec.cyclotomic(), n);
  std::cout << "modules: " << inv.entries.size() << ", sum of squared dims " << inv.dim_square_sum
            << " (expected " << inv.expected << ")\n\n";

  std::vector<DecompositionReport> reports;
  for (const InventoryEntry& e : inv.entries) {
    DecompositionReport rep = decompose_fixed(e.module, spec);
    std::cout << "shape " << e.shape.to_json().dump() << "\n";
    std::cout << "  kappa " << rep.kappa << ", |K| " << rep.group_order << ", pieces:";
    for (const DecompositionPiece& pc : rep.pieces)
      std::cout << " (j=" << pc.j << " dim=" << pc.dim << (pc.simple ? " simple" : "") << ")";
    std::cout << "\n";
    reports.push_back(std::move(rep));
  }

  // One representative per symmetry orbit carries the fixed-subalgebra count.
  std::vector<std::vector<std::size_t>> orbits = g_orbit_classes(inv, spec);
  long total = 0;
  for (const auto& orbit : orbits)
    for (const DecompositionPiece& pc : reports[orbit.front()].pieces) total += pc.dim * pc.dim;
  long expected = inv.expected / spec.p;
  std::cout << "\norbits: " << orbits.size() << ", fixed-subalgebra squared dims " << total
            << " (expected " << expected << ")\n";
  return total == expected ? 0 : 1;
}

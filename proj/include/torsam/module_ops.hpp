#pragma once

#include <vector>

#include "torsam/module.hpp"

namespace torsam {

// N / m^n N
ModulePresentation quotient_by_power(const ModulePresentation& N, int n);
// R / I^n for homogeneous I; an empty I means the maximal ideal
ModulePresentation quotient_by_ideal_power(const RingPtr& R, const std::vector<Poly>& I, int n);
// m^n N presented as a module in its own right (minimal generators)
ModulePresentation power_module(const ModulePresentation& N, int n);
// the submodule generated by the given cover elements, as a module
ModulePresentation image_module(const ModulePresentation& N, const std::vector<Vector>& elements);
// M / x M
ModulePresentation quotient_by_element(const ModulePresentation& M, const Poly& x);
ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b);
ModulePresentation tensor(const ModulePresentation& a, const ModulePresentation& b);
// M(s): generator degrees lowered by s
ModulePresentation twist(const ModulePresentation& M, int s);
// i-th syzygy module of a minimal resolution, Omega^0 = M
ModulePresentation syzygy_module(const ModulePresentation& M, int i);
// M as a module over R/J, for J killing M (relations copied modulo J)
ModulePresentation change_ring(const ModulePresentation& M, const RingPtr& target);

// products of n elements of I (with repetition)
std::vector<Poly> ideal_power_generators(const RingPtr& R, const std::vector<Poly>& I, int n);

}  // namespace torsam

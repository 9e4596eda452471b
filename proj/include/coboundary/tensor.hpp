#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>

#include "coboundary/crystal.hpp"

namespace coboundary {

/// Tensor product on A x B. With eps = epsilon_i(a), phi = phi_i(b):
///   e_i (a,b) = (e_i a, b) if eps > phi, else (a, e_i b)
///   f_i (a,b) = (f_i a, b) if eps >= phi, else (a, f_i b)
/// The result keeps the flattened factor sizes of both operands.
CrystalGraph tensor(const CrystalGraph& a, const CrystalGraph& b);

/// Left-nested product of one or more crystals, flattened.
CrystalGraph tensor_many(std::span<const CrystalGraph> factors);
CrystalGraph tensor_many(std::span<const CrystalGraph* const> factors);

/// Highest weights of the components with multiplicity, largest first.
using Decomposition = std::map<Weight, int, std::greater<>>;
Decomposition decompose(const CrystalGraph& b);

/// "{(2,0):1, (1,1):1}"
std::string to_string(const Decomposition& d);

}  // namespace coboundary

#pragma once

#include "coboundary/crystal.hpp"
#include "coboundary/tableau.hpp"

namespace testing_support {

using namespace coboundary;

// sl2 standard crystal: a0 --1--> a1, weights (1) and (-1) in pairing coordinates.
inline CrystalGraph sl2_standard() {
    CrystalGraph::Builder b(RootDatum(Family::A, 1));
    b.add_vertex({1}, "a0");
    b.add_vertex({-1}, "a1");
    b.add_edge(0, 1, 1);
    return std::move(b).build();
}

// One vertex of weight zero.
inline CrystalGraph trivial(const RootDatum& d) {
    CrystalGraph::Builder b(d);
    b.add_vertex(d.zero(), "d");
    return std::move(b).build();
}

inline CrystalGraph gl(int n, std::initializer_list<int> shape) { return generate_B_lambda(Shape(shape), n); }

}  // namespace testing_support

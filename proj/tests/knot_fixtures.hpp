#pragma once

// Shared fixtures: the reference polynomials the suites pin down exactly,
// plus standard diagram presentations used across the tests.

#include "knotinv/diagram.hpp"
#include "knotinv/laurent.hpp"

namespace fixtures {

using knotinv::BraidWord;
using knotinv::LaurentPoly;
using knotinv::PlanarDiagram;

// J(3_1) = -t^-4 + t^-3 + t^-1
inline LaurentPoly jones_3_1() {
    return LaurentPoly::from_terms({{-4, -1}, {-3, 1}, {-1, 1}});
}

// J(4_1) = t^-2 - t^-1 + 1 - t + t^2
inline LaurentPoly jones_4_1() {
    return LaurentPoly::from_terms({{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}});
}

// J(5_1) = -t^-7 + t^-6 - t^-5 + t^-4 + t^-2  (torus pattern, span 5)
inline LaurentPoly jones_5_1() {
    return LaurentPoly::from_terms({{-7, -1}, {-6, 1}, {-5, -1}, {-4, 1}, {-2, 1}});
}

// J(9_1): torus pattern, span 9
inline LaurentPoly jones_9_1() {
    return LaurentPoly::from_terms({{-13, -1},
                                    {-12, 1},
                                    {-11, -1},
                                    {-10, 1},
                                    {-9, -1},
                                    {-8, 1},
                                    {-7, -1},
                                    {-6, 1},
                                    {-4, 1}});
}

inline PlanarDiagram trefoil_pd() {
    return PlanarDiagram::parse("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)");
}

inline PlanarDiagram figure_eight_pd() {
    return PlanarDiagram::parse("X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)");
}

inline BraidWord torus_braid(int n) {
    BraidWord b;
    b.strands = 2;
    for (int i = 0; i < (n < 0 ? -n : n); ++i) b.letters.push_back(n < 0 ? -1 : 1);
    return b;
}

inline BraidWord braid(int strands, std::initializer_list<int> letters) {
    BraidWord b;
    b.strands = strands;
    b.letters.assign(letters);
    return b;
}

}  // namespace fixtures

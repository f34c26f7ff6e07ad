// Prints the GL_2 counting polynomials for small genus and checks one value
// against a brute-force count over GL_2(F_3).
#include <iostream>

#include "charstack/gln.hpp"
#include "charstack/oracle.hpp"
#include "charstack/poly_format.hpp"

int main() {
    using namespace charstack;
    for (long g = 1; g <= 3; ++g) std::cout << "g=" << g << ": " << to_text(gln::count_polynomial_gln(2, g)) << '\n';

    const oracle::GroupTable gl23(oracle::GroupKind::GL, 2, 3);
    std::cout << "GL2(F_3), g=2: polynomial " << to_string(gln::count_polynomial_gln(2, 2).eval(3)) << ", brute force "
              << to_string(oracle::groupoid_count(gl23, 2)) << '\n';
}

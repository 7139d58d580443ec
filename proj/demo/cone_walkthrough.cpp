// Walks through computations on the cone of pi_1 : cc1 + cc2 -> cc1, a chain
// complex of infinite type, and on its finite-type bottom Cone(alpha').

#include "effhom/effhom.hpp"

#include <iostream>

using namespace effhom;
using namespace effhom::instances;

int main() {
    const ChainComplex top = exampleCone().top();
    const ChainComplex bottom = exampleCone().bottom();

    const Element x = parseElement("(5, 7*x4 + 8*x0, 3)", top.at(3));
    const Element dx = top.diff(2)(x);
    std::cout << "d_2" << format(x, top.at(3)) << " = " << format(dx, top.at(2)) << '\n';
    std::cout << "d_1" << format(dx, top.at(2)) << " = " << format(top.diff(1)(dx), top.at(1))
              << '\n';

    const Element ab = parseElement("(5, 7)", bottom.at(2));
    std::cout << "(d h1 + h1 d)(5, 7) = "
              << format(contractionComposite(bottom, h1Bottom(), 2)(ab), bottom.at(2)) << '\n';
    std::cout << "(d h2 + h2 d)(5, 7) = "
              << format(contractionComposite(bottom, h2Bottom(), 2)(ab), bottom.at(2)) << '\n';

    std::cout << "(d h + h d)" << format(x, top.at(2)) << " = "
              << format(contractionComposite(top, hTopCone(), 2)(x), top.at(2)) << '\n';

    const Element z = preimage(top, hTopCone(), 2, dx);
    std::cout << "pre-image of " << format(dx, top.at(2)) << " is " << format(z, top.at(3))
              << '\n';

    const Sampler sampler;
    const LawReport laws = checkReductionLaws(exampleCone().reduction(), sampler);
    for (const auto& s : laws.summaries())
        std::cout << LawReport::summaryLine(s) << '\n';

    for (Degree i = -2; i <= 2; ++i)
        std::cout << "H_" << i << "(zxznat) = "
                  << homologyViaEffectiveHomology(zxZnat(), i).toString() << '\n';
    return 0;
}

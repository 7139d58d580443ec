#pragma once

#include "effhom/effhom.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace effhom::cli {

/// A complex addressable from the command line. Effective-homology entries
/// expose their top complex as `complex`.
struct InstanceEntry {
    std::string id;
    std::string description;
    std::function<ChainComplex()> complex;
    std::function<const EffectiveHomology*()> effectiveHomology;
    std::string designatedHomotopy; // empty: none
    std::vector<std::pair<std::string, std::function<ChainMorphism()>>> extraMorphisms;
};

struct HomotopyEntry {
    std::string id;
    std::string description;
    std::string over; // instance id; empty means any instance
    std::function<HomotopyOperator(const ChainComplex&)> make;
};

inline const std::vector<InstanceEntry>& instanceCatalog() {
    using namespace effhom::instances;
    static const std::vector<InstanceEntry> entries = {
        {"null", "zero module and zero differential in every degree",
         [] { return nullComplex(); }, nullptr, "zero", {}},
        {"cc1", "Z in every degree, d_i = x2 (i even) or 0 (i odd)", [] { return cc1(); },
         nullptr, "", {}},
        {"fcc1", "cc1 declared free of finite type", [] { return fcc1(); }, nullptr, "", {}},
        {"cc2", "Z[N] in every degree, d_i keeps generators of the parity of i",
         [] { return cc2(); }, nullptr, "hcc2", {}},
        {"sum12", "direct sum cc1 + cc2", [] { return sum12(); }, nullptr, "", {}},
        {"idz2x0", "effective homology cc1 -> fcc1 with f = g = id, h = 0",
         [] { return idZ2x0().top(); }, [] { return &idZ2x0(); }, "", {}},
        {"zxznat", "effective homology cc1 + cc2 -> fcc1 with f = pi_1, g = (id, 0), h = (0, hcc2)",
         [] { return zxZnat().top(); }, [] { return &zxZnat(); }, "", {}},
        {"cone-example", "effective homology Cone(pi_1) -> Cone(alpha')",
         [] { return exampleCone().top(); }, [] { return &exampleCone(); }, "htop",
         {{"alpha", [] { return alphaPi1(); }},
          {"alpha'", [] {
               return bottomMorphism(zxZnat().reduction(), idZ2x0().reduction(), alphaPi1());
           }}}},
        {"cone-example.bottom", "Cone(alpha'), the finite-type bottom of cone-example",
         [] { return exampleCone().bottom(); }, nullptr, "h2", {}},
    };
    return entries;
}

inline const std::vector<HomotopyEntry>& homotopyCatalog() {
    using namespace effhom::instances;
    static const std::vector<HomotopyEntry> entries = {
        {"hcc2", "contracting homotopy of cc2", "cc2",
         [](const ChainComplex&) { return hCC2(); }},
        {"h1", "h1_i(a, b) = (0, a) on cone-example.bottom", "cone-example.bottom",
         [](const ChainComplex&) { return h1Bottom(); }},
        {"h2", "h2_i(a, b) = (b, 0) on cone-example.bottom", "cone-example.bottom",
         [](const ChainComplex&) { return h2Bottom(); }},
        {"htop", "h^Ex + g^Ex o h2 o f^Ex on cone-example", "cone-example",
         [](const ChainComplex&) { return hTopCone(); }},
        {"zero", "the zero homotopy on any instance", "",
         [](const ChainComplex& cc) { return zeroHomotopy(cc); }},
    };
    return entries;
}

inline const InstanceEntry* findInstance(const std::string& id) {
    for (const auto& e : instanceCatalog())
        if (e.id == id)
            return &e;
    return nullptr;
}

inline const HomotopyEntry* findHomotopy(const std::string& id) {
    for (const auto& e : homotopyCatalog())
        if (e.id == id)
            return &e;
    return nullptr;
}

} // namespace effhom::cli

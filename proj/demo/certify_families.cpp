// Certifies a handful of root graphs and prints the facet classes of their line graphs.

#include "nplus/classify.hpp"
#include "nplus/families.hpp"
#include "nplus/polytope.hpp"

#include <iostream>

int main() {
    using namespace nplus;
    struct Case {
        const char* name;
        Multigraph root;
    };
    const Case cases[] = {
        {"C7", odd_hole(3)},
        {"C5+d", odd_hole_plus(HolePlus::Double, 2)},
        {"C5+c", odd_hole_plus(HolePlus::Chord, 2, 2)},
        {"C5+E3", odd_hole_plus(HolePlus::Path, 2, 2, 3)},
        {"K4", Multigraph::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})},
    };
    for (const Case& c : cases) {
        const NPlusCertificate cert = decide_line_nplus_perfect(c.root);
        std::cout << c.name << ": " << (cert.perfect() ? "N+-perfect" : "N+-imperfect");
        if (cert.family) std::cout << " (" << cert.family->kind << ", hole " << cert.family->hole_length << ", ear " << cert.family->ear_length << ")";
        std::cout << '\n';
        for (const ClassifiedFacet& f : verify_edmonds_description(c.root).facets)
            if (f.cls.kind != FacetKind::Nonnegativity) std::cout << "    " << f.inequality.str() << "  [" << to_string(f.cls.kind) << "]\n";
    }
}

// One-dimensional modules of a Jackson algebra over F_7 and the
// deformation shape of two related conic points.

#include <iostream>

#include "jackson/jackson.hpp"

using namespace jackson;

int main() {
    FiniteField F(7, 1);
    GFElement zeta = zeta_image(F, 3);  // 2
    GFElement x = F.from_int(1);
    auto J = build_jackson(1, x, zeta);

    auto L = one_dim_locus(J);
    std::cout << "locus (" << L.shape << "):\n";
    for (auto& c : L.components) {
        std::cout << "  " << c.kind(3);
        for (auto& [k, v] : c.fixed) std::cout << " e" << k << "=" << v.str();
        if (c.conic) std::cout << " e" << c.ci << "*e" << c.cj << "=" << c.cval.str();
        std::cout << "\n";
    }
    std::cout << enumerate_points(J).size() << " points over " << F.describe() << "\n";

    // xi(a, b) and xi(u, zeta b) with a = zeta u
    GFElement a = F.from_int(3), b = x * a.inv();
    Character<GFElement> M{F.zero(), a, b}, N{F.zero(), a * zeta.inv(), zeta * b};
    auto shape = deformation_shape(tangent_matrix(J, {M, N}));
    for (auto& row : shape.rendering) {
        for (auto& s : row) std::cout << "  " << s;
        std::cout << "\n";
    }
}

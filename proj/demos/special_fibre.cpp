// From a curve fixture to the special fibre II_w, a mirror pair and the
// quantum-plane quotients of a theta vector.

#include <iostream>

#include "jackson/jackson.hpp"

using namespace jackson;

int main(int argc, char** argv) {
    std::string path = argc > 1 ? argv[1] : std::string(JACKSON_DEMO_FIXTURES) + "/50b2.json";
    auto c = curve_from_json(read_json_file(path));
    for (auto& r : curve_checks(c)) std::cout << (r.passed ? "ok   " : "FAIL ") << r.name << "\n";

    auto s = build_special_fibre(c.p, c.f, c.d);
    const auto& F = s.field;
    std::cout << c.label << ": w=" << s.w << " over " << F.describe() << ", lambda=" << s.lambda.str() << "\n";

    Character<GFElement> N{F.zero(), F.zero(), F.from_int(2)};
    auto Nperp = mirror(N, s.lambda, c.p);
    std::cout << "Ext^1(N, N^perp) = " << ext1(s.presentation, N, Nperp).dimension
              << ", predicted " << predict_ext_inf(c.p, s.lambda, N, Nperp) << "\n";

    ThetaVector<GFElement> th;
    th.p = c.p;
    for (long k = 0; k < c.p; ++k) th.coeffs.push_back(F.from_int(k + 1));
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        auto Q = brauer_class(th, i, j, s.w, c.p, s.lambda);
        std::cout << "  (" << i << "," << j << ") rank " << Q.rank << " " << Q.label << "\n";
    }
}

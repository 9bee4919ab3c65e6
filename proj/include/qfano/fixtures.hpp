#pragma once

#include "qfano/normal_form.hpp"
#include "qfano/rational.hpp"
#include "qfano/wps.hpp"

#include <string>
#include <vector>

namespace qfano {

/// A shape with its known invariants.
struct Fixture {
    std::string name;
    HypersurfaceShape shape;
    int q = 0;
    Rational a3;
    std::vector<int> basket;  // ascending indices
    std::int64_t genus = 0;
};

/// The index-13 hypersurface and the weighted projective spaces that occur as link targets.
inline const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all{
        {"X12", HypersurfaceShape({3, 4, 5, 6, 7}, 12), 13, Rational(1, 210), {2, 3, 3, 5, 7}, 4},
        {"P(3,4,5,7)", HypersurfaceShape::space({3, 4, 5, 7}), 19, Rational(1, 420), {3, 4, 5, 7}, 7},
        {"P(2,3,5,7)", HypersurfaceShape::space({2, 3, 5, 7}), 17, Rational(1, 210), {2, 3, 5, 7}, 11},
        {"P(1,3,4,5)", HypersurfaceShape::space({1, 3, 4, 5}), 13, Rational(1, 60), {3, 4, 5}, 18},
        {"P(1,2,3,5)", HypersurfaceShape::space({1, 2, 3, 5}), 11, Rational(1, 30), {2, 3, 5}, 22},
        {"P(1,1,2,3)", HypersurfaceShape::space({1, 1, 2, 3}), 7, Rational(1, 6), {2, 3}, 29},
    };
    return all;
}

inline const Fixture& fixture(const std::string& name) {
    for (const auto& f : fixtures())
        if (f.name == name) return f;
    throw std::out_of_range("no fixture " + name);
}

/// Mismatches between a fixture's recorded invariants and the computed ones.
inline std::vector<std::string> check_fixture(const Fixture& f) {
    std::vector<std::string> bad;
    const int q = fano_index(f.shape);
    if (q != f.q) bad.push_back("q=" + std::to_string(q) + " expected " + std::to_string(f.q));
    const Rational a3 = degree_a3(f.shape);
    if (a3 != f.a3) bad.push_back("A^3=" + a3.str() + " expected " + f.a3.str());
    const auto b = basket(f.shape).indices();
    if (b != f.basket) {
        std::string got, want;
        for (int r : b) got += (got.empty() ? "" : ",") + std::to_string(r);
        for (int r : f.basket) want += (want.empty() ? "" : ",") + std::to_string(r);
        bad.push_back("basket (" + got + ") expected (" + want + ")");
    }
    const auto g = genus(f.shape);
    if (g != f.genus) bad.push_back("genus " + std::to_string(g) + " expected " + std::to_string(f.genus));
    return bad;
}

struct EquationFixture {
    std::string name;
    std::string text;
    nf::FormClass form;
};

/// The two normal forms of the degree-12 equation.
inline const std::vector<EquationFixture>& equation_fixtures() {
    static const std::vector<EquationFixture> all{
        {"form-a", "x5*x7 + x4^3 + x6^2 + x3^4", nf::FormClass::FormA},
        {"form-b", "x5*x7 + x4^3 + x6^2", nf::FormClass::FormB},
    };
    return all;
}

}  // namespace qfano

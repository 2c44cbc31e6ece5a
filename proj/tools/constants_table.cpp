// Prints the exact moment-constant polynomials c(theta), c1(u, theta),
// c2(u, theta) as aligned coefficient tables.  Usage:
//
//   constants_table [r] [P-coeffs]
//
// where P-coeffs is a comma-separated ascending coefficient list
// (default "1", i.e. P = 1).

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "zetagap/integrands.hpp"
#include "zetagap/poly.hpp"
#include "zetagap/rational.hpp"

using namespace zetagap;

namespace {

void print_table(const std::string& name, const MultiPoly& p) {
    const int du = p.degree_in(Var::U);
    const int dt = p.degree_in(Var::THETA);
    std::cout << name << "  (" << p.num_terms() << " terms, degree " << du
              << " in u, " << dt << " in theta)\n";
    for (int j = du; j >= 0; --j) {
        const MultiPoly row = p.coefficient_of(Var::U, j);
        for (int k = 0; k <= dt; ++k) {
            const Rat a = row.coefficient_of(Var::THETA, k).constant_value();
            if (a == 0) continue;
            std::ostringstream mono;
            if (j > 0) mono << "u^" << j << " ";
            mono << "theta^" << k;
            std::cout << "  " << std::left << std::setw(16) << mono.str()
                      << rat_str(a) << "\n";
        }
    }
    std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    AmplifierParams amp;
    if (argc > 1) amp.r = std::stoi(argv[1]);
    if (argc > 2) {
        amp.P_coeffs.clear();
        std::stringstream ps(argv[2]);
        std::string tok;
        while (std::getline(ps, tok, ','))
            amp.P_coeffs.push_back(parse_rational(tok));
    }
    try {
        amp.validate();
        const MomentConstants mc = compute_moment_constants(amp);
        std::cout << "moment constants at r = " << amp.r << ", P coeffs = (";
        for (std::size_t i = 0; i < amp.P_coeffs.size(); ++i)
            std::cout << (i ? ", " : "") << rat_str(amp.P_coeffs[i]);
        std::cout << ")\n\n";
        print_table("c(theta)", mc.c);
        print_table("c1(u, theta)", mc.c1);
        print_table("c2(u, theta)", mc.c2);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

// Walks through a few kites: products across zones, the negations, and the
// dimension of the double-tilde automorphism.

#include <iostream>

#include "kiteforge/kite_checks.hpp"
#include "kiteforge/spec.hpp"

namespace kf = kiteforge;

namespace {

void show(const kf::KiteAlgebra& a, const kf::KiteElem& x, const kf::KiteElem& y) {
  std::cout << "  x = " << kf::format_kite_elem(x) << ", y = " << kf::format_kite_elem(y) << '\n'
            << "    x*y  = " << kf::format_kite_elem(a.mul(x, y)) << '\n'
            << "    y*x  = " << kf::format_kite_elem(a.mul(y, x)) << '\n'
            << "    x\\y  = " << kf::format_kite_elem(a.ldiv(x, y)) << '\n'
            << "    x-   = " << kf::format_kite_elem(a.negl(x)) << '\n'
            << "    x~   = " << kf::format_kite_elem(a.negr(x)) << '\n';
}

}  // namespace

int main() {
  for (const char* text : {"kite{group:Z^1; aut:perm:(0);scale:1}", "kite{bcycle:zn:2; base:Q}",
                           "kite{group:Q^1; aut:perm:(0);scale:2}"}) {
    const kf::KiteAlgebra a = kf::parse_kite_spec(text).algebra;
    std::cout << a.describe() << '\n';
    const auto k = a.group().arity();
    kf::KiteElem top{kf::Zone::Top, std::vector<kf::Rational>(k, kf::Rational(-1))};
    kf::KiteElem bottom{kf::Zone::Bottom, std::vector<kf::Rational>(k, kf::Rational(3))};
    top.value[0] = -2;
    show(a, top, bottom);
    const auto dim = kf::dim_pmv(a, 64, 0);
    std::cout << "  dimension " << dim.dimension << (dim.certified ? "" : " (uncertified)") << "\n\n";
  }
}

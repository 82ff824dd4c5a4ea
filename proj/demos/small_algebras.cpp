// Enumerates the FL_w-algebras with up to four elements and sorts them into
// perfect and non-perfect, listing the normal filters of each.

#include <iostream>

#include "kiteforge/enumerate.hpp"
#include "kiteforge/finalg.hpp"

namespace kf = kiteforge;

int main() {
  for (int n = 2; n <= 4; ++n) {
    const auto algebras = kf::enumerate_flw(n);
    std::cout << "size " << n << ": " << algebras.size() << " algebras\n";
    for (const auto& a : algebras) {
      const auto split = kf::is_perfect(a);
      std::cout << "  " << kf::hash_hex(kf::canonical_hash(kf::canonical_form(a)))
                << (split ? "  perfect    " : "  not perfect") << "  filters:";
      for (const auto& f : kf::all_normal_filters(a)) {
        std::cout << " {";
        const auto members = f.members().elements();
        for (std::size_t i = 0; i < members.size(); ++i) std::cout << (i ? "," : "") << a.name(members[i]);
        std::cout << '}';
      }
      std::cout << '\n';
    }
  }
}

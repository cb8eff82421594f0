// Prints height-3 quiddity cycles over Z[zeta_5] built from divisors of 2
// and counts them up to rotation and reversal.
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <set>

#include "quiddity/quiddity.hpp"

// Z[zeta_5] has no order on elements, so classes are keyed by text.
static std::string class_key(const quiddity::Cycle& c) {
  std::string best = quiddity::to_string(c);
  const quiddity::Cycle back = quiddity::reverse(c);
  for (long s = 0; s < static_cast<long>(c.size()); ++s)
    for (const quiddity::Cycle* x : {&c, &back}) best = std::min(best, quiddity::to_string(quiddity::rotate(*x, s)));
  return best;
}

int main(int argc, char** argv) {
  using namespace quiddity;
  const std::size_t count = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 12;
  const RingDescriptor ring = RingDescriptor::cyclotomic(5);

  std::set<std::string> classes;
  for (const auto& [t, c] : unit_family(ring, 3, count)) {
    const FriezePattern f = frieze_from_cycle(c);
    std::cout << "t = " << t << "\n  " << c << "\n  quiddity " << (is_quiddity(c) ? "yes" : "no")
              << ", zero-free " << (is_nonzero(f) ? "yes" : "no") << "\n";
    classes.insert(class_key(c));
  }
  std::cout << classes.size() << " classes up to rotation and reversal\n";
}

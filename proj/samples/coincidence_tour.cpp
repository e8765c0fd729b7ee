// A short tour of the library: the two domain axiomatisations on the
// built-in structures, and a search for the smallest place they detach
// from locality.

#include <iostream>

#include <domsr/domsr.hpp>

using namespace domsr;

int main() {
  for (const auto& name : models::builtin_names()) {
    auto s = models::builtin(name);
    if (!s.dom) {
      std::cout << s.name << ": no dom table\n";
      continue;
    }
    auto rep = laws::coincidence_check(s);
    std::cout << s.name << ": full=" << (rep.is_full ? "yes" : "no")
              << " domain-semiring=" << (rep.domain_semiring ? "yes" : "no")
              << " tdd=" << (rep.tdd ? "yes" : "no")
              << " S_d=" << subset_names(s, rep.s_d) << "\n";
  }

  finder::SearchQuery q;
  q.satisfy = {laws::LawId::full, laws::LawId::lla};
  q.violate = {laws::LawId::locality};
  q.max_size = 4;
  q.iso_reject = true;
  auto res = finder::search(q);
  std::cout << "\nsmallest full dioid with lla but not locality:\n"
            << io::render_algebra(res.models.at(0).model);
  std::cout << "violates " << res.models.at(0).violated << "\n";
  return 0;
}

// Prints the four sampling distributions over the related language set.
//
//   ./sampling_weights            (uses the shipped fixtures)
//   ./sampling_weights sizes.txt

#include <iomanip>
#include <iostream>

#include "cclm/cclm.hpp"

int main(int argc, char** argv) {
  using namespace cclm;
  const std::string path = argc > 1 ? argv[1] : CCLM_FIXTURE_DIR "/related.sizes";
  const auto table = load_corpus_fixture(path);
  const auto sizes = table.train_sizes();
  const std::set<std::string> all(table.order.begin(), table.order.end());

  // Competence as if every language sat one bit above its benchmark, except
  // the first, which has converged.
  LangMap<double> c;
  for (const auto& l : table.order) c[l] = 0.5;
  c[table.order.front()] = 1.0;

  const auto uni = uniform_weights(all);
  const auto prop = proportional_weights(sizes, all);
  const auto t5 = temperature_weights(sizes, all, Temperature::of(5.0));
  const auto inv = competence_weights(c, all);

  std::cout << std::left << std::setw(6) << "lang" << std::right << std::setw(10) << "train"
            << std::setw(10) << "uniform" << std::setw(10) << "prop" << std::setw(10) << "tau=5"
            << std::setw(10) << "1/c" << '\n'
            << std::fixed << std::setprecision(4);
  for (const auto& l : table.order)
    std::cout << std::left << std::setw(6) << l << std::right << std::setw(10) << sizes.at(l)
              << std::setw(10) << uni.at(l) << std::setw(10) << prop.at(l) << std::setw(10) << t5.at(l)
              << std::setw(10) << inv.at(l) << '\n';
}

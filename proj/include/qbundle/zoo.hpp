#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qbundle/instance.hpp"

namespace qb {

/// A named example instance. `extras` are additional (N_P, V) generator
/// pairs that the zoo runner feeds to the oracles beyond the standard family.
struct ZooEntry {
  struct Extra {
    std::string label;
    std::vector<Vector> n_p_generators;
    std::vector<Vector> v_generators;
  };

  std::string name;
  std::string description;
  std::function<ComoduleAlgebraData()> build;
  std::vector<Extra> extras;

  InstanceFile instance() const;
};

/// Every entry, sorted by name.
const std::vector<ZooEntry>& zoo();
/// nullptr when absent.
const ZooEntry* find_zoo(const std::string& name);

}  // namespace qb

#pragma once

#include <string>

#include "twodd/graph.hpp"
#include "twodd/io.hpp"

inline twodd::TwoDigraph fixture(const std::string& name) {
  return twodd::load_file(std::string(TWODD_FIXTURE_DIR) + "/" + name + ".2dd");
}

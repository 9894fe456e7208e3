#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "ugb/text.hpp"

#ifndef UGB_TEST_DATA_DIR
#error "UGB_TEST_DATA_DIR must point at tests/data"
#endif

namespace ugb::testing {

inline ProblemFile load_problem(const std::string& name) {
  std::ifstream in(std::string(UGB_TEST_DATA_DIR) + "/" + name);
  if (!in)
    throw std::runtime_error("missing test data " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

} // namespace ugb::testing

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "tautilt/algebra.hpp"

inline tautilt::BoundQuiver load_corpus(const std::string& name) {
  std::ifstream in(std::string(TAUTILT_CORPUS_DIR) + "/" + name + ".alg");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return tautilt::parse_algebra(buffer.str());
}

inline tautilt::IntVector ivec(std::initializer_list<std::int64_t> values) {
  tautilt::IntVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (auto x : values) v(i++) = x;
  return v;
}

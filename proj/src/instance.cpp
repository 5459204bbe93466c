#include "ftag/instance.hpp"

#include <string>

namespace ftag {

namespace {

std::string idx3(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

void validate_matrix(const DistanceMatrix& m, std::size_t n) {
  if (m.size() != n)
    throw ValidationError("matrix: expected " + std::to_string(n) + " rows, got " +
                          std::to_string(m.size()));
  for (std::size_t i = 0; i < n; ++i)
    if (m[i].size() != n)
      throw ValidationError("matrix: row " + std::to_string(i) + " has " +
                            std::to_string(m[i].size()) + " entries, expected " +
                            std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i][i].is_zero())
      throw ValidationError("matrix: nonzero diagonal at (" + std::to_string(i) + "," +
                            std::to_string(i) + ")");
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j].is_negative())
        throw ValidationError("matrix: negative entry at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      if (m[i][j] != m[j][i])
        throw ValidationError("matrix: asymmetric at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (m[i][k] > m[i][j] + m[j][k])
          throw ValidationError("matrix: triangle inequality violated at " + idx3(i, j, k));
}

}  // namespace

void validate_instance(const FtpInstance& inst) {
  if (inst.robots.empty()) throw ValidationError("instance: needs at least 1 robot");
  if (inst.source >= inst.robots.size())
    throw ValidationError("instance: source index " + std::to_string(inst.source) +
                          " out of range");
  if (inst.metric == Metric::ExplicitMatrix) {
    if (!inst.matrix) throw ValidationError("instance: metric \"matrix\" requires a matrix");
    validate_matrix(*inst.matrix, inst.robots.size());
  } else if (inst.matrix) {
    throw ValidationError("instance: metric \"L1\" must not carry a matrix");
  }
}

DistanceMatrix build_distance_matrix(const FtpInstance& inst) {
  validate_instance(inst);
  const std::size_t n = inst.size();
  DistanceMatrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m[i][j] = inst.distance(i, j);
      m[j][i] = m[i][j];
    }
  return m;
}

}  // namespace ftag

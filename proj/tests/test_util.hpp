#pragma once

#include "trialg/errors.hpp"
#include "trialg/matrix.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <vector>

namespace testutil {

inline trialg::Vec iv(trialg::Field f, std::vector<long> xs) {
  trialg::Vec v;
  for (long x : xs) v.push_back(trialg::Scalar::from_int(f, x));
  return v;
}

inline trialg::ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const trialg::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return trialg::ErrorKind::InvalidArgument;
}

inline trialg::Vec random_vec(trialg::Field f, std::size_t n, std::mt19937_64& rng, long range = 5) {
  trialg::Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(trialg::Scalar::from_int(f, static_cast<long>(rng() % (2 * range + 1)) - range));
  return v;
}

inline trialg::Mat random_mat(trialg::Field f, std::size_t n, std::mt19937_64& rng, long range = 3) {
  trialg::Mat m(f, n, n);
  for (std::size_t c = 0; c < n; ++c) m.set_col(c, random_vec(f, n, rng, range));
  return m;
}

}  // namespace testutil

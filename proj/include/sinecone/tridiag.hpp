#pragma once

#include <vector>

#include "sinecone/simd/kernels.hpp"

namespace sinecone {

// Symmetric tridiagonal matrix: diag of size N, off of size N-1.
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;
};

// The k smallest eigenvalues, ascending, by Sturm-count multisection to full
// double precision.
std::vector<double> smallest_eigenvalues(const Tridiagonal& t, int k,
                                         const simd::Kernels& kernels = simd::active_kernels());

}  // namespace sinecone

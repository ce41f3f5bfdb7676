#pragma once

// Test-only reference computations. Deliberately independent of the library:
// plain gmpxx rationals, row-vector storage, its own elimination.

#include <gmpxx.h>

#include <vector>

#include "wittartin/splitting.hpp"

namespace oracle {

using Q = mpq_class;
using QMat = std::vector<std::vector<Q>>;  // row-major

QMat from_library(const wittartin::Matrix& m);
QMat transpose(const QMat& a, std::size_t cols);
QMat multiply(const QMat& a, const QMat& b, std::size_t inner, std::size_t cols);

std::size_t rank(QMat a);
/// Kernel basis as columns of an (cols x k) matrix, stored row-major.
QMat kernel(const QMat& a, std::size_t cols);
/// True iff the column spans of a and b (both with `rows` rows) agree.
bool same_column_span(const QMat& a, std::size_t a_cols, const QMat& b, std::size_t b_cols, std::size_t rows);

/// Dimensions of the splitting chain, from ranks only.
struct ChainDims {
  long g_mu, h_mu, hm, p, b, h_perp_mu, h_alpha, a, s, q, ntilde, r, m, n, model;
};

/// `constants` row-major c(i,j,k); bases are columns.
ChainDims chain_dims(std::size_t n, const std::vector<Q>& constants, const QMat& h_cols, std::size_t h_dim,
                     const QMat& gm_cols, std::size_t gm_dim, const std::vector<Q>& mu, std::size_t slice_dim);

/// Same, reading the raw data out of an instance.
ChainDims chain_dims(const wittartin::ProblemInstance& inst);

/// True iff the column spans of two library matrices agree, decided here.
bool same_column_span(const wittartin::Matrix& a, const wittartin::Matrix& b);
/// Kernel of a library matrix, computed here, returned as library columns.
wittartin::Matrix kernel_columns(const wittartin::Matrix& a);

}  // namespace oracle

//  Copyright 2026 The bierlab Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.
//
//  Smith normal form over Z with overflow-checked 64-bit arithmetic.
//  smith_normal_form applies bulk row/column eliminations whose inner
//  loops are OpenMP-parallel; smith_normal_form_serial is a plain
//  single-entry Euclid-step reference kept for testing.

#include <algorithm>
#include <cstdlib>

#include "bierlab/error.hpp"
#include "bierlab/homology.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bierlab {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(ErrorCode::NumericOverflow, "integer overflow in SNF");
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r))
    fail(ErrorCode::NumericOverflow, "integer overflow in SNF");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    fail(ErrorCode::NumericOverflow, "integer overflow in SNF");
  return r;
}


// balanced quotient: remainder magnitude at most |p|/2, which keeps
// entries small during the descent
long long balanced_quotient(long long v, long long p) {
  long long q = v / p;
  long long r = v - q * p;
  if (2 * std::llabs(r) > std::llabs(p)) q += ((r > 0) == (p > 0)) ? 1 : -1;
  return q;
}

// smallest-magnitude nonzero entry of the trailing submatrix
bool find_pivot(const IntMatrix& m, int t, int& pi, int& pj) {
  long long best = 0;
  pi = pj = -1;
  for (int i = t; i < m.rows; ++i)
    for (int j = t; j < m.cols; ++j) {
      long long v = std::llabs(m.at(i, j));
      if (v != 0 && (pi < 0 || v < best)) {
        best = v;
        pi = i;
        pj = j;
      }
    }
  return pi >= 0;
}

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

SnfResult collect(IntMatrix& m) {
  SnfResult r;
  const int d = std::min(m.rows, m.cols);
  for (int t = 0; t < d; ++t) {
    long long v = std::llabs(m.at(t, t));
    if (v != 0) {
      r.invariant_factors.push_back(v);
      r.rank++;
    }
  }
  return r;
}

}  // namespace

SnfResult smith_normal_form(IntMatrix m) {
  const int d = std::min(m.rows, m.cols);
  for (int t = 0; t < d; ++t) {
    int pi, pj;
    if (!find_pivot(m, t, pi, pj)) break;
    swap_rows(m, t, pi);
    swap_cols(m, t, pj);

    bool settled = false;
    while (!settled) {
      // clear column t below and above via bulk row updates
      bool column_dirty = false;
      {
        long long p = m.at(t, t);
#pragma omp parallel for schedule(static) if (m.rows - t >= 128)
        for (int i = t + 1; i < m.rows; ++i) {
          long long v = m.at(i, t);
          if (v == 0) continue;
          long long q = balanced_quotient(v, p);
          if (q != 0)
            for (int j = t; j < m.cols; ++j)
              m.at(i, j) = checked_sub(m.at(i, j), checked_mul(q, m.at(t, j)));
        }
        for (int i = t + 1; i < m.rows; ++i)
          if (m.at(i, t) != 0) column_dirty = true;
      }
      if (column_dirty) {
        // some remainder is smaller than the pivot; promote it and redo
        int qi, qj;
        find_pivot(m, t, qi, qj);
        swap_rows(m, t, qi);
        swap_cols(m, t, qj);
        continue;
      }

      bool row_dirty = false;
      {
        long long p = m.at(t, t);
#pragma omp parallel for schedule(static) if (m.cols - t >= 128)
        for (int j = t + 1; j < m.cols; ++j) {
          long long v = m.at(t, j);
          if (v == 0) continue;
          long long q = balanced_quotient(v, p);
          if (q != 0)
            for (int i = t; i < m.rows; ++i)
              m.at(i, j) = checked_sub(m.at(i, j), checked_mul(q, m.at(i, t)));
        }
        for (int j = t + 1; j < m.cols; ++j)
          if (m.at(t, j) != 0) row_dirty = true;
      }
      if (row_dirty) {
        int qi, qj;
        find_pivot(m, t, qi, qj);
        swap_rows(m, t, qi);
        swap_cols(m, t, qj);
        continue;
      }
      // column ops may have disturbed the cleared column; verify
      bool col_ok = true;
      for (int i = t + 1; i < m.rows; ++i)
        if (m.at(i, t) != 0) col_ok = false;
      if (!col_ok) continue;

      // divisibility: pivot must divide the trailing submatrix
      long long p = m.at(t, t);
      int bad_i = -1;
      for (int i = t + 1; i < m.rows && bad_i < 0; ++i)
        for (int j = t + 1; j < m.cols; ++j)
          if (m.at(i, j) % p != 0) {
            bad_i = i;
            break;
          }
      if (bad_i >= 0) {
        // fold the offending row into row t and restart the pivot loop
        for (int j = t; j < m.cols; ++j)
          m.at(t, j) = checked_add(m.at(t, j), m.at(bad_i, j));
        continue;
      }
      settled = true;
    }
  }
  return collect(m);
}

SnfResult smith_normal_form_serial(IntMatrix m) {
  const int d = std::min(m.rows, m.cols);
  bool exhausted = false;
  for (int t = 0; t < d && !exhausted; ++t) {
    while (true) {
      int pi, pj;
      if (!find_pivot(m, t, pi, pj)) {
        exhausted = true;
        break;
      }
      swap_rows(m, t, pi);
      swap_cols(m, t, pj);
      long long p = m.at(t, t);

      // one Euclid step at a time
      int i = -1, j = -1;
      for (int r = t + 1; r < m.rows && i < 0; ++r)
        if (m.at(r, t) != 0) i = r;
      if (i >= 0) {
        long long q = balanced_quotient(m.at(i, t), p);
        for (int c = t; c < m.cols; ++c)
          m.at(i, c) = checked_sub(m.at(i, c), checked_mul(q, m.at(t, c)));
        continue;
      }
      for (int c = t + 1; c < m.cols && j < 0; ++c)
        if (m.at(t, c) != 0) j = c;
      if (j >= 0) {
        long long q = balanced_quotient(m.at(t, j), p);
        for (int r = t; r < m.rows; ++r)
          m.at(r, j) = checked_sub(m.at(r, j), checked_mul(q, m.at(r, t)));
        continue;
      }
      int bad_i = -1;
      for (int r = t + 1; r < m.rows && bad_i < 0; ++r)
        for (int c = t + 1; c < m.cols; ++c)
          if (m.at(r, c) % p != 0) {
            bad_i = r;
            break;
          }
      if (bad_i >= 0) {
        for (int c = t; c < m.cols; ++c)
          m.at(t, c) = checked_add(m.at(t, c), m.at(bad_i, c));
        continue;
      }
      break;
    }
  }
  return collect(m);
}

int rational_rank(IntMatrix m) {
  // Bareiss fraction-free elimination
  int rank = 0;
  long long prev = 1;
  for (int t = 0; t < std::min(m.rows, m.cols); ++t) {
    int pi = -1;
    for (int i = t; i < m.rows && pi < 0; ++i)
      if (m.at(i, t) != 0) pi = i;
    if (pi < 0) {
      // column is zero below; shift columns left logically by swapping in
      // a nonzero column if one exists
      int pj = -1;
      for (int j = t + 1; j < m.cols && pj < 0; ++j)
        for (int i = t; i < m.rows; ++i)
          if (m.at(i, j) != 0) {
            pj = j;
            break;
          }
      if (pj < 0) break;
      swap_cols(m, t, pj);
      for (int i = t; i < m.rows && pi < 0; ++i)
        if (m.at(i, t) != 0) pi = i;
    }
    swap_rows(m, t, pi);
    rank++;
#pragma omp parallel for schedule(static) if (m.rows - t >= 128)
    for (int i = t + 1; i < m.rows; ++i) {
      for (int j = t + 1; j < m.cols; ++j) {
        long long num = checked_sub(checked_mul(m.at(t, t), m.at(i, j)),
                                    checked_mul(m.at(i, t), m.at(t, j)));
        m.at(i, j) = num / prev;
      }
      m.at(i, t) = 0;
    }
    prev = m.at(t, t);
  }
  return rank;
}

}  // namespace bierlab

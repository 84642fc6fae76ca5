/*
   Copyright 2026 The invar-lattice Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "invlat/normal_form.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace invlat {

namespace {

__extension__ typedef __int128 Wide;
using WideVec = std::vector<Wide>;
using WideMatrix = std::vector<WideVec>;

Wide wadd(Wide a, Wide b)
{
    Wide r;
    if (__builtin_add_overflow(a, b, &r))
        throw_overflow("128-bit addition");
    return r;
}

Wide wmul(Wide a, Wide b)
{
    Wide r;
    if (__builtin_mul_overflow(a, b, &r))
        throw_overflow("128-bit multiplication");
    return r;
}

Wide wabs(Wide a) { return a < 0 ? -a : a; }

Int narrow(Wide a)
{
    if (a > std::numeric_limits<Int>::max() || a < std::numeric_limits<Int>::min())
        throw_overflow("narrowing to 64 bits");
    return static_cast<Int>(a);
}

// row_dst += q * row_src
void axpy_row(WideVec& dst, const WideVec& src, Wide q)
{
    for (std::size_t k = 0; k < dst.size(); ++k)
        if (src[k] != 0)
            dst[k] = wadd(dst[k], wmul(q, src[k]));
}

void axpy_col(WideMatrix& m, std::size_t dst, std::size_t src, Wide q)
{
    for (auto& row : m)
        if (row[src] != 0)
            row[dst] = wadd(row[dst], wmul(q, row[src]));
}

void swap_cols(WideMatrix& m, std::size_t a, std::size_t b)
{
    for (auto& row : m)
        std::swap(row[a], row[b]);
}

WideMatrix identity(std::size_t n)
{
    WideMatrix id(n, WideVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        id[i][i] = 1;
    return id;
}

IntMatrix narrow_matrix(const WideMatrix& m)
{
    IntMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) {
        Vec r;
        r.reserve(row.size());
        for (Wide x : row)
            r.push_back(narrow(x));
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// HermiteBasis

void HermiteBasis::check_dim(std::size_t n) const
{
    if (n != dim_)
        throw Error(ErrorCode::dimension_mismatch,
                    "vector of length " + std::to_string(n) + " in a lattice of ambient dimension "
                        + std::to_string(dim_));
}

std::optional<Int> HermiteBasis::determinant() const
{
    if (rows_.size() != dim_)
        return std::nullopt;
    Int det = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        det = checked_mul(det, rows_[i][pivots_[i]]);
    return det;
}

std::optional<Vec> HermiteBasis::coordinates(std::span<const Int> v) const
{
    check_dim(v.size());
    Vec w(v.begin(), v.end());
    Vec coeffs(rows_.size(), 0);
    std::size_t i = 0;
    for (std::size_t c = 0; c < dim_; ++c) {
        while (i < rows_.size() && pivots_[i] < c)
            ++i;
        if (w[c] == 0)
            continue;
        if (i == rows_.size() || pivots_[i] != c)
            return std::nullopt;
        const Int piv = rows_[i][c];
        if (w[c] % piv != 0)
            return std::nullopt;
        const Int q = w[c] / piv;
        coeffs[i] = q;
        for (std::size_t k = c; k < dim_; ++k)
            if (rows_[i][k] != 0)
                w[k] = checked_sub(w[k], checked_mul(q, rows_[i][k]));
    }
    return coeffs;
}

bool HermiteBasis::contains(std::span<const Int> v) const { return coordinates(v).has_value(); }

bool HermiteBasis::insert(std::span<const Int> v)
{
    check_dim(v.size());
    if (contains(v))
        return false;

    Vec w(v.begin(), v.end());
    std::size_t i = 0;
    for (std::size_t c = 0; c < dim_; ++c) {
        while (i < rows_.size() && pivots_[i] < c)
            ++i;
        if (w[c] == 0)
            continue;
        if (i < rows_.size() && pivots_[i] == c) {
            Vec& row = rows_[i];
            const auto [g, x, y] = ext_gcd(row[c], w[c]);
            const Int a = row[c] / g;
            const Int b = w[c] / g;
            Vec merged(dim_, 0);
            Vec rest(dim_, 0);
            for (std::size_t k = c; k < dim_; ++k) {
                merged[k] = checked_add(checked_mul(x, row[k]), checked_mul(y, w[k]));
                rest[k] = checked_sub(checked_mul(a, w[k]), checked_mul(b, row[k]));
            }
            row = std::move(merged);
            w = std::move(rest);
            continue;
        }
        if (w[c] < 0)
            for (auto& e : w)
                e = checked_neg(e);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(i), std::move(w));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(i), c);
        break;
    }
    normalize();
    return true;
}

void HermiteBasis::normalize()
{
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (rows_[k][p] < 0)
            for (auto& e : rows_[k])
                e = checked_neg(e);
        const Int piv = rows_[k][p];
        for (std::size_t j = 0; j < k; ++j) {
            const Int q = floor_div(rows_[j][p], piv);
            if (q == 0)
                continue;
            for (std::size_t c = p; c < dim_; ++c)
                if (rows_[k][c] != 0)
                    rows_[j][c] = checked_sub(rows_[j][c], checked_mul(q, rows_[k][c]));
        }
    }
}

// ---------------------------------------------------------------------------
// Hermite form with transform

HermiteTransform hermite_with_transform(const IntMatrix& a, std::size_t dim)
{
    const std::size_t n = a.size();
    WideMatrix m(n);
    WideMatrix t = identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != dim)
            throw Error(ErrorCode::dimension_mismatch, "row length differs from the ambient dimension");
        m[i].assign(a[i].begin(), a[i].end());
    }

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim && r < n; ++c) {
        // Euclid down the column until only row r is nonzero there.
        for (;;) {
            std::size_t best = n;
            for (std::size_t i = r; i < n; ++i)
                if (m[i][c] != 0 && (best == n || wabs(m[i][c]) < wabs(m[best][c])))
                    best = i;
            if (best == n)
                break;
            std::swap(m[r], m[best]);
            std::swap(t[r], t[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < n; ++i) {
                if (m[i][c] == 0)
                    continue;
                const Wide q = m[i][c] / m[r][c];
                axpy_row(m[i], m[r], -q);
                axpy_row(t[i], t[r], -q);
                if (m[i][c] != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (m[r][c] == 0)
            continue;
        if (m[r][c] < 0) {
            for (auto& e : m[r])
                e = -e;
            for (auto& e : t[r])
                e = -e;
        }
        for (std::size_t j = 0; j < r; ++j) {
            Wide q = m[j][c] / m[r][c];
            if (m[j][c] % m[r][c] != 0 && m[j][c] < 0)
                --q;
            if (q != 0) {
                axpy_row(m[j], m[r], -q);
                axpy_row(t[j], t[r], -q);
            }
        }
        pivots.push_back(c);
        ++r;
    }

    HermiteTransform out;
    out.basis = narrow_matrix(WideMatrix(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(r)));
    out.pivots = std::move(pivots);
    out.transform = narrow_matrix(t);
    return out;
}

// ---------------------------------------------------------------------------
// Smith normal form

SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols)
{
    const std::size_t rows = a.size();
    WideMatrix m(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != cols)
            throw Error(ErrorCode::dimension_mismatch, "ragged matrix passed to smith_normal_form");
        m[i].assign(a[i].begin(), a[i].end());
    }
    WideMatrix left = identity(rows);
    WideMatrix right = identity(cols);

    Vec invariants;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            std::size_t bi = rows, bj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (m[i][j] != 0 && (bi == rows || wabs(m[i][j]) < wabs(m[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == rows)
                goto finished;
            std::swap(m[t], m[bi]);
            std::swap(left[t], left[bi]);
            swap_cols(m, t, bj);
            swap_cols(right, t, bj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0)
                    continue;
                const Wide q = m[i][t] / m[t][t];
                axpy_row(m[i], m[t], -q);
                axpy_row(left[i], left[t], -q);
                clean = clean && m[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0)
                    continue;
                const Wide q = m[t][j] / m[t][t];
                axpy_col(m, j, t, -q);
                axpy_col(right, j, t, -q);
                clean = clean && m[t][j] == 0;
            }
            if (!clean)
                continue;

            // Divisibility: fold any offending row into row t and retry.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            axpy_row(m[t], m[bad], 1);
            axpy_row(left[t], left[bad], 1);
        }
        if (m[t][t] < 0) {
            for (auto& e : m[t])
                e = -e;
            for (auto& e : left[t])
                e = -e;
        }
        invariants.push_back(narrow(m[t][t]));
    }
finished:
    SmithForm out;
    out.invariants = std::move(invariants);
    out.left = narrow_matrix(left);
    out.right = narrow_matrix(right);
    return out;
}

IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols)
{
    const SmithForm s = smith_normal_form(a, cols);
    IntMatrix kernel;
    for (std::size_t j = s.rank(); j < cols; ++j) {
        Vec v(cols);
        for (std::size_t i = 0; i < cols; ++i)
            v[i] = s.right[i][j];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t b_cols)
{
    IntMatrix out(a.size(), Vec(b_cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b.size())
            throw Error(ErrorCode::dimension_mismatch, "matrix shapes do not compose");
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < b_cols; ++j)
                out[i][j] = checked_add(out[i][j], checked_mul(a[i][k], b[k][j]));
        }
    }
    return out;
}

} // namespace invlat

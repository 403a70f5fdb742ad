#include "gca/linear.hpp"

namespace gca {

namespace {

struct Eliminated {
    std::vector<std::vector<RatioElem>> a;   // row echelon (not reduced)
    std::vector<int> pivotCol;               // per pivot row
    std::size_t rows = 0, cols = 0;
};

// Fraction-field forward elimination. Pivot choice: among candidate rows
// the one whose numerator has the fewest terms, to limit growth.
Eliminated eliminate(std::vector<std::vector<RatioElem>> a) {
    Eliminated e;
    e.rows = a.size();
    e.cols = e.rows ? a[0].size() : 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < e.cols && row < e.rows; ++col) {
        std::size_t best = e.rows;
        std::size_t bestTerms = 0;
        for (std::size_t i = row; i < e.rows; ++i) {
            if (a[i][col].isZero()) continue;
            std::size_t tc = a[i][col].num().termCount() + a[i][col].den().termCount();
            if (best == e.rows || tc < bestTerms) {
                best = i;
                bestTerms = tc;
            }
        }
        if (best == e.rows) continue;
        std::swap(a[row], a[best]);
        for (std::size_t i = row + 1; i < e.rows; ++i) {
            if (a[i][col].isZero()) continue;
            RatioElem f = a[i][col] / a[row][col];
            for (std::size_t j = col; j < e.cols; ++j)
                a[i][j] = a[i][j] - f * a[row][j];
        }
        e.pivotCol.push_back(static_cast<int>(col));
        ++row;
    }
    e.a = std::move(a);
    return e;
}

} // namespace

std::optional<RatioVector> solveLinear(const RingMatrix& m, const std::vector<RingElem>& rhs) {
    const std::size_t rows = m.size();
    if (rhs.size() != rows) throw std::invalid_argument("solveLinear: dimension mismatch");
    const std::size_t cols = rows ? m[0].size() : 0;
    for (const auto& r : m)
        if (r.size() != cols) throw std::invalid_argument("solveLinear: ragged matrix");

    std::vector<std::vector<RatioElem>> a(rows, std::vector<RatioElem>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = RatioElem(m[i][j]);
        a[i][cols] = RatioElem(rhs[i]);
    }
    Eliminated e = eliminate(std::move(a));

    // A pivot in the augmented column means inconsistency.
    if (!e.pivotCol.empty() && e.pivotCol.back() == static_cast<int>(cols)) return std::nullopt;

    RatioVector x(cols);
    for (std::size_t p = e.pivotCol.size(); p-- > 0;) {
        const std::size_t i = p;
        const auto col = static_cast<std::size_t>(e.pivotCol[p]);
        RatioElem s = e.a[i][cols];
        for (std::size_t j = col + 1; j < cols; ++j)
            if (!e.a[i][j].isZero() && !x[j].isZero()) s = s - e.a[i][j] * x[j];
        x[col] = s / e.a[i][col];
    }

    // Exact verification against the original system.
    for (std::size_t i = 0; i < rows; ++i) {
        RatioElem s;
        for (std::size_t j = 0; j < cols; ++j)
            if (!x[j].isZero()) s += RatioElem(m[i][j]) * x[j];
        if (!(s == RatioElem(rhs[i]))) throw std::logic_error("solveLinear: back substitution failed");
    }
    return x;
}

std::vector<RatioVector> nullspaceBasis(const RingMatrix& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::vector<RatioElem>> a(rows, std::vector<RatioElem>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = RatioElem(m[i][j]);
    Eliminated e = eliminate(std::move(a));

    std::vector<bool> isPivot(cols, false);
    for (int c : e.pivotCol) isPivot[static_cast<std::size_t>(c)] = true;

    std::vector<RatioVector> basis;
    for (std::size_t freeCol = 0; freeCol < cols; ++freeCol) {
        if (isPivot[freeCol]) continue;
        RatioVector v(cols);
        v[freeCol] = RatioElem(RingElem(1L));
        for (std::size_t p = e.pivotCol.size(); p-- > 0;) {
            const auto col = static_cast<std::size_t>(e.pivotCol[p]);
            RatioElem s;
            for (std::size_t j = col + 1; j < cols; ++j)
                if (!e.a[p][j].isZero() && !v[j].isZero()) s = s - e.a[p][j] * v[j];
            v[col] = s / e.a[p][col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int rankRing(const RingMatrix& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::vector<RatioElem>> a(rows, std::vector<RatioElem>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = RatioElem(m[i][j]);
    return static_cast<int>(eliminate(std::move(a)).pivotCol.size());
}

int rankRational(RatMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t row = 0;
    int rank = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = row; i < rows; ++i)
            if (m[i][col] != 0) { pivot = i; break; }
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[row][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rational>> rationalNullspace(RatMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<int> pivotCol;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = row; i < rows; ++i)
            if (m[i][col] != 0) { pivot = i; break; }
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational f = m[i][col] / m[row][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivotCol.push_back(static_cast<int>(col));
        ++row;
    }
    std::vector<bool> isPivot(cols, false);
    for (int c : pivotCol) isPivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t freeCol = 0; freeCol < cols; ++freeCol) {
        if (isPivot[freeCol]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[freeCol] = 1;
        for (std::size_t p = 0; p < pivotCol.size(); ++p) {
            const auto col = static_cast<std::size_t>(pivotCol[p]);
            v[col] = -m[p][freeCol] / m[p][col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RatMatrix evalMatrix(const RingMatrix& m, const EvalPoint& p) {
    RatMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        r[i].reserve(m[i].size());
        for (const auto& e : m[i]) r[i].push_back(e.evalAt(p));
    }
    return r;
}

} // namespace gca

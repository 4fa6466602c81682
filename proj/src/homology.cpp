#include "helix/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace helix {
namespace {

struct Overflow {};

// 64-bit integer whose arithmetic throws Overflow instead of wrapping.
struct Checked {
  long long v = 0;

  Checked() = default;
  Checked(long long x) : v(x) {}  // NOLINT(google-explicit-constructor)

  friend Checked operator+(Checked a, Checked b) {
    long long r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    long long r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend Checked operator*(Checked a, Checked b) {
    long long r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
};

bool is_zero(const Checked& x) { return x.v == 0; }
bool is_zero(const BigInt& x) { return x.is_zero(); }
bool is_unit(const Checked& x) { return x.v == 1 || x.v == -1; }
bool is_unit(const BigInt& x) { return x == 1 || x == -1; }
BigInt to_big(const Checked& x) { return BigInt(x.v); }
BigInt to_big(const BigInt& x) { return x; }

template <typename T>
using SparseRow = std::vector<std::pair<int, T>>;

// row -= factor * pivot_row, keeping the row sorted and free of zeros.
template <typename T>
SparseRow<T> axpy(const SparseRow<T>& row, const T& factor, const SparseRow<T>& pivot_row) {
  SparseRow<T> out;
  out.reserve(row.size() + pivot_row.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot_row.size()) {
    if (j == pivot_row.size() || (i < row.size() && row[i].first < pivot_row[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot_row[j].first < row[i].first) {
      out.emplace_back(pivot_row[j].first, T(0) - factor * pivot_row[j].second);
      ++j;
    } else {
      T value = row[i].second - factor * pivot_row[j].second;
      if (!is_zero(value)) out.emplace_back(row[i].first, std::move(value));
      ++i;
      ++j;
    }
  }
  return out;
}

template <typename T>
const T* entry(const SparseRow<T>& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, int c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// Eliminates unit pivots greedily, then finishes the (usually empty)
// remainder with a dense Smith normal form.
template <typename T>
SmithSummary eliminate(const SparseIntMatrix& m) {
  std::vector<SparseRow<T>> rows(m.rows);
  std::vector<std::set<int>> col_rows(m.cols);
  for (int j = 0; j < m.cols; ++j) {
    for (const auto& [i, v] : m.columns[j]) {
      if (v == 0) continue;
      rows[i].emplace_back(j, T(v));
      col_rows[j].insert(i);
    }
  }
  for (auto& row : rows) std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) {
    return a.first < b.first;
  });

  SmithSummary out;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int c = 0; c < m.cols; ++c) {
      if (col_rows[c].empty()) continue;
      int pivot = -1;
      for (int r : col_rows[c]) {
        if (is_unit(*entry(rows[r], c)) &&
            (pivot == -1 || rows[r].size() < rows[pivot].size())) {
          pivot = r;
        }
      }
      if (pivot == -1) continue;

      const T unit = *entry(rows[pivot], c);
      const std::vector<int> others(col_rows[c].begin(), col_rows[c].end());
      for (int r : others) {
        if (r == pivot) continue;
        const T factor = *entry(rows[r], c) * unit;
        std::set<int> before;
        for (const auto& e : rows[r]) before.insert(e.first);
        rows[r] = axpy(rows[r], factor, rows[pivot]);
        std::set<int> after;
        for (const auto& e : rows[r]) after.insert(e.first);
        for (int col : before) {
          if (!after.count(col)) col_rows[col].erase(r);
        }
        for (int col : after) col_rows[col].insert(r);
      }
      for (const auto& e : rows[pivot]) col_rows[e.first].erase(pivot);
      rows[pivot].clear();
      ++out.rank;
      progress = true;
    }
  }

  std::vector<int> live_rows;
  std::set<int> live_cols;
  for (int r = 0; r < m.rows; ++r) {
    if (rows[r].empty()) continue;
    live_rows.push_back(r);
    for (const auto& e : rows[r]) live_cols.insert(e.first);
  }
  if (live_rows.empty()) return out;

  std::map<int, int> col_index;
  for (int c : live_cols) col_index.emplace(c, static_cast<int>(col_index.size()));
  std::vector<std::vector<BigInt>> dense(live_rows.size(), std::vector<BigInt>(live_cols.size()));
  for (std::size_t i = 0; i < live_rows.size(); ++i) {
    for (const auto& [c, v] : rows[live_rows[i]]) dense[i][col_index[c]] = to_big(v);
  }
  for (auto& d : smith_diagonal(std::move(dense))) {
    ++out.rank;
    if (d > 1) out.torsion.push_back(d);
  }
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

}  // namespace

std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<BigInt> diag;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero magnitude in the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (!a[i][j].is_zero() && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) {
        std::sort(diag.begin(), diag.end());
        return diag;
      }
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t].is_zero()) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        clean = clean && a[i][t].is_zero();
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j].is_zero()) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        clean = clean && a[t][j].is_zero();
      }
      if (!clean) continue;

      // Enforce divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

SmithSummary smith_summary(const SparseIntMatrix& m) {
  try {
    return eliminate<Checked>(m);
  } catch (const Overflow&) {
    return eliminate<BigInt>(m);
  }
}

bool HomologyProfile::acyclic() const {
  return std::all_of(betti.begin(), betti.end(), [](long long b) { return b == 0; }) &&
         torsion_free();
}

bool HomologyProfile::torsion_free() const {
  return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
}

std::optional<int> HomologyProfile::lowest_nonzero() const {
  for (std::size_t i = 0; i < betti.size(); ++i) {
    if (betti[i] != 0 || !torsion[i].empty()) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool HomologyProfile::is_sphere_of_dimension(int dim) const {
  if (empty || !torsion_free()) return false;
  for (std::size_t i = 0; i < betti.size(); ++i) {
    if (betti[i] != (static_cast<int>(i) == dim ? 1 : 0)) return false;
  }
  return dim < static_cast<int>(betti.size());
}

// Groups compare dimension by dimension; absent dimensions count as zero.
bool HomologyProfile::operator==(const HomologyProfile& o) const {
  if (empty != o.empty) return false;
  const std::size_t dims = std::max({betti.size(), o.betti.size(), torsion.size(), o.torsion.size()});
  for (std::size_t d = 0; d < dims; ++d) {
    const long long b1 = d < betti.size() ? betti[d] : 0;
    const long long b2 = d < o.betti.size() ? o.betti[d] : 0;
    const bool t1 = d < torsion.size() && !torsion[d].empty();
    const bool t2 = d < o.torsion.size() && !o.torsion[d].empty();
    if (b1 != b2 || t1 != t2) return false;
    if (t1 && torsion[d] != o.torsion[d]) return false;
  }
  return true;
}

std::vector<std::vector<Simplex>> group_by_dimension(const std::vector<Simplex>& simplices) {
  std::vector<std::vector<Simplex>> by_dim;
  for (const auto& s : simplices) {
    const std::size_t d = s.size() - 1;
    if (by_dim.size() <= d) by_dim.resize(d + 1);
    by_dim[d].push_back(s);
  }
  for (auto& level : by_dim) std::sort(level.begin(), level.end());
  return by_dim;
}

SparseIntMatrix boundary_matrix(const std::vector<std::vector<Simplex>>& by_dim, int dim) {
  const auto& cells = by_dim.at(dim);
  if (dim == 0) {
    SparseIntMatrix aug(1, static_cast<int>(cells.size()));
    for (std::size_t j = 0; j < cells.size(); ++j) aug.columns[j].emplace_back(0, 1);
    return aug;
  }
  const auto& faces = by_dim.at(dim - 1);
  SparseIntMatrix m(static_cast<int>(faces.size()), static_cast<int>(cells.size()));
  for (std::size_t j = 0; j < cells.size(); ++j) {
    const Simplex& s = cells[j];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face;
      face.reserve(s.size() - 1);
      for (std::size_t t = 0; t < s.size(); ++t) {
        if (t != i) face.push_back(s[t]);
      }
      const auto it = std::lower_bound(faces.begin(), faces.end(), face);
      if (it == faces.end() || *it != face) {
        throw std::invalid_argument("simplex list is not closed under taking faces");
      }
      m.columns[j].emplace_back(static_cast<int>(it - faces.begin()), (i % 2 == 0) ? 1 : -1);
    }
  }
  return m;
}

HomologyProfile reduced_homology(const std::vector<Simplex>& simplices) {
  HomologyProfile out;
  if (simplices.empty()) {
    out.empty = true;
    out.betti = {0};
    out.torsion = {{}};
    return out;
  }
  const auto by_dim = group_by_dimension(simplices);
  const int top = static_cast<int>(by_dim.size()) - 1;
  std::vector<SmithSummary> boundary(top + 2);
  for (int d = 0; d <= top; ++d) boundary[d] = smith_summary(boundary_matrix(by_dim, d));

  out.betti.resize(top + 1);
  out.torsion.resize(top + 1);
  for (int d = 0; d <= top; ++d) {
    out.betti[d] = static_cast<long long>(by_dim[d].size()) -
                   static_cast<long long>(boundary[d].rank) -
                   static_cast<long long>(boundary[d + 1].rank);
    out.torsion[d] = boundary[d + 1].torsion;
  }
  return out;
}

HomologyProfile homology(const CompatibilityGraph& g, std::size_t capacity) {
  return reduced_homology(enumerate_simplices(g, capacity));
}

long long reduced_euler_characteristic(const std::vector<Simplex>& simplices) {
  long long chi = -1;
  for (const auto& s : simplices) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace helix

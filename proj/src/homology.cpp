#include "extremal/homology.hpp"

#include "extremal/errors.hpp"

#include <algorithm>
#include <tuple>

namespace extremal {

namespace {

using Column = std::vector<std::size_t>;

// Symmetric difference of two sorted index lists.
void add_into(Column& target, const Column& source, Column& scratch) {
    scratch.clear();
    std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                  std::back_inserter(scratch));
    target.swap(scratch);
}

std::vector<Column> boundary_columns(const FilteredComplex& fc) {
    const auto idx = index_of(fc);
    if (idx.size() != fc.size()) throw OrderingViolation("reduce: duplicate simplices");
    std::vector<Column> cols(fc.size());
    for (std::size_t i = 0; i < fc.size(); ++i) {
        for (const auto& f : fc.entries[i].cell.simplex.facets()) {
            auto it = idx.find(f);
            if (it == idx.end()) throw OrderingViolation("reduce: filtration is not face-closed");
            if (it->second >= i) throw OrderingViolation("reduce: face follows its coface");
            cols[i].push_back(it->second);
        }
        std::sort(cols[i].begin(), cols[i].end());
        if (i > 0 && fc.entries[i].value < fc.entries[i - 1].value)
            throw OrderingViolation("reduce: values are not sorted");
    }
    return cols;
}

// Rank over Z/2 of a sparse matrix given as sorted index columns, eliminating
// on the largest row index. Columns flagged in `skip` are left out; on return
// `pivot_rows` flags the rows that carry a pivot.
std::size_t rank_z2(std::vector<Column> cols, const std::vector<bool>& skip,
                    std::vector<bool>& pivot_rows) {
    std::vector<std::size_t> owner(pivot_rows.size(), kNoIndex);
    Column scratch;
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (skip[j]) continue;
        auto& col = cols[j];
        while (!col.empty() && owner[col.back()] != kNoIndex)
            add_into(col, cols[owner[col.back()]], scratch);
        if (col.empty()) continue;
        owner[col.back()] = j;
        pivot_rows[col.back()] = true;
        ++rank;
    }
    return rank;
}

} // namespace

std::size_t PersistenceDiagram::finite_count() const {
    return static_cast<std::size_t>(
        std::count_if(pairs.begin(), pairs.end(), [](const auto& p) { return !p.essential(); }));
}

std::size_t PersistenceDiagram::essential_count() const { return pairs.size() - finite_count(); }

PersistenceDiagram reduce(const FilteredComplex& fc, bool reduced) {
    auto cols = boundary_columns(fc);
    // lowest_owner[row] = column whose reduced lowest one is `row`.
    std::vector<std::size_t> lowest_owner(fc.size(), kNoIndex);
    std::vector<bool> creator(fc.size(), true);
    Column scratch;
    PersistenceDiagram pd;
    pd.reduced = reduced;
    // Top dimension first, so that a column whose index is already a pivot can
    // be skipped: it is known to reduce to zero.
    std::vector<bool> cleared(fc.size(), false);
    for (int p = fc.max_dim(); p >= 1; --p) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (fc.entries[j].cell.dim() != p) continue;
            auto& col = cols[j];
            if (cleared[j]) {
                col.clear();
                continue;
            }
            while (!col.empty() && lowest_owner[col.back()] != kNoIndex)
                add_into(col, cols[lowest_owner[col.back()]], scratch);
            if (col.empty()) continue;
            const auto low = col.back();
            lowest_owner[low] = j;
            creator[j] = false;
            cleared[low] = true;
            pd.pairs.push_back({fc.entries[low].cell.dim(), fc.entries[low].value,
                                fc.entries[j].value, low, j});
        }
    }
    for (std::size_t i = 0; i < fc.size(); ++i) {
        if (creator[i] && lowest_owner[i] == kNoIndex)
            pd.pairs.push_back({fc.entries[i].cell.dim(), fc.entries[i].value, kInfinity, i,
                                kNoIndex});
    }
    std::sort(pd.pairs.begin(), pd.pairs.end(), [](const auto& a, const auto& b) {
        return std::tie(a.dim, a.birth, a.death, a.birth_index) <
               std::tie(b.dim, b.birth, b.death, b.birth_index);
    });
    return pd;
}

int betti_at(const PersistenceDiagram& pd, int p, double r, const Tolerance& tol) {
    const double level = r + tol.abs_eps;
    int count = 0;
    for (const auto& pair : pd.pairs)
        if (pair.dim == p && pair.birth <= level && level < pair.death) ++count;
    if (pd.reduced && p == 0 && count > 0) --count;
    return count;
}

std::vector<int> betti_numbers(const PersistenceDiagram& pd, int max_dim, double r,
                               const Tolerance& tol) {
    std::vector<int> out;
    for (int p = 0; p <= max_dim; ++p) out.push_back(betti_at(pd, p, r, tol));
    return out;
}

std::vector<int> betti_by_rank(const FilteredComplex& fc, double r, bool reduced,
                               const Tolerance& tol) {
    const int top = fc.max_dim();
    std::vector<int> betti(static_cast<std::size_t>(std::max(top + 1, 0)), 0);
    if (top < 0) return betti;
    const double level = r + tol.abs_eps;
    // Position of each sublevel simplex within its own dimension.
    std::vector<std::vector<const Simplex*>> by_dim(top + 1);
    SimplexIndex within;
    for (const auto& e : fc.entries) {
        if (e.value > level) continue;
        auto& bucket = by_dim[e.cell.dim()];
        within.emplace(e.cell.simplex, bucket.size());
        bucket.push_back(&e.cell.simplex);
    }
    // rank of boundary map from dimension p to p - 1; for reduced homology the
    // augmentation counts as the boundary of vertices. Working downwards, a
    // (p-1)-simplex that is a pivot row of the p-boundary has a cycle with that
    // leading index, so its own column can be dropped without changing the rank.
    std::vector<std::size_t> rank(top + 2, 0);
    if (reduced && !by_dim[0].empty()) rank[0] = 1;
    std::vector<bool> skip(by_dim[top].size(), false);
    for (int p = top; p >= 1; --p) {
        const auto& cells = by_dim[p];
        std::vector<bool> pivots(by_dim[p - 1].size(), false);
        if (!cells.empty()) {
            std::vector<Column> cols(cells.size());
            for (std::size_t c = 0; c < cells.size(); ++c) {
                for (const auto& f : cells[c]->facets()) {
                    auto it = within.find(f);
                    if (it == within.end())
                        throw OrderingViolation(
                            "betti_by_rank: sublevel complex is not face-closed");
                    cols[c].push_back(it->second);
                }
                std::sort(cols[c].begin(), cols[c].end());
            }
            rank[p] = rank_z2(std::move(cols), skip, pivots);
        }
        skip = std::move(pivots);
    }
    for (int p = 0; p <= top; ++p) {
        const auto n = static_cast<long long>(by_dim[p].size());
        betti[p] = static_cast<int>(n - static_cast<long long>(rank[p]) -
                                    static_cast<long long>(rank[p + 1]));
    }
    return betti;
}

std::vector<int> betti_of_subcomplex(const FilteredComplex& fc, double r, bool reduced,
                                     const Tolerance& tol) {
    return betti_of_subcomplex(fc, reduce(fc, reduced), r, tol);
}

std::vector<int> betti_of_subcomplex(const FilteredComplex& fc, const PersistenceDiagram& pd,
                                     double r, const Tolerance& tol) {
    auto from_pairs = betti_numbers(pd, fc.max_dim(), r, tol);
    const auto from_rank = betti_by_rank(fc, r, pd.reduced, tol);
    if (from_pairs != from_rank)
        throw Error("betti_of_subcomplex: persistence and rank computations disagree");
    return from_pairs;
}

std::optional<double> euler_mismatch(const FilteredComplex& fc, const PersistenceDiagram& pd) {
    PersistenceDiagram unreduced = pd;
    unreduced.reduced = false;
    const int top = fc.max_dim();
    long long chi = 0;
    Tolerance exact;
    exact.abs_eps = 0.0;
    for (std::size_t i = 0; i < fc.size(); ++i) {
        chi += fc.entries[i].cell.dim() % 2 == 0 ? 1 : -1;
        if (i + 1 < fc.size() && fc.entries[i + 1].value == fc.entries[i].value) continue;
        const double r = fc.entries[i].value;
        long long alt = 0;
        for (int p = 0; p <= top; ++p)
            alt += (p % 2 == 0 ? 1 : -1) * betti_at(unreduced, p, r, exact);
        if (alt != chi) return r;
    }
    return std::nullopt;
}

FilteredComplex shuffle_within_groups(const FilteredComplex& fc, std::mt19937_64& rng) {
    FilteredComplex out = fc;
    auto& e = out.entries;
    std::size_t start = 0;
    while (start < e.size()) {
        std::size_t end = start + 1;
        while (end < e.size() && e[end].value == e[start].value &&
               e[end].cell.dim() == e[start].cell.dim())
            ++end;
        std::shuffle(e.begin() + static_cast<std::ptrdiff_t>(start),
                     e.begin() + static_cast<std::ptrdiff_t>(end), rng);
        start = end;
    }
    return out;
}

bool same_diagram(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    auto key = [](const PersistenceDiagram& pd) {
        std::vector<std::tuple<int, double, double>> v;
        for (const auto& p : pd.pairs) v.emplace_back(p.dim, p.birth, p.death);
        std::sort(v.begin(), v.end());
        return v;
    };
    return key(a) == key(b);
}

} // namespace extremal

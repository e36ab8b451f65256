#include "ffcalc/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ffcalc/errors.hpp"
#include "ffcalc/rational.hpp"

namespace ffcalc::weyl {

namespace {

void require_size(const Composition& c, int n, const char* field) {
    if (c.total() != n) {
        throw PreconditionError(field, std::string(field) + " composition sums to " + std::to_string(c.total()) +
                                           ", expected " + std::to_string(n));
    }
}

std::uint64_t factorial(std::int64_t m) {
    if (m > 20) throw std::overflow_error("factorial exceeds 64 bits");
    std::uint64_t f = 1;
    for (std::int64_t i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// Blocks of 1..n as half-open 0-based index ranges.
std::vector<std::pair<std::size_t, std::size_t>> block_ranges(const Composition& c) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t begin = 0;
    for (auto part : c.parts()) {
        out.emplace_back(begin, begin + static_cast<std::size_t>(part));
        begin += static_cast<std::size_t>(part);
    }
    return out;
}

bool increasing_on_blocks(std::span<const int> seq, const Composition& c) {
    for (auto [begin, end] : block_ranges(c)) {
        for (std::size_t i = begin + 1; i < end; ++i) {
            if (seq[i - 1] > seq[i]) return false;
        }
    }
    return true;
}

}  // namespace

WeylElement::WeylElement(std::vector<int> one_line) : one_line_(std::move(one_line)) {
    const std::size_t n = one_line_.size();
    std::vector<bool> seen(n + 1, false);
    for (std::size_t i = 0; i < n; ++i) {
        const int v = one_line_[i];
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
            throw PreconditionError("w[" + std::to_string(i) + "]", "not a permutation of 1.." + std::to_string(n));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

WeylElement WeylElement::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return WeylElement(std::move(v));
}

WeylElement WeylElement::simple_reflection(int n, int i) {
    if (i < 1 || i >= n) throw std::out_of_range("simple reflection index out of range");
    auto v = identity(n).one_line_;
    std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
    return WeylElement(std::move(v));
}

WeylElement WeylElement::longest(int n) {
    auto v = identity(n).one_line_;
    std::reverse(v.begin(), v.end());
    return WeylElement(std::move(v));
}

WeylElement WeylElement::inverse() const {
    std::vector<int> inv(one_line_.size());
    for (std::size_t i = 0; i < one_line_.size(); ++i) inv[static_cast<std::size_t>(one_line_[i] - 1)] = static_cast<int>(i + 1);
    return WeylElement(std::move(inv));
}

bool WeylElement::is_identity() const noexcept {
    for (std::size_t i = 0; i < one_line_.size(); ++i) {
        if (one_line_[i] != static_cast<int>(i + 1)) return false;
    }
    return true;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    if (a.size() != b.size()) throw PreconditionError("w", "size mismatch in product");
    std::vector<int> out(static_cast<std::size_t>(a.size()));
    for (int i = 1; i <= a.size(); ++i) out[static_cast<std::size_t>(i - 1)] = a(b(i));
    return WeylElement(std::move(out));
}

std::int64_t length(const WeylElement& w) {
    // Fenwick tree over values: count earlier entries larger than the current one.
    const auto n = static_cast<std::size_t>(w.size());
    std::vector<std::int64_t> tree(n + 1, 0);
    std::int64_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = static_cast<std::size_t>(w.one_line()[i]);
        std::int64_t not_greater = 0;
        for (std::size_t k = v; k > 0; k -= k & (~k + 1)) not_greater += tree[k];
        inversions += static_cast<std::int64_t>(i) - not_greater;
        for (std::size_t k = v; k <= n; k += k & (~k + 1)) tree[k] += 1;
    }
    return inversions;
}

std::vector<int> reduced_word(const WeylElement& w) {
    std::vector<int> v(w.one_line().begin(), w.one_line().end());
    std::vector<int> sorted_by;  // w s_{r_1} s_{r_2} ⋯ = id
    std::size_t i = 0;
    while (i + 1 < v.size()) {
        if (v[i] > v[i + 1]) {
            std::swap(v[i], v[i + 1]);
            sorted_by.push_back(static_cast<int>(i + 1));
            i = i == 0 ? 0 : i - 1;  // the smallest descent can only move one step left
        } else {
            ++i;
        }
    }
    std::reverse(sorted_by.begin(), sorted_by.end());
    return sorted_by;
}

bool is_minimal_rep(const WeylElement& w, const YoungSubgroup& left, const YoungSubgroup& right) {
    require_size(left, w.size(), "left");
    require_size(right, w.size(), "right");
    const WeylElement inv = w.inverse();
    return increasing_on_blocks(w.one_line(), right) && increasing_on_blocks(inv.one_line(), left);
}

std::vector<WeylElement> min_double_coset_reps(int n, const YoungSubgroup& left, const YoungSubgroup& right) {
    if (n < 1 || n > kMaxEnumerationRank) {
        throw PreconditionError("n", "double-coset enumeration needs 1 <= n <= " + std::to_string(kMaxEnumerationRank));
    }
    require_size(left, n, "left");
    require_size(right, n, "right");
    // Every double coset has exactly one element increasing on the right
    // blocks whose inverse is increasing on the left blocks; walking S_n in
    // lexicographic order keeps the output sorted.
    std::vector<WeylElement> reps;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> inv(perm.size());
    do {
        if (!increasing_on_blocks(perm, right)) continue;
        for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i] - 1)] = static_cast<int>(i + 1);
        if (increasing_on_blocks(inv, left)) reps.emplace_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return reps;
}

bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
    if (u.size() != w.size()) throw PreconditionError("u", "size mismatch in Bruhat comparison");
    // pos[v] = x^{-1}(v); s_i is a left descent of x iff pos[i] > pos[i+1].
    const WeylElement inv = u.inverse();
    std::vector<int> pos(inv.one_line().begin(), inv.one_line().end());
    for (int letter : reduced_word(w)) {
        auto& a = pos[static_cast<std::size_t>(letter - 1)];
        auto& b = pos[static_cast<std::size_t>(letter)];
        if (a > b) std::swap(a, b);
    }
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (pos[i] != static_cast<int>(i + 1)) return false;
    }
    return true;
}

IntMatrix matrix_from_rep(const WeylElement& w, const YoungSubgroup& left, const YoungSubgroup& right) {
    require_size(left, w.size(), "left");
    require_size(right, w.size(), "right");
    std::vector<std::size_t> row_of_value;
    row_of_value.reserve(static_cast<std::size_t>(w.size()));
    for (std::size_t i = 0; i < left.size(); ++i) row_of_value.insert(row_of_value.end(), static_cast<std::size_t>(left[i]), i);
    IntMatrix h(left.size(), std::vector<std::int64_t>(right.size(), 0));
    std::size_t col = 0;
    std::int64_t col_end = right[0];
    for (int a = 1; a <= w.size(); ++a) {
        if (a > col_end) col_end += right[++col];
        h[row_of_value[static_cast<std::size_t>(w(a) - 1)]][col] += 1;
    }
    return h;
}

WeylElement coset_rep_from_matrix(const IntMatrix& h) {
    if (h.empty() || h.front().empty()) throw PreconditionError("matrix", "rank matrix must be nonempty");
    const std::size_t rows = h.size();
    const std::size_t cols = h.front().size();
    std::vector<std::int64_t> row_sums(rows, 0);
    std::vector<std::int64_t> col_sums(cols, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        if (h[i].size() != cols) throw PreconditionError("matrix[" + std::to_string(i) + "]", "rank matrix is ragged");
        for (std::size_t j = 0; j < cols; ++j) {
            if (h[i][j] < 0) {
                throw PreconditionError("matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                                        "rank matrix entries must be >= 0");
            }
            row_sums[i] = checked_add(row_sums[i], h[i][j]);
            col_sums[j] = checked_add(col_sums[j], h[i][j]);
        }
    }
    const Composition left(row_sums, "matrix rows");
    const Composition right(col_sums, "matrix columns");
    if (left.total() > 1'000'000) throw PreconditionError("matrix", "rank matrix total exceeds 1000000");

    // Left block i hands out its values in increasing order, h_i1 of them to
    // right block 1, then h_i2 to right block 2, and so on. Each right block
    // then lists the values it received in increasing order.
    std::vector<std::vector<int>> received(cols);
    int next_value = 1;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            for (std::int64_t t = 0; t < h[i][j]; ++t) received[j].push_back(next_value++);
        }
    }
    std::vector<int> one_line;
    one_line.reserve(static_cast<std::size_t>(left.total()));
    for (auto& block : received) {
        std::sort(block.begin(), block.end());
        one_line.insert(one_line.end(), block.begin(), block.end());
    }
    return WeylElement(std::move(one_line));
}

std::uint64_t count_contingency_matrices(std::span<const std::int64_t> row_sums,
                                         std::span<const std::int64_t> col_sums) {
    // Fill row by row; the state is the vector of column sums still owed.
    using State = std::vector<std::int64_t>;
    std::map<State, std::uint64_t> layer{{State(col_sums.begin(), col_sums.end()), 1}};
    for (auto row : row_sums) {
        std::map<State, std::uint64_t> next;
        for (const auto& [owed, ways] : layer) {
            State cur = owed;
            // distribute `row` units over the columns, each at most owed[j]
            auto place = [&](auto&& self, std::size_t j, std::int64_t left_over) -> void {
                if (j + 1 == cur.size()) {
                    if (left_over > cur[j]) return;
                    cur[j] -= left_over;
                    next[cur] += ways;
                    cur[j] += left_over;
                    return;
                }
                for (std::int64_t take = 0; take <= std::min(left_over, cur[j]); ++take) {
                    cur[j] -= take;
                    self(self, j + 1, left_over - take);
                    cur[j] += take;
                }
            };
            if (!cur.empty()) place(place, 0, row);
        }
        layer = std::move(next);
    }
    const auto it = layer.find(State(col_sums.size(), 0));
    return it == layer.end() ? 0 : it->second;
}

std::uint64_t double_coset_size(const WeylElement& w, const YoungSubgroup& left, const YoungSubgroup& right) {
    // Π h_i! · Π_j multinomial(h'_j; h_1j, ..., h_kj); every partial product
    // is bounded by the final size, which is at most n!.
    const IntMatrix h = matrix_from_rep(w, left, right);
    if (w.size() > 20) throw std::overflow_error("double coset size exceeds 64 bits");
    std::uint64_t size = 1;
    for (auto p : left.parts()) size *= factorial(p);
    for (std::size_t j = 0; j < right.size(); ++j) {
        std::int64_t filled = 0;
        for (std::size_t i = 0; i < left.size(); ++i) {
            for (std::int64_t t = 1; t <= h[i][j]; ++t) {
                size = static_cast<std::uint64_t>(static_cast<unsigned __int128>(size) * static_cast<std::uint64_t>(filled + t) /
                                                  static_cast<std::uint64_t>(t));
            }
            filled += h[i][j];
        }
    }
    return size;
}

}  // namespace ffcalc::weyl

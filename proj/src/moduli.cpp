#include "ffcalc/moduli.hpp"

#include <stdexcept>

#include "ffcalc/banach_colmez.hpp"
#include "ffcalc/errors.hpp"

namespace ffcalc::moduli {

namespace {

void require_matching(const Composition& h, std::span<const std::int64_t> d) {
    if (h.size() != d.size()) {
        throw PreconditionError("d", "length mismatch: composition has " + std::to_string(h.size()) +
                                         " parts but degree vector has " + std::to_string(d.size()));
    }
}

// Σ_{c = first}^{first+count-1} (2c − n − 1): the coordinates first..first+count-1
// of 2ρ for GL_n with positive roots e_b − e_a (a < b).
std::int64_t two_rho_block_sum(std::int64_t first, std::int64_t count, std::int64_t n) {
    const std::int64_t inner = checked_sub(checked_add(checked_mul(2, first), count), checked_add(n, 2));
    return checked_mul(count, inner);
}

// deg Hom(A, B) = rk(A) deg(B) − rk(B) deg(A)
std::int64_t hom_degree(const GradedPiece& from, const GradedPiece& to) {
    return checked_sub(checked_mul(from.rank, to.degree), checked_mul(to.rank, from.degree));
}

GradedFlagData graded_pieces(const Composition& h, std::span<const std::int64_t> d) {
    GradedFlagData out;
    out.reserve(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) out.push_back({h[i], d[i]});
    return out;
}

}  // namespace

std::int64_t d_nu(const Composition& h, std::span<const std::int64_t> d) {
    require_matching(h, d);
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        for (std::size_t j = i + 1; j < h.size(); ++j) {
            sum = checked_add(sum, checked_sub(checked_mul(h[i], d[j]), checked_mul(h[j], d[i])));
        }
    }
    return sum;
}

std::int64_t d_nu_pairing(const Composition& h, std::span<const std::int64_t> d) {
    require_matching(h, d);
    const std::int64_t n = h.total();
    Rational with_g;  // ⟨2ρ_G, μ⟩
    Rational with_m;  // ⟨2ρ_M, μ⟩
    std::int64_t first = 1;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Rational mu(d[i], h[i]);
        with_g += mu * Rational(two_rho_block_sum(first, h[i], n));
        with_m += mu * Rational(two_rho_block_sum(1, h[i], h[i]));
        first = checked_add(first, h[i]);
    }
    // μ is central on every block, so the Levi part pairs to zero.
    if (with_m != Rational(0)) throw std::logic_error("<2rho_M, mu> = " + with_m.to_string() + ", expected 0");
    const Rational with_u = with_g - with_m;
    if (!with_u.is_integer()) throw std::logic_error("<2rho_U, mu> is not integral: " + with_u.to_string());
    return with_u.num();
}

std::int64_t filtered_end_degree(std::span<const GradedPiece> pieces) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        for (std::size_t j = i; j < pieces.size(); ++j) sum = checked_add(sum, hom_degree(pieces[j], pieces[i]));
    }
    return sum;
}

std::int64_t bun_p_stratum_dim(const Composition& h, std::span<const std::int64_t> d) {
    const std::int64_t explicit_sum = d_nu(h, d);
    const std::int64_t pairing = d_nu_pairing(h, d);
    const std::int64_t tangent = checked_neg(filtered_end_degree(graded_pieces(h, d)));
    if (explicit_sum != pairing || explicit_sum != tangent) {
        throw std::logic_error("d_nu computations disagree: sum=" + std::to_string(explicit_sum) +
                               " pairing=" + std::to_string(pairing) + " tangent=" + std::to_string(tangent));
    }
    return explicit_sum;
}

std::int64_t laumon_stratum_dim(const Composition& h, std::span<const std::int64_t> d) {
    return bun_p_stratum_dim(h, d);
}

std::int64_t bun_g_dim(const Bundle& e) {
    if (e.is_zero()) throw PreconditionError("summands", "Bun_G dimension needs a nonzero bundle");
    const Bundle adjoint = tensor(dual(e), e);
    if (degree(adjoint) != 0) throw std::logic_error("End(E) has nonzero degree for E = " + e.to_string());
    return bc::picard_dim({adjoint, Bundle{}}).dim();
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::shape: return "shape";
        case ViolationKind::negative_rank: return "negative-rank";
        case ViolationKind::row_rank: return "row-rank";
        case ViolationKind::col_rank: return "col-rank";
        case ViolationKind::row_degree: return "row-degree";
        case ViolationKind::col_degree: return "col-degree";
    }
    return "unknown";
}

std::vector<Violation> validate_bifiltration(const BifiltrationData& b) {
    std::vector<Violation> out;
    const std::size_t rows = b.row_ranks.size();
    const std::size_t cols = b.col_ranks.size();

    auto shape = [&](const std::string& msg) { out.push_back({ViolationKind::shape, 0, 0, 0, msg}); };
    if (rows == 0 || cols == 0) shape("row and column marginals must be nonempty");
    if (b.row_degs.size() != rows) shape("row_degs has length " + std::to_string(b.row_degs.size()) +
                                         ", expected " + std::to_string(rows));
    if (b.col_degs.size() != cols) shape("col_degs has length " + std::to_string(b.col_degs.size()) +
                                         ", expected " + std::to_string(cols));
    for (const auto* m : {&b.h, &b.d}) {
        const char* name = m == &b.h ? "h" : "d";
        if (m->size() != rows) {
            shape(std::string(name) + " has " + std::to_string(m->size()) + " rows, expected " + std::to_string(rows));
            continue;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if ((*m)[i].size() != cols) {
                shape(std::string(name) + " row " + std::to_string(i + 1) + " has " + std::to_string((*m)[i].size()) +
                      " entries, expected " + std::to_string(cols));
            }
        }
    }
    if (!out.empty()) return out;

    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (b.h[i][j] < 0) {
                out.push_back({ViolationKind::negative_rank, i + 1, 0, b.h[i][j],
                               "h[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] is negative"});
            }
        }
    }

    auto check = [&](ViolationKind kind, const IntMatrix& m, const std::vector<std::int64_t>& target, bool by_row) {
        const std::size_t count = by_row ? rows : cols;
        for (std::size_t a = 0; a < count; ++a) {
            std::int64_t sum = 0;
            const std::size_t other = by_row ? cols : rows;
            for (std::size_t c = 0; c < other; ++c) sum = checked_add(sum, by_row ? m[a][c] : m[c][a]);
            if (sum != target[a]) {
                out.push_back({kind, a + 1, target[a], sum,
                               to_string(kind) + " violation at " + (by_row ? "i=" : "j=") + std::to_string(a + 1) +
                                   ": sum is " + std::to_string(sum) + ", expected " + std::to_string(target[a])});
            }
        }
    };
    check(ViolationKind::row_rank, b.h, b.row_ranks, true);
    check(ViolationKind::col_rank, b.h, b.col_ranks, false);
    check(ViolationKind::row_degree, b.d, b.row_degs, true);
    check(ViolationKind::col_degree, b.d, b.col_degs, false);
    return out;
}

namespace {

// Input field holding the offending entry.
std::string violation_location(const Violation& v) {
    const auto indexed = [&](const char* field) { return std::string(field) + "[" + std::to_string(v.index - 1) + "]"; };
    switch (v.kind) {
        case ViolationKind::row_rank: return indexed("row_ranks");
        case ViolationKind::col_rank: return indexed("col_ranks");
        case ViolationKind::row_degree: return indexed("row_degs");
        case ViolationKind::col_degree: return indexed("col_degs");
        default: return "h";
    }
}

}  // namespace

std::int64_t relpos_stratum_dim(const BifiltrationData& b) {
    const auto violations = validate_bifiltration(b);
    if (!violations.empty()) {
        std::string msg = "inconsistent bifiltration data:";
        for (const auto& v : violations) msg += " [" + v.message + "]";
        throw PreconditionError(violation_location(violations.front()), msg);
    }
    const std::size_t rows = b.h.size();
    const std::size_t cols = b.h.front().size();
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            for (std::size_t p = i; p < rows; ++p) {
                for (std::size_t q = j; q < cols; ++q) {
                    sum = checked_add(sum, checked_sub(checked_mul(b.h[i][j], b.d[p][q]),
                                                       checked_mul(b.h[p][q], b.d[i][j])));
                }
            }
        }
    }
    return sum;
}

}  // namespace ffcalc::moduli

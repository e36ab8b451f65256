// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ffcalc/banach_colmez.hpp"
#include "ffcalc/bundle.hpp"
#include "ffcalc/cli.hpp"
#include "ffcalc/moduli.hpp"
#include "ffcalc/sampling.hpp"
#include "ffcalc/weyl.hpp"
#include "oracles.hpp"

using namespace ffcalc;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

using Criterion = std::function<Outcome()>;

std::int64_t dim_of(const bc::SmoothDim& s) { return s.dim(); }

// Every (h, d) with 1 <= k <= 4 blocks, parts in [1, 4], degrees in [-5, 5].
void for_each_block_datum(const std::function<void(const std::vector<std::int64_t>&,
                                                   const std::vector<std::int64_t>&)>& visit) {
    std::vector<std::int64_t> h, d;
    std::function<void()> rec = [&] {
        if (!h.empty()) visit(h, d);
        if (h.size() == 4) return;
        for (std::int64_t part = 1; part <= 4; ++part) {
            for (std::int64_t deg = -5; deg <= 5; ++deg) {
                h.push_back(part);
                d.push_back(deg);
                rec();
                h.pop_back();
                d.pop_back();
            }
        }
    };
    rec();
}

Outcome bun_g_zero() {
    Outcome out;
    sampling::Rng rng(101);
    int cases = 0;
    while (cases < 100000) {
        const Bundle e = sampling::random_bundle(rng, {});
        if (e.is_zero()) continue;
        ++cases;
        if (moduli::bun_g_dim(e) != 0) out.fail("nonzero dimension for " + e.to_string());
        if (degree(tensor(dual(e), e)) != 0) out.fail("End has nonzero degree for " + e.to_string());
    }
    out.detail = out.pass ? std::to_string(cases) + " bundles" : out.detail;
    return out;
}

Outcome d_nu_triple() {
    Outcome out;
    std::size_t cases = 0;
    for_each_block_datum([&](const auto& h, const auto& d) {
        ++cases;
        const Composition comp(h);
        moduli::GradedFlagData pieces;
        for (std::size_t i = 0; i < h.size(); ++i) pieces.push_back({h[i], d[i]});
        const auto sum = moduli::d_nu(comp, d);
        if (sum != moduli::d_nu_pairing(comp, d) || sum != -moduli::filtered_end_degree(pieces)) {
            out.fail("disagreement at case " + std::to_string(cases));
        }
    });
    if (out.pass) out.detail = std::to_string(cases) + " block data";
    return out;
}

Outcome sign_laws() {
    Outcome out;
    sampling::Rng rng(303);
    std::uniform_int_distribution<std::int64_t> k_dist(2, 6), part(1, 6), deg(-30, 30);
    int increasing = 0, decreasing = 0;
    while (increasing < 1000 || decreasing < 1000) {
        const auto k = static_cast<std::size_t>(k_dist(rng));
        std::vector<std::int64_t> h(k), d(k);
        for (std::size_t i = 0; i < k; ++i) {
            h[i] = part(rng);
            d[i] = deg(rng);
        }
        // sort the block slopes to produce one increasing and one decreasing tuple
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return Rational(d[a], h[a]) < Rational(d[b], h[b]); });
        bool distinct = true;
        for (std::size_t i = 0; i + 1 < k; ++i) {
            distinct = distinct && Rational(d[idx[i]], h[idx[i]]) < Rational(d[idx[i + 1]], h[idx[i + 1]]);
        }
        if (!distinct) continue;
        std::vector<std::int64_t> hi, di;
        for (auto i : idx) {
            hi.push_back(h[i]);
            di.push_back(d[i]);
        }
        if (increasing < 1000) {
            ++increasing;
            if (moduli::d_nu(Composition(hi), di) <= 0) out.fail("increasing tuple gave d_nu <= 0");
        }
        std::reverse(hi.begin(), hi.end());
        std::reverse(di.begin(), di.end());
        if (decreasing < 1000) {
            ++decreasing;
            if (moduli::d_nu(Composition(hi), di) >= 0) out.fail("decreasing tuple gave d_nu >= 0");
        }
    }
    if (out.pass) out.detail = "1000 increasing, 1000 decreasing";
    return out;
}

Outcome euler_characteristic() {
    Outcome out;
    std::vector<Slope> pool;
    for (const auto& s : oracle::slopes(4, 3)) {
        if (s.sign() != 0) pool.push_back(s);
    }
    std::size_t cases = 0;
    for (const auto& e : oracle::all_bundles(5, pool)) {
        ++cases;
        const auto h0 = bc::h0_dim(e), h1 = bc::h1_dim(e);
        if (!h0.is_smooth() || !h1.is_smooth() || h0.dim() - h1.dim() != degree(e)) {
            out.fail("mismatch for " + e.to_string());
        }
    }
    if (out.pass) out.detail = std::to_string(cases) + " bundles";
    return out;
}

std::vector<bc::TwoTermComplex> complex_sample() {
    sampling::Rng rng(505);
    sampling::BundleShape shape;
    shape.allow_slope_zero = false;
    std::vector<bc::TwoTermComplex> out;
    for (int i = 0; i < 10000; ++i) {
        Bundle a = sampling::random_bundle(rng, shape);
        Bundle b = sampling::random_bundle(rng, shape);
        out.push_back({std::move(a), std::move(b)});
    }
    return out;
}

Outcome picard_identity() {
    Outcome out;
    for (const auto& c : complex_sample()) {
        const auto dims = bc::complex_h_dims(c);
        const auto pic = bc::picard_dim(c);
        if (!pic.is_smooth() || !dims.h0.is_smooth() || !dims.hminus1.is_smooth() ||
            pic.dim() != dims.h0.dim() - dims.hminus1.dim()) {
            out.fail("mismatch for (" + c.e_minus1.to_string() + ", " + c.e_zero.to_string() + ")");
        }
    }
    if (out.pass) out.detail = "10000 complexes";
    return out;
}

Outcome additivity() {
    Outcome out;
    for (const auto& c : complex_sample()) {
        const auto dims = bc::complex_h_dims(c);
        if (dim_of(dims.h0) != dim_of(bc::h0_dim(c.e_zero)) + dim_of(bc::h1_dim(c.e_minus1))) {
            out.fail("mismatch for (" + c.e_minus1.to_string() + ", " + c.e_zero.to_string() + ")");
        }
    }
    if (out.pass) out.detail = "10000 complexes";
    return out;
}

moduli::BifiltrationData with_marginals(moduli::IntMatrix h, moduli::IntMatrix d) {
    moduli::BifiltrationData b{std::move(h), std::move(d), {}, {}, {}, {}};
    const std::size_t rows = b.h.size(), cols = b.h[0].size();
    b.row_ranks.assign(rows, 0);
    b.row_degs.assign(rows, 0);
    b.col_ranks.assign(cols, 0);
    b.col_degs.assign(cols, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            b.row_ranks[i] += b.h[i][j];
            b.col_ranks[j] += b.h[i][j];
            b.row_degs[i] += b.d[i][j];
            b.col_degs[j] += b.d[i][j];
        }
    }
    return b;
}

Outcome relpos_reduction() {
    Outcome out;
    std::size_t cases = 0;
    for_each_block_datum([&](const auto& h, const auto& d) {
        ++cases;
        moduli::IntMatrix hm, dm;
        for (std::size_t i = 0; i < h.size(); ++i) {
            hm.push_back({h[i]});
            dm.push_back({d[i]});
        }
        if (moduli::relpos_stratum_dim(with_marginals(hm, dm)) != moduli::d_nu(Composition(h), d)) {
            out.fail("single-column mismatch at case " + std::to_string(cases));
        }
    });

    const auto valid = with_marginals({{1, 2, 1}, {2, 1, 3}}, {{0, 1, -2}, {3, 0, 1}});
    if (!moduli::validate_bifiltration(valid).empty()) out.fail("valid instance rejected");
    std::size_t perturbations = 0;
    auto check = [&](const moduli::BifiltrationData& b, const std::string& where) {
        ++perturbations;
        if (moduli::validate_bifiltration(b).empty()) out.fail("perturbation accepted: " + where);
    };
    for (std::int64_t delta : {-1, 1}) {
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                auto b = valid;
                b.h[i][j] += delta;
                check(b, "h");
                b = valid;
                b.d[i][j] += delta;
                check(b, "d");
            }
            auto b = valid;
            b.row_ranks[i] += delta;
            check(b, "row_ranks");
            b = valid;
            b.row_degs[i] += delta;
            check(b, "row_degs");
        }
        for (std::size_t j = 0; j < 3; ++j) {
            auto b = valid;
            b.col_ranks[j] += delta;
            check(b, "col_ranks");
            b = valid;
            b.col_degs[j] += delta;
            check(b, "col_degs");
        }
    }
    if (out.pass) {
        out.detail = std::to_string(cases) + " single-column data, " + std::to_string(perturbations) +
                     " perturbations rejected";
    }
    return out;
}

Outcome torsion_formulas() {
    Outcome out;
    sampling::Rng rng(808);
    for (int i = 0; i < 10000; ++i) {
        const auto q1 = sampling::random_torsion(rng);
        const auto q2 = sampling::random_torsion(rng);
        const auto he = bc::torsion_hom_ext_dims(q1, q2);
        if (!he.hom.is_smooth() || !he.ext.is_smooth() || he.hom.dim() != he.ext.dim()) {
            out.fail("hom and ext differ");
        }
    }
    for (int i = 0; i < 10000; ++i) {
        const auto q = sampling::random_torsion(rng);
        const Bundle g = sampling::random_bundle(rng, {});
        std::int64_t length = 0;
        for (const auto& [point, lengths] : q.stalks()) {
            for (auto m : lengths) length += m;
        }
        const auto ext1 = bc::ext1_torsion_bundle_dim(q, g);
        if (!ext1.is_smooth() || ext1.dim() != length * rank(g)) out.fail("ext1 differs from deg * rank");
    }
    if (out.pass) out.detail = "10000 pairs each";
    return out;
}

// All nonnegative integer matrices with the given margins.
void for_each_matrix(const std::vector<std::int64_t>& rows, const std::vector<std::int64_t>& cols,
                     const std::function<void(const weyl::IntMatrix&)>& visit) {
    weyl::IntMatrix m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
    auto row_left = rows;
    auto col_left = cols;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
        if (i == rows.size()) {
            if (std::all_of(col_left.begin(), col_left.end(), [](auto c) { return c == 0; })) visit(m);
            return;
        }
        if (j == cols.size()) {
            if (row_left[i] == 0) rec(i + 1, 0);
            return;
        }
        for (std::int64_t take = 0; take <= std::min(row_left[i], col_left[j]); ++take) {
            m[i][j] = take;
            row_left[i] -= take;
            col_left[j] -= take;
            rec(i, j + 1);
            row_left[i] += take;
            col_left[j] += take;
        }
        m[i][j] = 0;
    };
    rec(0, 0);
}

Outcome weyl_counts() {
    Outcome out;
    std::size_t pairs = 0, round_trips = 0;
    std::uint64_t factorial = 1;
    for (int n = 1; n <= 7; ++n) {
        factorial *= static_cast<std::uint64_t>(n);
        const auto comps = oracle::compositions(n);
        for (const auto& l : comps) {
            for (const auto& r : comps) {
                ++pairs;
                const Composition left(l), right(r);
                const auto reps = weyl::min_double_coset_reps(n, left, right);
                const auto expected = oracle::count_matrices(l, r);
                if (reps.size() != expected || weyl::count_contingency_matrices(l, r) != expected) {
                    out.fail("count mismatch at n=" + std::to_string(n));
                }
                std::uint64_t total = 0;
                for (const auto& w : reps) total += weyl::double_coset_size(w, left, right);
                if (total != factorial) out.fail("coset sizes do not sum to n! at n=" + std::to_string(n));
                if (n > 6) continue;
                for (const auto& w : reps) {
                    ++round_trips;
                    if (weyl::coset_rep_from_matrix(weyl::matrix_from_rep(w, left, right)) != w) {
                        out.fail("rep -> matrix -> rep is not the identity");
                    }
                }
                for_each_matrix(l, r, [&](const weyl::IntMatrix& m) {
                    ++round_trips;
                    const auto w = weyl::coset_rep_from_matrix(m);
                    if (!weyl::is_minimal_rep(w, left, right) || weyl::matrix_from_rep(w, left, right) != m) {
                        out.fail("matrix -> rep -> matrix is not the identity");
                    }
                });
            }
        }
    }
    if (out.pass) {
        out.detail = std::to_string(pairs) + " composition pairs, " + std::to_string(round_trips) + " round trips";
    }
    return out;
}

Outcome bruhat_order() {
    Outcome out;
    std::size_t comparisons = 0;
    for (int n = 1; n <= 5; ++n) {
        const auto perms = oracle::all_perms(n);
        for (const auto& w : perms) {
            const auto words = oracle::all_reduced_words(w);
            const auto below = oracle::reduced_subword_products(words.front(), n);
            for (std::size_t k = 1; k < words.size(); ++k) {
                if (oracle::reduced_subword_products(words[k], n) != below) out.fail("subword set depends on the word");
            }
            const weyl::WeylElement we(w);
            for (const auto& u : perms) {
                ++comparisons;
                if (weyl::bruhat_leq(weyl::WeylElement(u), we) != below.contains(u)) out.fail("predicate mismatch");
            }
        }
    }
    if (out.pass) out.detail = std::to_string(comparisons) + " pairs";
    return out;
}

Outcome dominance_poset() {
    Outcome out;
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<Bundle>> classes;
    for (auto& e : oracle::all_bundles(4, oracle::slopes(4, 3))) {
        const auto deg = degree(e);
        if (deg < -3 || deg > 3) continue;
        classes[{rank(e), deg}].push_back(std::move(e));
    }
    std::size_t bundles = 0;
    for (const auto& [key, members] : classes) {
        const std::size_t m = members.size();
        bundles += m;
        std::vector<std::vector<bool>> rel(m, std::vector<bool>(m));
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                rel[a][b] = dominates(members[a], members[b]);
                if (rel[a][b] != oracle::dominates_all_integers(members[a], members[b])) {
                    out.fail("disagrees with integer-point check");
                }
            }
        }
        for (std::size_t a = 0; a < m; ++a) {
            if (!rel[a][a]) out.fail("not reflexive");
            for (std::size_t b = 0; b < m; ++b) {
                if (a != b && rel[a][b] && rel[b][a]) out.fail("not antisymmetric");
                if (!rel[a][b]) continue;
                for (std::size_t c = 0; c < m; ++c) {
                    if (rel[b][c] && !rel[a][c]) out.fail("not transitive");
                }
            }
        }
    }
    if (out.pass) out.detail = std::to_string(bundles) + " bundles in " + std::to_string(classes.size()) + " classes";
    return out;
}

std::string run_lines(const std::string& input, int& code) {
    std::istringstream in(input);
    std::ostringstream out;
    code = cli::run_batch(in, out, false);
    return out.str();
}

Outcome cli_robustness() {
    Outcome out;
    const std::string examples =
        R"({"command":"bunp-dim","payload":{"h":[1,1],"d":[0,1]}})" "\n"
        R"({"command":"h0","payload":{"summands":[{"slope":[0,1],"mult":1}]}})" "\n"
        R"({"command":"bunp-dim","payload":{"h":[1,1],"d":[0]}})" "\n";
    int code = 0;
    std::istringstream lines(run_lines(examples, code));
    std::string first, second, third;
    std::getline(lines, first);
    std::getline(lines, second);
    std::getline(lines, third);
    if (first != R"({"ok":true,"result":{"dim":1}})") out.fail("first example: " + first);
    if (second != R"({"ok":true,"result":{"smooth":false,"dim":null}})") out.fail("second example: " + second);
    const auto third_json = cli::json::parse(third);
    if (third_json["ok"] != false || third_json["error"]["code"] != 1 ||
        third_json["error"]["message"].get<std::string>().find("length mismatch") == std::string::npos) {
        out.fail("third example: " + third);
    }
    if (code != 1) out.fail("batch exit code " + std::to_string(code));

    std::mt19937_64 rng(1212);
    const std::string seeds[] = {
        R"({"command":"bunp-dim","payload":{"h":[1,1],"d":[0,1]}})",
        R"({"command":"h0","payload":{"summands":[{"slope":[0,1],"mult":1}]}})",
        R"({"command":"complex-dims","payload":{"e_minus1":{"summands":[{"slope":[-1,2],"mult":1}]},"e_zero":{"summands":[{"slope":[3,1],"mult":2}]}}})",
        R"({"command":"torsion","payload":{"q1":{"stalks":[{"point":"x","lengths":[2,1]}]},"g":{"summands":[{"slope":[1,3],"mult":1}]}}})",
        R"({"command":"relpos-dim","payload":{"h":[[1,0],[0,1]],"d":[[0,0],[0,1]],"row_ranks":[1,1],"col_ranks":[1,1],"row_degs":[0,1],"col_degs":[0,1]}})",
        R"({"command":"weyl-reps","payload":{"left":[2,1],"right":[1,2]}})",
        R"({"command":"weyl-bruhat","payload":{"u":[2,1,3],"w":[3,2,1]}})",
        R"({"command":"weyl-matrix","payload":{"matrix":[[1,1],[1,0]]}})",
        R"({"command":"polygon-dominates","payload":{"b":{"summands":[{"slope":[1,1],"mult":1}]},"b2":{"summands":[{"slope":[1,1],"mult":1}]}}})",
        R"({"command":"bung-dim","payload":{"summands":[{"slope":[2,3],"mult":1}]}})",
    };
    const std::string alphabet = "{}[],:\"0123456789-abcdefghijklmnopqrstuvwxyz_ .eE+";
    std::string fuzz;
    std::size_t nonblank = 0;
    for (int i = 0; i < 100000; ++i) {
        std::string line = seeds[rng() % std::size(seeds)];
        const int edits = static_cast<int>(rng() % 5);
        for (int e = 0; e < edits; ++e) {
            const auto pos = rng() % (line.size() + 1);
            switch (rng() % 4) {
                case 0: line.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
                case 1: if (pos < line.size()) line.erase(pos, 1); break;
                case 2: if (pos < line.size()) line[pos] = static_cast<char>(rng() % 256); break;
                default: if (pos < line.size()) line[pos] = "0123456789"[rng() % 10]; break;
            }
        }
        std::replace(line.begin(), line.end(), '\n', ' ');
        std::replace(line.begin(), line.end(), '\r', ' ');
        if (!std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) ++nonblank;
        fuzz += line + "\n";
    }
    int code_a = -1, code_b = -1;
    const auto a = run_lines(fuzz, code_a);
    const auto b = run_lines(fuzz, code_b);
    if (a != b || code_a != code_b) out.fail("outputs differ between identical runs");
    if (static_cast<std::size_t>(std::count(a.begin(), a.end(), '\n')) != nonblank) out.fail("one response per line violated");
    if (code_a < 0 || code_a > 2) out.fail("exit code out of range");
    if (out.pass) out.detail = "examples exact, 100000 fuzzed lines deterministic";
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Criterion>> criteria = {
        {"bun_g dimension zero", bun_g_zero},
        {"d_nu triple agreement", d_nu_triple},
        {"d_nu sign law", sign_laws},
        {"euler characteristic", euler_characteristic},
        {"picard identity", picard_identity},
        {"exact-sequence additivity", additivity},
        {"relative-position reduction", relpos_reduction},
        {"torsion formulas", torsion_formulas},
        {"weyl counts", weyl_counts},
        {"bruhat order", bruhat_order},
        {"dominance poset", dominance_poset},
        {"cli determinism and robustness", cli_robustness},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!outcome.pass) ++failures;
        std::printf("%s [%zu] %s: %s (%.2fs)\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    outcome.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}

#include "ffcalc/cli.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>

#include "ffcalc/banach_colmez.hpp"
#include "ffcalc/bundle.hpp"
#include "ffcalc/errors.hpp"
#include "ffcalc/json_io.hpp"
#include "ffcalc/moduli.hpp"
#include "ffcalc/sampling.hpp"
#include "ffcalc/weyl.hpp"

namespace ffcalc::cli {

namespace {

using namespace json_io;

constexpr const char* kPayload = "payload";

json dim_result(std::int64_t d) { return {{"dim", d}}; }

moduli::Composition composition_at(const json& p, const char* key) {
    return moduli::Composition(int_vector(get_field(p, key, kPayload), std::string(kPayload) + "." + key),
                               std::string(kPayload) + "." + key);
}

json cmd_bundle_info(const json& p) {
    const Bundle e = bundle_from_json(p, kPayload);
    return {{"bundle", to_json(e)}, {"rank", rank(e)}, {"degree", degree(e)}, {"polygon", to_json(hn_polygon(e))}};
}

json cmd_h0(const json& p) { return to_json(bc::h0_dim(bundle_from_json(p, kPayload))); }
json cmd_h1(const json& p) { return to_json(bc::h1_dim(bundle_from_json(p, kPayload))); }

json cmd_complex_dims(const json& p) {
    const auto dims = bc::complex_h_dims(complex_from_json(p, kPayload));
    return {{"hminus1", to_json(dims.hminus1)}, {"h0", to_json(dims.h0)}, {"h1", to_json(dims.h1)}};
}

json cmd_picard(const json& p) { return to_json(bc::picard_dim(complex_from_json(p, kPayload))); }

json cmd_smooth_check(const json& p) {
    return {{"smooth_point", bc::section_is_smooth_point(complex_from_json(p, kPayload))}};
}

json cmd_torsion(const json& p) {
    const std::string base(kPayload);
    const auto q1 = torsion_from_json(get_field(p, "q1", base), base + ".q1");
    json out = {{"h0", to_json(bc::torsion_h0_dim(q1))}};
    if (p.contains("q2")) {
        const auto q2 = torsion_from_json(p.at("q2"), base + ".q2");
        const auto he = bc::torsion_hom_ext_dims(q1, q2);
        out["hom"] = to_json(he.hom);
        out["ext"] = to_json(he.ext);
    }
    if (p.contains("g")) {
        out["ext1_bundle"] = to_json(bc::ext1_torsion_bundle_dim(q1, bundle_from_json(p.at("g"), base + ".g")));
    }
    return out;
}

std::pair<moduli::Composition, moduli::DegreeVector> parabolic_data(const json& p) {
    return {composition_at(p, "h"), int_vector(get_field(p, "d", kPayload), std::string(kPayload) + ".d")};
}

json cmd_bunp_dim(const json& p) {
    const auto [h, d] = parabolic_data(p);
    return dim_result(moduli::bun_p_stratum_dim(h, d));
}

json cmd_laumon_dim(const json& p) {
    const auto [h, d] = parabolic_data(p);
    return dim_result(moduli::laumon_stratum_dim(h, d));
}

json cmd_bung_dim(const json& p) { return dim_result(moduli::bun_g_dim(bundle_from_json(p, kPayload))); }

json cmd_relpos_dim(const json& p) {
    const auto b = bifiltration_from_json(p, kPayload);
    if (b.row_ranks.size() * b.col_ranks.size() > 4096) {
        throw PreconditionError("payload.h", "bifiltration limited to 4096 cells");
    }
    return dim_result(moduli::relpos_stratum_dim(b));
}

json cmd_weyl_reps(const json& p) {
    const auto left = composition_at(p, "left");
    const auto right = composition_at(p, "right");
    if (left.total() > weyl::kMaxEnumerationRank) {
        throw PreconditionError(std::string(kPayload) + ".left",
                                "double-coset enumeration needs n <= " + std::to_string(weyl::kMaxEnumerationRank));
    }
    const auto reps = weyl::min_double_coset_reps(static_cast<int>(left.total()), left, right);
    json arr = json::array();
    for (const auto& w : reps) arr.push_back(to_json(w));
    return {{"count", reps.size()}, {"reps", arr}};
}

json cmd_weyl_bruhat(const json& p) {
    const std::string base(kPayload);
    const auto u = weyl_from_json(get_field(p, "u", base), base + ".u");
    const auto w = weyl_from_json(get_field(p, "w", base), base + ".w");
    if (u.size() != w.size()) throw PreconditionError(base + ".w", "u and w must have the same size");
    if (u.size() > 1000) throw PreconditionError(base + ".w", "Bruhat comparison limited to n <= 1000");
    return {{"leq", weyl::bruhat_leq(u, w)}, {"geq", weyl::bruhat_leq(w, u)}};
}

json cmd_weyl_matrix(const json& p) {
    const std::string base(kPayload);
    if (p.is_object() && p.contains("matrix")) {
        const auto h = int_matrix(p.at("matrix"), base + ".matrix");
        const auto w = weyl::coset_rep_from_matrix(h);
        return {{"rep", to_json(w)}};
    }
    const auto w = weyl_from_json(get_field(p, "w", base), base + ".w");
    const auto left = composition_at(p, "left");
    const auto right = composition_at(p, "right");
    if (left.total() != w.size()) throw PreconditionError(base + ".left", "left composition must sum to n");
    if (right.total() != w.size()) throw PreconditionError(base + ".right", "right composition must sum to n");
    return {{"matrix", weyl::matrix_from_rep(w, left, right)}, {"minimal", weyl::is_minimal_rep(w, left, right)}};
}

json cmd_polygon_dominates(const json& p) {
    const std::string base(kPayload);
    const auto b = bundle_from_json(get_field(p, "b", base), base + ".b");
    const auto b2 = bundle_from_json(get_field(p, "b2", base), base + ".b2");
    return {{"dominates", dominates(b, b2)}};
}

using Handler = std::function<json(const json&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table = {
        {"bundle-info", cmd_bundle_info},
        {"h0", cmd_h0},
        {"h1", cmd_h1},
        {"complex-dims", cmd_complex_dims},
        {"picard", cmd_picard},
        {"smooth-check", cmd_smooth_check},
        {"torsion", cmd_torsion},
        {"bunp-dim", cmd_bunp_dim},
        {"laumon-dim", cmd_laumon_dim},
        {"bung-dim", cmd_bung_dim},
        {"relpos-dim", cmd_relpos_dim},
        {"weyl-reps", cmd_weyl_reps},
        {"weyl-bruhat", cmd_weyl_bruhat},
        {"weyl-matrix", cmd_weyl_matrix},
        {"polygon-dominates", cmd_polygon_dominates},
    };
    return table;
}

// ---- selftest suites ----

struct SuiteResult {
    std::string name;
    std::int64_t cases = 0;
    std::int64_t failures = 0;
};

SuiteResult suite_d_nu_agreement(sampling::Rng& rng, std::int64_t budget) {
    SuiteResult r{"d_nu triple agreement"};
    std::uniform_int_distribution<std::int64_t> k_dist(1, 4), part_dist(1, 4), deg_dist(-5, 5);
    for (std::int64_t c = 0; c < budget; ++c) {
        const auto k = static_cast<std::size_t>(k_dist(rng));
        std::vector<std::int64_t> parts(k), degs(k);
        moduli::GradedFlagData pieces;
        for (std::size_t i = 0; i < k; ++i) {
            parts[i] = part_dist(rng);
            degs[i] = deg_dist(rng);
            pieces.push_back({parts[i], degs[i]});
        }
        const moduli::Composition h(parts);
        const auto sum = moduli::d_nu(h, degs);
        ++r.cases;
        if (sum != moduli::d_nu_pairing(h, degs) || sum != -moduli::filtered_end_degree(pieces)) ++r.failures;
    }
    return r;
}

SuiteResult suite_euler_characteristic(sampling::Rng& rng, std::int64_t budget) {
    SuiteResult r{"euler characteristic"};
    const sampling::BundleShape shape{5, 4, 3, false};
    for (std::int64_t c = 0; c < budget; ++c) {
        const Bundle e = sampling::random_bundle(rng, shape);
        const auto h0 = bc::h0_dim(e);
        ++r.cases;
        if (!h0.is_smooth() || h0.dim() - bc::h1_dim(e).dim() != degree(e)) ++r.failures;
    }
    return r;
}

SuiteResult suite_picard_identity(sampling::Rng& rng, std::int64_t budget) {
    SuiteResult r{"picard identity"};
    const sampling::BundleShape shape{5, 4, 3, false};
    for (std::int64_t c = 0; c < budget; ++c) {
        const bc::TwoTermComplex cx{sampling::random_bundle(rng, shape), sampling::random_bundle(rng, shape)};
        const auto dims = bc::complex_h_dims(cx);
        const auto pic = bc::picard_dim(cx);
        ++r.cases;
        const bool identity = pic.is_smooth() && dims.h0.is_smooth() && dims.hminus1.is_smooth() &&
                              pic.dim() == dims.h0.dim() - dims.hminus1.dim();
        const bool additivity = dims.h0.dim() == bc::h0_dim(cx.e_zero).dim() + bc::h1_dim(cx.e_minus1).dim();
        if (!identity || !additivity) ++r.failures;
    }
    return r;
}

SuiteResult suite_bun_g(sampling::Rng& rng, std::int64_t budget) {
    SuiteResult r{"bun_g dimension zero"};
    const sampling::BundleShape shape{6, 4, 3, true};
    for (std::int64_t c = 0; c < budget; ++c) {
        Bundle e = sampling::random_bundle(rng, shape);
        if (e.is_zero()) e = Bundle::stable(Slope(0));
        ++r.cases;
        if (moduli::bun_g_dim(e) != 0 || degree(tensor(dual(e), e)) != 0) ++r.failures;
    }
    return r;
}

std::vector<std::int64_t> random_composition(sampling::Rng& rng, std::int64_t n) {
    // cut points between 1..n chosen independently
    std::vector<std::int64_t> parts{1};
    std::bernoulli_distribution cut(0.5);
    for (std::int64_t i = 1; i < n; ++i) {
        if (cut(rng)) parts.push_back(1);
        else ++parts.back();
    }
    return parts;
}

SuiteResult suite_coset_counts(sampling::Rng& rng, std::int64_t budget) {
    SuiteResult r{"coset counts"};
    std::uniform_int_distribution<std::int64_t> n_dist(1, 6);
    for (std::int64_t c = 0; c < budget; ++c) {
        const auto n = n_dist(rng);
        const moduli::Composition left(random_composition(rng, n)), right(random_composition(rng, n));
        const auto reps = weyl::min_double_coset_reps(static_cast<int>(n), left, right);
        std::uint64_t covered = 0;
        for (const auto& w : reps) covered += weyl::double_coset_size(w, left, right);
        const std::uint64_t n_factorial = [&] {
            std::uint64_t f = 1;
            for (std::int64_t i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
            return f;
        }();
        ++r.cases;
        if (reps.size() != weyl::count_contingency_matrices(left.parts(), right.parts()) || covered != n_factorial) {
            ++r.failures;
        }
    }
    return r;
}

}  // namespace

json Response::to_json() const {
    if (ok) return {{"ok", true}, {"result", result}};
    return {{"ok", false}, {"error", {{"code", error->code}, {"message", error->message}, {"location", error->location}}}};
}

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, h] : handlers()) out.push_back(name);
        out.push_back("selftest");
        std::sort(out.begin(), out.end());
        return out;
    }();
    return names;
}

Response parse_request(const json& j, Request& out) {
    if (!j.is_object()) return Response::failure({kParseError, "request must be a JSON object", ""});
    const auto cmd = j.find("command");
    if (cmd == j.end() || !cmd->is_string()) {
        return Response::failure({kParseError, "request needs a string 'command'", "command"});
    }
    out.command = cmd->get<std::string>();
    const auto& names = commands();
    if (std::find(names.begin(), names.end(), out.command) == names.end()) {
        return Response::failure({kParseError, "unknown command '" + out.command + "'", "command"});
    }
    const auto payload = j.find("payload");
    out.payload = payload == j.end() ? json::object() : *payload;
    return Response::success(nullptr);
}

Response run(const Request& request) {
    try {
        if (request.command == "selftest") {
            const auto& p = request.payload;
            if (!p.is_object()) throw SchemaError(kPayload, "expected an object");
            const std::int64_t seed = p.contains("seed") ? get_int(p.at("seed"), "payload.seed") : 0;
            const std::int64_t budget = p.contains("budget") ? get_int(p.at("budget"), "payload.budget") : 1000;
            if (budget < 0 || budget > 10'000'000) {
                throw PreconditionError("payload.budget", "budget must be in [0, 10000000]");
            }
            return selftest(static_cast<std::uint64_t>(seed), budget);
        }
        const auto it = handlers().find(request.command);
        if (it == handlers().end()) {
            return Response::failure({kParseError, "unknown command '" + request.command + "'", "command"});
        }
        return Response::success(it->second(request.payload));
    } catch (const SchemaError& e) {
        return Response::failure({kParseError, e.what(), e.location()});
    } catch (const PreconditionError& e) {
        std::string where = e.location();
        if (where.rfind(kPayload, 0) != 0) where = where.empty() ? kPayload : std::string(kPayload) + "." + where;
        return Response::failure({kDomainError, e.what(), where});
    } catch (const std::overflow_error& e) {
        return Response::failure({kDomainError, std::string("arithmetic overflow: ") + e.what(), kPayload});
    } catch (const std::bad_alloc&) {
        return Response::failure({kDomainError, "input too large", kPayload});
    } catch (const std::exception& e) {
        return Response::failure({kDomainError, e.what(), kPayload});
    }
}

Response selftest(std::uint64_t seed, std::int64_t budget) {
    sampling::Rng rng(seed);
    std::vector<SuiteResult> suites;
    suites.push_back(suite_d_nu_agreement(rng, budget));
    suites.push_back(suite_euler_characteristic(rng, budget));
    suites.push_back(suite_picard_identity(rng, budget));
    suites.push_back(suite_bun_g(rng, budget));
    suites.push_back(suite_coset_counts(rng, budget));
    json arr = json::array();
    bool all = true;
    for (const auto& s : suites) {
        arr.push_back({{"name", s.name}, {"cases", s.cases}, {"failures", s.failures}, {"passed", s.failures == 0}});
        all = all && s.failures == 0;
    }
    return Response::success({{"seed", seed}, {"budget", budget}, {"passed", all}, {"suites", arr}});
}

std::vector<RequestLine> read_requests(std::istream& in) {
    std::vector<RequestLine> out;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); })) continue;
        RequestLine item{line, std::nullopt, std::nullopt};
        const json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
        if (j.is_discarded()) {
            item.error = Error{kParseError, "malformed JSON", "line " + std::to_string(line)};
        } else {
            Request req;
            const Response parsed = parse_request(j, req);
            if (parsed.ok) {
                item.request = std::move(req);
            } else {
                item.error = parsed.error;
                item.error->location = "line " + std::to_string(line) +
                                       (item.error->location.empty() ? "" : ": " + item.error->location);
            }
        }
        out.push_back(std::move(item));
    }
    return out;
}

int run_batch(std::istream& in, std::ostream& out, bool pretty) {
    int exit_code = kOk;
    for (const auto& item : read_requests(in)) {
        const Response r = item.request ? run(*item.request) : Response::failure(*item.error);
        exit_code = std::max(exit_code, r.exit_code());
        out << dump(r.to_json(), pretty) << '\n';
    }
    return exit_code;
}

std::string dump(const json& j, bool pretty) {
    return j.dump(pretty ? 2 : -1, ' ', false, json::error_handler_t::replace);
}

}  // namespace ffcalc::cli

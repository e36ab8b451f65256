// ffcalc: newline-delimited JSON front end for the slope calculus, moduli
// dimension formulas and Weyl-group combinatorics.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffcalc/cli.hpp"

int main(int argc, char** argv) {
    using ffcalc::cli::json;

    CLI::App app{"Exact slope calculus and moduli dimension calculator (NDJSON on stdin/stdout)"};
    app.set_version_flag("--version", std::string(ffcalc::cli::kVersion));

    bool pretty = false;
    std::string command;
    std::string payload = "{}";
    std::int64_t seed = 0;
    std::int64_t budget = 1000;
    app.add_flag("--pretty", pretty, "Indent JSON output");
    app.add_option("-c,--command", command, "Run a single request with this command instead of reading stdin");
    app.add_option("-p,--payload", payload, "JSON payload for --command");
    auto* seed_opt = app.add_option("--seed", seed, "Random seed for selftest");
    auto* budget_opt = app.add_option("--budget", budget, "Cases per suite for selftest")->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    if (command.empty()) return ffcalc::cli::run_batch(std::cin, std::cout, pretty);

    json request = {{"command", command}};
    const json body = json::parse(payload, nullptr, /*allow_exceptions=*/false);
    ffcalc::cli::Response response;
    ffcalc::cli::Request parsed;
    if (body.is_discarded()) {
        response = ffcalc::cli::Response::failure({ffcalc::cli::kParseError, "malformed JSON payload", "payload"});
    } else {
        request["payload"] = body;
        if (command == "selftest" && request["payload"].is_object()) {
            if (*seed_opt) request["payload"]["seed"] = seed;
            if (*budget_opt) request["payload"]["budget"] = budget;
        }
        response = ffcalc::cli::parse_request(request, parsed);
        if (response.ok) response = ffcalc::cli::run(parsed);
    }
    std::cout << ffcalc::cli::dump(response.to_json(), pretty) << '\n';
    return response.exit_code();
}

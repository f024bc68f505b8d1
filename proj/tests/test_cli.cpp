#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "gkpft/analysis.hpp"

namespace {

using nlohmann::json;

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    const std::string cmd = std::string(GKPFT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) {
        out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

json load_schema() {
    std::ifstream in(GKPFT_SCHEMA_PATH);
    REQUIRE(in.good());
    json schema;
    in >> schema;
    return schema;
}

bool type_matches(const json& value, const std::string& type) {
    if (type == "string") return value.is_string();
    if (type == "number") return value.is_number();
    if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (type == "boolean") return value.is_boolean();
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    return false;
}

// Structural validation against the shipped schema: required keys present,
// declared types match, enums honored. Follows local $ref definitions.
void validate_against(const json& schema, const json& node, const json& root);

void validate_object(const json& schema, const json& node, const json& root) {
    if (schema.contains("required")) {
        for (const auto& key : schema["required"]) {
            INFO("missing required key: " << key.get<std::string>());
            REQUIRE(node.contains(key.get<std::string>()));
        }
    }
    if (schema.contains("properties")) {
        for (const auto& [key, sub] : schema["properties"].items()) {
            if (node.contains(key)) validate_against(sub, node.at(key), root);
        }
    }
}

void validate_against(const json& schema, const json& node, const json& root) {
    if (schema.contains("$ref")) {
        const std::string ref = schema["$ref"].get<std::string>();
        // only local refs of the form #/definitions/<name>
        const std::string name = ref.substr(ref.rfind('/') + 1);
        validate_against(root["definitions"][name], node, root);
        return;
    }
    if (schema.contains("const")) {
        REQUIRE(node == schema["const"]);
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& v : schema["enum"]) found = found || (node == v);
        REQUIRE(found);
    }
    if (schema.contains("type")) {
        INFO("type check: " << schema["type"].get<std::string>() << " vs " << node.dump());
        REQUIRE(type_matches(node, schema["type"].get<std::string>()));
    }
    if (node.is_object()) validate_object(schema, node, root);
}

void validate_envelope(const json& doc) {
    const json schema = load_schema();
    validate_object(schema, doc, schema);
    // dispatch into the command-specific branch
    for (const auto& branch : schema["oneOf"]) {
        if (branch["properties"]["command"]["const"] == doc["command"]) {
            validate_object(branch["properties"]["results"], doc["results"], schema);
            return;
        }
    }
    FAIL("no schema branch for command " << doc["command"].dump());
}

}  // namespace

TEST_CASE("threshold command") {
    const auto res = run_cli("threshold --gate single --a 2 --b 2 --target 1e-6");
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.output);
    validate_envelope(doc);
    CHECK(doc["results"]["db_threshold"].get<double>() == Catch::Approx(-19.02).margin(0.02));
    CHECK(doc["params"]["a"] == 2.0);

    const auto cz = run_cli("threshold --gate cz --target 1e-6");
    REQUIRE(cz.exit_code == 0);
    const json czdoc = json::parse(cz.output);
    validate_envelope(czdoc);
    CHECK(czdoc["results"]["db_threshold"].get<double>() ==
          Catch::Approx(-19.25).margin(0.02));

    SECTION("softer target gives a softer threshold") {
        const auto soft = run_cli("threshold --gate single --a 2 --b 2 --target 0.5");
        REQUIRE(soft.exit_code == 0);
        CHECK(json::parse(soft.output)["results"]["db_threshold"].get<double>() > -15.0);
    }
}

TEST_CASE("ledger command") {
    const auto res = run_cli("ledger --a 2 --b 2");
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.output);
    validate_envelope(doc);
    CHECK(doc["results"]["final"]["x"]["value"].get<double>() ==
          Catch::Approx(2.7889).margin(1e-4));
    CHECK(doc["results"]["final"]["y"]["value"].get<double>() ==
          Catch::Approx(1.1708).margin(1e-4));
    CHECK(doc["results"]["final"]["x"]["p"] == "1");
    CHECK(doc["results"]["final"]["x"]["q"] == "4/5");

    SECTION("zero input leaves only the SUM noise at the first stage") {
        const auto zero = run_cli("ledger --a 0 --b 0");
        const json zdoc = json::parse(zero.output);
        CHECK(zdoc["results"]["after_sum_x"]["x"]["q"] == "1/5");
        CHECK(zdoc["results"]["after_sum_x"]["x"]["p"] == "0");
    }

    SECTION("negative input is a usage error") {
        CHECK(run_cli("ledger --a -1 --b 2").exit_code == 2);
    }
}

TEST_CASE("montecarlo command") {
    const std::string cmd = "montecarlo --gate single --db -19.02 --samples 50000 --seed 7";
    const auto res = run_cli(cmd);
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.output);
    validate_envelope(doc);
    CHECK(doc["results"]["verdict"] == "pass");
    CHECK(doc["params"]["seed"] == 7);

    SECTION("byte-identical on repeat") {
        const auto again = run_cli(cmd);
        CHECK(again.output == res.output);
    }

    SECTION("variance flag is the exclusive alternative to db") {
        const auto var = run_cli("montecarlo --variance 6.27e-3 --samples 1000 --seed 1");
        CHECK(var.exit_code == 0);
        CHECK(run_cli("montecarlo --db -19 --variance 6e-3 --samples 10").exit_code == 2);
        CHECK(run_cli("montecarlo --samples 10").exit_code == 2);
    }

    SECTION("samples must be positive") {
        CHECK(run_cli("montecarlo --db -19 --samples 0").exit_code == 2);
    }
}

TEST_CASE("sweep command") {
    const auto res = run_cli(
        "sweep --db -18 --db -19 --db -20 --a-min 0 --a-max 2 --a-steps 5 "
        "--b-min 0 --b-max 3 --b-steps 4 --out /tmp/gkpft_test_sweep");
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.output);
    validate_envelope(doc);
    CHECK(doc["results"]["surface_rows"] == 3 * 5 * 4);

    std::ifstream surface("/tmp/gkpft_test_sweep.surface.csv");
    REQUIRE(surface.good());
    std::string header;
    std::getline(surface, header);
    CHECK(header == "a,b,v,p_err");
    std::size_t rows = 0;
    for (std::string line; std::getline(surface, line);) ++rows;
    CHECK(rows == 3 * 5 * 4);

    std::ifstream contour("/tmp/gkpft_test_sweep.contour.csv");
    REQUIRE(contour.good());
    std::getline(contour, header);
    CHECK(header == "v,a,b_contour");

    SECTION("db list is required") {
        CHECK(run_cli("sweep --a-steps 3").exit_code == 2);
    }

    SECTION("unwritable path is a compute error") {
        CHECK(run_cli("sweep --db -19 --a-steps 2 --b-steps 2 "
                      "--out /nonexistent_dir/x").exit_code == 1);
    }
}

TEST_CASE("gkp-profile command") {
    // the default envelope (ae = 0.1) spreads mass out to |x| ~ 25, so the
    // integral check needs a wide grid
    const auto res = run_cli(
        "gkp-profile --word 0 --delta 0.01 --grid-min -40 --grid-max 40 --points 6401 "
        "--out /tmp/gkpft_test_profile.csv");
    REQUIRE(res.exit_code == 0);
    validate_envelope(json::parse(res.output));

    std::ifstream csv("/tmp/gkpft_test_profile.csv");
    REQUIRE(csv.good());
    std::string header;
    std::getline(csv, header);
    CHECK(header == "x,density");

    // trapezoid over the emitted table should be ~1 at this resolution
    std::vector<double> xs, ds;
    for (std::string line; std::getline(csv, line);) {
        const auto comma = line.find(',');
        xs.push_back(std::stod(line.substr(0, comma)));
        ds.push_back(std::stod(line.substr(comma + 1)));
    }
    double integral = 0.0;
    double peak_at_zero = 0.0, peak_at_one = 0.0;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        integral += 0.5 * (ds[i] + ds[i - 1]) * (xs[i] - xs[i - 1]);
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (std::abs(xs[i]) < 0.05) peak_at_zero = std::max(peak_at_zero, ds[i]);
        if (std::abs(xs[i] - gkpft::kSqrtPi) < 0.05) peak_at_one = std::max(peak_at_one, ds[i]);
    }
    CHECK(integral == Catch::Approx(1.0).margin(1e-4));
    CHECK(peak_at_zero > 100.0 * peak_at_one);

    SECTION("word one shifts the comb by one spacing") {
        const auto one = run_cli(
            "gkp-profile --word 1 --delta 0.01 --grid-min -40 --grid-max 40 --points 6401 "
            "--out /tmp/gkpft_test_profile1.csv");
        REQUIRE(one.exit_code == 0);
        std::ifstream csv1("/tmp/gkpft_test_profile1.csv");
        std::string h;
        std::getline(csv1, h);
        double best_zero = 0.0, best_one = 0.0;
        for (std::string line; std::getline(csv1, line);) {
            const auto comma = line.find(',');
            const double x = std::stod(line.substr(0, comma));
            const double d = std::stod(line.substr(comma + 1));
            if (std::abs(x) < 0.05) best_zero = std::max(best_zero, d);
            if (std::abs(x - gkpft::kSqrtPi) < 0.05) best_one = std::max(best_one, d);
        }
        CHECK(best_one > 100.0 * best_zero);
    }

    SECTION("bad grid is a usage error") {
        CHECK(run_cli("gkp-profile --grid-min 3 --grid-max -3 --out /tmp/x.csv").exit_code ==
              2);
    }
}

TEST_CASE("global usage errors") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("threshold --gate bogus").exit_code == 2);
}

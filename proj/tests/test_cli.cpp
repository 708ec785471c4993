// Drives the command-line binary end to end.  Takes the binary path as
// argv[1]; each scenario checks exit status and payload.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "FAIL: " << what << "\n";
        ++g_failures;
    }
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& binary, const std::string& args) {
    const std::string cmd = "\"" + binary + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr)
        return {};
    RunResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// data lines of the emitted CSV: comment and header stripped
std::vector<std::string> csv_data_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-binary>\n";
        return 1;
    }
    const std::string bin = argv[1];

    {
        const auto r = run(bin, "compute p --max-n 5");
        expect(r.exit_code == 0, "compute p exits 0");
        const auto rows = csv_data_lines(r.output);
        expect(rows.size() == 6, "compute p emits one row per n");
        expect(!rows.empty() && rows.back() == "5,7", "p(5) = 7");
    }

    {
        const auto r = run(bin, "compute S --r 2 --n 6 --k-range 2..6");
        expect(r.exit_code == 0, "compute S exits 0");
        const std::vector<std::string> want = {"6,2,4", "6,3,2", "6,4,1",
                                               "6,5,0", "6,6,1"};
        expect(csv_data_lines(r.output) == want, "S values for r=2, n=6");
    }

    {
        const auto r = run(bin, "compute phi --max-n 6");
        expect(r.exit_code == 0, "compute phi exits 0");
        const std::vector<std::string> want = {"1,1", "2,1", "3,2",
                                               "4,2", "5,4", "6,2"};
        expect(csv_data_lines(r.output) == want, "phi(1..6)");
    }

    {
        const auto r = run(bin, "compute P_phi --max-n 7");
        expect(r.exit_code == 0, "compute P_phi exits 0");
        const std::vector<std::string> want = {"3,1", "4,1", "5,2", "6,1", "7,3"};
        expect(csv_data_lines(r.output) == want, "P_phi(3..7)");
    }

    {
        const auto r = run(bin, "compute p --max-n 5 --format json");
        expect(r.exit_code == 0, "compute p json exits 0");
        const auto doc = nlohmann::json::parse(r.output, nullptr, false);
        expect(!doc.is_discarded(), "json parses");
        if (!doc.is_discarded()) {
            expect(doc.at("schema_version") == "1", "schema_version present");
            expect(doc.at("rows")[5].at("p") == "7", "json p(5) = 7 as string");
        }
    }

    {
        // same values through both serializations
        const auto csv = run(bin, "compute p_r --r 3 --max-n 10");
        const auto json = run(bin, "compute p_r --r 3 --max-n 10 --format json");
        expect(csv.exit_code == 0 && json.exit_code == 0, "p_r both formats exit 0");
        const auto rows = csv_data_lines(csv.output);
        const auto doc = nlohmann::json::parse(json.output, nullptr, false);
        expect(!doc.is_discarded() && doc.at("rows").size() == rows.size(),
               "row counts agree across formats");
        if (!doc.is_discarded()) {
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto& obj = doc.at("rows")[i];
                const std::string joined = std::string(obj.at("n")) + "," +
                                           std::string(obj.at("p_r"));
                expect(joined == rows[i], "row " + std::to_string(i) +
                                              " equal across formats");
            }
        }
    }

    {
        const auto r = run(bin, "verify theorem2 --max-n 40 --oracle-max-n 10");
        expect(r.exit_code == 0, "verify theorem2 exits 0");
    }

    {
        const auto r =
            run(bin, "verify all --max-n 40 --oracle-max-n 12 --format json");
        expect(r.exit_code == 0, "verify all exits 0");
        const auto doc = nlohmann::json::parse(r.output, nullptr, false);
        expect(!doc.is_discarded() && doc.at("status") == "pass",
               "verify all reports pass");
        if (!doc.is_discarded())
            expect(doc.at("rows").size() == 9, "verify all covers every identity");
    }

    {
        const auto r = run(bin, "verify interchange --seed 42 --format json");
        expect(r.exit_code == 0, "verify interchange exits 0");
        const auto doc = nlohmann::json::parse(r.output, nullptr, false);
        expect(!doc.is_discarded() &&
                   doc.at("rows")[0].at("seed") == "42",
               "seed echoed in the report");
    }

    {
        // deterministic output for fixed arguments and seed
        const auto a = run(bin, "verify interchange --seed 7");
        const auto b = run(bin, "verify interchange --seed 7");
        expect(a.exit_code == 0 && a.output == b.output,
               "fixed seed reproduces byte-identical output");
    }

    {
        expect(run(bin, "compute S --r 2 --n 6 --k-range 1..3").exit_code == 2,
               "k below r is a usage error");
        expect(run(bin, "verify nosuch").exit_code == 2,
               "unknown identity is a usage error");
        expect(run(bin, "compute p").exit_code == 2,
               "missing --max-n is a usage error");
        expect(run(bin, "compute p --max-n plenty").exit_code == 2,
               "non-numeric --max-n is a usage error");
        expect(run(bin, "compute P_phi --max-n 2").exit_code == 2,
               "P_phi below 3 is a usage error");
        expect(run(bin, "").exit_code == 2, "missing subcommand is a usage error");
    }

    {
        const std::string path = "/tmp/partident_cli_out.json";
        std::remove(path.c_str());
        const auto r = run(bin, "compute p --max-n 4 --format json --out " + path);
        expect(r.exit_code == 0, "--out exits 0");
        expect(r.output.empty(), "--out leaves stdout empty");
        std::ifstream in(path);
        std::stringstream buf;
        buf << in.rdbuf();
        const auto doc = nlohmann::json::parse(buf.str(), nullptr, false);
        expect(!doc.is_discarded() && doc.at("rows")[4].at("p") == "5",
               "--out file holds the payload");
        std::remove(path.c_str());
    }

    {
        expect(run(bin, "bench --max-n 50 --reps 2").exit_code == 0,
               "bench exits 0");
        expect(run(bin, "bench --max-n 0").exit_code == 0,
               "bench on the empty range exits 0");
    }

    if (g_failures == 0) {
        std::cout << "test_cli: all scenarios passed\n";
        return 0;
    }
    std::cerr << "test_cli: " << g_failures << " scenario(s) failed\n";
    return 1;
}

// Integration driver for the esebound CLI. Usage:
//   ese_cli_tests <path-to-esebound> <scratch-dir>
// Runs the binary through /bin/sh, captures stdout/stderr, and checks exit
// codes (0 success, 1 validation failure, 2 input/parse error) and output
// shapes. Prints one line per scenario.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int g_failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string read_file(const std::filesystem::path& path) {
    std::ifstream file(path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

RunResult run(const std::string& binary, const std::string& args,
              const std::filesystem::path& scratch) {
    const auto out_path = scratch / "stdout.txt";
    const auto err_path = scratch / "stderr.txt";
    const std::string command = binary + " " + args + " >" + out_path.string() +
                                " 2>" + err_path.string();
    const int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WEXITSTATUS(status);
    result.out = read_file(out_path);
    result.err = read_file(err_path);
    return result;
}

void expect(bool condition, const std::string& label, const std::string& detail = "") {
    if (condition) {
        std::cout << "ok   " << label << "\n";
    } else {
        std::cout << "FAIL " << label;
        if (!detail.empty())
            std::cout << " -- " << detail;
        std::cout << "\n";
        ++g_failures;
    }
}

int count_lines(const std::string& text) {
    int lines = 0;
    for (char c : text)
        if (c == '\n')
            ++lines;
    return lines;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: ese_cli_tests <esebound> <scratch-dir>\n";
        return 2;
    }
    const std::string binary = argv[1];
    const std::filesystem::path scratch = argv[2];
    std::filesystem::create_directories(scratch);

    // tables: all three, csv headers fixed.
    {
        const RunResult r = run(binary, "tables 1 --format csv", scratch);
        expect(r.exit_code == 0, "tables 1 exits 0");
        expect(r.out.rfind("facility,f_hz,delta_f_hz,a_m,ka,", 0) == 0,
               "tables 1 csv header", r.out.substr(0, 60));
        expect(count_lines(r.out) == 4, "tables 1 has 3 data rows");
    }
    {
        const RunResult r = run(binary, "tables 2 --format csv", scratch);
        expect(r.exit_code == 0, "tables 2 exits 0");
        expect(count_lines(r.out) == 5, "tables 2 has 4 data rows");
    }
    {
        const RunResult r = run(binary, "tables 3 --format json", scratch);
        expect(r.exit_code == 0, "tables 3 exits 0");
        expect(r.out.find("\"Cs D2\"") != std::string::npos, "tables 3 lists Cs D2");
    }
    {
        const RunResult r = run(binary, "tables 4", scratch);
        expect(r.exit_code != 0, "tables 4 rejected");
    }

    // eval: a valid emitter file, then malformed ones.
    {
        const auto path = scratch / "ln.emitter";
        std::ofstream file(path);
        file << "name = LN rod copy\n"
                "geometry = rod\n"
                "length_m = 0.094\n"
                "diameter_m = 0.016\n"
                "frequency_hz = 35568\n"
                "delta_f_hz = 0.084\n"
                "efficiency = 1e-8\n";
        file.close();
        const RunResult r = run(binary, "eval " + path.string() + " --format csv",
                                scratch);
        expect(r.exit_code == 0, "eval exits 0");
        // fom column of the data row.
        std::istringstream lines(r.out);
        std::string header, row;
        std::getline(lines, header);
        std::getline(lines, row);
        std::size_t pos = 0;
        int commas = 0;
        while (commas < 12 && pos != std::string::npos) {
            pos = row.find(',', pos + 1);
            ++commas;
        }
        const double fom = std::strtod(row.c_str() + pos + 1, nullptr);
        expect(std::abs(fom - 0.549) < 0.01, "eval fom near 0.549",
               std::to_string(fom));
    }
    {
        const auto path = scratch / "bad.emitter";
        std::ofstream file(path);
        file << "name = broken\n"
                "geometry = sphere\n"
                "radius_m = 1\n"
                "frequency_hz = 100\n"
                "delta_f_hz = 1\n";
        file.close();
        const RunResult r = run(binary, "eval " + path.string(), scratch);
        expect(r.exit_code == 2, "eval without efficiency source exits 2",
               std::to_string(r.exit_code));
        expect(r.err.find("efficiency") != std::string::npos,
               "eval error names the rule", r.err);
    }
    {
        const RunResult r = run(binary, "eval " + (scratch / "missing.emitter").string(),
                                scratch);
        expect(r.exit_code == 2, "eval of a missing file exits 2");
    }

    // atomic: catalog states, given radii, unknown elements.
    {
        const RunResult r = run(binary, "atomic Cs 6 1 1.5 --format json", scratch);
        expect(r.exit_code == 0, "atomic Cs 6 1 1.5 exits 0");
        expect(r.out.find("\"radial solve\"") != std::string::npos,
               "atomic radius is computed");
    }
    {
        const RunResult r =
            run(binary, "atomic H 2 1 1.5 --radius 5.477 --format csv", scratch);
        expect(r.exit_code == 0, "atomic H with a given radius exits 0");
    }
    {
        const RunResult r = run(binary, "atomic Na 3 0 0.5", scratch);
        expect(r.exit_code == 2, "atomic with unknown element exits 2",
               std::to_string(r.exit_code));
    }

    // sweep: exact row counts, determinism.
    {
        const RunResult r = run(binary,
                                "sweep --param radius --min 1 --max 10000 "
                                "--steps 2 --frequency-hz 76 --delta-f-hz 4",
                                scratch);
        expect(r.exit_code == 0, "sweep exits 0");
        expect(count_lines(r.out) == 3, "sweep steps=2 emits header + 2 rows",
               std::to_string(count_lines(r.out)));
        const RunResult again = run(binary,
                                    "sweep --param radius --min 1 --max 10000 "
                                    "--steps 2 --frequency-hz 76 --delta-f-hz 4",
                                    scratch);
        expect(r.out == again.out, "sweep output is deterministic");
    }
    {
        const RunResult r = run(
            binary, "sweep --param radius --min 10 --max 1 --steps 5", scratch);
        expect(r.exit_code == 2, "sweep with a bad range exits 2");
    }

    // validate: clean pass, byte-identical json, sensitivity self-test.
    {
        const RunResult a = run(binary, "validate --json --step 0.002", scratch);
        expect(a.exit_code == 0, "validate exits 0",
               std::to_string(a.exit_code));
        const RunResult b = run(binary, "validate --json --step 0.002", scratch);
        expect(a.out == b.out, "validate --json is byte-identical across runs");
        expect(a.out.find("\"all_pass\": true") != std::string::npos,
               "validate reports all_pass");
    }
    {
        const RunResult r = run(
            binary, "validate --perturb-frequency-rel 0.01 --step 0.002", scratch);
        expect(r.exit_code == 1, "perturbed validate exits 1",
               std::to_string(r.exit_code));
    }

    std::cout << (g_failures == 0 ? "all CLI scenarios passed\n"
                                  : "CLI scenarios FAILED\n");
    return g_failures == 0 ? 0 : 1;
}

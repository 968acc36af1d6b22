#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

#include "CLI11.hpp"

#include "golodlab/report.hpp"

namespace fs = std::filesystem;
using namespace golod;

namespace {

struct CommonOpts {
    std::string path;
    int truncate = -1;  // unset
    std::string out;
    bool full_degree_scan = false;
};

long env_step_budget() {
    const char* v = std::getenv("GOLODLAB_STEP_BUDGET");
    if (!v || !*v) return -1;
    try {
        size_t used = 0;
        long b = std::stol(v, &used);
        if (used != std::strlen(v) || b < 0) throw std::invalid_argument("");
        return b;
    } catch (const std::exception&) {
        throw InputError("GOLODLAB_STEP_BUDGET must be a non-negative integer");
    }
}

int resolve_truncation(const CommonOpts& c, const ProblemSpec& spec) {
    if (c.truncate > 0) return c.truncate;
    if (spec.truncate) return *spec.truncate;
    return kDefaultTruncation;
}

void emit(const Json& report, const std::string& summary, const std::string& out) {
    if (out.empty()) {
        std::cout << summary;
    } else if (out == "-") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream f(out);
        if (!f) throw InputError("cannot write report file: " + out);
        f << report.dump(2) << "\n";
        std::cout << summary;
        std::cout << "report written to " << out << "\n";
    }
}

int run_single(const std::string& command, const CommonOpts& c) {
    ProblemSpec spec = load_problem(c.path);
    RunOptions opt;
    opt.command = command;
    opt.truncate = resolve_truncation(c, spec);
    opt.full_degree_scan = c.full_degree_scan;
    opt.step_budget = env_step_budget();
    RunResult r = run_command(spec, opt);
    emit(r.report, r.summary, c.out);
    return r.exit_code;
}

struct CorpusEntry {
    std::string file;
    std::string command;
    std::string status;  // pass | fail | error
    int exit_code = 0;
    std::string message;
};

int run_corpus(const CommonOpts& c) {
    if (!fs::is_directory(c.path)) throw InputError("not a directory: " + c.path);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(c.path))
        if (e.is_regular_file() && e.path().extension() == ".golod") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw InputError("no .golod files in " + c.path);

    long budget = env_step_budget();
    auto run_one = [&](const fs::path& f) {
        CorpusEntry entry;
        entry.file = f.filename().string();
        try {
            ProblemSpec spec = load_problem(f.string());
            RunOptions opt;
            opt.command = spec.command.value_or("golod-certify");
            entry.command = opt.command;
            opt.truncate = resolve_truncation(c, spec);
            opt.full_degree_scan = c.full_degree_scan;
            opt.step_budget = budget;
            RunResult r = run_command(spec, opt);
            entry.exit_code = r.exit_code;
            entry.status = r.exit_code == 0 ? "pass" : "fail";
        } catch (const std::exception& e) {
            entry.status = "error";
            entry.exit_code = 2;
            entry.message = e.what();
        }
        return entry;
    };

    std::vector<std::future<CorpusEntry>> futures;
    for (const auto& f : files)
        futures.push_back(std::async(std::launch::async, run_one, f));

    Json list = Json::array();
    std::ostringstream summary;
    bool all_ok = true;
    for (auto& fut : futures) {
        CorpusEntry entry = fut.get();
        if (entry.exit_code != 0) all_ok = false;
        Json j{{"file", entry.file},
               {"command", entry.command},
               {"status", entry.status},
               {"exit", entry.exit_code}};
        if (!entry.message.empty()) j["message"] = entry.message;
        list.push_back(std::move(j));
        summary << entry.file << ": " << entry.status;
        if (!entry.message.empty()) summary << " (" << entry.message << ")";
        summary << "\n";
    }
    summary << (all_ok ? "corpus pass" : "corpus FAIL") << " (" << files.size() << " files)\n";

    Json report;
    report["schema"] = kSchemaVersion;
    report["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    report["command"] = "corpus";
    report["canonical"] = Json{{"directory", fs::path(c.path).filename().string()},
                               {"files", std::move(list)},
                               {"pass", all_ok}};
    emit(report, summary.str(), c.out);
    return all_ok ? 0 : 1;
}

int run_verify(const CommonOpts& c) {
    std::ifstream in(c.path);
    if (!in) throw InputError("cannot open report file: " + c.path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::exception& e) {
        throw InputError(std::string("report file is not valid JSON: ") + e.what());
    }
    const Json* cert = &doc;
    if (doc.contains("canonical") && doc["canonical"].contains("certificate"))
        cert = &doc["canonical"]["certificate"];
    else if (doc.contains("certificate"))
        cert = &doc["certificate"];
    VerifyResult vr = verify_certificate_json(*cert);
    std::ostringstream summary;
    for (const auto& f : vr.failures) summary << "failure: " << f << "\n";
    summary << (vr.pass ? "certificate verified\n" : "certificate REJECTED\n");

    Json report;
    report["schema"] = kSchemaVersion;
    report["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    report["command"] = "verify";
    report["canonical"] = Json{{"pass", vr.pass}, {"failures", vr.failures}};
    emit(report, summary.str(), c.out);
    return vr.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certificate toolkit for quotients by ideal powers"};
    app.require_subcommand(1);

    std::map<std::string, CommonOpts> opts;
    auto add_common = [&](CLI::App* sub, const std::string& name, const char* path_help) {
        CommonOpts& c = opts[name];
        sub->add_option("spec", c.path, path_help)->required();
        sub->add_option("--truncate", c.truncate, "series truncation order (default 5)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--out", c.out, "write the JSON report here ('-' for stdout)");
        sub->add_flag("--full-degree-scan", c.full_degree_scan,
                      "scan every internal degree instead of the predicted ones");
    };

    add_common(app.add_subcommand("resolve", "minimal free resolution and Betti table"),
               "resolve", "input description file");
    add_common(app.add_subcommand("koszul", "homology of the exterior complex"), "koszul",
               "input description file");
    add_common(app.add_subcommand("golod-certify",
                                  "build and check a trivial-products certificate"),
               "golod-certify", "input description file");
    add_common(app.add_subcommand("poincare", "truncated series against the rational bound"),
               "poincare", "input description file");
    add_common(app.add_subcommand("corpus", "run every .golod file in a directory"), "corpus",
               "directory of input files");
    add_common(app.add_subcommand("verify", "re-check a stored certificate report"), "verify",
               "JSON report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad command lines are input errors
    }
    std::string command = app.get_subcommands().front()->get_name();

    try {
        if (command == "corpus") return run_corpus(opts[command]);
        if (command == "verify") return run_verify(opts[command]);
        return run_single(command, opts[command]);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

#include "tsa/harness/report.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tsa/errors.hpp"
#include "tsa/stats.hpp"

namespace tsa::harness {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write " + path.string());
    out << content;
    if (!out)
        throw IoError("write failed: " + path.string());
}

}  // namespace

ReportRow report_row(const FunctionResults& results)
{
    std::vector<double> best;
    ReportRow row;
    row.function_id = results.function_id;
    row.runs = results.runs.size();
    row.max_fe = results.max_fe;
    for (const auto& r : results.runs) {
        best.push_back(r.summary.best_fitness);
        row.wall_time += r.summary.wall_time;
    }
    const auto s = stats::summarize(best);
    row.mean = s.mean;
    row.std = s.std;
    row.best = s.best;
    return row;
}

void write_trace_csv(std::ostream& out, const ConvergenceTrace& trace)
{
    for (std::size_t i = 1; i < trace.records.size(); ++i)
        if (trace.records[i].best_fitness > trace.records[i - 1].best_fitness
            || trace.records[i].used_fe <= trace.records[i - 1].used_fe)
            throw std::logic_error("trace is not monotone at record " + std::to_string(i) + " (fe "
                                   + std::to_string(trace.records[i].used_fe) + ")");
    std::string text = "fe,best\n";
    for (const auto& r : trace.records)
        text += std::to_string(r.used_fe) + "," + fmt(r.best_fitness) + "\n";
    out << text;
}

void write_summary_csv(std::ostream& out, const ExperimentResults& results)
{
    out << "function_id,mean,std,best,runs,max_fe,wall_time\n";
    for (const auto& f : results.functions) {
        const auto row = report_row(f);
        char wall[32];
        std::snprintf(wall, sizeof wall, "%.3f", row.wall_time);
        out << row.function_id << ',' << fmt(row.mean) << ',' << fmt(row.std) << ',' << fmt(row.best) << ','
            << row.runs << ',' << row.max_fe << ',' << wall << '\n';
    }
}

std::string results_to_json(const ExperimentResults& results)
{
    ordered_json doc;
    doc["label"] = results.label;
    doc["base_seed"] = results.base_seed;
    ordered_json functions = ordered_json::object();
    for (const auto& f : results.functions) {
        ordered_json jf;
        jf["name"] = f.name;
        jf["dimension"] = f.dimension;
        jf["max_fe"] = f.max_fe;
        ordered_json runs = ordered_json::array();
        for (const auto& r : f.runs) {
            ordered_json jr;
            jr["run"] = r.run;
            jr["seed"] = r.seed;
            jr["best"] = r.summary.best_fitness;
            jr["used_fe"] = r.summary.used_fe;
            jr["iterations"] = r.summary.iterations;
            jr["wall_time"] = r.summary.wall_time;
            jr["best_position"] = r.summary.best_position;
            runs.push_back(std::move(jr));
        }
        jf["runs"] = std::move(runs);
        functions[f.function_id] = std::move(jf);
    }
    doc["functions"] = std::move(functions);
    return doc.dump(1) + "\n";
}

ExperimentResults results_from_json(std::string_view text)
{
    ExperimentResults out;
    try {
        const auto doc = ordered_json::parse(text);
        out.label = doc.value("label", std::string("unnamed"));
        out.base_seed = doc.value("base_seed", std::uint64_t{0});
        for (const auto& [id, jf] : doc.at("functions").items()) {
            FunctionResults f;
            f.function_id = id;
            f.name = jf.value("name", id);
            f.dimension = jf.at("dimension").get<std::size_t>();
            f.max_fe = jf.at("max_fe").get<std::uint64_t>();
            for (const auto& jr : jf.at("runs")) {
                RunRecord r;
                r.run = jr.at("run").get<std::size_t>();
                r.seed = jr.at("seed").get<std::uint64_t>();
                r.summary.seed = r.seed;
                r.summary.best_fitness = jr.at("best").get<double>();
                r.summary.used_fe = jr.value("used_fe", std::uint64_t{0});
                r.summary.iterations = jr.value("iterations", std::uint64_t{0});
                r.summary.wall_time = jr.value("wall_time", 0.0);
                r.summary.best_position = jr.value("best_position", std::vector<double>{});
                f.runs.push_back(std::move(r));
            }
            if (f.runs.empty())
                throw ConfigError("results: function " + id + " has no runs");
            out.functions.push_back(std::move(f));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("results: ") + e.what());
    }
    return out;
}

ExperimentResults load_results(const std::filesystem::path& file)
{
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw IoError("cannot open results file " + file.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return results_from_json(buf.str());
}

void write_outputs(const ExperimentResults& results, const std::filesystem::path& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir / "traces", ec);
    if (ec)
        throw IoError("cannot create " + (dir / "traces").string() + ": " + ec.message());

    for (const auto& f : results.functions)
        for (const auto& r : f.runs) {
            std::ostringstream csv;
            write_trace_csv(csv, r.trace);
            write_file(dir / "traces" / (f.function_id + "_run" + std::to_string(r.run) + ".csv"), csv.str());
        }

    std::ostringstream summary;
    write_summary_csv(summary, results);
    write_file(dir / "summary.csv", summary.str());
    write_file(dir / "results.json", results_to_json(results));
}

}  // namespace tsa::harness

#include "tsa/harness/listing.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace tsa::harness {

namespace {

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string bounds_text(const testbed::TestFunction& f)
{
    const auto& b = f.bounds;
    const bool uniform = std::all_of(b.begin(), b.end(),
                                     [&](const Bounds& x) { return x.lb == b.front().lb && x.ub == b.front().ub; });
    if (uniform)
        return "[" + num(b.front().lb) + ", " + num(b.front().ub) + "]";
    std::string s;
    for (const auto& x : b)
        s += (s.empty() ? "" : " x ") + ("[" + num(x.lb) + ", " + num(x.ub) + "]");
    return s;
}

}  // namespace

void print_listing(std::ostream& out, const std::vector<const testbed::TestFunction*>& functions)
{
    char line[160];
    std::snprintf(line, sizeof line, "%-5s %-22s %-5s %3s  %-26s %s\n", "id", "name", "suite", "D", "bounds",
                  "optimum");
    out << line;
    for (const auto* f : functions) {
        std::snprintf(line, sizeof line, "%-5s %-22s %-5s %3zu  %-26s %.6g\n", f->id.c_str(), f->name.c_str(),
                      f->suite == testbed::Suite::hard ? "hard" : (f->suite == testbed::Suite::fixed ? "fixed" : "30D"),
                      f->default_dimension, bounds_text(*f).c_str(), f->known_optimum_value);
        out << line;
    }
}

std::string listing_json(const std::vector<const testbed::TestFunction*>& functions)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto* f : functions) {
        nlohmann::ordered_json j;
        j["id"] = f->id;
        j["name"] = f->name;
        j["suite"] = std::string(testbed::to_string(f->suite));
        j["modality"] = std::string(testbed::to_string(f->modality));
        j["dimension"] = f->default_dimension;
        nlohmann::ordered_json b = nlohmann::ordered_json::array();
        for (const auto& x : f->bounds)
            b.push_back({x.lb, x.ub});
        j["bounds"] = std::move(b);
        j["optimum"] = f->known_optimum_value;
        if (f->known_optimizer)
            j["optimizer"] = *f->known_optimizer;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

}  // namespace tsa::harness

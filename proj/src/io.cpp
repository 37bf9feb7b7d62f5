#include "covpack/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace covpack {

using nlohmann::json;

std::string write_instance(const CoveringInstance& inst) {
    json doc;
    doc["n_vars"] = inst.n_vars();
    doc["n_cons"] = inst.n_cons();
    json entries = json::array();
    for (const Entry& e : inst.entries()) entries.push_back({e.cons, e.var, e.coef});
    doc["entries"] = std::move(entries);
    doc["demands"] = inst.demands();
    doc["costs"] = inst.costs();
    json ub = json::array();
    for (int j = 0; j < inst.n_vars(); ++j) {
        if (inst.bounded(j))
            ub.push_back(inst.upper_bound(j));
        else
            ub.push_back(nullptr);
    }
    doc["upper_bounds"] = std::move(ub);
    doc["integer_vars"] = inst.integer_vars();
    return doc.dump();
}

CoveringInstance read_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("instance parse error: ") + e.what());
    }
    for (const char* key :
         {"n_vars", "n_cons", "entries", "demands", "costs", "upper_bounds", "integer_vars"}) {
        if (!doc.contains(key))
            throw std::runtime_error(std::string("instance document missing \"") + key + "\"");
    }
    try {
        int n_vars = doc["n_vars"].get<int>();
        int n_cons = doc["n_cons"].get<int>();
        std::vector<Entry> entries;
        for (const json& row : doc["entries"]) {
            if (!row.is_array() || row.size() != 3)
                throw std::runtime_error("instance entry is not [i, j, a_ij]");
            entries.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<double>()});
        }
        std::vector<double> demands = doc["demands"].get<std::vector<double>>();
        std::vector<double> costs = doc["costs"].get<std::vector<double>>();
        std::vector<double> ub;
        for (const json& v : doc["upper_bounds"])
            ub.push_back(v.is_null() ? kUnbounded : v.get<double>());
        std::vector<int> ivars = doc["integer_vars"].get<std::vector<int>>();

        CoveringInstance inst(n_vars, n_cons, std::move(entries), std::move(demands),
                              std::move(costs), std::move(ub), std::move(ivars));
        std::vector<std::string> errors = validate(inst);
        if (!errors.empty()) {
            std::string msg = "instance invariant violation on load:";
            for (const std::string& e : errors) msg += " [" + e + "]";
            throw std::runtime_error(msg);
        }
        return inst;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("instance field error: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("instance invariant violation on load: ") + e.what());
    }
}

CoveringInstance read_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_instance(buf.str());
}

std::string write_steplog(const StepLog& log) {
    std::string out;
    int t = 0;
    for (const StepRecord& r : log.records) {
        json line;
        line["t"] = ++t;
        line["cons"] = r.cons;
        line["beta"] = r.beta;
        out += line.dump();
        out += '\n';
    }
    return out;
}

StepLog read_steplog(const std::string& text) {
    StepLog log;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json doc = json::parse(line);
        std::uint32_t t = doc["t"].get<std::uint32_t>();
        log.add(doc["cons"].get<int>(), doc["beta"].get<double>(), Timestamp{t, 0});
    }
    return log;
}

std::string write_packing(const PackingInstance& inst, const PackingSolution& sol) {
    json doc;
    doc["y"] = sol.y;
    doc["value"] = sol.value(inst);
    return doc.dump();
}

}  // namespace covpack

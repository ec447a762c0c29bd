#include "pk/report.hpp"

#include <algorithm>
#include <fstream>

namespace pk {

nlohmann::json slice_to_json(const SliceReport& r) {
    nlohmann::json j;
    j["kind"] = complex_kind_name(r.id.kind);
    j["v"] = r.id.v;
    j["k"] = r.id.k;
    if (r.id.graded) {
        j["parity"] = r.id.p;
        j["weight"] = r.id.w;
    } else {
        j["parity"] = nullptr;
        j["weight"] = nullptr;
    }
    j["dim"] = r.dim;
    j["rank_in"] = r.rank_in;
    j["rank_out"] = r.rank_out;
    j["homology_dim"] = r.homology_dim;
    j["complete"] = r.complete;
    return j;
}

nlohmann::json make_report(const Space& sp, const std::string& command,
                           const nlohmann::json& inputs, const std::string& verdict,
                           std::vector<SliceReport> slices,
                           const std::vector<std::string>& witnesses) {
    std::sort(slices.begin(), slices.end(), [](const SliceReport& a, const SliceReport& b) {
        return std::tuple(a.id.kind, a.id.v, a.id.k, a.id.p, a.id.w) <
               std::tuple(b.id.kind, b.id.v, b.id.k, b.id.p, b.id.w);
    });
    nlohmann::json j;
    j["space"] = {{"m", sp.m}, {"n", sp.n}, {"side", side_name(sp.side)}};
    j["command"] = command;
    j["inputs"] = inputs;
    j["verdict"] = verdict;
    j["slices"] = nlohmann::json::array();
    for (const auto& s : slices) j["slices"].push_back(slice_to_json(s));
    j["witnesses"] = witnesses;
    // pinned so identical inputs give byte-identical reports
    j["timing"] = 0;
    return j;
}

void write_report(const nlohmann::json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write report to " + path);
    out << j.dump(2) << "\n";
}

} // namespace pk

#include "oml/report.hpp"

#include <sstream>

#include <json.hpp>

namespace oml {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::truncated: return "truncated";
    }
    return "?";
}

std::string render_text(const CheckReport& r) {
    std::ostringstream os;
    os << (r.verdict == Verdict::pass ? "[PASS]" :
           r.verdict == Verdict::fail ? "[FAIL]" : "[TRUNCATED]")
       << " " << r.check << "  target: " << r.target;
    if (r.elapsed_ms > 0) {
        os.setf(std::ios::fixed);
        os.precision(2);
        os << "  (" << r.elapsed_ms << " ms)";
    }
    os << "\n";
    for (const auto& [k, v] : r.stats) os << "    " << k << " = " << v << "\n";
    for (const auto& w : r.witnesses) os << "    witness: " << w << "\n";
    for (const auto& n : r.notes) os << "    note: " << n << "\n";
    return os.str();
}

std::string render_text(const std::vector<CheckReport>& rs) {
    std::string out;
    for (const auto& r : rs) out += render_text(r);
    std::size_t passed = 0;
    for (const auto& r : rs)
        if (r.ok()) ++passed;
    out += std::to_string(passed) + "/" + std::to_string(rs.size()) + " checks passed\n";
    return out;
}

std::string render_machine(const std::vector<CheckReport>& rs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) {
        nlohmann::ordered_json j;
        j["check"] = r.check;
        j["target"] = r.target;
        j["verdict"] = to_string(r.verdict);
        j["witnesses"] = r.witnesses;
        nlohmann::ordered_json stats = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.stats) stats[k] = v;
        j["stats"] = stats;
        j["notes"] = r.notes;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

bool all_ok(const std::vector<CheckReport>& rs) {
    for (const auto& r : rs)
        if (!r.ok()) return false;
    return true;
}

} // namespace oml

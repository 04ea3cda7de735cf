#include "reptriples/records.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace reptriples {

using ordered_json = nlohmann::ordered_json;

std::string to_json_line(const Solution& s) {
    ordered_json j;
    j["g"] = s.g;
    j["a"] = s.a.get_str();
    j["b"] = s.b.get_str();
    j["c"] = s.c.get_str();
    ordered_json w = ordered_json::array();
    for (const auto& wit : s.witnesses) w.push_back({wit.d, wit.n});
    j["witnesses"] = std::move(w);
    return j.dump();
}

std::string csv_header() { return "g,a,b,c,d1,n1,d2,n2,d3,n3"; }

std::string to_csv_row(const Solution& s) {
    std::ostringstream os;
    os << s.g << ',' << s.a << ',' << s.b << ',' << s.c;
    for (const auto& wit : s.witnesses) os << ',' << wit.d << ',' << wit.n;
    return os.str();
}

Solution parse_json_record(const std::string& line) {
    ordered_json j;
    try {
        j = ordered_json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("record parse error: ") + e.what());
    }
    try {
        Solution s;
        s.g = j.at("g").get<unsigned long>();
        s.a = mpz_class(j.at("a").get<std::string>());
        s.b = mpz_class(j.at("b").get<std::string>());
        s.c = mpz_class(j.at("c").get<std::string>());
        const auto& w = j.at("witnesses");
        if (!w.is_array() || w.size() != 3)
            throw std::runtime_error("record parse error: witnesses must be 3 pairs");
        for (size_t i = 0; i < 3; ++i) {
            s.witnesses[i].d = w.at(i).at(0).get<unsigned long>();
            s.witnesses[i].n = w.at(i).at(1).get<unsigned>();
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("record parse error: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("record parse error: ") + e.what());
    }
}

}  // namespace reptriples

/*
   Copyright 2026 The qleft Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qleft {

inline constexpr int kReportSchema = 1;

struct ReportItem {
    std::string input;
    std::string expected;
    std::string got;
    bool pass = true;
};

/// Outcome of one verification. "pass" on an item means the property the
/// check establishes held for that input; for the negative checks
/// (right-antipode failure, witnesses) that is the inequality.
struct Report {
    std::string check;
    int n = 0;
    std::string mode;
    std::vector<ReportItem> items;
    std::string summary;

    bool pass() const {
        return std::all_of(items.begin(), items.end(), [](const ReportItem& i) { return i.pass; });
    }
    std::size_t failures() const {
        return std::count_if(items.begin(), items.end(), [](const ReportItem& i) { return !i.pass; });
    }
};

inline nlohmann::ordered_json to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["check"] = r.check;
    j["n"] = r.n;
    j["mode"] = r.mode;
    j["status"] = r.pass() ? "pass" : "fail";
    j["summary"] = r.summary;
    j["items"] = nlohmann::ordered_json::array();
    for (const auto& item : r.items) {
        j["items"].push_back({{"input", item.input},
                              {"expected", item.expected},
                              {"got", item.got},
                              {"status", item.pass ? "pass" : "fail"}});
    }
    return j;
}

/// One header line, then one line per failing item.
inline std::string render_text(const Report& r) {
    std::ostringstream os;
    os << (r.pass() ? "[pass] " : "[FAIL] ") << r.check << " n=" << r.n << " mode=" << r.mode << ": "
       << r.summary << '\n';
    for (const auto& item : r.items) {
        if (item.pass) continue;
        os << "    input:    " << item.input << '\n'
           << "    expected: " << item.expected << '\n'
           << "    got:      " << item.got << '\n';
    }
    return os.str();
}

}  // namespace qleft

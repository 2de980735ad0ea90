#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcurv/checks.hpp"

namespace qcurv {

using ordered_json = nlohmann::ordered_json;

namespace report_detail {

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline std::string checks_selection(const SuiteConfig& c) { return c.all_checks ? "all" : join(c.checks, ","); }

inline std::string result_word(const VerificationReport& r) { return r.passed() ? "pass" : "fail"; }

/// Text fields must not contain the field separator or line breaks.
inline std::string sanitize(std::string s) {
    for (auto& ch : s) {
        if (ch == '\t' || ch == '\n' || ch == '\r') ch = ' ';
    }
    return s;
}

} // namespace report_detail

inline ordered_json to_json(const VerificationReport& r) {
    using namespace report_detail;
    ordered_json params;
    params["models"] = ordered_json::array();
    for (const auto& g : r.config.models) params["models"].push_back({{"n", g.n}, {"J", g.J.to_string()}});
    params["mu"] = ordered_json::array();
    for (const auto& mu : r.config.mus) params["mu"].push_back(mu.to_string());
    params["checks"] = checks_selection(r.config);
    params["max_order"] = r.config.options.max_order;
    params["mu_sampling"] = {{"degree_bound", VerificationReport::mu_degree_bound},
                             {"distinct_mu", r.distinct_mu},
                             {"certified", r.mu_sampling_certified()}};

    ordered_json checks = ordered_json::array();
    for (const auto& c : r.results) {
        checks.push_back({{"id", c.check_id},
                          {"paper_ref", c.paper_ref},
                          {"params", {{"n", c.params.n}, {"J", c.params.J.to_string()}, {"mu", c.params.mu.to_string()}}},
                          {"status", to_string(c.status)},
                          {"residual", c.residual},
                          {"note", c.note}});
    }

    ordered_json summary;
    for (const auto& [status, count] : r.summary) summary[status] = count;
    summary["total"] = r.results.size();
    summary["result"] = result_word(r);

    ordered_json out;
    out["params"] = std::move(params);
    out["checks"] = std::move(checks);
    out["summary"] = std::move(summary);
    return out;
}

inline std::string to_json_string(const VerificationReport& r) { return to_json(r).dump(2) + "\n"; }

/// One tab-separated record per line: a params line, one line per check, a summary line.
inline std::string to_text(const VerificationReport& r) {
    using namespace report_detail;
    std::ostringstream os;
    std::vector<std::string> models, mus;
    for (const auto& g : r.config.models) models.push_back("(" + std::to_string(g.n) + "," + g.J.to_string() + ")");
    for (const auto& mu : r.config.mus) mus.push_back(mu.to_string());
    os << "params\tmodels=" << join(models, " ") << "\tmu=" << join(mus, " ")
       << "\tchecks=" << checks_selection(r.config) << "\tmax_order=" << r.config.options.max_order
       << "\tmu_degree_bound=" << VerificationReport::mu_degree_bound << "\tdistinct_mu=" << r.distinct_mu
       << "\tmu_sampling=" << (r.mu_sampling_certified() ? "certified" : "uncertified") << "\n";
    for (const auto& c : r.results) {
        os << c.check_id << "\tn=" << c.params.n << "\tJ=" << c.params.J.to_string()
           << "\tmu=" << c.params.mu.to_string() << "\tstatus=" << to_string(c.status)
           << "\tresidual=" << sanitize(c.residual) << "\tpaper_ref=" << sanitize(c.paper_ref)
           << "\tnote=" << sanitize(c.note) << "\n";
    }
    os << "summary";
    for (const auto& [status, count] : r.summary) os << "\t" << status << "=" << count;
    os << "\ttotal=" << r.results.size() << "\tresult=" << result_word(r) << "\n";
    return os.str();
}

/// Parses the text form back into the JSON document it is equivalent to.
inline ordered_json text_to_json(const std::string& text) {
    auto fields = [](const std::string& line) {
        std::vector<std::pair<std::string, std::string>> kv;
        std::istringstream ls(line);
        std::string tok;
        std::getline(ls, tok, '\t');
        kv.emplace_back("", tok);
        while (std::getline(ls, tok, '\t')) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "malformed field '" + tok + "'");
            kv.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
        }
        return kv;
    };
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> out;
        std::istringstream is(s);
        std::string part;
        while (std::getline(is, part, sep)) {
            if (!part.empty()) out.push_back(part);
        }
        return out;
    };

    ordered_json out;
    ordered_json checks = ordered_json::array();
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto kv = fields(line);
        std::map<std::string, std::string> f(kv.begin() + 1, kv.end());
        const std::string& head = kv.front().second;
        if (head == "params") {
            ordered_json params;
            params["models"] = ordered_json::array();
            for (const auto& m : split(f.at("models"), ' ')) {
                const auto comma = m.find(',');
                params["models"].push_back(
                    {{"n", std::stoi(m.substr(1, comma - 1))}, {"J", m.substr(comma + 1, m.size() - comma - 2)}});
            }
            params["mu"] = ordered_json::array();
            for (const auto& mu : split(f.at("mu"), ' ')) params["mu"].push_back(mu);
            params["checks"] = f.at("checks");
            params["max_order"] = std::stoi(f.at("max_order"));
            params["mu_sampling"] = {{"degree_bound", std::stoi(f.at("mu_degree_bound"))},
                                     {"distinct_mu", std::stoi(f.at("distinct_mu"))},
                                     {"certified", f.at("mu_sampling") == "certified"}};
            out["params"] = std::move(params);
        } else if (head == "summary") {
            ordered_json summary;
            for (auto it = kv.begin() + 1; it != kv.end(); ++it) {
                if (it->first == "result") {
                    summary["result"] = it->second;
                } else {
                    summary[it->first] = std::stoul(it->second);
                }
            }
            out["checks"] = std::move(checks);
            out["summary"] = std::move(summary);
        } else {
            checks.push_back({{"id", head},
                              {"paper_ref", f.at("paper_ref")},
                              {"params", {{"n", std::stoi(f.at("n"))}, {"J", f.at("J")}, {"mu", f.at("mu")}}},
                              {"status", f.at("status")},
                              {"residual", f.at("residual")},
                              {"note", f.at("note")}});
        }
    }
    return out;
}

} // namespace qcurv

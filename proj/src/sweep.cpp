/**
 * @file sweep.cpp
 * @brief Sweep enumeration, config parsing, and the threaded runner.
 */
#include "hwsum/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hwsum {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<CaseRequest> expand_cartesian(
    const IdentityDescriptor& d,
    const std::vector<std::pair<std::string, std::vector<ExactScalar>>>& lists) {
    std::vector<CaseRequest> out;
    if (lists.empty()) return out;
    std::size_t total = 1;
    for (const auto& [name, values] : lists) total *= values.size();
    out.reserve(total);
    std::vector<std::size_t> idx(lists.size(), 0);
    for (std::size_t count = 0; count < total; ++count) {
        CaseRequest req;
        req.descriptor = &d;
        for (std::size_t i = 0; i < lists.size(); ++i)
            req.binding.emplace(lists[i].first, lists[i].second[idx[i]]);
        out.push_back(std::move(req));
        // odometer increment, last parameter fastest
        for (std::size_t i = lists.size(); i-- > 0;) {
            if (++idx[i] < lists[i].second.size()) break;
            idx[i] = 0;
        }
    }
    return out;
}

}  // namespace

std::vector<CaseRequest> enumerate_default_cases(const IdentityDescriptor& d) {
    return expand_cartesian(d, d.default_sweep);
}

std::vector<CaseRequest> enumerate_cases(const IdentityDescriptor& d,
                                         const ValueOverrides& overrides) {
    for (const auto& [name, values] : overrides) {
        const bool known = std::any_of(d.params.begin(), d.params.end(),
                                       [&](const ParamSpec& p) { return p.name == name; });
        if (!known)
            throw std::runtime_error("identity '" + d.id + "' has no parameter '" + name + "'");
        if (values.empty())
            throw std::runtime_error("empty value list for parameter '" + name + "'");
    }
    auto lists = d.default_sweep;
    for (auto& [name, values] : lists) {
        const auto it = overrides.find(name);
        if (it != overrides.end()) values = it->second;
    }
    return expand_cartesian(d, lists);
}

std::vector<CaseResult> run_cases(const std::vector<CaseRequest>& requests,
                                  const EvalOptions& opts, int jobs) {
    std::vector<CaseResult> results(requests.size());
    if (requests.empty()) return results;
    const auto evaluate = [&](std::size_t i) {
        results[i] = verify_case(*requests[i].descriptor, requests[i].binding, opts);
    };
    if (jobs < 2) {
        for (std::size_t i = 0; i < requests.size(); ++i) evaluate(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    const int workers = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(jobs), requests.size()));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= requests.size()) return;
                evaluate(i);
            }
        });
    }
    for (auto& t : pool) t.join();
    return results;
}

std::vector<ExactScalar> parse_value_list(const std::string& text) {
    std::vector<ExactScalar> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw std::runtime_error("empty item in value list: '" + text + "'");
        const auto dots = item.find("..");
        if (dots != std::string::npos) {
            const ExactScalar lo = ExactScalar::from_string(trim(item.substr(0, dots)));
            const ExactScalar hi = ExactScalar::from_string(trim(item.substr(dots + 2)));
            if (!lo.is_integer() || !hi.is_integer())
                throw std::runtime_error("range bounds must be integers: '" + item + "'");
            for (long v = lo.to_long(); v <= hi.to_long(); ++v) out.emplace_back(v);
        } else {
            out.push_back(ExactScalar::from_string(item));
        }
    }
    if (out.empty()) throw std::runtime_error("empty value list");
    return out;
}

std::vector<ConfigEntry> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::vector<ConfigEntry> entries;
    std::string line;
    long lineno = 0;
    const auto fail = [&](const std::string& msg) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail("expected ']' to close section header");
            const std::string id = trim(line.substr(1, line.size() - 2));
            if (id.empty()) fail("empty section header");
            entries.push_back(ConfigEntry{id, {}});
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected 'name = values'");
        if (entries.empty()) fail("parameter assignment before any [identity] section");
        const std::string name = trim(line.substr(0, eq));
        const std::string values = trim(line.substr(eq + 1));
        if (name.empty()) fail("empty parameter name");
        try {
            entries.back().overrides[name] = parse_value_list(values);
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }
    return entries;
}

int resolve_jobs(int requested) {
    if (requested >= 1) return requested;
    if (const char* env = std::getenv("HWSUM_JOBS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc >= 1 ? static_cast<int>(hc) : 1;
}

}  // namespace hwsum

#include "zdb/kv.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace zdb {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::map<std::string, double> parse_key_values(const std::string& text) {
    std::map<std::string, double> kv;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected 'name = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        try {
            size_t used = 0;
            const double x = std::stod(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
            kv[key] = x;
        } catch (const std::exception&) {
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": bad numeric value '" + val + "'");
        }
    }
    return kv;
}

void apply_params(ParameterSet& p, const std::map<std::string, double>& kv) {
    static const char* kValid = "sigma, T, k, alpha, delta, d, eta, mu, H";
    for (const auto& [key, val] : kv) {
        if (key == "sigma") p.sigma = val;
        else if (key == "T") p.T = val;
        else if (key == "k") p.k = val;
        else if (key == "alpha") p.alpha = val;
        else if (key == "delta") p.delta = val;
        else if (key == "d") p.d = val;
        else if (key == "eta") p.eta = val;
        else if (key == "mu") p.mu = val;
        else if (key == "H") p.H = val;
        else
            throw std::invalid_argument("unknown parameter '" + key +
                                        "' (valid keys: " + kValid + ")");
    }
}

std::string params_to_key_value(const ParameterSet& p) {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "sigma = %.17g\nT = %.17g\nk = %.17g\nalpha = %.17g\n"
                  "delta = %.17g\nd = %.17g\neta = %.17g\nmu = %.17g\nH = %.17g\n",
                  p.sigma, p.T, p.k, p.alpha, p.delta, p.d, p.eta, p.mu, p.H);
    return buf;
}

}  // namespace zdb

#include "golodlab/problem.hpp"

#include <fstream>
#include <sstream>

namespace golod {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(strip(cur));
    return out;
}

int parse_positive_int(const std::string& s, int line, const std::string& what) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size() || v <= 0) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw InputError("line " + std::to_string(line) + ": " + what +
                         " must be a positive integer, got '" + s + "'");
    }
}

}  // namespace

ProblemSpec parse_problem(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    std::vector<std::string> names;
    std::vector<long> weights;
    bool saw_ring = false, saw_weights = false, saw_ideal = false;
    std::vector<std::pair<int, std::string>> ideal_texts;  // (line, polynomial)
    ProblemSpec spec;

    while (std::getline(in, line)) {
        ++lineno;
        if (size_t h = line.find('#'); h != std::string::npos) line.resize(h);
        std::string body = strip(line);
        if (body.empty()) continue;
        size_t colon = body.find(':');
        if (colon == std::string::npos)
            throw InputError("line " + std::to_string(lineno) + ": expected 'key: value'");
        std::string key = strip(body.substr(0, colon));
        std::string value = strip(body.substr(colon + 1));
        if (key == "ring") {
            if (saw_ring) throw InputError("line " + std::to_string(lineno) + ": duplicate ring");
            saw_ring = true;
            for (const std::string& n : split_commas(value)) {
                if (n.empty())
                    throw InputError("line " + std::to_string(lineno) + ": empty variable name");
                names.push_back(n);
            }
        } else if (key == "weights") {
            if (saw_weights)
                throw InputError("line " + std::to_string(lineno) + ": duplicate weights");
            saw_weights = true;
            for (const std::string& w : split_commas(value))
                weights.push_back(parse_positive_int(w, lineno, "weight"));
        } else if (key == "ideal") {
            if (saw_ideal) throw InputError("line " + std::to_string(lineno) + ": duplicate ideal");
            saw_ideal = true;
            for (const std::string& p : split_commas(value)) {
                if (p.empty())
                    throw InputError("line " + std::to_string(lineno) + ": empty generator");
                ideal_texts.push_back({lineno, p});
            }
        } else if (key == "power") {
            spec.power = parse_positive_int(value, lineno, "power");
        } else if (key == "truncate") {
            spec.truncate = parse_positive_int(value, lineno, "truncate");
        } else if (key == "command") {
            if (value.empty())
                throw InputError("line " + std::to_string(lineno) + ": empty command");
            spec.command = value;
        } else {
            throw InputError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }

    if (!saw_ring) throw InputError("missing 'ring:' line");
    if (!saw_ideal) throw InputError("missing 'ideal:' line");
    if (!saw_weights) weights.assign(names.size(), 1);
    if (weights.size() != names.size())
        throw InputError("got " + std::to_string(weights.size()) + " weights for " +
                         std::to_string(names.size()) + " variables");

    spec.ring = make_ring(weights, names);
    for (const auto& [ln, ptext] : ideal_texts) {
        Polynomial p = [&] {
            try {
                return parse_polynomial(ptext, spec.ring);
            } catch (const ParseError& e) {
                throw InputError("line " + std::to_string(ln) + ", generator '" + ptext +
                                 "': " + e.what());
            }
        }();
        if (p.is_zero())
            throw InputError("line " + std::to_string(ln) + ": generator '" + ptext +
                             "' is zero");
        if (!homogeneity(p).is_homogeneous()) {
            long lead_deg = weighted_degree(p.leading().mono, *spec.ring);
            std::string offender;
            for (const Term& t : p.terms()) {
                if (weighted_degree(t.mono, *spec.ring) != lead_deg) {
                    offender = to_string(Polynomial::term(spec.ring, t.mono, t.coef));
                    break;
                }
            }
            throw InputError("line " + std::to_string(ln) + ": generator '" + ptext +
                             "' is not homogeneous for the given weights (term " + offender +
                             " breaks the degree)");
        }
        spec.ideal.push_back(std::move(p));
    }
    if (spec.ideal.empty()) throw InputError("the ideal line lists no generators");
    return spec;
}

ProblemSpec load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

}  // namespace golod

// Copyright 2026 The qcwb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcwb/circuit/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

namespace qcwb {

std::string format_angle(double radians) {
    using std::numbers::pi;
    constexpr double kTol = 1e-12;
    constexpr long long kMaxDenominator = 1024;
    for (long long d = 1; d <= kMaxDenominator; ++d) {
        const double scaled = radians / pi * static_cast<double>(d);
        if (std::abs(scaled) > 1e12) {
            break;
        }
        const long long n = std::llround(scaled);
        if (std::abs(static_cast<double>(n) * pi / static_cast<double>(d) - radians) <= kTol) {
            if (n == 0) {
                return "0";
            }
            std::string out = n < 0 ? "-" : "";
            const long long an = n < 0 ? -n : n;
            if (an != 1) {
                out += std::to_string(an) + "*";
            }
            out += "pi";
            if (d != 1) {
                out += "/" + std::to_string(d);
            }
            return out;
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", radians);
    return buf;
}

namespace {

std::string mcx_name(size_t n_qubits) {
    return "c" + std::to_string(n_qubits - 1) + "x";
}

}  // namespace

std::string to_openqasm(const Circuit &circuit) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    std::set<size_t> mcx_sizes;
    for (const auto &g : circuit.gates) {
        if (g.kind == GateKind::MCX) {
            mcx_sizes.insert(g.qubits.size());
        }
    }
    for (size_t n : mcx_sizes) {
        out << "opaque " << mcx_name(n) << " ";
        for (size_t i = 0; i < n; ++i) {
            out << (i ? "," : "") << "a" << i;
        }
        out << ";\n";
    }
    out << "qreg q[" << circuit.n_qubits << "];\n";
    if (circuit.n_clbits > 0) {
        out << "creg c[" << circuit.n_clbits << "];\n";
    }
    for (const auto &obs : circuit.observables) {
        out << "// observable: " << obs.label << "\n";
    }
    for (const auto &g : circuit.gates) {
        if (g.kind == GateKind::MEASURE) {
            out << "measure q[" << g.qubits[0] << "] -> c[" << g.clbits[0] << "];\n";
            continue;
        }
        out << (g.kind == GateKind::MCX ? mcx_name(g.qubits.size()) : std::string(gate_name(g.kind)));
        if (!g.params.empty()) {
            out << "(";
            for (size_t i = 0; i < g.params.size(); ++i) {
                out << (i ? "," : "") << format_angle(g.params[i]);
            }
            out << ")";
        }
        out << " ";
        for (size_t i = 0; i < g.qubits.size(); ++i) {
            out << (i ? "," : "") << "q[" << g.qubits[i] << "]";
        }
        out << ";\n";
    }
    return out.str();
}

namespace {

class ParseFailure : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic over numbers, pi, + - * / and parentheses.
class AngleParser {
   public:
    explicit AngleParser(std::string_view s) : s_(s) {
    }

    double parse() {
        double v = expr();
        skip();
        if (pos_ != s_.size()) {
            throw ParseFailure("unexpected '" + std::string(s_.substr(pos_)) + "' in angle");
        }
        return v;
    }

   private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    double expr() {
        double v = term();
        while (true) {
            if (eat('+')) {
                v += term();
            } else if (eat('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }
    double term() {
        double v = unary();
        while (true) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                v /= unary();
            } else {
                return v;
            }
        }
    }
    double unary() {
        if (eat('-')) {
            return -unary();
        }
        if (eat('+')) {
            return unary();
        }
        return atom();
    }
    double atom() {
        skip();
        if (eat('(')) {
            double v = expr();
            if (!eat(')')) {
                throw ParseFailure("missing ')' in angle");
            }
            return v;
        }
        if (s_.substr(pos_, 2) == "pi") {
            pos_ += 2;
            return std::numbers::pi;
        }
        const std::string rest(s_.substr(pos_));
        size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(rest, &used);
        } catch (const std::exception &) {
            throw ParseFailure("invalid number in angle");
        }
        pos_ += used;
        return v;
    }

    std::string_view s_;
    size_t pos_ = 0;
};

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_commas(std::string_view s) {
    std::vector<std::string> out;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') {
            ++depth;
        } else if (s[i] == ')') {
            --depth;
        } else if (s[i] == ',' && depth == 0) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

// "name[idx]" -> (name, idx) ; "name" -> (name, -1)
std::pair<std::string, int> parse_ref(const std::string &s) {
    const auto lb = s.find('[');
    if (lb == std::string::npos) {
        return {s, -1};
    }
    const auto rb = s.find(']', lb);
    if (rb == std::string::npos || rb != s.size() - 1) {
        throw ParseFailure("malformed register reference '" + s + "'");
    }
    try {
        return {trim(s.substr(0, lb)), std::stoi(s.substr(lb + 1, rb - lb - 1))};
    } catch (const std::exception &) {
        throw ParseFailure("malformed register index in '" + s + "'");
    }
}

}  // namespace

BuildResult parse_openqasm(std::string_view text) {
    BuildResult result;
    json doc;
    doc["gates"] = json::array();
    json observables = json::array();
    std::string qreg, creg;
    int n_qubits = -1;
    std::set<std::string> opaque;

    // Strip comments, capturing observable annotations.
    std::string body;
    {
        std::istringstream lines{std::string(text)};
        std::string line;
        while (std::getline(lines, line)) {
            const auto cpos = line.find("//");
            if (cpos != std::string::npos) {
                const std::string comment = trim(std::string_view(line).substr(cpos + 2));
                const std::string tag = "observable:";
                if (comment.rfind(tag, 0) == 0) {
                    observables.push_back(trim(std::string_view(comment).substr(tag.size())));
                }
                line = line.substr(0, cpos);
            }
            body += line;
            body += '\n';
        }
    }

    try {
        size_t start = 0;
        while (true) {
            const auto semi = body.find(';', start);
            if (semi == std::string::npos) {
                if (!trim(std::string_view(body).substr(start)).empty()) {
                    throw ParseFailure("missing ';' after final statement");
                }
                break;
            }
            const std::string stmt = trim(std::string_view(body).substr(start, semi - start));
            start = semi + 1;
            if (stmt.empty()) {
                continue;
            }
            if (stmt.rfind("OPENQASM", 0) == 0 || stmt.rfind("include", 0) == 0) {
                continue;
            }
            if (stmt.rfind("opaque", 0) == 0) {
                std::istringstream ss(stmt.substr(6));
                std::string name;
                ss >> name;
                opaque.insert(name);
                continue;
            }
            if (stmt.rfind("qreg", 0) == 0 || stmt.rfind("creg", 0) == 0) {
                auto [name, size] = parse_ref(trim(std::string_view(stmt).substr(4)));
                if (size < 0) {
                    throw ParseFailure("register declaration needs a size");
                }
                if (stmt[0] == 'q') {
                    if (!qreg.empty()) {
                        throw ParseFailure("only one qreg is supported");
                    }
                    qreg = name;
                    n_qubits = size;
                    doc["n_qubits"] = size;
                } else {
                    if (!creg.empty()) {
                        throw ParseFailure("only one creg is supported");
                    }
                    creg = name;
                    doc["n_clbits"] = size;
                }
                continue;
            }
            if (qreg.empty()) {
                throw ParseFailure("gate statement before qreg declaration");
            }
            auto qubit_of = [&](const std::string &ref) {
                auto [name, idx] = parse_ref(ref);
                if (name != qreg || idx < 0) {
                    throw ParseFailure("unknown qubit reference '" + ref + "'");
                }
                return idx;
            };
            if (stmt.rfind("measure", 0) == 0) {
                const auto arrow = stmt.find("->");
                if (arrow == std::string::npos) {
                    throw ParseFailure("measure needs '->'");
                }
                auto [cname, cidx] = parse_ref(trim(std::string_view(stmt).substr(arrow + 2)));
                if (cname != creg || cidx < 0) {
                    throw ParseFailure("unknown clbit reference in '" + stmt + "'");
                }
                const int q = qubit_of(trim(std::string_view(stmt).substr(7, arrow - 7)));
                doc["gates"].push_back({{"kind", "measure"}, {"qubits", {q}}, {"clbits", {cidx}}});
                continue;
            }
            // name[(params)] args
            size_t name_end = 0;
            while (name_end < stmt.size() && (std::isalnum(static_cast<unsigned char>(stmt[name_end])) ||
                                              stmt[name_end] == '_')) {
                ++name_end;
            }
            const std::string name = stmt.substr(0, name_end);
            std::string rest = trim(std::string_view(stmt).substr(name_end));
            json params = json::array();
            if (!rest.empty() && rest[0] == '(') {
                const auto close = rest.find(')');
                int depth = 0;
                size_t i = 0;
                for (; i < rest.size(); ++i) {
                    if (rest[i] == '(') {
                        ++depth;
                    } else if (rest[i] == ')' && --depth == 0) {
                        break;
                    }
                }
                if (close == std::string::npos || i == rest.size()) {
                    throw ParseFailure("unterminated parameter list");
                }
                for (const auto &p : split_commas(std::string_view(rest).substr(1, i - 1))) {
                    params.push_back(AngleParser(p).parse());
                }
                rest = trim(std::string_view(rest).substr(i + 1));
            }
            std::string kind;
            if (name.size() >= 3 && name.front() == 'c' && name.back() == 'x' && opaque.count(name)) {
                kind = "mcx";
            } else if (parse_gate_kind(name) && name != "mcx" && name != "measure") {
                kind = name;
            } else {
                throw ParseFailure("unsupported gate '" + name + "'");
            }
            const auto args = split_commas(rest);
            if (args.size() == 1 && parse_ref(args[0]).second < 0) {
                if (args[0] != qreg) {
                    throw ParseFailure("unknown register '" + args[0] + "'");
                }
                if (kind == "barrier") {
                    json qs = json::array();
                    for (int q = 0; q < n_qubits; ++q) {
                        qs.push_back(q);
                    }
                    doc["gates"].push_back({{"kind", kind}, {"qubits", qs}});
                } else {
                    for (int q = 0; q < n_qubits; ++q) {
                        json g{{"kind", kind}, {"qubits", {q}}};
                        if (!params.empty()) {
                            g["params"] = params;
                        }
                        doc["gates"].push_back(g);
                    }
                }
                continue;
            }
            json qs = json::array();
            for (const auto &a : args) {
                qs.push_back(qubit_of(a));
            }
            json g{{"kind", kind}, {"qubits", qs}};
            if (!params.empty()) {
                g["params"] = params;
            }
            doc["gates"].push_back(g);
        }
    } catch (const ParseFailure &e) {
        result.diagnostics.push_back(make_error("qasm_syntax", std::string("qasm syntax error: ") + e.what()));
        return result;
    }
    if (!doc.contains("n_qubits")) {
        result.diagnostics.push_back(make_error("qasm_syntax", "qasm syntax error: missing qreg declaration"));
        return result;
    }
    if (!observables.empty()) {
        doc["observables"] = observables;
    }
    return build_circuit(doc);
}

}  // namespace qcwb
